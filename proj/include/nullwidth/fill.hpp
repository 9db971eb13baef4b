#ifndef NULLWIDTH_FILL_HPP
#define NULLWIDTH_FILL_HPP

#include <optional>
#include <set>
#include <vector>

#include "nullwidth/complex.hpp"
#include "nullwidth/linalg.hpp"
#include "nullwidth/lp.hpp"

namespace nw {

struct SolverTrace {
    long lp_pivots = 0;
    long bb_nodes = 0;
    long box_used = 0;
    bool fallback = false;
};

struct FillResult {
    Cochain filler;  // a with delta a = w, exactly
    Rat norm;        // achieved linf norm
    bool optimal = false;
    Rat k_round;     // integral fills: achieved norm minus ceil(real optimum)
    SolverTrace trace;
};

/**
 * linf-optimal coboundary filling in a fixed degree on a fixed host.  The
 * coboundary matrix is factored once and shared by all queries; constructing
 * one of these is the expensive step.
 *
 * Everything is exact: the LP is the rational simplex from lp.hpp, the
 * integral repair is branch and bound on it.
 */
class FillSolver {
  public:
    FillSolver(const SimplicialComplex& X, int degree);
    FillSolver(const ProductComplex& X, int degree);

    /** Minimal-linf rational filler; optionally constrained to vanish on the
     *  listed (degree-1)-cells.  Throws Infeasible. */
    FillResult real(const Cochain& w, const std::set<std::size_t>* zero_cells = nullptr) const;

    /** Integral filler by rounding the real optimum and repairing the
     *  residual by branch and bound with a box growing from 1. */
    FillResult integral(const Cochain& w) const;

    /** Exact integral linf optimum subject to |a_c| <= box, by branch and
     *  bound on the LP relaxation.  Throws BoxTooSmall / SizeLimit. */
    FillResult oracle(const Cochain& w, long box) const;

    int fill_degree() const { return k_; }

  private:
    Cochain empty_filler() const;
    std::vector<Rat> dense_rhs(const Cochain& w) const;
    struct BranchBound {
        std::size_t cell;
        bool upper;  // true: a_cell <= value, false: a_cell >= value
        Rat value;
    };
    std::optional<std::pair<Cochain, Rat>> lp_solve(const std::vector<Rat>& particular,
                                                    const std::vector<BranchBound>& bounds,
                                                    const Rat* box,
                                                    const std::set<std::size_t>* zero_cells,
                                                    SolverTrace& trace) const;

    const SimplicialComplex* sc_ = nullptr;
    const ProductComplex* pc_ = nullptr;
    int k_;  // degree of the cochains being filled
    SparseMat delta_;
    GaussSolver gauss_;
    std::vector<std::map<int, Rat>> kernel_;          // basis of ker delta_{k-1}
    std::vector<std::vector<std::pair<int, Rat>>> kernel_by_cell_;
};

// Convenience single-shot entry points matching the library surface.
FillResult fill_linf_real(const Cochain& w, const std::set<std::size_t>* zero_cells = nullptr);
FillResult fill_linf_integral(const Cochain& w);
FillResult ilp_fill_oracle(const Cochain& w, long box_bound);

struct NearestCocycle {
    Cochain cocycle;   // integral cocycle nearest to w within its class
    Rat distance;      // achieved linf distance
    bool optimal;      // true when the distance is certified minimal
};

/**
 * Nearest integral cocycle in the affine class of w (w + coboundaries; for
 * degree 0 the class is taken reduced, so constants may shift).  Degree 1 is
 * solved exactly by integer difference constraints; higher degrees use
 * rounding plus bounded integral repair and report the achieved distance.
 * Throws PreconditionViolated when w is not a cocycle and NoIntegralClass
 * when the class admits no integral cocycle.
 */
NearestCocycle nearest_integral_cocycle(const Cochain& w);

}  // namespace nw

#endif
