#ifndef NULLWIDTH_LP_HPP
#define NULLWIDTH_LP_HPP

#include <map>
#include <vector>

#include "nullwidth/rational.hpp"

namespace nw {

/**
 * Exact rational linear programming by a dense two-phase primal simplex.
 * No floating point anywhere; identical inputs give identical pivot
 * sequences and identical solutions.
 *
 * Pivot rule: largest-reduced-cost (lowest index on ties) until the
 * objective stalls for a fixed number of degenerate pivots, then Bland's
 * rule, which cannot cycle.  Termination and determinism are therefore
 * unconditional.
 */
enum class PivotRule { BlandOnly, DantzigThenBland };

struct LpTrace {
    long phase1_pivots = 0;
    long phase2_pivots = 0;
    long pivots() const { return phase1_pivots + phase2_pivots; }
};

struct LpSolution {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    Rat objective;
    std::vector<Rat> x;  // values of the caller's variables
    LpTrace trace;
};

/** Incremental problem builder; minimization only. */
class LpProblem {
  public:
    /** Adds a variable; nonneg ? x >= 0 : free.  Returns its index. */
    int add_var(bool nonneg);
    /** coeffs * x (rel) rhs, rel in {'L' for <=, 'E' for ==}. */
    void add_row(std::map<int, Rat> coeffs, char rel, Rat rhs);
    void set_cost(int var, Rat c);

    LpSolution solve(PivotRule rule = PivotRule::DantzigThenBland) const;

  private:
    struct Row {
        std::map<int, Rat> coeffs;
        char rel;
        Rat rhs;
    };
    std::vector<bool> nonneg_;
    std::vector<Row> rows_;
    std::map<int, Rat> cost_;
};

}  // namespace nw

#endif
