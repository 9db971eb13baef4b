#ifndef NULLWIDTH_LINALG_HPP
#define NULLWIDTH_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "nullwidth/complex.hpp"
#include "nullwidth/rational.hpp"

namespace nw {

/** Sparse rational matrix, rows as ordered column->value maps. */
struct SparseMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::map<int, Rat>> row;

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), row(r) {}
    void add(int r, int c, const Rat& v) {
        if (v == 0) return;
        auto [it, inserted] = row[r].emplace(c, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) row[r].erase(it);
        }
    }
    std::vector<Rat> apply(const std::vector<Rat>& x) const;
};

/** Coboundary matrix of the host in degree k: rows are (k+1)-cells, columns
 *  are k-cells. */
SparseMat delta_matrix(const SimplicialComplex& X, int k);
SparseMat delta_matrix(const ProductComplex& X, int k);

/**
 * Exact reduced row echelon factorization over Q.  Factors once; then answers
 * particular solutions and a kernel basis.  Pivot choice is deterministic
 * (sparsest available row per column, lowest index on ties), so downstream
 * results are reproducible.
 */
class GaussSolver {
  public:
    explicit GaussSolver(SparseMat A);

    int rank() const { return static_cast<int>(reduced_.size()); }
    /** One solution of A x = b (free variables zero), or nullopt. */
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
    /** Basis of ker A as sparse columns, one per free column, deterministic. */
    std::vector<std::map<int, Rat>> kernel_basis() const;

  private:
    SparseMat A_;
    std::vector<std::map<int, Rat>> reduced_;    // RREF rows (unit pivots)
    std::vector<std::map<int, Rat>> transform_;  // reduced = transform * A
    std::vector<int> pivot_col_;
    std::vector<bool> is_pivot_col_;
};

}  // namespace nw

#endif
