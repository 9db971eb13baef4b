#include "nullwidth/linalg.hpp"

#include <algorithm>

namespace nw {

std::vector<Rat> SparseMat::apply(const std::vector<Rat>& x) const {
    std::vector<Rat> y(rows, Rat(0));
    for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : row[r]) y[r] += v * x[c];
    return y;
}

SparseMat delta_matrix(const SimplicialComplex& X, int k) {
    SparseMat M(static_cast<int>(X.size(k + 1)), static_cast<int>(X.size(k)));
    for (std::size_t t = 0; t < X.size(k + 1); ++t)
        for (const auto& [f, sgn] : X.facets(k + 1, t))
            M.add(static_cast<int>(t), static_cast<int>(f), Rat(sgn));
    return M;
}

SparseMat delta_matrix(const ProductComplex& X, int k) {
    SparseMat M(static_cast<int>(X.size(k + 1)), static_cast<int>(X.size(k)));
    for (std::size_t t = 0; t < X.size(k + 1); ++t)
        for (const auto& [f, sgn] : X.facets(k + 1, t))
            M.add(static_cast<int>(t), static_cast<int>(f), Rat(sgn));
    return M;
}

GaussSolver::GaussSolver(SparseMat A) : A_(std::move(A)) {
    is_pivot_col_.assign(A_.cols, false);

    std::vector<std::map<int, Rat>> work = A_.row;
    std::vector<std::map<int, Rat>> tf(A_.rows);
    for (int r = 0; r < A_.rows; ++r) tf[r].emplace(r, Rat(1));
    std::vector<bool> used(A_.rows, false);
    std::vector<int> src;

    for (int col = 0; col < A_.cols; ++col) {
        int best = -1;
        std::size_t best_nnz = 0;
        for (int r = 0; r < A_.rows; ++r) {
            if (used[r]) continue;
            auto it = work[r].find(col);
            if (it == work[r].end()) continue;
            if (best < 0 || work[r].size() < best_nnz) {
                best = r;
                best_nnz = work[r].size();
            }
        }
        if (best < 0) continue;
        used[best] = true;
        is_pivot_col_[col] = true;

        Rat p = work[best].at(col);
        if (p != 1) {
            for (auto& [c, v] : work[best]) v /= p;
            for (auto& [c, v] : tf[best]) v /= p;
        }
        for (int r = 0; r < A_.rows; ++r) {
            if (r == best) continue;
            auto it = work[r].find(col);
            if (it == work[r].end()) continue;
            Rat f = it->second;
            for (const auto& [c, v] : work[best]) {
                auto [jt, ins] = work[r].emplace(c, -f * v);
                if (!ins) {
                    jt->second -= f * v;
                    if (jt->second == 0) work[r].erase(jt);
                }
            }
            for (const auto& [c, v] : tf[best]) {
                auto [jt, ins] = tf[r].emplace(c, -f * v);
                if (!ins) {
                    jt->second -= f * v;
                    if (jt->second == 0) tf[r].erase(jt);
                }
            }
        }
        pivot_col_.push_back(col);
        src.push_back(best);
    }
    reduced_.resize(pivot_col_.size());
    transform_.resize(pivot_col_.size());
    for (std::size_t i = 0; i < pivot_col_.size(); ++i) {
        reduced_[i] = std::move(work[src[i]]);
        transform_[i] = std::move(tf[src[i]]);
    }
}

std::optional<std::vector<Rat>> GaussSolver::solve(const std::vector<Rat>& b) const {
    std::vector<Rat> x(A_.cols, Rat(0));
    for (std::size_t i = 0; i < pivot_col_.size(); ++i) {
        Rat yi(0);
        for (const auto& [r, v] : transform_[i]) yi += v * b[r];
        x[pivot_col_[i]] = yi;
    }
    std::vector<Rat> Ax = A_.apply(x);
    for (int r = 0; r < A_.rows; ++r)
        if (Ax[r] != b[r]) return std::nullopt;
    return x;
}

std::vector<std::map<int, Rat>> GaussSolver::kernel_basis() const {
    std::vector<std::map<int, Rat>> basis;
    for (int f = 0; f < A_.cols; ++f) {
        if (is_pivot_col_[f]) continue;
        std::map<int, Rat> v;
        v.emplace(f, Rat(1));
        for (std::size_t i = 0; i < pivot_col_.size(); ++i) {
            auto it = reduced_[i].find(f);
            if (it != reduced_[i].end() && it->second != 0) v.emplace(pivot_col_[i], -it->second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace nw
