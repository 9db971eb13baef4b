#include "nullwidth/lp.hpp"

#include <algorithm>

#include "nullwidth/error.hpp"

namespace nw {

int LpProblem::add_var(bool nonneg) {
    nonneg_.push_back(nonneg);
    return static_cast<int>(nonneg_.size()) - 1;
}

void LpProblem::add_row(std::map<int, Rat> coeffs, char rel, Rat rhs) {
    if (rel != 'L' && rel != 'E') throw Error(ErrorCode::Usage, "row relation must be L or E");
    rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LpProblem::set_cost(int var, Rat c) {
    if (c == 0)
        cost_.erase(var);
    else
        cost_[var] = std::move(c);
}

namespace {

// Dense simplex tableau in standard form min c x, A x = b, x >= 0.
class Tableau {
  public:
    Tableau(int m, int n) : m_(m), n_(n), a_(m, std::vector<Rat>(n + 1, Rat(0))), basis_(m, -1) {}

    Rat& at(int r, int c) { return a_[r][c]; }
    Rat& rhs(int r) { return a_[r][n_]; }
    void set_basis(int r, int col) { basis_[r] = col; }

    // Runs the simplex on the cost vector; returns false on unbounded.
    // Only columns below enter_limit may enter the basis (used to keep
    // artificials out in phase 2).
    bool optimize(const std::vector<Rat>& cost, PivotRule rule, long& pivot_count,
                  int enter_limit) {
        // reduced cost row: z_j = cost_j - sum_i cost_B(i) a_ij
        std::vector<Rat> z(n_ + 1, Rat(0));
        for (int j = 0; j <= n_; ++j) {
            Rat s = (j < n_) ? cost[j] : Rat(0);
            for (int i = 0; i < m_; ++i) {
                const Rat& cb = cost[basis_[i]];
                if (cb != 0 && a_[i][j] != 0) s -= cb * a_[i][j];
            }
            z[j] = s;
        }

        const int stall_limit = 40;
        int stall = 0;
        bool bland = (rule == PivotRule::BlandOnly);
        while (true) {
            int enter = -1;
            if (bland) {
                for (int j = 0; j < enter_limit; ++j)
                    if (z[j] < 0) {
                        enter = j;
                        break;
                    }
            } else {
                const Rat* best = nullptr;
                for (int j = 0; j < enter_limit; ++j)
                    if (z[j] < 0 && (!best || z[j] < *best)) {
                        best = &z[j];
                        enter = j;
                    }
            }
            if (enter < 0) return true;  // optimal

            int leave = -1;
            Rat best_ratio;
            for (int i = 0; i < m_; ++i) {
                if (a_[i][enter] <= 0) continue;
                Rat ratio = a_[i][n_] / a_[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;  // unbounded

            if (best_ratio == 0) {
                if (!bland && ++stall >= stall_limit) bland = true;
            } else {
                stall = 0;
            }

            pivot(leave, enter, z);
            ++pivot_count;
        }
    }

    const std::vector<int>& basis() const { return basis_; }
    Rat basic_value(int col) const {
        for (int i = 0; i < m_; ++i)
            if (basis_[i] == col) return a_[i][n_];
        return Rat(0);
    }

    // Pivots a basic artificial variable out of the basis when possible;
    // returns false if its row is identically zero over the first nreal cols.
    bool pivot_out_artificial(int row, int nreal, std::vector<Rat>* zrow = nullptr) {
        for (int j = 0; j < nreal; ++j) {
            if (a_[row][j] != 0) {
                std::vector<Rat> dummy;
                pivot(row, j, zrow ? *zrow : dummy);
                return true;
            }
        }
        return false;
    }

  private:
    void pivot(int leave, int enter, std::vector<Rat>& z) {
        Rat p = a_[leave][enter];
        if (p != 1)
            for (int j = 0; j <= n_; ++j)
                if (a_[leave][j] != 0) a_[leave][j] /= p;
        for (int i = 0; i < m_; ++i) {
            if (i == leave) continue;
            const Rat f = a_[i][enter];
            if (f == 0) continue;
            for (int j = 0; j <= n_; ++j)
                if (a_[leave][j] != 0) a_[i][j] -= f * a_[leave][j];
        }
        if (!z.empty()) {
            const Rat f = z[enter];
            if (f != 0)
                for (int j = 0; j <= n_; ++j)
                    if (a_[leave][j] != 0) z[j] -= f * a_[leave][j];
        }
        basis_[leave] = enter;
    }

    int m_, n_;
    std::vector<std::vector<Rat>> a_;
    std::vector<int> basis_;
};

}  // namespace

LpSolution LpProblem::solve(PivotRule rule) const {
    const int nvars = static_cast<int>(nonneg_.size());
    const int m = static_cast<int>(rows_.size());

    // column layout: per-variable (one column, or two for free vars), then
    // slacks for 'L' rows, then artificials
    std::vector<int> pos_col(nvars), neg_col(nvars, -1);
    int ncols = 0;
    for (int v = 0; v < nvars; ++v) {
        pos_col[v] = ncols++;
        if (!nonneg_[v]) neg_col[v] = ncols++;
    }
    int slack_start = ncols;
    for (const auto& r : rows_)
        if (r.rel == 'L') ++ncols;
    int art_start = ncols;

    // decide which rows need artificials: 'L' rows with rhs >= 0 use their
    // slack as the initial basic variable
    std::vector<int> art_col(m, -1);
    for (int i = 0; i < m; ++i)
        if (!(rows_[i].rel == 'L' && rows_[i].rhs >= 0)) art_col[i] = ncols++;

    Tableau t(m, ncols);
    {
        int slack = slack_start;
        for (int i = 0; i < m; ++i) {
            const auto& r = rows_[i];
            bool flip = r.rhs < 0;
            for (const auto& [v, cval] : r.coeffs) {
                Rat cv = flip ? Rat(-cval) : cval;
                t.at(i, pos_col[v]) += cv;
                if (neg_col[v] >= 0) t.at(i, neg_col[v]) -= cv;
            }
            if (r.rel == 'L') {
                t.at(i, slack) = flip ? Rat(-1) : Rat(1);
                ++slack;
            }
            t.rhs(i) = flip ? Rat(-r.rhs) : r.rhs;
            if (art_col[i] >= 0) {
                t.at(i, art_col[i]) = Rat(1);
                t.set_basis(i, art_col[i]);
            } else {
                t.set_basis(i, slack - 1);
            }
        }
    }

    LpSolution sol;

    // phase 1
    if (art_start < ncols) {
        std::vector<Rat> phase1(ncols, Rat(0));
        for (int j = art_start; j < ncols; ++j) phase1[j] = Rat(1);
        if (!t.optimize(phase1, rule, sol.trace.phase1_pivots, ncols))
            throw Error(ErrorCode::IdentityFailure, "phase-1 LP unbounded");
        // sum of basic artificial values is the phase-1 objective
        Rat obj(0);
        for (int i = 0; i < m; ++i)
            if (t.basis()[i] >= art_start) obj += t.basic_value(t.basis()[i]);
        if (obj != 0) {
            sol.status = LpSolution::Status::Infeasible;
            return sol;
        }
        // drive remaining artificials out of the basis
        for (int i = 0; i < m; ++i)
            if (t.basis()[i] >= art_start) t.pivot_out_artificial(i, art_start);
    }

    // phase 2: artificial columns are kept but priced prohibitively by
    // excluding them: give them zero cost and forbid entering via cost row
    // (their reduced costs stay >= 0 because they are nonbasic unit columns).
    std::vector<Rat> phase2(ncols, Rat(0));
    for (const auto& [v, cval] : cost_) {
        phase2[pos_col[v]] += cval;
        if (neg_col[v] >= 0) phase2[neg_col[v]] -= cval;
    }

    if (!t.optimize(phase2, rule, sol.trace.phase2_pivots, art_start)) {
        sol.status = LpSolution::Status::Unbounded;
        return sol;
    }

    sol.status = LpSolution::Status::Optimal;
    sol.x.assign(nvars, Rat(0));
    for (int v = 0; v < nvars; ++v) {
        sol.x[v] = t.basic_value(pos_col[v]);
        if (neg_col[v] >= 0) sol.x[v] -= t.basic_value(neg_col[v]);
    }
    sol.objective = Rat(0);
    for (const auto& [v, cval] : cost_) sol.objective += cval * sol.x[v];
    return sol;
}

}  // namespace nw
