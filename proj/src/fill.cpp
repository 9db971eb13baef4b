#include "nullwidth/fill.hpp"

#include <algorithm>
#include <deque>

namespace nw {

namespace {

Cochain apply_delta_check(const Cochain& a, const Cochain& w) {
    Cochain d = coboundary(a);
    Cochain diff = d - w;
    if (!diff.is_zero()) throw Error(ErrorCode::IdentityFailure, "filler does not hit the target");
    return d;
}

}  // namespace

FillSolver::FillSolver(const SimplicialComplex& X, int degree)
    : sc_(&X), k_(degree), delta_(delta_matrix(X, degree - 1)), gauss_(delta_) {
    if (degree < 1 || degree > X.dimension())
        throw Error(ErrorCode::Usage, "fill degree out of range");
    kernel_ = gauss_.kernel_basis();
    kernel_by_cell_.resize(delta_.cols);
    for (std::size_t j = 0; j < kernel_.size(); ++j)
        for (const auto& [c, v] : kernel_[j]) kernel_by_cell_[c].emplace_back(static_cast<int>(j), v);
}

FillSolver::FillSolver(const ProductComplex& X, int degree)
    : pc_(&X), k_(degree), delta_(delta_matrix(X, degree - 1)), gauss_(delta_) {
    if (degree < 1 || degree > X.dimension())
        throw Error(ErrorCode::Usage, "fill degree out of range");
    kernel_ = gauss_.kernel_basis();
    kernel_by_cell_.resize(delta_.cols);
    for (std::size_t j = 0; j < kernel_.size(); ++j)
        for (const auto& [c, v] : kernel_[j]) kernel_by_cell_[c].emplace_back(static_cast<int>(j), v);
}

Cochain FillSolver::empty_filler() const {
    return sc_ ? Cochain::on(*sc_, k_ - 1, Ring::Q) : Cochain::on(*pc_, k_ - 1, Ring::Q);
}

std::vector<Rat> FillSolver::dense_rhs(const Cochain& w) const {
    std::vector<Rat> b(delta_.rows, Rat(0));
    for (const auto& [cell, v] : w.values) b[cell] = v;
    return b;
}

std::optional<std::pair<Cochain, Rat>> FillSolver::lp_solve(
    const std::vector<Rat>& particular, const std::vector<BranchBound>& bounds, const Rat* box,
    const std::set<std::size_t>* zero_cells, SolverTrace& trace) const {
    const int ncells = delta_.cols;
    LpProblem lp;
    int s_var = lp.add_var(true);
    lp.set_cost(s_var, Rat(1));
    std::vector<int> yvar(kernel_.size());
    for (std::size_t j = 0; j < kernel_.size(); ++j) yvar[j] = lp.add_var(false);

    auto cell_row = [&](std::size_t c) {
        std::map<int, Rat> row;
        for (const auto& [j, v] : kernel_by_cell_[c]) row[yvar[j]] = v;
        return row;
    };

    for (int c = 0; c < ncells; ++c) {
        bool constrained_zero = zero_cells && zero_cells->count(c);
        std::map<int, Rat> row = cell_row(c);
        if (constrained_zero) {
            lp.add_row(std::move(row), 'E', -particular[c]);
            continue;
        }
        if (row.empty()) {
            // value is fixed at particular[c]; it still forces s
            if (particular[c] != 0) lp.add_row({{s_var, Rat(-1)}}, 'L', -rat_abs(particular[c]));
            continue;
        }
        std::map<int, Rat> up = row;
        up[s_var] = Rat(-1);
        lp.add_row(std::move(up), 'L', -particular[c]);
        std::map<int, Rat> down;
        for (const auto& [var, v] : row) down[var] = -v;
        down[s_var] = Rat(-1);
        lp.add_row(std::move(down), 'L', particular[c]);
    }
    if (box) lp.add_row({{s_var, Rat(1)}}, 'L', *box);
    for (const auto& bb : bounds) {
        std::map<int, Rat> row = cell_row(bb.cell);
        if (bb.upper) {
            lp.add_row(std::move(row), 'L', bb.value - particular[bb.cell]);
        } else {
            std::map<int, Rat> neg;
            for (const auto& [var, v] : row) neg[var] = -v;
            lp.add_row(std::move(neg), 'L', particular[bb.cell] - bb.value);
        }
    }

    LpSolution sol = lp.solve();
    trace.lp_pivots += sol.trace.pivots();
    if (sol.status != LpSolution::Status::Optimal) return std::nullopt;

    Cochain a = empty_filler();
    for (int c = 0; c < ncells; ++c) {
        Rat val = particular[c];
        for (const auto& [j, v] : kernel_by_cell_[c]) val += v * sol.x[yvar[j]];
        a.set(c, val);
    }
    return std::make_pair(std::move(a), sol.objective);
}

FillResult FillSolver::real(const Cochain& w, const std::set<std::size_t>* zero_cells) const {
    if (w.degree != k_) throw Error(ErrorCode::Usage, "degree mismatch in fill");
    FillResult res;
    res.filler = empty_filler();
    if (w.is_zero() && !zero_cells) {
        // syntactically zero certificate for the zero input
        res.norm = Rat(0);
        res.optimal = true;
        return res;
    }
    auto particular = gauss_.solve(dense_rhs(w));
    if (!particular)
        throw Error(ErrorCode::Infeasible, "cochain is not a coboundary");
    auto sol = lp_solve(*particular, {}, nullptr, zero_cells, res.trace);
    if (!sol)
        throw Error(ErrorCode::Infeasible, "no filler vanishing on the constrained cells");
    res.filler = std::move(sol->first);
    res.norm = sol->second;
    res.optimal = true;
    apply_delta_check(res.filler, w);
    if (res.norm != res.filler.linf())
        throw Error(ErrorCode::IdentityFailure, "LP norm does not match recomputed norm");
    return res;
}

FillResult FillSolver::integral(const Cochain& w) const {
    if (!w.is_integral()) throw Error(ErrorCode::Usage, "integral fill needs integral input");
    FillResult res;
    res.filler = empty_filler();
    res.filler.ring = Ring::Z;
    if (w.is_zero()) {
        res.norm = Rat(0);
        return res;
    }
    FillResult relax = real(w);

    Cochain rounded = empty_filler();
    rounded.ring = Ring::Z;
    for (const auto& [c, v] : relax.filler.values) rounded.set(c, Rat(rat_round(v)));
    Cochain residual = w - coboundary(rounded);
    residual.ring = Ring::Z;

    if (residual.is_zero()) {
        res.filler = std::move(rounded);
    } else {
        FillResult repair;
        bool done = false;
        for (long box = 1; box <= 64; box *= 2) {
            try {
                repair = oracle(residual, box);
                done = true;
                res.trace.box_used = box;
                break;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::BoxTooSmall) throw;
            }
        }
        if (!done)
            throw Error(ErrorCode::Infeasible, "no bounded integral repair found");
        res.trace.bb_nodes = repair.trace.bb_nodes;
        res.trace.lp_pivots = repair.trace.lp_pivots;
        res.filler = rounded + repair.filler;
        res.filler.ring = Ring::Z;
    }
    apply_delta_check(res.filler, w);
    res.norm = res.filler.linf();
    res.k_round = res.norm - Rat(rat_ceil(relax.norm));
    return res;
}

FillResult FillSolver::oracle(const Cochain& w, long box) const {
    if (box < 1) throw Error(ErrorCode::Usage, "box bound must be >= 1");
    if (delta_.cols > 10000) throw Error(ErrorCode::SizeLimit, "oracle host too large");
    if (!w.is_integral()) throw Error(ErrorCode::Usage, "oracle needs integral input");

    FillResult res;
    res.filler = empty_filler();
    res.filler.ring = Ring::Z;
    if (w.is_zero()) {
        res.norm = Rat(0);
        res.optimal = true;
        return res;
    }
    auto particular = gauss_.solve(dense_rhs(w));
    if (!particular) throw Error(ErrorCode::Infeasible, "cochain is not a coboundary");

    const Rat box_rat(box);
    std::optional<Cochain> incumbent;
    Rat inc_norm;

    std::deque<std::vector<BranchBound>> stack;
    stack.push_back({});
    const long node_cap = 20000;
    while (!stack.empty()) {
        if (++res.trace.bb_nodes > node_cap)
            throw Error(ErrorCode::SizeLimit, "branch-and-bound node cap exceeded");
        std::vector<BranchBound> bounds = std::move(stack.back());
        stack.pop_back();

        auto sol = lp_solve(*particular, bounds, &box_rat, nullptr, res.trace);
        if (!sol) continue;  // infeasible within box under these bounds
        Rat lower = Rat(rat_ceil(sol->second));
        if (incumbent && lower >= inc_norm) continue;

        // first fractional coordinate, lowest cell index
        long frac_cell = -1;
        for (int c = 0; c < delta_.cols; ++c) {
            if (!rat_is_integer(sol->first.get(c))) {
                frac_cell = c;
                break;
            }
        }
        if (frac_cell < 0) {
            if (!incumbent || sol->second < inc_norm) {
                incumbent = sol->first;
                inc_norm = sol->second;
            }
            continue;
        }
        Rat val = sol->first.get(frac_cell);
        // explore the floor branch first (LIFO: push ceil, then floor)
        stack.push_back(bounds);
        stack.back().push_back({static_cast<std::size_t>(frac_cell), false, Rat(rat_ceil(val))});
        stack.push_back(bounds);
        stack.back().push_back({static_cast<std::size_t>(frac_cell), true, Rat(rat_floor(val))});
    }
    if (!incumbent) throw Error(ErrorCode::BoxTooSmall, "no integral filler within the box");
    res.filler = std::move(*incumbent);
    res.filler.ring = Ring::Z;
    res.norm = inc_norm;
    res.optimal = true;
    apply_delta_check(res.filler, w);
    return res;
}

namespace {

FillSolver make_solver(const Cochain& w) {
    if (w.sc) return FillSolver(*w.sc, w.degree);
    return FillSolver(*w.pc, w.degree);
}

}  // namespace

FillResult fill_linf_real(const Cochain& w, const std::set<std::size_t>* zero_cells) {
    return make_solver(w).real(w, zero_cells);
}

FillResult fill_linf_integral(const Cochain& w) { return make_solver(w).integral(w); }

FillResult ilp_fill_oracle(const Cochain& w, long box_bound) {
    return make_solver(w).oracle(w, box_bound);
}

namespace {

// Bellman-Ford feasibility of the difference constraints
//   n_b - n_a <= ub_e  for arcs (a -> b),
// over nodes 0..V-1; returns potentials when feasible.
std::optional<std::vector<Rat>> difference_feasible(
    int V, const std::vector<std::tuple<int, int, Rat>>& arcs) {
    std::vector<Rat> dist(V, Rat(0));
    for (int it = 0; it <= V; ++it) {
        bool changed = false;
        for (const auto& [a, b, ub] : arcs) {
            Rat cand = dist[a] + ub;
            if (cand < dist[b]) {
                dist[b] = cand;
                changed = true;
            }
        }
        if (!changed) return dist;
    }
    return std::nullopt;  // negative cycle
}

NearestCocycle nearest_cocycle_deg0(const Cochain& w) {
    const SimplicialComplex& X = *w.sc;
    // components via the edge graph
    std::vector<int> comp(X.size(0), -1);
    int ncomp = 0;
    for (std::size_t v = 0; v < X.size(0); ++v) {
        if (comp[v] >= 0) continue;
        std::vector<std::size_t> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (const auto& [e, _] : X.cofacets(0, u)) {
                for (Vertex other : X.cell(1, e)) {
                    if (comp[other] < 0) {
                        comp[other] = ncomp;
                        stack.push_back(other);
                    }
                }
            }
        }
        ++ncomp;
    }
    // a 0-cocycle is constant per component; the nearest integer constant wins
    std::vector<std::optional<Rat>> cval(ncomp);
    for (std::size_t v = 0; v < X.size(0); ++v) {
        Rat val = w.get(v);
        if (cval[comp[v]] && *cval[comp[v]] != val)
            throw Error(ErrorCode::PreconditionViolated, "input is not a cocycle");
        cval[comp[v]] = val;
    }
    NearestCocycle out{Cochain::on(X, 0, Ring::Z), Rat(0), true};
    for (std::size_t v = 0; v < X.size(0); ++v) {
        Rat val = *cval[comp[v]];
        Rat nearest = Rat(rat_round(val));
        out.cocycle.set(v, nearest);
        Rat d = rat_abs(val - nearest);
        if (d > out.distance) out.distance = d;
    }
    return out;
}

NearestCocycle nearest_cocycle_deg1(const Cochain& w) {
    const SimplicialComplex& X = *w.sc;
    const std::size_t V = X.size(0), E = X.size(1);

    // spanning forest; u0 in [0,1) with w + delta(u0) integral on tree edges
    std::vector<Rat> u0(V, Rat(0));
    std::vector<bool> seen(V, false);
    for (std::size_t root = 0; root < V; ++root) {
        if (seen[root]) continue;
        std::vector<std::size_t> stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            for (const auto& [e, _] : X.cofacets(0, a)) {
                const CellKey& ek = X.cell(1, e);
                std::size_t other = (static_cast<std::size_t>(ek[0]) == a) ? ek[1] : ek[0];
                if (seen[other]) continue;
                seen[other] = true;
                // want w_e + u0[head] - u0[tail] integral, head = ek[1], tail = ek[0]
                Rat need;  // congruence class of u0[other]
                if (static_cast<std::size_t>(ek[0]) == a)
                    need = u0[a] - w.get(e);  // other = head
                else
                    need = u0[a] + w.get(e);  // other = tail
                u0[other] = need - Rat(rat_floor(need));
                stack.push_back(other);
            }
        }
    }
    // integrality on the remaining edges decides the class
    std::vector<Rat> g(E);
    for (std::size_t e = 0; e < E; ++e) {
        const CellKey& ek = X.cell(1, e);
        g[e] = w.get(e) + u0[ek[1]] - u0[ek[0]];
        if (!rat_is_integer(g[e]))
            throw Error(ErrorCode::NoIntegralClass, "cocycle class is not integral");
    }
    // g is the integral cocycle w + delta(u0); minimize || delta(u0 + n) ||
    // over integer potentials n, i.e. max_e | (u0_h - u0_t) + (n_h - n_t) |.
    std::vector<Rat> h(E);  // fractional edge differences
    for (std::size_t e = 0; e < E; ++e) {
        const CellKey& ek = X.cell(1, e);
        h[e] = u0[ek[1]] - u0[ek[0]];
    }
    std::vector<Rat> candidates{Rat(0)};
    for (const auto& he : h) {
        for (long m = -1; m <= 1; ++m) {
            Rat c = rat_abs(he + Rat(m));
            if (c <= 1) candidates.push_back(c);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    auto feasible = [&](const Rat& s) -> std::optional<std::vector<Rat>> {
        std::vector<std::tuple<int, int, Rat>> arcs;
        arcs.reserve(2 * E);
        for (std::size_t e = 0; e < E; ++e) {
            const CellKey& ek = X.cell(1, e);
            int t = ek[0], hd = ek[1];
            // n_h - n_t <= floor(s - h_e), n_t - n_h <= floor(s + h_e)
            arcs.emplace_back(t, hd, Rat(rat_floor(s - h[e])));
            arcs.emplace_back(hd, t, Rat(rat_floor(s + h[e])));
        }
        return difference_feasible(static_cast<int>(V), arcs);
    };

    // first feasible candidate by binary search (feasibility is monotone in s)
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (feasible(candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    auto pot = feasible(candidates[lo]);
    if (!pot) throw Error(ErrorCode::IdentityFailure, "difference-constraint search failed");

    NearestCocycle out{Cochain::on(X, 1, Ring::Z), candidates[lo], true};
    for (std::size_t e = 0; e < E; ++e) {
        const CellKey& ek = X.cell(1, e);
        Rat val = w.get(e) + (u0[ek[1]] + (*pot)[ek[1]]) - (u0[ek[0]] + (*pot)[ek[0]]);
        if (!rat_is_integer(val))
            throw Error(ErrorCode::IdentityFailure, "rounded cocycle is not integral");
        out.cocycle.set(e, val);
    }
    Rat check(0);
    for (std::size_t e = 0; e < E; ++e) {
        Rat d = rat_abs(out.cocycle.get(e) - w.get(e));
        if (d > check) check = d;
    }
    if (check != out.distance)
        throw Error(ErrorCode::IdentityFailure, "achieved distance mismatch");
    return out;
}

NearestCocycle nearest_cocycle_generic(const Cochain& w) {
    const int k = w.degree;
    Cochain rounded = w.sc ? Cochain::on(*w.sc, k, Ring::Z) : Cochain::on(*w.pc, k, Ring::Z);
    for (const auto& [c, v] : w.values) rounded.set(c, Rat(rat_round(v)));
    Cochain d = coboundary(rounded);
    d *= Rat(-1);
    NearestCocycle out{rounded, Rat(0), false};
    if (!d.is_zero()) {
        FillSolver fs = w.sc ? FillSolver(*w.sc, k + 1) : FillSolver(*w.pc, k + 1);
        FillResult repair;
        bool done = false;
        for (long box = 1; box <= 64 && !done; box *= 2) {
            try {
                repair = fs.oracle(d, box);
                done = true;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::BoxTooSmall) throw;
            }
        }
        if (!done) throw Error(ErrorCode::NoIntegralClass, "no bounded integral cocycle found");
        out.cocycle = rounded + repair.filler;
    }
    if (!coboundary(out.cocycle).is_zero())
        throw Error(ErrorCode::IdentityFailure, "repair did not produce a cocycle");
    // class check: the difference must be a coboundary
    Cochain diff = out.cocycle - w;
    if (k >= 1) {
        FillSolver fs = w.sc ? FillSolver(*w.sc, k) : FillSolver(*w.pc, k);
        try {
            fs.real(diff);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Infeasible)
                throw Error(ErrorCode::NoIntegralClass, "nearest integral cocycle changes the class");
            throw;
        }
    }
    out.distance = diff.linf();
    return out;
}

}  // namespace

NearestCocycle nearest_integral_cocycle(const Cochain& w) {
    if (!coboundary(w).is_zero())
        throw Error(ErrorCode::PreconditionViolated, "input is not a cocycle");
    if (w.is_integral()) {
        NearestCocycle out{w, Rat(0), true};
        out.cocycle.ring = Ring::Z;
        return out;
    }
    if (w.sc && w.degree == 0) return nearest_cocycle_deg0(w);
    if (w.sc && w.degree == 1) return nearest_cocycle_deg1(w);
    return nearest_cocycle_generic(w);
}

}  // namespace nw
