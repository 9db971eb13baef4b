#include "nullwidth/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nw {

long SimplicialComplex::find(int k, const CellKey& key) const {
    if (k < 0 || k > dimension()) return -1;
    const auto& v = cells_[k];
    auto it = std::lower_bound(v.begin(), v.end(), key);
    if (it == v.end() || *it != key) return -1;
    return static_cast<long>(it - v.begin());
}

bool SimplicialComplex::is_closed_pseudomanifold() const {
    int n = dimension();
    if (n < 1) return false;
    for (std::size_t f = 0; f < size(n - 1); ++f)
        if (cofacets(n - 1, f).size() != 2) return false;
    return true;
}

const std::vector<int>& SimplicialComplex::top_orientation() const {
    if (top_orient_done_) return top_orient_;
    top_orient_done_ = true;
    top_orient_.clear();
    int n = dimension();
    if (!is_closed_pseudomanifold()) return top_orient_;

    // Propagate signs across shared facets; [t:F] o(t) + [t':F] o(t') = 0.
    std::vector<int> o(size(n), 0);
    std::vector<std::size_t> stack;
    o[0] = 1;
    stack.push_back(0);
    while (!stack.empty()) {
        std::size_t t = stack.back();
        stack.pop_back();
        for (const auto& [f, sgn] : facets_[n][t]) {
            for (const auto& [t2, sgn2] : cofacets_[n - 1][f]) {
                if (t2 == t) continue;
                int want = -sgn * o[t] * sgn2;  // sgn2 in {+-1}, so 1/sgn2 = sgn2
                if (o[t2] == 0) {
                    o[t2] = want;
                    stack.push_back(t2);
                } else if (o[t2] != want) {
                    return top_orient_;  // nonorientable
                }
            }
        }
    }
    if (std::find(o.begin(), o.end(), 0) != o.end()) return top_orient_;  // disconnected
    top_orient_ = std::move(o);
    return top_orient_;
}

void ComplexBuilder::add_simplex(CellKey key) {
    std::sort(key.begin(), key.end());
    for (std::size_t i = 1; i < key.size(); ++i)
        if (key[i] == key[i - 1]) throw Error(ErrorCode::Usage, "degenerate simplex");
    int k = static_cast<int>(key.size()) - 1;
    if (static_cast<int>(bydim_.size()) <= k) bydim_.resize(k + 1);
    if (bydim_[k].count(key)) return;
    bydim_[k][key] = true;
    if (k > 0) {
        for (std::size_t i = 0; i < key.size(); ++i) {
            CellKey face;
            face.reserve(key.size() - 1);
            for (std::size_t j = 0; j < key.size(); ++j)
                if (j != i) face.push_back(key[j]);
            add_simplex(std::move(face));
        }
    }
}

SimplicialComplex ComplexBuilder::build(std::string id) {
    SimplicialComplex X;
    X.id = std::move(id);
    X.cells_.resize(bydim_.size());
    std::set<Vertex> verts;
    for (std::size_t k = 0; k < bydim_.size(); ++k) {
        X.cells_[k].reserve(bydim_[k].size());
        for (const auto& [key, _] : bydim_[k]) {
            X.cells_[k].push_back(key);
            for (Vertex v : key) verts.insert(v);
        }
        // std::map iteration is already lexicographic
    }
    X.num_vertices_ = static_cast<int>(verts.size());

    int n = X.dimension();
    X.facets_.resize(n + 1);
    X.cofacets_.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        X.facets_[k].resize(X.cells_[k].size());
        X.cofacets_[k].resize(X.cells_[k].size());
    }
    for (int k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < X.cells_[k].size(); ++i) {
            const CellKey& key = X.cells_[k][i];
            for (std::size_t drop = 0; drop < key.size(); ++drop) {
                CellKey face;
                face.reserve(key.size() - 1);
                for (std::size_t j = 0; j < key.size(); ++j)
                    if (j != drop) face.push_back(key[j]);
                long fi = X.find(k - 1, face);
                if (fi < 0) throw Error(ErrorCode::Usage, "complex not closed under faces");
                int sgn = (drop % 2 == 0) ? 1 : -1;
                X.facets_[k][i].emplace_back(static_cast<std::size_t>(fi), sgn);
                X.cofacets_[k - 1][fi].emplace_back(i, sgn);
            }
        }
    }
    return X;
}

SimplicialComplex boundary_sphere_complex(int n) {
    if (n < 1) throw Error(ErrorCode::Usage, "boundary_sphere_complex requires n >= 1");
    ComplexBuilder b;
    // all n+1 element subsets of {0..n+1} = facets of the (n+1)-simplex
    int m = n + 2;
    std::vector<Vertex> all(m);
    std::iota(all.begin(), all.end(), 0);
    for (int drop = 0; drop < m; ++drop) {
        CellKey facet;
        for (int v = 0; v < m; ++v)
            if (v != drop) facet.push_back(v);
        b.add_simplex(facet);
    }
    auto X = b.build("S" + std::to_string(n));
    X.meta = {X.id, 1};
    return X;
}

namespace {

// Subdivision vertices are formal convex combinations sum_i w_i v_i with
// integer weights summing to L; identical labels on shared faces glue
// automatically.
using Label = std::vector<std::pair<Vertex, int>>;  // sorted by vertex, weights > 0

Label make_label(const CellKey& simplex, const std::vector<int>& bary) {
    Label lab;
    for (std::size_t i = 0; i < simplex.size(); ++i)
        if (bary[i] > 0) lab.emplace_back(simplex[i], bary[i]);
    return lab;
}

}  // namespace

SimplicialComplex edgewise_subdivide(const SimplicialComplex& X, int L) {
    if (L < 1) throw Error(ErrorCode::Usage, "subdivision level must be >= 1");
    int n = X.dimension();

    std::map<Label, int> vertex_ids;
    auto vertex_of = [&](const Label& lab) {
        auto it = vertex_ids.find(lab);
        if (it != vertex_ids.end()) return it->second;
        int id = static_cast<int>(vertex_ids.size());
        vertex_ids.emplace(lab, id);
        return id;
    };

    ComplexBuilder b;
    // Enumerate the Kuhn cells (z, pi) of L*Delta^k in staircase coordinates
    // L >= t_1 >= ... >= t_k >= 0; barycentric a_0 = L - t_1, a_i = t_i - t_{i+1}.
    for (int k = 0; k <= n; ++k) {
        for (const CellKey& simplex : X.cells(k)) {
            if (k == 0) {
                b.add_simplex({vertex_of(make_label(simplex, {L}))});
                continue;
            }
            std::vector<int> perm(k);
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<std::vector<int>> perms;
            do {
                perms.push_back(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));

            std::vector<int> z(k, 0);
            while (true) {
                for (const auto& p : perms) {
                    // path vertices u^0 = z, u^j = u^{j-1} + e_{p[j-1]}
                    std::vector<std::vector<int>> us(k + 1, z);
                    bool ok = true;
                    for (int j = 1; j <= k; ++j) {
                        us[j] = us[j - 1];
                        us[j][p[j - 1]] += 1;
                    }
                    for (const auto& u : us) {
                        if (u[0] > L) ok = false;
                        for (int i = 0; i + 1 < k; ++i)
                            if (u[i] < u[i + 1]) ok = false;
                        if (u[k - 1] < 0) ok = false;
                        if (!ok) break;
                    }
                    if (!ok) continue;
                    CellKey cell;
                    for (const auto& u : us) {
                        std::vector<int> bary(k + 1);
                        bary[0] = L - u[0];
                        for (int i = 0; i + 1 < k; ++i) bary[i + 1] = u[i] - u[i + 1];
                        bary[k] = u[k - 1];
                        cell.push_back(vertex_of(make_label(simplex, bary)));
                    }
                    std::sort(cell.begin(), cell.end());
                    bool degen = false;
                    for (std::size_t i = 1; i < cell.size(); ++i)
                        if (cell[i] == cell[i - 1]) degen = true;
                    if (!degen) b.add_simplex(cell);
                }
                // next z in the box [0,L)^k (staircase filter happens above)
                int i = 0;
                for (; i < k; ++i) {
                    if (++z[i] < L) break;
                    z[i] = 0;
                }
                if (i == k) break;
            }
        }
    }
    auto Y = b.build(X.id + "_esd" + std::to_string(L));
    Y.meta.base_id = X.meta.base_id.empty() ? X.id : X.meta.base_id;
    Y.meta.level = X.meta.level * L;
    return Y;
}

ProductComplex::ProductComplex(const SimplicialComplex& base, int T) : base_(&base), T_(T) {
    if (T < 1) throw Error(ErrorCode::Usage, "product interval count must be >= 1");
    id = base_->id + "_xI" + std::to_string(T_);
}

std::size_t ProductComplex::size(int k) const {
    if (k < 0 || k > dimension()) return 0;
    std::size_t nodes = base_->size(k) * static_cast<std::size_t>(T_ + 1);
    std::size_t prisms = (k >= 1) ? base_->size(k - 1) * static_cast<std::size_t>(T_) : 0;
    return nodes + prisms;
}

std::size_t ProductComplex::node_index(int k, std::size_t base_idx, int node) const {
    return static_cast<std::size_t>(node) * base_->size(k) + base_idx;
}

std::size_t ProductComplex::prism_index(int k, std::size_t base_idx, int interval) const {
    return base_->size(k) * static_cast<std::size_t>(T_ + 1) +
           static_cast<std::size_t>(interval) * base_->size(k - 1) + base_idx;
}

ProductComplex::Cell ProductComplex::decode(int k, std::size_t idx) const {
    std::size_t nodes = base_->size(k) * static_cast<std::size_t>(T_ + 1);
    if (idx < nodes) {
        std::size_t nk = base_->size(k);
        return {Kind::Node, idx % nk, static_cast<int>(idx / nk)};
    }
    idx -= nodes;
    std::size_t nk = base_->size(k - 1);
    return {Kind::Prism, idx % nk, static_cast<int>(idx / nk)};
}

std::vector<std::pair<std::size_t, int>> ProductComplex::facets(int k, std::size_t idx) const {
    std::vector<std::pair<std::size_t, int>> out;
    Cell c = decode(k, idx);
    if (c.kind == Kind::Node) {
        for (const auto& [f, sgn] : base_->facets(k, c.base_idx))
            out.emplace_back(node_index(k - 1, f, c.time), sgn);
    } else {
        int bd = k - 1;  // dimension of the base cell
        for (const auto& [f, sgn] : base_->facets(bd, c.base_idx))
            out.emplace_back(prism_index(k - 1, f, c.time), sgn);
        int vsgn = (bd % 2 == 0) ? 1 : -1;
        out.emplace_back(node_index(k - 1, c.base_idx, c.time + 1), vsgn);
        out.emplace_back(node_index(k - 1, c.base_idx, c.time), -vsgn);
    }
    return out;
}

std::vector<std::pair<std::size_t, int>> ProductComplex::cofacets(int k, std::size_t idx) const {
    std::vector<std::pair<std::size_t, int>> out;
    Cell c = decode(k, idx);
    if (c.kind == Kind::Node) {
        for (const auto& [cf, sgn] : base_->cofacets(k, c.base_idx))
            out.emplace_back(node_index(k + 1, cf, c.time), sgn);
        int vsgn = (k % 2 == 0) ? 1 : -1;
        if (c.time < T_) out.emplace_back(prism_index(k + 1, c.base_idx, c.time), -vsgn);
        if (c.time > 0) out.emplace_back(prism_index(k + 1, c.base_idx, c.time - 1), vsgn);
    } else {
        int bd = k - 1;
        for (const auto& [cf, sgn] : base_->cofacets(bd, c.base_idx))
            out.emplace_back(prism_index(k + 1, cf, c.time), sgn);
    }
    return out;
}

int ProductComplex::top_orientation(std::size_t idx) const {
    const auto& bo = base_->top_orientation();
    if (bo.empty()) throw Error(ErrorCode::Usage, "base complex is not closed orientable");
    Cell c = decode(dimension(), idx);
    if (c.kind != Kind::Prism) throw Error(ErrorCode::Usage, "top cell expected");
    return bo[c.base_idx];
}

Cochain Cochain::on(const SimplicialComplex& X, int degree, Ring ring) {
    Cochain c;
    c.degree = degree;
    c.ring = ring;
    c.sc = &X;
    return c;
}

Cochain Cochain::on(const ProductComplex& X, int degree, Ring ring) {
    Cochain c;
    c.degree = degree;
    c.ring = ring;
    c.pc = &X;
    return c;
}

std::size_t Cochain::host_size() const {
    return sc ? sc->size(degree) : pc->size(degree);
}

const Rat& Cochain::get(std::size_t cell) const {
    static const Rat zero(0);
    auto it = values.find(cell);
    return it == values.end() ? zero : it->second;
}

void Cochain::set(std::size_t cell, Rat v) {
    if (v == 0)
        values.erase(cell);
    else
        values[cell] = std::move(v);
}

void Cochain::add(std::size_t cell, const Rat& v) {
    if (v == 0) return;
    auto [it, inserted] = values.emplace(cell, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) values.erase(it);
    }
}

Rat Cochain::linf() const {
    Rat m(0);
    for (const auto& [_, v] : values) {
        Rat a = rat_abs(v);
        if (a > m) m = a;
    }
    return m;
}

bool Cochain::is_integral() const {
    for (const auto& [_, v] : values)
        if (!rat_is_integer(v)) return false;
    return true;
}

Cochain& Cochain::operator+=(const Cochain& other) {
    for (const auto& [cell, v] : other.values) add(cell, v);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
    for (const auto& [cell, v] : other.values) add(cell, -v);
    return *this;
}

Cochain& Cochain::operator*=(const Rat& s) {
    if (s == 0) {
        values.clear();
        return *this;
    }
    for (auto& [_, v] : values) v *= s;
    return *this;
}

bool Cochain::operator==(const Cochain& other) const {
    return degree == other.degree && values == other.values && same_host(other);
}

Cochain coboundary(const Cochain& c) {
    int k = c.degree;
    int n = c.sc ? c.sc->dimension() : c.pc->dimension();
    Cochain out = c.sc ? Cochain::on(*c.sc, k + 1, c.ring) : Cochain::on(*c.pc, k + 1, c.ring);
    if (k >= n) return out;  // zero cochain, not an error
    for (const auto& [cell, v] : c.values) {
        if (c.sc) {
            for (const auto& [cf, sgn] : c.sc->cofacets(k, cell)) out.add(cf, sgn * v);
        } else {
            for (const auto& [cf, sgn] : c.pc->cofacets(k, cell)) out.add(cf, sgn * v);
        }
    }
    return out;
}

Cochain time_slice(const Cochain& c, SliceMode mode, int node) {
    if (!c.pc) throw Error(ErrorCode::Usage, "time_slice needs a product-complex cochain");
    const ProductComplex& P = *c.pc;
    if (mode == SliceMode::Restrict) {
        if (node < 0 || node > P.intervals())
            throw Error(ErrorCode::Usage, "node index out of range");
        Cochain out = Cochain::on(P.base(), c.degree, c.ring);
        for (const auto& [cell, v] : c.values) {
            auto pc = P.decode(c.degree, cell);
            if (pc.kind == ProductComplex::Kind::Node && pc.time == node)
                out.set(pc.base_idx, v);
        }
        return out;
    }
    Cochain out = Cochain::on(P.base(), c.degree - 1, c.ring);
    for (const auto& [cell, v] : c.values) {
        auto pc = P.decode(c.degree, cell);
        if (pc.kind == ProductComplex::Kind::Prism) out.add(pc.base_idx, v);
    }
    return out;
}

Cochain include_at_node(const ProductComplex& P, const Cochain& c, int node) {
    if (node < 0 || node > P.intervals()) throw Error(ErrorCode::Usage, "node index out of range");
    Cochain out = Cochain::on(P, c.degree, c.ring);
    for (const auto& [cell, v] : c.values) out.set(P.node_index(c.degree, cell, node), v);
    return out;
}

Rat fundamental_pairing(const Cochain& c) {
    Rat total(0);
    if (c.sc) {
        if (c.degree != c.sc->dimension())
            throw Error(ErrorCode::Usage, "fundamental pairing needs a top-degree cochain");
        const auto& o = c.sc->top_orientation();
        if (o.empty()) throw Error(ErrorCode::Usage, "complex is not closed orientable");
        for (const auto& [cell, v] : c.values) total += o[cell] * v;
    } else {
        if (c.degree != c.pc->dimension())
            throw Error(ErrorCode::Usage, "fundamental pairing needs a top-degree cochain");
        for (const auto& [cell, v] : c.values) total += c.pc->top_orientation(cell) * v;
    }
    return total;
}

}  // namespace nw
