#ifndef NULLWIDTH_COMPLEX_HPP
#define NULLWIDTH_COMPLEX_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nullwidth/error.hpp"
#include "nullwidth/rational.hpp"

namespace nw {

using Vertex = int;
/** Strictly increasing vertex tuple; the orientation of a cell is the one
 *  induced by this order. */
using CellKey = std::vector<Vertex>;

/*
 * Sign conventions, used consistently everywhere:
 *
 *   boundary   d(v0..vk) = sum_i (-1)^i (v0..^vi..vk)
 *   coboundary (dc)(tau) = sum_{F facet of tau} [tau:F] c(F)   (transpose)
 *
 * Product cells over a base complex X and T intervals:
 *   Node(s,i)  = s x {i},        dim |s|,   0 <= i <= T
 *   Prism(s,i) = s x [i,i+1],    dim |s|+1, 0 <= i < T
 *   d Prism(s,i) = sum_j (-1)^j Prism(d_j s, i)
 *                  + (-1)^{|s|} (Node(s,i+1) - Node(s,i))
 *
 * With these signs, Stokes' theorem holds cell by cell for the integration
 * conventions in forms.hpp.
 */

struct SubdivisionMeta {
    std::string base_id;
    int level = 1;
};

class SimplicialComplex {
  public:
    int dimension() const { return static_cast<int>(cells_.size()) - 1; }
    int num_vertices() const { return num_vertices_; }

    std::size_t size(int k) const {
        if (k < 0 || k > dimension()) return 0;
        return cells_[k].size();
    }
    const std::vector<CellKey>& cells(int k) const { return cells_.at(k); }
    const CellKey& cell(int k, std::size_t i) const { return cells_.at(k).at(i); }

    /** Index of a sorted vertex tuple, or -1. */
    long find(int k, const CellKey& key) const;

    /** Facets of cell (k,i) as (index in dim k-1, incidence sign). */
    const std::vector<std::pair<std::size_t, int>>& facets(int k, std::size_t i) const {
        return facets_.at(k).at(i);
    }
    /** Cofacets of cell (k,i) as (index in dim k+1, incidence sign). */
    const std::vector<std::pair<std::size_t, int>>& cofacets(int k, std::size_t i) const {
        return cofacets_.at(k).at(i);
    }

    /**
     * Coherent orientation of the top cells (+-1 each), nonempty exactly when
     * the complex is a closed orientable n-pseudomanifold.  The signed sum
     * against this vector is the evaluation of a top cochain on the
     * fundamental cycle.
     */
    const std::vector<int>& top_orientation() const;

    bool is_closed_pseudomanifold() const;

    std::string id;
    SubdivisionMeta meta;

    friend class ComplexBuilder;

  private:
    int num_vertices_ = 0;
    std::vector<std::vector<CellKey>> cells_;  // per dimension, lexicographically sorted
    std::vector<std::vector<std::vector<std::pair<std::size_t, int>>>> facets_;
    std::vector<std::vector<std::vector<std::pair<std::size_t, int>>>> cofacets_;
    mutable std::vector<int> top_orient_;
    mutable bool top_orient_done_ = false;
};

/** Accumulates simplices (faces are added automatically) and builds the
 *  incidence structure. */
class ComplexBuilder {
  public:
    void add_simplex(CellKey key);  // any vertex order; sorted internally
    SimplicialComplex build(std::string id = "");

  private:
    std::vector<std::map<CellKey, bool>> bydim_;
};

/** Canonical S^n model: the boundary of the standard (n+1)-simplex. */
SimplicialComplex boundary_sphere_complex(int n);

/**
 * L-fold edgewise (Freudenthal-Kuhn) subdivision.  Each n-simplex is replaced
 * by L^n n-simplices; the scheme restricts to the subdivision of every face,
 * so it glues over the whole complex.
 */
SimplicialComplex edgewise_subdivide(const SimplicialComplex& X, int L);

/** Product cell structure X x [0,T] with T unit intervals. */
class ProductComplex {
  public:
    enum class Kind { Node, Prism };

    /** References the base complex; the caller keeps it alive. */
    ProductComplex(const SimplicialComplex& base, int T);

    const SimplicialComplex& base() const { return *base_; }
    int intervals() const { return T_; }
    int dimension() const { return base_->dimension() + 1; }

    std::size_t size(int k) const;

    // Cells of dimension k are indexed nodes first, prisms second:
    //   Node(s,i): index = i * base.size(k) + s
    //   Prism(s,i): index = (T+1) * base.size(k) + i * base.size(k-1) + s
    std::size_t node_index(int k, std::size_t base_idx, int node) const;
    std::size_t prism_index(int k, std::size_t base_idx, int interval) const;

    struct Cell {
        Kind kind;
        std::size_t base_idx;  // in dim k (node) or k-1 (prism)
        int time;              // node in [0,T] or interval in [0,T)
    };
    Cell decode(int k, std::size_t idx) const;

    std::vector<std::pair<std::size_t, int>> facets(int k, std::size_t idx) const;
    std::vector<std::pair<std::size_t, int>> cofacets(int k, std::size_t idx) const;

    /** Orientation coefficients of the relative fundamental cycle
     *  [base] x [0,T] on top (prism) cells; requires base.top_orientation(). */
    int top_orientation(std::size_t idx) const;

    std::string id;

  private:
    const SimplicialComplex* base_;
    int T_;
};

enum class Ring { Z, Q };

/**
 * Sparse graded cochain with exact values.  Entries index cells of the host
 * in the cochain's degree; zero entries are pruned.
 */
struct Cochain {
    int degree = 0;
    Ring ring = Ring::Q;
    std::map<std::size_t, Rat> values;
    const SimplicialComplex* sc = nullptr;
    const ProductComplex* pc = nullptr;

    static Cochain on(const SimplicialComplex& X, int degree, Ring ring = Ring::Q);
    static Cochain on(const ProductComplex& X, int degree, Ring ring = Ring::Q);

    std::size_t host_size() const;
    bool same_host(const Cochain& other) const { return sc == other.sc && pc == other.pc; }

    const Rat& get(std::size_t cell) const;
    void set(std::size_t cell, Rat v);
    void add(std::size_t cell, const Rat& v);

    /** l-infinity norm: max of |value| over cells. */
    Rat linf() const;
    bool is_zero() const { return values.empty(); }
    bool is_integral() const;

    Cochain& operator+=(const Cochain& other);
    Cochain& operator-=(const Cochain& other);
    Cochain& operator*=(const Rat& s);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(Cochain a, const Rat& s) { return a *= s; }
    bool operator==(const Cochain& other) const;
};

/** Simplicial or product coboundary of c; degrees above the host dimension
 *  give the zero cochain. */
Cochain coboundary(const Cochain& c);

enum class SliceMode { Restrict, Aggregate };

/**
 * Restrict: the slice cochain at a node (same degree, on the base complex).
 * Aggregate: q |-> sum_i c(q x [i,i+1]), dropping the degree by one.
 */
Cochain time_slice(const Cochain& c, SliceMode mode, int node = 0);

/** The slice-supported product cochain equal to c on base cells at the given
 *  node and zero elsewhere. */
Cochain include_at_node(const ProductComplex& P, const Cochain& c, int node);

/** Evaluation of a top-degree cochain against the fundamental cycle. */
Rat fundamental_pairing(const Cochain& c);

}  // namespace nw

#endif
