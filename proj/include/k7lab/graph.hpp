#ifndef K7LAB_GRAPH_HPP
#define K7LAB_GRAPH_HPP

// Small simple undirected graphs on at most 31 vertices, adjacency kept as
// one 32-bit mask per vertex.  Values are immutable; every "mutation" returns
// a fresh copy.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace k7lab {

using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 31;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline VertexSet vbit(int v) { return VertexSet{1} << v; }
inline bool contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

/// Full vertex set {0..n-1}.
inline VertexSet all_vertices(int n) {
    return n == 0 ? 0u : (n == 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1);
}

/// Iterate v over the bits of a VertexSet.
#define K7LAB_FOR_EACH_VERTEX(v, set_expr)                                   \
    for (::k7lab::VertexSet k7lab_iter_ = (set_expr); k7lab_iter_ != 0;)     \
        for (int v = ::std::countr_zero(k7lab_iter_); v >= 0;               \
             k7lab_iter_ &= k7lab_iter_ - 1, v = -1)

inline std::vector<int> set_to_vector(VertexSet s) {
    std::vector<int> out;
    for (VertexSet t = s; t; t &= t - 1) out.push_back(std::countr_zero(t));
    return out;
}

class SmallGraph {
  public:
    SmallGraph() : n_(0), adj_{} {}

    explicit SmallGraph(int n) : n_(n), adj_{} {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("SmallGraph: order out of range");
    }

    static SmallGraph from_edges(int n,
                                 std::initializer_list<std::pair<int, int>> edges) {
        SmallGraph g(n);
        for (auto [u, v] : edges) g.add_edge_in_place(u, v);
        return g;
    }

    static SmallGraph from_edges(int n,
                                 const std::vector<std::pair<int, int>>& edges) {
        SmallGraph g(n);
        for (auto [u, v] : edges) g.add_edge_in_place(u, v);
        return g;
    }

    int order() const { return n_; }

    int size() const {  // e(G)
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
        return twice / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return contains(adj_[u], v);
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    VertexSet closed_neighborhood(int v) const { return neighbors(v) | vbit(v); }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    int min_degree() const {
        int d = n_ == 0 ? 0 : n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    SmallGraph with_edge(int u, int v) const {
        SmallGraph g = *this;
        g.add_edge_in_place(u, v);
        return g;
    }

    SmallGraph without_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        SmallGraph g = *this;
        g.adj_[u] &= ~vbit(v);
        g.adj_[v] &= ~vbit(u);
        return g;
    }

    /// Append a new vertex (index n) adjacent to exactly `nbrs`.
    SmallGraph with_vertex(VertexSet nbrs) const {
        if (n_ >= kMaxVertices)
            throw std::invalid_argument("with_vertex: order limit reached");
        if (nbrs & ~all_vertices(n_))
            throw std::invalid_argument("with_vertex: neighbor out of range");
        SmallGraph g = *this;
        g.n_ = n_ + 1;
        g.adj_[n_] = nbrs;
        K7LAB_FOR_EACH_VERTEX(v, nbrs) g.adj_[v] |= vbit(n_);
        return g;
    }

    /// Induced subgraph on `s`, vertices reindexed in ascending order.
    SmallGraph induced(VertexSet s) const {
        if (s & ~all_vertices(n_))
            throw std::invalid_argument("induced: vertex out of range");
        std::array<int, kMaxVertices> newindex{};
        int m = 0;
        K7LAB_FOR_EACH_VERTEX(v, s) newindex[v] = m++;
        SmallGraph g(m);
        K7LAB_FOR_EACH_VERTEX(v, s) {
            K7LAB_FOR_EACH_VERTEX(u, adj_[v] & s) {
                g.adj_[newindex[v]] |= vbit(newindex[u]);
            }
        }
        return g;
    }

    /// Delete one vertex; vertices above it shift down by one.
    SmallGraph without_vertex(int v) const {
        check_vertex(v);
        return induced(all_vertices(n_) & ~vbit(v));
    }

    bool operator==(const SmallGraph& o) const {
        if (n_ != o.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[v] != o.adj_[v]) return false;
        return true;
    }

    /// Invariant audit: symmetry, no loops, no stray bits, even degree sum.
    void validate() const {
        if (n_ < 0 || n_ > kMaxVertices)
            throw std::logic_error("SmallGraph: bad order");
        VertexSet allowed = all_vertices(n_);
        for (int v = 0; v < n_; ++v) {
            if (adj_[v] & ~allowed)
                throw std::logic_error("SmallGraph: adjacency bit beyond order");
            if (contains(adj_[v], v))
                throw std::logic_error("SmallGraph: loop");
            K7LAB_FOR_EACH_VERTEX(u, adj_[v]) {
                if (!contains(adj_[u], v))
                    throw std::logic_error("SmallGraph: asymmetric adjacency");
            }
        }
        for (int v = n_; v < kMaxVertices; ++v)
            if (adj_[v]) throw std::logic_error("SmallGraph: padding not zero");
    }

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    }

    void add_edge_in_place(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge");
        adj_[u] |= vbit(v);
        adj_[v] |= vbit(u);
    }

    int n_;
    std::array<VertexSet, kMaxVertices> adj_;
};

// ---------------------------------------------------------------------------
// Structural operations.

/// Contract edge uv.  The merged vertex keeps index min(u,v) and inherits
/// (N(u) ∪ N(v)) \ {u,v}; vertices above max(u,v) shift down by one.
inline SmallGraph contract(const SmallGraph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("contract: identical endpoints");
    if (!g.has_edge(u, v)) throw std::invalid_argument("contract: edge absent");
    int keep = std::min(u, v), drop = std::max(u, v);
    VertexSet merged = (g.neighbors(u) | g.neighbors(v)) & ~vbit(u) & ~vbit(v);
    SmallGraph h(g.order() - 1);
    auto remap = [&](int w) { return w > drop ? w - 1 : w; };
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < g.order(); ++a) {
        if (a == drop) continue;
        K7LAB_FOR_EACH_VERTEX(b, g.neighbors(a)) {
            if (b == drop || b <= a) continue;
            if (a == keep || b == keep) continue;  // rebuilt from `merged`
            edges.emplace_back(remap(a), remap(b));
        }
    }
    K7LAB_FOR_EACH_VERTEX(w, merged) edges.emplace_back(remap(keep), remap(w));
    return SmallGraph::from_edges(g.order() - 1, edges);
}

inline SmallGraph complement(const SmallGraph& g) {
    int n = g.order();
    SmallGraph h(n);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return SmallGraph::from_edges(n, edges);
}

/// Disjoint union; h's vertices are shifted up by g.order().
inline SmallGraph union_graphs(const SmallGraph& g, const SmallGraph& h) {
    int n = g.order() + h.order();
    if (n > kMaxVertices) throw std::invalid_argument("union: order overflow");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        K7LAB_FOR_EACH_VERTEX(v, g.neighbors(u)) if (v > u) edges.emplace_back(u, v);
    for (int u = 0; u < h.order(); ++u)
        K7LAB_FOR_EACH_VERTEX(v, h.neighbors(u))
        if (v > u) edges.emplace_back(u + g.order(), v + g.order());
    return SmallGraph::from_edges(n, edges);
}

/// Join: disjoint union plus all cross edges.
inline SmallGraph join_graphs(const SmallGraph& g, const SmallGraph& h) {
    SmallGraph j = union_graphs(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) j = j.with_edge(u, g.order() + v);
    return j;
}

// ---------------------------------------------------------------------------
// Named constructors.

inline SmallGraph make_empty(int k) { return SmallGraph(k); }

inline SmallGraph make_complete(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    return SmallGraph::from_edges(k, edges);
}

inline SmallGraph make_path(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
    return SmallGraph::from_edges(k, edges);
}

inline SmallGraph make_cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle: need k >= 3");
    SmallGraph g = make_path(k);
    return g.with_edge(k - 1, 0);
}

inline SmallGraph make_complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return SmallGraph::from_edges(a + b, edges);
}

/// H8 on vertices {w,w1,w2,w3,x1,x2,x3,x4} = {0..7}, built as the complement
/// of the 3-regular graph with edges w-w1, w-w2, w-w3, the path x1-x2-x3-x4,
/// and w1x1, w1x3, w2x1, w2x4, w3x2, w3x4.
inline SmallGraph make_h8() {
    constexpr int w = 0, w1 = 1, w2 = 2, w3 = 3, x1 = 4, x2 = 5, x3 = 6, x4 = 7;
    SmallGraph bar = SmallGraph::from_edges(
        8, {{w, w1}, {w, w2}, {w, w3},
            {x1, x2}, {x2, x3}, {x3, x4},
            {w1, x1}, {w1, x3}, {w2, x1}, {w2, x4}, {w3, x2}, {w3, x4}});
    SmallGraph h = complement(bar);
    // One-time sanity of the frozen construction.
    static const bool ok = [](const SmallGraph& g) {
        if (g.min_degree() != 4 || g.max_degree() != 4) return false;
        return true;
    }(h);
    if (!ok) throw std::logic_error("make_h8: construction self-check failed");
    return h;
}

inline SmallGraph make_petersen() {
    // Outer 5-cycle 0..4, inner 5-cycle 5..9 with step 2, spokes i -> i+5.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return SmallGraph::from_edges(10, edges);
}

/// Octahedron K_{2,2,2}: complement of a perfect matching on 6 vertices.
inline SmallGraph make_octahedron() {
    return complement(
        SmallGraph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}}));
}

/// Names accepted: complete(k), cycle(k), path(k), empty(k), h8, petersen,
/// octahedron.
inline SmallGraph make_named(std::string_view name) {
    auto parametric = [&](std::string_view prefix, int& k) {
        if (name.size() < prefix.size() + 3) return false;
        if (name.substr(0, prefix.size()) != prefix) return false;
        if (name[prefix.size()] != '(' || name.back() != ')') return false;
        k = 0;
        for (char c : name.substr(prefix.size() + 1, name.size() - prefix.size() - 2)) {
            if (c < '0' || c > '9') return false;
            k = k * 10 + (c - '0');
        }
        return true;
    };
    int k = 0;
    if (name == "h8") return make_h8();
    if (name == "petersen") return make_petersen();
    if (name == "octahedron") return make_octahedron();
    if (parametric("complete", k)) return make_complete(k);
    if (parametric("cycle", k)) return make_cycle(k);
    if (parametric("path", k)) return make_path(k);
    if (parametric("empty", k)) return make_empty(k);
    throw std::invalid_argument("make_named: unknown graph name: " + std::string(name));
}

}  // namespace k7lab

#endif  // K7LAB_GRAPH_HPP
