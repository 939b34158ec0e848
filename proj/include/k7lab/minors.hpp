#ifndef K7LAB_MINORS_HPP
#define K7LAB_MINORS_HPP

// Exact minor containment on small graphs: clique minors by contraction
// branching, general/rooted H minors by branch-set growth, planarity via the
// Wagner obstructions, vertex connectivity by unit-capacity max flow, and a
// constrained disjoint-path search.  Certificate verification is a separate
// code path from the searchers.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "k7lab/cliques.hpp"
#include "k7lab/graph.hpp"
#include "k7lab/graph6.hpp"

namespace k7lab {

/// Mader's extremal edge count: any graph on n >= p vertices with at least
/// this many edges has a K_p minor (valid for p <= 7).
inline int mader_bound(int p, int n) {
    if (p < 1 || p > 7) throw std::invalid_argument("mader_bound: p in [1,7]");
    if (n < p) throw std::invalid_argument("mader_bound: need n >= p");
    return (p - 2) * n - (p - 1) * (p - 2) / 2 + 1;
}

struct MinorCertificate {
    std::string target;                  // "K6", "K3,3", or "g6:<graph6>"
    std::vector<VertexSet> branch_sets;  // one per target vertex
    std::vector<int> roots;              // empty when unrooted

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["target"] = target;
        auto sets = nlohmann::ordered_json::array();
        for (VertexSet s : branch_sets) sets.push_back(set_to_vector(s));
        j["branch_sets"] = sets;
        if (roots.empty())
            j["roots"] = nullptr;
        else
            j["roots"] = roots;
        return j;
    }

    static MinorCertificate from_json(const nlohmann::json& j) {
        MinorCertificate c;
        c.target = j.at("target").get<std::string>();
        for (const auto& arr : j.at("branch_sets")) {
            VertexSet s = 0;
            for (int v : arr) s |= vbit(v);
            c.branch_sets.push_back(s);
        }
        if (!j.at("roots").is_null())
            c.roots = j.at("roots").get<std::vector<int>>();
        return c;
    }
};

/// Resolve a target description: complete "Kp", bipartite "Ka,b", named
/// constructor, or "g6:<bytes>".
inline SmallGraph parse_target(const std::string& spec) {
    if (spec.rfind("g6:", 0) == 0) return parse_graph6(spec.substr(3));
    if (spec.size() >= 2 && spec[0] == 'K') {
        auto comma = spec.find(',');
        if (comma == std::string::npos)
            return make_complete(std::stoi(spec.substr(1)));
        return make_complete_bipartite(std::stoi(spec.substr(1, comma - 1)),
                                       std::stoi(spec.substr(comma + 1)));
    }
    return make_named(spec);
}

inline bool is_connected_in(const SmallGraph& g, VertexSet s) {
    if (s == 0) return false;
    VertexSet reached = vbit(lowest_vertex(s));
    for (;;) {
        VertexSet grow = reached;
        K7LAB_FOR_EACH_VERTEX(v, reached) grow |= g.neighbors(v) & s;
        if (grow == reached) break;
        reached = grow;
    }
    return reached == s;
}

inline bool sets_joined(const SmallGraph& g, VertexSet a, VertexSet b) {
    K7LAB_FOR_EACH_VERTEX(v, a) {
        if (g.neighbors(v) & b) return true;
    }
    return false;
}

/// Independent audit of a certificate against its host.  Checks disjointness,
/// connectivity, all target cross edges, and root placement.  `why` (if
/// non-null) receives the first failure reason.
inline bool verify_certificate(const SmallGraph& g, const MinorCertificate& cert,
                               std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    SmallGraph target = parse_target(cert.target);
    if (static_cast<int>(cert.branch_sets.size()) != target.order())
        return fail("branch set count differs from target order");
    VertexSet seen = 0;
    for (size_t i = 0; i < cert.branch_sets.size(); ++i) {
        VertexSet s = cert.branch_sets[i];
        if (s == 0) return fail("empty branch set");
        if (s & ~all_vertices(g.order())) return fail("branch set vertex out of range");
        if (s & seen) return fail("branch sets not disjoint");
        seen |= s;
        if (!is_connected_in(g, s)) return fail("branch set not connected");
    }
    for (int i = 0; i < target.order(); ++i)
        for (int j = i + 1; j < target.order(); ++j)
            if (target.has_edge(i, j) &&
                !sets_joined(g, cert.branch_sets[i], cert.branch_sets[j]))
                return fail("missing cross edge for target edge");
    if (!cert.roots.empty()) {
        if (cert.roots.size() != cert.branch_sets.size())
            return fail("root count differs from branch set count");
        for (size_t i = 0; i < cert.roots.size(); ++i)
            if (!contains(cert.branch_sets[i], cert.roots[i]))
                return fail("root outside its branch set");
    }
    if (why) why->clear();
    return true;
}

namespace detail {

// Contraction-only search for a K_p minor.  Deletions are unnecessary: any
// model's unused vertices are simply never part of a branch set.  Each state
// carries, per current vertex, the set of original vertices merged into it.
struct CliqueMinorSearch {
    int p;
    bool use_mader_prune;       // decision shortcut, forfeits the witness
    bool found = false;
    std::vector<VertexSet> witness;

    void run(const SmallGraph& g, const std::vector<VertexSet>& orig) {
        if (found || g.order() < p) return;
        if (use_mader_prune && p <= 7 && g.order() >= p &&
            g.size() >= mader_bound(p, g.order())) {
            found = true;
            return;
        }
        if (has_clique_of_size(g, p)) {
            VertexSet clique = max_clique(g);
            witness.clear();
            int taken = 0;
            K7LAB_FOR_EACH_VERTEX(v, clique) {
                if (taken++ < p) witness.push_back(orig[v]);
            }
            found = true;
            return;
        }
        if (g.order() == p) return;  // not complete, no room to contract
        for (int u = 0; u < g.order() && !found; ++u) {
            VertexSet nb = g.neighbors(u) & ~(all_vertices(u + 1));
            K7LAB_FOR_EACH_VERTEX(v, nb) {
                if (found) continue;
                SmallGraph h = contract(g, u, v);
                std::vector<VertexSet> next;
                next.reserve(orig.size() - 1);
                for (int w = 0; w < g.order(); ++w) {
                    if (w == v) continue;
                    next.push_back(w == u ? (orig[u] | orig[v]) : orig[w]);
                }
                run(h, next);
            }
        }
    }
};

}  // namespace detail

/// Exact K_p minor test with certificate.  `decision_only` allows the Mader
/// edge bound as a yes-shortcut (no witness in that case).
inline std::optional<MinorCertificate>
has_clique_minor(const SmallGraph& g, int p) {
    if (p <= 0) throw std::invalid_argument("has_clique_minor: p >= 1");
    if (p > g.order()) return std::nullopt;
    detail::CliqueMinorSearch search{p, /*use_mader_prune=*/false};
    std::vector<VertexSet> orig;
    for (int v = 0; v < g.order(); ++v) orig.push_back(vbit(v));
    search.run(g, orig);
    if (!search.found) return std::nullopt;
    MinorCertificate cert;
    cert.target = "K" + std::to_string(p);
    cert.branch_sets = std::move(search.witness);
    return cert;
}

/// Decision variant; `use_mader_prune` must not change the answer (tested).
inline bool has_clique_minor_decision(const SmallGraph& g, int p,
                                      bool use_mader_prune = true) {
    if (p <= 0) return true;
    if (p > g.order()) return false;
    detail::CliqueMinorSearch search{p, use_mader_prune};
    std::vector<VertexSet> orig;
    for (int v = 0; v < g.order(); ++v) orig.push_back(vbit(v));
    search.run(g, orig);
    return search.found;
}

namespace detail {

// Branch-set growth for a general (possibly rooted) H minor: build one
// connected branch set at a time, checking the required cross edges to all
// earlier sets as soon as a set is complete.
struct HMinorSearch {
    const SmallGraph& g;
    const SmallGraph& h;
    const std::vector<int>& roots;  // empty or one root per h-vertex
    std::vector<VertexSet> sets;
    bool found = false;

    bool cross_ok(int i) const {
        for (int j = 0; j < i; ++j)
            if (h.has_edge(i, j) && !sets_joined(g, sets[i], sets[j]))
                return false;
        return true;
    }

    // Grow branch set i, then move on to set i+1.
    void grow(int i, VertexSet used) {
        if (found) return;
        if (cross_ok(i)) {
            if (i + 1 == h.order()) {
                found = true;
                return;
            }
            start(i + 1, used);
            if (found) return;
        }
        // Extend set i by one vertex adjacent to it.
        VertexSet frontier = 0;
        K7LAB_FOR_EACH_VERTEX(v, sets[i]) frontier |= g.neighbors(v);
        frontier &= ~used;
        K7LAB_FOR_EACH_VERTEX(v, frontier) {
            if (found) continue;
            sets[i] |= vbit(v);
            grow(i, used | vbit(v));
            if (found) continue;  // keep the witness intact
            sets[i] &= ~vbit(v);
        }
    }

    void start(int i, VertexSet used) {
        if (found) return;
        if (!roots.empty()) {
            if (contains(used, roots[i])) return;  // root swallowed earlier
            sets[i] = vbit(roots[i]);
            grow(i, used | vbit(roots[i]));
            if (!found) sets[i] = 0;
            return;
        }
        VertexSet seeds = all_vertices(g.order()) & ~used;
        K7LAB_FOR_EACH_VERTEX(v, seeds) {
            if (found) continue;
            sets[i] = vbit(v);
            grow(i, used | vbit(v));
            if (!found) sets[i] = 0;
        }
    }
};

}  // namespace detail

/// Exact H-minor test by exhaustive branch-set search.
inline std::optional<MinorCertificate>
has_minor(const SmallGraph& g, const SmallGraph& h,
          const std::string& target_name = "") {
    if (h.order() > g.order()) return std::nullopt;
    if (h.order() == 0) {
        MinorCertificate cert;
        cert.target = target_name.empty() ? "g6:" + serialize_graph6(h) : target_name;
        return cert;
    }
    if (h.size() == h.order() * (h.order() - 1) / 2) {
        // Complete target: the contraction search is much faster.
        auto cert = has_clique_minor(g, h.order());
        if (cert && !target_name.empty()) cert->target = target_name;
        return cert;
    }
    std::vector<int> no_roots;
    detail::HMinorSearch search{g, h, no_roots,
                                std::vector<VertexSet>(h.order(), 0)};
    search.start(0, 0);
    if (!search.found) return std::nullopt;
    MinorCertificate cert;
    cert.target = target_name.empty() ? "g6:" + serialize_graph6(h) : target_name;
    cert.branch_sets = search.sets;
    return cert;
}

/// K4 minor with branch set i required to contain root i.
inline std::optional<MinorCertificate>
rooted_k4_minor(const SmallGraph& g, int r1, int r2, int r3, int r4) {
    std::vector<int> roots{r1, r2, r3, r4};
    for (size_t i = 0; i < roots.size(); ++i) {
        if (roots[i] < 0 || roots[i] >= g.order())
            throw std::invalid_argument("rooted_k4_minor: root out of range");
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j])
                throw std::invalid_argument("rooted_k4_minor: duplicate roots");
    }
    SmallGraph k4 = make_complete(4);
    detail::HMinorSearch search{g, k4, roots, std::vector<VertexSet>(4, 0)};
    search.start(0, 0);
    if (!search.found) return std::nullopt;
    MinorCertificate cert;
    cert.target = "K4";
    cert.branch_sets = search.sets;
    cert.roots = roots;
    return cert;
}

/// Wagner characterization.  Adequate for the <= 12 vertex scale here; this
/// is not a scalable planarity test.
inline bool is_planar(const SmallGraph& g) {
    if (has_clique_minor(g, 5)) return false;
    if (has_minor(g, make_complete_bipartite(3, 3), "K3,3")) return false;
    return true;
}

namespace detail {

// Unit-capacity max flow on the vertex-split network; counts internally
// disjoint s-t paths.  n <= 31 so an adjacency-matrix BFS is plenty.
inline int internally_disjoint_paths(const SmallGraph& g, int s, int t) {
    int n = g.order();
    // Node 2v = v_in, 2v+1 = v_out.  cap[v_in][v_out] = 1 (inf for s,t),
    // cap[u_out][v_in] = inf for edges.
    const int INF = 1000;
    std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
    for (int v = 0; v < n; ++v)
        cap[2 * v][2 * v + 1] = (v == s || v == t) ? INF : 1;
    for (int u = 0; u < n; ++u)
        K7LAB_FOR_EACH_VERTEX(v, g.neighbors(u)) cap[2 * u + 1][2 * v] = INF;
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    for (;;) {
        std::vector<int> prev(2 * n, -1);
        std::vector<int> queue{source};
        prev[source] = source;
        for (size_t qi = 0; qi < queue.size() && prev[sink] == -1; ++qi) {
            int u = queue[qi];
            for (int v = 0; v < 2 * n; ++v)
                if (prev[v] == -1 && cap[u][v] > 0) {
                    prev[v] = u;
                    queue.push_back(v);
                }
        }
        if (prev[sink] == -1) break;
        for (int v = sink; v != source; v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace detail

/// Standard vertex connectivity; n-1 for complete graphs.
inline int vertex_connectivity(const SmallGraph& g) {
    int n = g.order();
    if (n <= 1) return 0;
    int best = n - 1;
    bool any_nonadjacent = false;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            any_nonadjacent = true;
            best = std::min(best, detail::internally_disjoint_paths(g, s, t));
        }
    return any_nonadjacent ? best : n - 1;
}

/// Pairwise vertex-disjoint paths linking each (u_i, v_i), every internal
/// vertex outside `interior_forbidden`.  Exhaustive; pairs are routed in
/// input order, vertices tried in index order.
inline std::optional<std::vector<std::vector<int>>>
disjoint_paths_outside(const SmallGraph& g,
                       const std::vector<std::pair<int, int>>& pairs,
                       VertexSet interior_forbidden) {
    if (pairs.size() > 4)
        throw std::invalid_argument("disjoint_paths_outside: at most 4 pairs");
    VertexSet endpoints = 0;
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || u == v)
            throw std::invalid_argument("disjoint_paths_outside: bad endpoint");
        if (contains(endpoints, u) || contains(endpoints, v))
            throw std::invalid_argument(
                "disjoint_paths_outside: endpoints not distinct across pairs");
        endpoints |= vbit(u) | vbit(v);
    }

    std::vector<std::vector<int>> paths;
    struct Rec {
        const SmallGraph& g;
        const std::vector<std::pair<int, int>>& pairs;
        VertexSet forbidden;
        VertexSet used;  // vertices on accepted paths + all endpoints
        std::vector<std::vector<int>>& paths;

        bool route(size_t k) {
            if (k == pairs.size()) return true;
            auto [s, t] = pairs[k];
            std::vector<int> path{s};
            return extend(k, s, t, path);
        }

        bool extend(size_t k, int at, int t, std::vector<int>& path) {
            if (at == t) {
                paths.push_back(path);
                if (route(k + 1)) return true;
                paths.pop_back();
                return false;
            }
            // Endpoints are all in `used`, so t is the only endpoint a path
            // may step onto and must be re-admitted explicitly.
            VertexSet cand = g.neighbors(at) & ~used;
            if (contains(g.neighbors(at), t)) cand |= vbit(t);
            K7LAB_FOR_EACH_VERTEX(v, cand) {
                if (v != t && contains(forbidden, v)) continue;
                path.push_back(v);
                used |= vbit(v);
                if (extend(k, v, t, path)) return true;
                if (v != t) used &= ~vbit(v);
                path.pop_back();
            }
            return false;
        }
    } rec{g, pairs, interior_forbidden, endpoints, paths};

    if (!rec.route(0)) return std::nullopt;
    return paths;
}

}  // namespace k7lab

#endif  // K7LAB_MINORS_HPP
