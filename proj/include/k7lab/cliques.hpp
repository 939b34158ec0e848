#ifndef K7LAB_CLIQUES_HPP
#define K7LAB_CLIQUES_HPP

// Exact clique / independence machinery on bitmask graphs: branch-and-bound
// max clique with a greedy coloring bound, disjoint clique pairs, subgraph
// embedding, and the 5-clique triple pattern classifier.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "k7lab/graph.hpp"

namespace k7lab {

namespace detail {

// Number of colors a greedy coloring uses on G[cand]; upper bound on the
// largest clique inside cand.
inline int coloring_bound(const SmallGraph& g, VertexSet cand) {
    int classes = 0;
    VertexSet left = cand;
    while (left) {
        VertexSet avail = left;
        while (avail) {
            int v = lowest_vertex(avail);
            avail &= ~(g.neighbors(v) | vbit(v));
            left &= ~vbit(v);
        }
        ++classes;
    }
    return classes;
}

inline void max_clique_expand(const SmallGraph& g, VertexSet cur, VertexSet cand,
                              int& best_size, VertexSet& best_set, int target) {
    int cur_size = set_size(cur);
    if (cur_size > best_size) {
        best_size = cur_size;
        best_set = cur;
    }
    if (target > 0 && best_size >= target) return;
    if (cand == 0) return;
    if (cur_size + coloring_bound(g, cand) <= best_size) return;
    VertexSet rest = cand;
    while (rest) {
        int v = lowest_vertex(rest);
        rest &= ~vbit(v);
        if (cur_size + 1 + set_size(rest & g.neighbors(v)) <= best_size)
            continue;
        max_clique_expand(g, cur | vbit(v), rest & g.neighbors(v), best_size,
                          best_set, target);
        if (target > 0 && best_size >= target) return;
    }
}

}  // namespace detail

/// Deterministic maximum clique (first witness in ascending branch order).
inline VertexSet max_clique(const SmallGraph& g) {
    int best = 0;
    VertexSet best_set = 0;
    detail::max_clique_expand(g, 0, all_vertices(g.order()), best, best_set, 0);
    return best_set;
}

inline int clique_number(const SmallGraph& g) { return set_size(max_clique(g)); }

/// True iff g has a clique of size >= k (early exit, cheaper than
/// clique_number when only the threshold matters).
inline bool has_clique_of_size(const SmallGraph& g, int k) {
    if (k <= 0) return true;
    if (k > g.order()) return false;
    int best = 0;
    VertexSet best_set = 0;
    detail::max_clique_expand(g, 0, all_vertices(g.order()), best, best_set, k);
    return best >= k;
}

inline VertexSet max_independent_set(const SmallGraph& g) {
    return max_clique(complement(g));
}

inline int independence_number(const SmallGraph& g) {
    return clique_number(complement(g));
}

/// All k-cliques of g as bitmasks, in increasing bitmask order.
inline std::vector<VertexSet> all_cliques_of_size(const SmallGraph& g, int k) {
    std::vector<VertexSet> out;
    if (k < 0 || k > g.order()) return out;
    // Vertices are taken in ascending order, which yields ascending masks.
    struct Rec {
        const SmallGraph& g;
        int k;
        std::vector<VertexSet>& out;
        void run(VertexSet cur, VertexSet cand, int have) {
            if (have == k) {
                out.push_back(cur);
                return;
            }
            VertexSet rest = cand;
            while (rest) {
                int v = lowest_vertex(rest);
                rest &= ~vbit(v);
                if (have + 1 + set_size(rest & g.neighbors(v)) < k) continue;
                run(cur | vbit(v), rest & g.neighbors(v), have + 1);
            }
        }
    } rec{g, k, out};
    rec.run(0, all_vertices(g.order()), 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Lexicographically least (by bitmask pair) pair of disjoint k-cliques, if
/// any exists.  Exhaustive.
inline std::optional<std::pair<VertexSet, VertexSet>>
find_disjoint_cliques(const SmallGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("find_disjoint_cliques: k >= 1");
    auto cliques = all_cliques_of_size(g, k);
    for (size_t i = 0; i < cliques.size(); ++i)
        for (size_t j = i + 1; j < cliques.size(); ++j)
            if ((cliques[i] & cliques[j]) == 0)
                return std::make_pair(cliques[i], cliques[j]);
    return std::nullopt;
}

/// Injective edge-preserving map of `pattern` into `host` (not induced).
/// Returns map[pattern vertex] = host vertex, or nullopt after exhaustive
/// backtracking with degree pruning.
inline std::optional<std::vector<int>>
subgraph_embed(const SmallGraph& host, const SmallGraph& pattern) {
    int np = pattern.order(), nh = host.order();
    if (np > nh) return std::nullopt;
    if (pattern.size() > host.size()) return std::nullopt;

    // Order pattern vertices by connectivity to the already-placed prefix,
    // ties broken by descending degree, so adjacency constraints bite early.
    std::vector<int> order;
    {
        std::vector<bool> placed(np, false);
        for (int step = 0; step < np; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < np; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int u : order) links += pattern.has_edge(u, v) ? 1 : 0;
                int deg = pattern.degree(v);
                if (links > best_links ||
                    (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            order.push_back(best);
            placed[best] = true;
        }
    }

    std::vector<int> image(np, -1);
    VertexSet used = 0;
    std::vector<int> pos_of(np);
    for (int i = 0; i < np; ++i) pos_of[order[i]] = i;

    struct Rec {
        const SmallGraph& host;
        const SmallGraph& pattern;
        const std::vector<int>& order;
        std::vector<int>& image;
        VertexSet& used;
        bool run(int step) {
            if (step == static_cast<int>(order.size())) return true;
            int pv = order[step];
            VertexSet cands = all_vertices(host.order()) & ~used;
            // Every already-placed pattern neighbor constrains the image.
            for (int i = 0; i < step; ++i) {
                if (pattern.has_edge(order[i], pv))
                    cands &= host.neighbors(image[order[i]]);
            }
            while (cands) {
                int hv = lowest_vertex(cands);
                cands &= ~vbit(hv);
                if (host.degree(hv) < pattern.degree(pv)) continue;
                image[pv] = hv;
                used |= vbit(hv);
                if (run(step + 1)) return true;
                used &= ~vbit(hv);
                image[pv] = -1;
            }
            return false;
        }
    } rec{host, pattern, order, image, used};

    if (!rec.run(0)) return std::nullopt;
    return image;
}

// ---------------------------------------------------------------------------
// 5-clique triple intersection patterns.

enum class TriplePattern { THREE_COMMON, FIG_A, FIG_B, KNZ, OTHER };

inline const char* to_string(TriplePattern p) {
    switch (p) {
        case TriplePattern::THREE_COMMON: return "THREE_COMMON";
        case TriplePattern::FIG_A: return "FIG_A";
        case TriplePattern::FIG_B: return "FIG_B";
        case TriplePattern::KNZ: return "KNZ";
        case TriplePattern::OTHER: return "OTHER";
    }
    return "?";
}

/// Classify the intersection pattern of three 5-cliques.  Only cardinalities
/// and disjointness of pairwise intersections are inspected; L3's role is
/// fixed, L1/L2 may be swapped.
inline TriplePattern clique_triple_pattern(const SmallGraph& g, VertexSet l1,
                                           VertexSet l2, VertexSet l3) {
    auto is_5clique = [&](VertexSet s) {
        if (set_size(s) != 5) return false;
        K7LAB_FOR_EACH_VERTEX(v, s) {
            if (set_size(g.neighbors(v) & s) != 4) return false;
        }
        return true;
    };
    if (!is_5clique(l1) || !is_5clique(l2) || !is_5clique(l3))
        throw std::invalid_argument("clique_triple_pattern: non-5-clique input");
    if (l1 == l2 || l1 == l3 || l2 == l3)
        throw std::invalid_argument("clique_triple_pattern: cliques not distinct");

    VertexSet i12 = l1 & l2, i13 = l1 & l3, i23 = l2 & l3;
    if (set_size(i12) == 3 || set_size(i13) == 3 || set_size(i23) == 3)
        return TriplePattern::THREE_COMMON;

    auto fig_a = [&](VertexSet a, VertexSet b) {  // roles: a=L1, b=L2
        VertexSet ab = a & b, a3 = a & l3, b3 = b & l3;
        return set_size(ab) == 2 && set_size(a3) == 1 && set_size(b3) == 1 &&
               (ab & a3) == 0 && (ab & b3) == 0 && (a3 & b3) == 0;
    };
    if (fig_a(l1, l2) || fig_a(l2, l1)) return TriplePattern::FIG_A;

    auto fig_b = [&](VertexSet a, VertexSet b) {  // a meets both others in 2
        VertexSet ab = a & b, a3 = a & l3, b3 = b & l3;
        return set_size(ab) == 2 && set_size(a3) == 2 && set_size(b3) == 1 &&
               (ab & a3) == 0 && (b3 & a) == 0;
    };
    if (fig_b(l1, l2) || fig_b(l2, l1)) return TriplePattern::FIG_B;

    if (set_size(l1 | l2 | l3) >= 12) return TriplePattern::KNZ;
    return TriplePattern::OTHER;
}

}  // namespace k7lab

#endif  // K7LAB_CLIQUES_HPP
