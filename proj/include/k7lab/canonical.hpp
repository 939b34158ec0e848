#ifndef K7LAB_CANONICAL_HPP
#define K7LAB_CANONICAL_HPP

// Canonical labeling for small graphs via individualization-refinement:
// equitable-ish partition refinement by neighbor counts, backtracking over
// the first non-singleton cell, minimum adjacency key over all leaves of the
// refinement tree.  Prefix pruning compares the bits determined by the
// leading run of singleton cells against the best key found so far.
//
// The key is the upper-triangle adjacency bit string in graph6 column order
// under the canonical relabeling, packed MSB-first so word-wise comparison
// is lexicographic bit comparison.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "k7lab/graph.hpp"

namespace k7lab {

struct CanonKey {
    int n = 0;
    std::array<std::uint64_t, 8> words{};  // C(31,2) = 465 bits max

    auto operator<=>(const CanonKey&) const = default;

    void set_bit(int pos) { words[pos >> 6] |= 1ull << (63 - (pos & 63)); }
    bool bit(int pos) const { return (words[pos >> 6] >> (63 - (pos & 63))) & 1; }

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        int nbits = n * (n - 1) / 2;
        int nbytes = (nbits + 7) / 8;
        std::string out;
        out += digits[(n >> 4) & 15];
        out += digits[n & 15];
        out += ':';
        for (int b = 0; b < nbytes; ++b) {
            std::uint8_t byte =
                static_cast<std::uint8_t>(words[b >> 3] >> (56 - 8 * (b & 7)));
            out += digits[byte >> 4];
            out += digits[byte & 15];
        }
        return out;
    }
};

struct CanonicalForm {
    CanonKey key;
    std::vector<int> perm;  // perm[original vertex] = canonical position
};

namespace detail {

// Ordered partition as a list of cells.  Refinement splits cells by the
// count of neighbors in splitter cells, sub-cells ordered by count.
using Cells = std::vector<VertexSet>;

inline void refine(const SmallGraph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t si = 0; si < cells.size() && !changed; ++si) {
            VertexSet splitter = cells[si];
            for (size_t ci = 0; ci < cells.size(); ++ci) {
                if (set_size(cells[ci]) <= 1) continue;
                // Bucket by neighbor count in the splitter (0..31).
                std::array<VertexSet, kMaxVertices + 1> bucket{};
                int seen_counts = 0;
                K7LAB_FOR_EACH_VERTEX(v, cells[ci]) {
                    int c = set_size(g.neighbors(v) & splitter);
                    if (bucket[c] == 0) ++seen_counts;
                    bucket[c] |= vbit(v);
                }
                if (seen_counts <= 1) continue;
                Cells next;
                next.reserve(cells.size() + seen_counts - 1);
                for (size_t k = 0; k < cells.size(); ++k) {
                    if (k != ci) {
                        next.push_back(cells[k]);
                        continue;
                    }
                    for (int c = 0; c <= kMaxVertices; ++c)
                        if (bucket[c]) next.push_back(bucket[c]);
                }
                cells.swap(next);
                changed = true;
                break;
            }
        }
    }
}

struct CanonSearch {
    const SmallGraph& g;
    bool have_best = false;
    CanonKey best_key;
    std::vector<int> best_order;  // best_order[position] = original vertex

    // Key bits among the first k ordered vertices form the prefix of length
    // C(k,2) in column order.
    CanonKey partial_key(const std::vector<int>& order) const {
        CanonKey key;
        key.n = g.order();
        int pos = 0;
        for (size_t j = 1; j < order.size(); ++j)
            for (size_t i = 0; i < j; ++i, ++pos)
                if (g.has_edge(order[i], order[j])) key.set_bit(pos);
        return key;
    }

    // -1: prefix smaller than best, 0: equal, +1: greater.
    int compare_prefix(const CanonKey& partial, int fixed) const {
        int nbits = fixed * (fixed - 1) / 2;
        for (int b = 0; b < nbits; ++b) {
            bool pb = partial.bit(b), bb = best_key.bit(b);
            if (pb != bb) return pb ? 1 : -1;
        }
        return 0;
    }

    void run(Cells cells) {
        std::vector<int> fixed_order;
        size_t target = cells.size();
        for (size_t i = 0; i < cells.size(); ++i) {
            if (set_size(cells[i]) == 1) {
                if (i == fixed_order.size())
                    fixed_order.push_back(lowest_vertex(cells[i]));
            } else if (target == cells.size()) {
                target = i;
            }
        }
        if (have_best && fixed_order.size() >= 2) {
            CanonKey partial = partial_key(fixed_order);
            if (compare_prefix(partial, static_cast<int>(fixed_order.size())) > 0)
                return;
        }
        if (target == cells.size()) {
            // Discrete partition: full leaf key.
            std::vector<int> order;
            order.reserve(cells.size());
            for (VertexSet c : cells) order.push_back(lowest_vertex(c));
            CanonKey key = partial_key(order);
            if (!have_best || key < best_key) {
                have_best = true;
                best_key = key;
                best_order = order;
            }
            return;
        }
        K7LAB_FOR_EACH_VERTEX(v, cells[target]) {
            Cells child;
            child.reserve(cells.size() + 1);
            for (size_t i = 0; i < cells.size(); ++i) {
                if (i == target) {
                    child.push_back(vbit(v));
                    child.push_back(cells[i] & ~vbit(v));
                } else {
                    child.push_back(cells[i]);
                }
            }
            refine(g, child);
            run(std::move(child));
        }
    }
};

}  // namespace detail

inline CanonicalForm canonical_form(const SmallGraph& g) {
    int n = g.order();
    CanonicalForm out;
    out.key.n = n;
    out.perm.assign(n, 0);
    if (n <= 1) return out;

    int e = g.size();
    if (e == 0 || e == n * (n - 1) / 2) {
        // Empty / complete graphs: identity labeling, uniform bits.
        for (int v = 0; v < n; ++v) out.perm[v] = v;
        if (e != 0)
            for (int b = 0; b < n * (n - 1) / 2; ++b) out.key.set_bit(b);
        return out;
    }

    detail::Cells cells{all_vertices(n)};
    detail::refine(g, cells);
    detail::CanonSearch search{g};
    search.run(std::move(cells));
    out.key = search.best_key;
    for (int pos = 0; pos < n; ++pos) out.perm[search.best_order[pos]] = pos;
    return out;
}

inline CanonKey canonical_key(const SmallGraph& g) { return canonical_form(g).key; }

/// Relabel: vertex v of g becomes perm[v].
inline SmallGraph relabel(const SmallGraph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        K7LAB_FOR_EACH_VERTEX(v, g.neighbors(u))
        if (v > u) edges.emplace_back(perm[u], perm[v]);
    return SmallGraph::from_edges(g.order(), edges);
}

inline bool is_isomorphic(const SmallGraph& g, const SmallGraph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    return canonical_key(g) == canonical_key(h);
}

}  // namespace k7lab

#endif  // K7LAB_CANONICAL_HPP
