#ifndef K7LAB_CHECKS_HPP
#define K7LAB_CHECKS_HPP

// Arithmetic bounds and neighborhood audits: the degree census inequality,
// the Dirac independence bound, and the classifiers for 8- and 9-vertex
// neighborhoods.  These are pure predicates on candidate graphs; nothing
// here assumes a contraction-critical host.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "k7lab/cliques.hpp"
#include "k7lab/graph.hpp"

namespace k7lab {

struct DegreeCensus {
    int n = 0;      // order
    int e = 0;      // size
    int n8 = 0;     // count of 8-vertices
    int n9 = 0;     // count of 9-vertices
    int delta = 0;  // minimum degree
};

inline DegreeCensus degree_census(const SmallGraph& g) {
    DegreeCensus c;
    c.n = g.order();
    c.e = g.size();
    c.delta = g.min_degree();
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 8) ++c.n8;
        if (g.degree(v) == 9) ++c.n9;
    }
    return c;
}

enum class CensusVerdict { SATISFIED, VIOLATED, NOT_APPLICABLE };

inline const char* to_string(CensusVerdict v) {
    switch (v) {
        case CensusVerdict::SATISFIED: return "SATISFIED";
        case CensusVerdict::VIOLATED: return "VIOLATED";
        case CensusVerdict::NOT_APPLICABLE: return "NOT_APPLICABLE";
    }
    return "?";
}

struct CensusResult {
    CensusVerdict verdict;
    int slack;  // (2*n8 + n9) - 30; meaningful when applicable
    bool tight;
};

/// Under the hypotheses delta >= 8 and e <= 5n - 15, the degree sum chain
/// 8*n8 + 9*n9 + 10*(n - n8 - n9) <= 2e <= 10n - 30 forces 2*n8 + n9 >= 30.
/// Returns NOT_APPLICABLE when the hypotheses fail (never a false verdict),
/// VIOLATED when the census contradicts the chain, SATISFIED otherwise.
/// Note SATISFIED implies 2*n8 + n9 >= 30, which is the lemma.
inline CensusResult check_census_inequality(const DegreeCensus& c) {
    if (c.n8 < 0 || c.n9 < 0 || c.n8 + c.n9 > c.n || c.e > c.n * (c.n - 1) / 2)
        throw std::invalid_argument("check_census_inequality: malformed census");
    if (c.delta < 8 || c.e > 5 * c.n - 15)
        return {CensusVerdict::NOT_APPLICABLE, 0, false};
    int degree_sum_floor = 8 * c.n8 + 9 * c.n9 + 10 * (c.n - c.n8 - c.n9);
    int slack = 2 * c.n8 + c.n9 - 30;
    if (degree_sum_floor > 2 * c.e)
        return {CensusVerdict::VIOLATED, slack, false};
    return {CensusVerdict::SATISFIED, slack,
            slack == 0 && 2 * c.e == 10 * c.n - 30};
}

/// Dirac's bound instantiated at a vertex: alpha(G[N(v)]) <= d(v) - k + 2.
inline bool dirac_alpha_bound(const SmallGraph& g, int v, int k) {
    SmallGraph nbhd = g.induced(g.neighbors(v));
    return independence_number(nbhd) <= g.degree(v) - k + 2;
}

enum class AuditTag {
    HAS_5CLIQUE_CLOSED,
    TWO_DISJOINT_4CLIQUES,
    H8_PRESENT,
    DIRAC_VIOLATION,
    DELTA_ZERO,
    DELTA_HIGH,
    ALPHA_BAD,
    PASS,
};

inline const char* to_string(AuditTag t) {
    switch (t) {
        case AuditTag::HAS_5CLIQUE_CLOSED: return "HAS_5CLIQUE_CLOSED";
        case AuditTag::TWO_DISJOINT_4CLIQUES: return "TWO_DISJOINT_4CLIQUES";
        case AuditTag::H8_PRESENT: return "H8_PRESENT";
        case AuditTag::DIRAC_VIOLATION: return "DIRAC_VIOLATION";
        case AuditTag::DELTA_ZERO: return "DELTA_ZERO";
        case AuditTag::DELTA_HIGH: return "DELTA_HIGH";
        case AuditTag::ALPHA_BAD: return "ALPHA_BAD";
        case AuditTag::PASS: return "PASS";
    }
    return "?";
}

/// Residual structure outside a found 4-clique in an 8-vertex neighborhood,
/// in the proof's case order.
enum class JShape { K4, HAS_INDUCED_P3, K2_UNION_K2, K3_UNION_K1, OTHER };

inline const char* to_string(JShape s) {
    switch (s) {
        case JShape::K4: return "K4";
        case JShape::HAS_INDUCED_P3: return "HAS_INDUCED_P3";
        case JShape::K2_UNION_K2: return "K2_UNION_K2";
        case JShape::K3_UNION_K1: return "K3_UNION_K1";
        case JShape::OTHER: return "OTHER";
    }
    return "?";
}

struct NeighborhoodAudit {
    int vertex = -1;  // host vertex when the graph came from a neighborhood
    int degree = 0;
    int alpha = 0;
    int omega = 0;
    int delta_local = 0;
    std::vector<AuditTag> findings;
    std::optional<JShape> j_shape;          // 8-vertex audit only
    std::optional<VertexSet> found_4clique; // witness for the J classification

    bool has(AuditTag t) const {
        for (AuditTag f : findings)
            if (f == t) return true;
        return false;
    }
};

namespace detail {

inline JShape classify_j(const SmallGraph& j) {
    if (j.order() != 4) throw std::invalid_argument("classify_j: order 4 expected");
    if (j.size() == 6) return JShape::K4;
    // Induced P3: two adjacent edges whose ends are not adjacent.
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c) {
                if (a == b || a == c) continue;
                if (j.has_edge(a, b) && j.has_edge(a, c) && !j.has_edge(b, c))
                    return JShape::HAS_INDUCED_P3;
            }
    // No induced P3: a disjoint union of cliques.
    if (j.size() == 2) return JShape::K2_UNION_K2;
    if (j.size() == 3) return JShape::K3_UNION_K1;
    return JShape::OTHER;
}

}  // namespace detail

/// Audit an 8-vertex graph standing in for the open neighborhood of an
/// 8-vertex (so the Dirac bound at k = 8 demands alpha <= 2).
inline NeighborhoodAudit audit_deg8_neighborhood(const SmallGraph& h) {
    if (h.order() != 8)
        throw std::invalid_argument("audit_deg8_neighborhood: order 8 expected");
    NeighborhoodAudit a;
    a.degree = 8;
    a.alpha = independence_number(h);
    a.omega = clique_number(h);
    a.delta_local = h.min_degree();
    if (a.alpha > 2) a.findings.push_back(AuditTag::DIRAC_VIOLATION);
    if (a.omega >= 4) a.findings.push_back(AuditTag::HAS_5CLIQUE_CLOSED);
    if (find_disjoint_cliques(h, 4))
        a.findings.push_back(AuditTag::TWO_DISJOINT_4CLIQUES);
    if (subgraph_embed(h, make_h8())) a.findings.push_back(AuditTag::H8_PRESENT);
    if (a.omega >= 4) {
        // Deterministic witness: lexicographically least 4-clique.
        VertexSet w = all_cliques_of_size(h, 4).front();
        a.found_4clique = w;
        a.j_shape = detail::classify_j(h.induced(all_vertices(8) & ~w));
    }
    return a;
}

/// Audit a 9-vertex graph standing in for the open neighborhood of a
/// 9-vertex.  PASS when omega >= 4 (a 5-clique in the closed neighborhood),
/// otherwise PASS iff alpha = 3 and 1 <= delta <= 4.
inline NeighborhoodAudit audit_deg9_neighborhood(const SmallGraph& h) {
    if (h.order() != 9)
        throw std::invalid_argument("audit_deg9_neighborhood: order 9 expected");
    NeighborhoodAudit a;
    a.degree = 9;
    a.alpha = independence_number(h);
    a.omega = clique_number(h);
    a.delta_local = h.min_degree();
    if (a.omega >= 4) {
        a.findings.push_back(AuditTag::HAS_5CLIQUE_CLOSED);
        a.findings.push_back(AuditTag::PASS);
        return a;
    }
    bool ok = true;
    if (a.delta_local == 0) {
        a.findings.push_back(AuditTag::DELTA_ZERO);
        ok = false;
    } else if (a.delta_local > 4) {
        a.findings.push_back(AuditTag::DELTA_HIGH);
        ok = false;
    }
    if (a.alpha != 3) {
        a.findings.push_back(AuditTag::ALPHA_BAD);
        ok = false;
    }
    if (ok) a.findings.push_back(AuditTag::PASS);
    return a;
}

}  // namespace k7lab

#endif  // K7LAB_CHECKS_HPP
