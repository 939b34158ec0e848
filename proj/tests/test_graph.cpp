#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "k7lab/canonical.hpp"
#include "k7lab/graph.hpp"
#include "k7lab/graph6.hpp"
#include "oracles.hpp"

using namespace k7lab;

TEST_CASE("basic accessors and invariants") {
    SmallGraph g = SmallGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == (vbit(0) | vbit(2)));
    g.validate();

    CHECK_THROWS_AS(SmallGraph(32), std::invalid_argument);
    CHECK_THROWS_AS(g.has_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(SmallGraph::from_edges(2, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("contract: C4 collapses to K3") {
    SmallGraph c4 = make_cycle(4);
    SmallGraph t = contract(c4, 1, 2);
    CHECK(t == make_complete(3));
}

TEST_CASE("contract: complete graphs stay complete") {
    CHECK(contract(make_complete(4), 0, 3) == make_complete(3));
    CHECK(contract(make_complete(4), 1, 2) == make_complete(3));
}

TEST_CASE("contract: Petersen / perfect matching = K5") {
    SmallGraph g = make_petersen();
    // Spokes i -- i+5 form a perfect matching.  Contract highest-first so
    // earlier indices stay stable under the shift-down reindexing.
    for (int i = 4; i >= 0; --i) g = contract(g, i, i + 5);
    CHECK(g == make_complete(5));
}

TEST_CASE("contract preconditions") {
    SmallGraph c4 = make_cycle(4);
    CHECK_THROWS_AS(contract(c4, 0, 2), std::invalid_argument);  // non-edge
    CHECK_THROWS_AS(contract(c4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(contract(c4, 0, 7), std::invalid_argument);
}

TEST_CASE("contract properties on random graphs") {
    std::mt19937 rng(20220822);
    for (int trial = 0; trial < 200; ++trial) {
        SmallGraph g = oracles::random_graph(rng, 8);
        if (g.size() == 0) continue;
        // pick a random edge
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 8; ++u)
            K7LAB_FOR_EACH_VERTEX(v, g.neighbors(u)) if (v > u) edges.emplace_back(u, v);
        auto [u, v] = edges[rng() % edges.size()];
        SmallGraph h = contract(g, u, v);
        h.validate();
        CHECK(h.order() == g.order() - 1);
        CHECK(h.size() <= g.size() - 1);
    }
}

TEST_CASE("complement") {
    CHECK(complement(make_complete(5)) == make_empty(5));
    SmallGraph h8bar = complement(make_h8());
    CHECK(h8bar.min_degree() == 3);
    CHECK(h8bar.max_degree() == 3);
    CHECK(complement(complement(make_petersen())) == make_petersen());
}

TEST_CASE("complement involution, exhaustive n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (long mask = 0; mask < (1L << bits); ++mask) {
            SmallGraph g(n);
            int b = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++b)
                    if ((mask >> b) & 1) g = g.with_edge(i, j);
            CHECK(complement(complement(g)) == g);
        }
    }
}

TEST_CASE("complement involution, randomized n in 6..8") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        SmallGraph g = oracles::random_graph(rng, 6 + trial % 3);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("join and union") {
    SmallGraph j = join_graphs(make_empty(3), make_cycle(6));
    CHECK(j.order() == 9);
    CHECK(j.size() == 24);
    int fives = 0, sixes = 0;
    for (int v = 0; v < 9; ++v) {
        if (j.degree(v) == 5) ++fives;
        if (j.degree(v) == 6) ++sixes;
    }
    CHECK(fives == 6);
    CHECK(sixes == 3);

    SmallGraph k1h8 = join_graphs(make_complete(1), make_h8());
    CHECK(k1h8.order() == 9);
    CHECK(k1h8.size() == 24);

    SmallGraph u = union_graphs(make_complete(3), make_complete(1));
    CHECK(u.order() == 4);
    CHECK(u.size() == 3);
    CHECK(u.degree(3) == 0);

    CHECK_THROWS_AS(union_graphs(make_empty(20), make_empty(20)),
                    std::invalid_argument);
}

TEST_CASE("named graphs") {
    SmallGraph h8 = make_named("h8");
    CHECK(h8.order() == 8);
    CHECK(h8.size() == 16);
    CHECK(h8.min_degree() == 4);
    CHECK(h8.max_degree() == 4);

    CHECK(make_named("complete(7)").size() == 21);

    SmallGraph c6 = make_named("cycle(6)");
    CHECK(c6.min_degree() == 2);
    CHECK(c6.max_degree() == 2);
    // bipartite: 2-colorable by parity
    for (int u = 0; u < 6; ++u)
        K7LAB_FOR_EACH_VERTEX(v, c6.neighbors(u)) CHECK((u + v) % 2 == 1);

    CHECK(make_named("petersen").size() == 15);
    CHECK(make_named("octahedron").size() == 12);
    CHECK(make_named("empty(4)").size() == 0);
    CHECK(make_named("path(5)").size() == 4);
    CHECK_THROWS_AS(make_named("frucht"), std::invalid_argument);
    CHECK_THROWS_AS(make_named("cycle(2)"), std::invalid_argument);
}

TEST_CASE("degree sum equals twice the edge count") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        SmallGraph g = oracles::random_graph(rng, 1 + trial % 12);
        int sum = 0;
        for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.size());
    }
}

TEST_CASE("graph6 golden encodings") {
    CHECK(serialize_graph6(make_complete(1)) == "@");
    CHECK(serialize_graph6(make_complete(2)) == "A_");
    CHECK(serialize_graph6(make_complete(5)) == "D~{");
    CHECK(parse_graph6("D~{") == make_complete(5));
    CHECK(serialize_graph6(SmallGraph(0)) == "?");
}

TEST_CASE("graph6 parse errors are distinct") {
    try {
        parse_graph6(std::string(1, char(63 + 40)));  // n = 40 > 31
        FAIL("expected bad_size_byte");
    } catch (const graph6_error& e) {
        CHECK(e.kind() == Graph6Error::bad_size_byte);
    }
    try {
        parse_graph6("D~");  // K5 missing a body byte
        FAIL("expected truncated");
    } catch (const graph6_error& e) {
        CHECK(e.kind() == Graph6Error::truncated);
    }
    try {
        parse_graph6("D~{X");
        FAIL("expected trailing_garbage");
    } catch (const graph6_error& e) {
        CHECK(e.kind() == Graph6Error::trailing_garbage);
    }
}

TEST_CASE("graph6 round-trip on random graphs up to 31 vertices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        SmallGraph g = oracles::random_graph(rng, 1 + trial % 31);
        CHECK(parse_graph6(serialize_graph6(g)) == g);
    }
}

TEST_CASE("graph6 multi-line reader tolerates the optional header") {
    std::istringstream in(">>graph6<<D~{\nA_\n\n@\n");
    auto graphs = read_graph6_lines(in);
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0] == make_complete(5));
    CHECK(graphs[1] == make_complete(2));
    CHECK(graphs[2] == make_complete(1));
}

TEST_CASE("h8 frozen construction: alpha, omega, uniqueness prerequisites") {
    SmallGraph h8 = make_h8();
    // alpha = 2: no independent 3-set.
    bool indep3 = false;
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            for (int c = b + 1; c < 8; ++c)
                if (!h8.has_edge(a, b) && !h8.has_edge(a, c) && !h8.has_edge(b, c))
                    indep3 = true;
    CHECK(!indep3);
    // K4-free.
    bool k4 = false;
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            for (int c = b + 1; c < 8; ++c)
                for (int d = c + 1; d < 8; ++d)
                    if (h8.has_edge(a, b) && h8.has_edge(a, c) && h8.has_edge(a, d) &&
                        h8.has_edge(b, c) && h8.has_edge(b, d) && h8.has_edge(c, d))
                        k4 = true;
    CHECK(!k4);
}
