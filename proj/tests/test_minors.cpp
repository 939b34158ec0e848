#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k7lab/graph.hpp"
#include "k7lab/minors.hpp"
#include "oracles.hpp"

using namespace k7lab;

TEST_CASE("mader bound sanity") {
    CHECK(mader_bound(7, 9) == 5 * 9 - 14);
    CHECK(mader_bound(5, 5) == 10);
    CHECK(mader_bound(4, 6) == 10);  // = 2n - 2; extremal series-parallel has 2n - 3
    CHECK(mader_bound(6, 9) == 27);  // = 4n - 9; extremal K6-minor-free has 4n - 10
    CHECK_THROWS_AS(mader_bound(8, 10), std::invalid_argument);
    CHECK_THROWS_AS(mader_bound(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(mader_bound(5, 4), std::invalid_argument);
}

TEST_CASE("clique minors on benchmark graphs") {
    CHECK(has_clique_minor(make_complete(7), 7));
    CHECK(!has_clique_minor(make_petersen(), 6));
    CHECK(has_clique_minor(make_petersen(), 5));
    CHECK(!has_clique_minor(join_graphs(make_empty(3), make_cycle(6)), 6));
    CHECK(!has_clique_minor(join_graphs(make_complete(1), make_h8()), 6));
    CHECK(has_clique_minor(make_cycle(6), 3));
    CHECK(!has_clique_minor(make_cycle(6), 4));
    CHECK(has_clique_minor(make_octahedron(), 4));
    CHECK(!has_clique_minor(make_octahedron(), 5));
}

TEST_CASE("clique minor certificates pass the independent audit") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 5 + trial % 5;
        SmallGraph g = oracles::random_graph(rng, n);
        for (int p = 3; p <= 5; ++p) {
            auto cert = has_clique_minor(g, p);
            if (cert) {
                std::string why;
                CHECK_MESSAGE(verify_certificate(g, *cert, &why), why);
                CHECK(cert->branch_sets.size() == static_cast<size_t>(p));
            }
        }
    }
}

TEST_CASE("decision search agrees with the certificate search (Mader prune consistency)") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 4 + trial % 6;
        SmallGraph g = oracles::random_graph(rng, n);
        for (int p = 3; p <= 6; ++p) {
            bool with = has_clique_minor_decision(g, p, true);
            bool without = has_clique_minor_decision(g, p, false);
            bool cert = has_clique_minor(g, p).has_value();
            CHECK(with == without);
            CHECK(with == cert);
        }
    }
}

TEST_CASE("clique minor search matches the partition oracle") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 4 + trial % 4;  // oracle is exponential in partitions
        SmallGraph g = oracles::random_graph(rng, n);
        for (int p = 3; p <= 5; ++p)
            CHECK(has_clique_minor_decision(g, p) == oracles::has_kp_minor(g, p));
    }
}

TEST_CASE("minors are monotone under edge addition") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 5 + trial % 4;
        SmallGraph g = oracles::random_graph(rng, n);
        int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
        int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (u == v) continue;
        SmallGraph bigger = g.with_edge(u, v);
        for (int p = 3; p <= 5; ++p)
            if (has_clique_minor_decision(g, p)) CHECK(has_clique_minor_decision(bigger, p));
    }
}

TEST_CASE("general H minors") {
    // C4 is a minor of the cube-like octahedron and of C6, not of a tree.
    CHECK(has_minor(make_cycle(6), make_cycle(4)));
    CHECK(has_minor(make_octahedron(), make_cycle(4)));
    CHECK(!has_minor(make_path(6), make_cycle(3)));
    CHECK(has_minor(make_petersen(), make_petersen(), "petersen"));
    CHECK(!has_minor(make_cycle(5), make_complete_bipartite(2, 3)));
    CHECK(has_minor(make_complete(5), make_complete_bipartite(2, 3)));

    auto cert = has_minor(make_petersen(), make_complete_bipartite(3, 3), "K3,3");
    REQUIRE(cert.has_value());
    std::string why;
    CHECK_MESSAGE(verify_certificate(make_petersen(), *cert, &why), why);
    CHECK(cert->target == "K3,3");
}

TEST_CASE("H minor certificates audit cleanly on random hosts") {
    std::mt19937 rng(19);
    SmallGraph pat = make_complete_bipartite(2, 3);
    for (int trial = 0; trial < 150; ++trial) {
        SmallGraph g = oracles::random_graph(rng, 5 + trial % 4);
        auto cert = has_minor(g, pat, "K2,3");
        if (cert) {
            std::string why;
            CHECK_MESSAGE(verify_certificate(g, *cert, &why), why);
        }
    }
}

TEST_CASE("rooted K4 minors") {
    auto ok = rooted_k4_minor(make_complete(4), 0, 1, 2, 3);
    REQUIRE(ok.has_value());
    std::string why;
    CHECK_MESSAGE(verify_certificate(make_complete(4), *ok, &why), why);
    CHECK(ok->roots == std::vector<int>{0, 1, 2, 3});

    // C4 has no K4 minor at all, rooted or not.
    CHECK(!rooted_k4_minor(make_cycle(4), 0, 1, 2, 3));

    // The octahedron is 4-connected, so every quadruple of roots works.
    SmallGraph oct = make_octahedron();
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                for (int d = c + 1; d < 6; ++d) {
                    auto cert = rooted_k4_minor(oct, a, b, c, d);
                    REQUIRE(cert.has_value());
                    CHECK(verify_certificate(oct, *cert));
                }

    CHECK_THROWS_AS(rooted_k4_minor(make_complete(4), 0, 1, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(rooted_k4_minor(make_complete(4), 0, 1, 2, 4), std::invalid_argument);
}

TEST_CASE("certificate audit rejects corrupted witnesses") {
    SmallGraph g = make_complete(6);
    auto cert = has_clique_minor(g, 6);
    REQUIRE(cert.has_value());
    std::string why;

    MinorCertificate bad = *cert;
    bad.branch_sets.pop_back();
    CHECK(!verify_certificate(g, bad, &why));
    CHECK(why == "branch set count differs from target order");

    bad = *cert;
    bad.branch_sets[0] = bad.branch_sets[1];
    CHECK(!verify_certificate(g, bad, &why));
    CHECK(why == "branch sets not disjoint");

    bad = *cert;
    bad.branch_sets[0] = 0;
    CHECK(!verify_certificate(g, bad, &why));
    CHECK(why == "empty branch set");

    bad = *cert;
    bad.branch_sets[0] = vbit(30);
    CHECK(!verify_certificate(g, bad, &why));
    CHECK(why == "branch set vertex out of range");

    // Disconnected branch set: {0,2} inside a path 0-1-2-3.
    MinorCertificate disc;
    disc.target = "K2";
    disc.branch_sets = {vbit(0) | vbit(2), vbit(1)};
    CHECK(!verify_certificate(make_path(4), disc, &why));
    CHECK(why == "branch set not connected");

    // Missing cross edge: two halves of a disconnected graph.
    MinorCertificate split;
    split.target = "K2";
    split.branch_sets = {vbit(0), vbit(2)};
    SmallGraph two_edges = SmallGraph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(!verify_certificate(two_edges, split, &why));
    CHECK(why == "missing cross edge for target edge");

    // Root outside its set.
    MinorCertificate rooted;
    rooted.target = "K2";
    rooted.branch_sets = {vbit(0), vbit(1)};
    rooted.roots = {1, 0};
    CHECK(!verify_certificate(make_complete(2), rooted, &why));
    CHECK(why == "root outside its branch set");
}

TEST_CASE("certificate JSON round trip") {
    auto cert = rooted_k4_minor(make_octahedron(), 0, 1, 2, 3);
    REQUIRE(cert.has_value());
    auto j = cert->to_json();
    MinorCertificate back = MinorCertificate::from_json(j);
    CHECK(back.target == cert->target);
    CHECK(back.branch_sets == cert->branch_sets);
    CHECK(back.roots == cert->roots);
    CHECK(verify_certificate(make_octahedron(), back));

    auto unrooted = has_clique_minor(make_complete(5), 4);
    REQUIRE(unrooted.has_value());
    auto j2 = unrooted->to_json();
    CHECK(j2.at("roots").is_null());
    CHECK(MinorCertificate::from_json(j2).roots.empty());
}

TEST_CASE("target parsing") {
    CHECK(parse_target("K6") == make_complete(6));
    CHECK(parse_target("K3,3") == make_complete_bipartite(3, 3));
    CHECK(parse_target("petersen") == make_petersen());
    CHECK(parse_target("g6:D~{") == make_complete(5));
    CHECK_THROWS(parse_target("nonsense"));
}

TEST_CASE("planarity via Wagner obstructions") {
    CHECK(!is_planar(make_complete(5)));
    CHECK(!is_planar(make_complete_bipartite(3, 3)));
    CHECK(!is_planar(make_petersen()));
    CHECK(is_planar(make_octahedron()));
    CHECK(is_planar(make_complete(4)));
    CHECK(is_planar(make_cycle(9)));
    CHECK(is_planar(make_complete_bipartite(2, 5)));
    // K5 minus an edge is planar.
    CHECK(is_planar(make_complete(5).without_edge(0, 1)));
}

TEST_CASE("vertex connectivity on benchmarks") {
    CHECK(vertex_connectivity(make_complete(8)) == 7);
    CHECK(vertex_connectivity(make_cycle(9)) == 2);
    CHECK(vertex_connectivity(make_octahedron()) == 4);
    CHECK(vertex_connectivity(make_petersen()) == 3);
    CHECK(vertex_connectivity(make_path(5)) == 1);
    CHECK(vertex_connectivity(SmallGraph(4)) == 0);
    CHECK(vertex_connectivity(union_graphs(make_complete(3), make_complete(3))) == 0);
    CHECK(vertex_connectivity(make_complete_bipartite(3, 5)) == 3);
    CHECK(vertex_connectivity(make_complete(1)) == 0);
}

TEST_CASE("vertex connectivity matches the separator oracle") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + trial % 6;
        SmallGraph g = oracles::random_graph(rng, n);
        CHECK(vertex_connectivity(g) == oracles::vertex_connectivity(g));
    }
}

TEST_CASE("disjoint paths outside a forbidden set") {
    // Two crossing chords of a 6-cycle cannot be realized disjointly.
    CHECK(!disjoint_paths_outside(make_cycle(6), {{0, 3}, {1, 4}}, 0));
    // One of them alone can.
    auto one = disjoint_paths_outside(make_cycle(6), {{0, 3}}, 0);
    REQUIRE(one.has_value());
    CHECK(one->size() == 1);
    CHECK((*one)[0].front() == 0);
    CHECK((*one)[0].back() == 3);

    // In K6 any three pairs link directly.
    auto three = disjoint_paths_outside(make_complete(6), {{0, 1}, {2, 3}, {4, 5}}, 0);
    REQUIRE(three.has_value());
    for (auto& p : *three) CHECK(p.size() == 2);

    // Forbidding the only interior vertex of a path kills the linkage.
    CHECK(disjoint_paths_outside(make_path(3), {{0, 2}}, 0));
    CHECK(!disjoint_paths_outside(make_path(3), {{0, 2}}, vbit(1)));
    // Endpoints themselves may sit inside the forbidden set.
    CHECK(disjoint_paths_outside(make_path(3), {{0, 2}}, vbit(0) | vbit(2)));

    CHECK_THROWS_AS(disjoint_paths_outside(make_complete(10),
                                           {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(disjoint_paths_outside(make_complete(4), {{0, 0}}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(disjoint_paths_outside(make_complete(4), {{0, 1}, {1, 2}}, 0),
                    std::invalid_argument);
}

TEST_CASE("returned paths are genuinely vertex disjoint and valid") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 6 + trial % 4;
        SmallGraph g = oracles::random_graph(rng, n);
        auto res = disjoint_paths_outside(g, {{0, 1}, {2, 3}}, 0);
        if (!res) continue;
        VertexSet seen = 0;
        for (auto& path : *res) {
            for (size_t i = 0; i + 1 < path.size(); ++i)
                CHECK(g.has_edge(path[i], path[i + 1]));
            for (int v : path) {
                CHECK(!contains(seen, v));
                seen |= vbit(v);
            }
        }
    }
}
