#include <doctest.h>

#include <random>

#include "strongmatch/blossom.hpp"
#include "strongmatch/oracle.hpp"
#include "test_util.hpp"

using namespace strongmatch;

namespace {

Graph cycle(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, Rational(1));
    return g;
}

Graph path_edges(int edges) {
    Graph g;
    for (int i = 0; i <= edges; ++i) g.add_vertex();
    for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1, Rational(1));
    return g;
}

}  // namespace

TEST_CASE("oracle counts by hand") {
    CHECK(oracle::count_matchings(cycle(3)) == 4);  // empty + three single edges
    CHECK(oracle::count_matchings(path_edges(3)) == 5);

    std::mt19937 rng(5);
    Graph k4 = testutil::random_complete(rng, 4, 1, 1);
    CHECK(oracle::count_matchings(k4) == 10);
    int perfect = 0;
    oracle::enumerate_matchings(k4, [&](const std::vector<EdgeId>& m) {
        if (m.size() == 2) ++perfect;
    });
    CHECK(perfect == 3);
}

TEST_CASE("weighted oracle optima by hand") {
    Graph g;
    for (const char* n : {"a", "b", "c", "d"}) g.add_vertex(n);
    EdgeId ab = g.add_edge(0, 1, Rational(1));
    EdgeId cd = g.add_edge(2, 3, Rational(1));
    for (auto [u, v] : {std::pair{0, 2}, {0, 3}, {1, 2}, {1, 3}})
        g.add_edge(u, v, Rational(10));
    auto min = oracle::min_weight_perfect(g);
    REQUIRE(min.has_value());
    CHECK(min->edges() == std::vector<EdgeId>{ab, cd});
    CHECK(min->weight(g) == Rational(2));

    Graph k2;
    k2.add_vertex("u");
    k2.add_vertex("v");
    k2.add_edge(0, 1, Rational(7));
    CHECK(oracle::min_weight_perfect(k2)->edges() == std::vector<EdgeId>{0});

    Graph no_pm;  // a path of two edges has no perfect matching
    no_pm.add_vertex("a");
    no_pm.add_vertex("b");
    no_pm.add_vertex("c");
    no_pm.add_vertex("d");
    no_pm.add_edge(0, 1, Rational(1));
    no_pm.add_edge(1, 2, Rational(1));
    CHECK_FALSE(oracle::min_weight_perfect(no_pm).has_value());
}

TEST_CASE("matching count recurrence m(G) = m(G-e) + m(G-u-v)") {
    std::mt19937 rng(17);
    for (int it = 0; it < 200; ++it) {
        Graph g = testutil::random_graph(rng, 6, 0.5);
        if (g.edge_count() == 0) continue;
        // Remove the last edge / its endpoints and rebuild the two minors.
        EdgeId e = g.edge_count() - 1;
        VertexId u = g.edge(e).u, v = g.edge(e).v;
        Graph minus_e, minus_uv;
        for (int i = 0; i < g.vertex_count(); ++i) minus_e.add_vertex(g.name(i));
        std::vector<VertexId> remap(g.vertex_count(), -1);
        for (int i = 0; i < g.vertex_count(); ++i)
            if (i != u && i != v) remap[i] = minus_uv.add_vertex(g.name(i));
        for (EdgeId f = 0; f < g.edge_count(); ++f) {
            if (f != e) minus_e.add_edge(g.edge(f).u, g.edge(f).v, Rational(1));
            VertexId a = g.edge(f).u, b = g.edge(f).v;
            if (a != u && a != v && b != u && b != v)
                minus_uv.add_edge(remap[a], remap[b], Rational(1));
        }
        CHECK(oracle::count_matchings(g) ==
              oracle::count_matchings(minus_e) + oracle::count_matchings(minus_uv));
    }
}

TEST_CASE("uniform almost matchability and factor criticality") {
    CHECK(oracle::is_factor_critical(cycle(5)));
    CHECK_FALSE(oracle::is_factor_critical(cycle(4)));  // it has a perfect matching
    CHECK_FALSE(oracle::is_uniformly_almost_matchable(cycle(4)));
    Graph one;
    one.add_vertex("v");
    CHECK(oracle::is_uniformly_almost_matchable(one));
    CHECK_FALSE(oracle::is_factor_critical(path_edges(2)));  // middle vertex breaks it
}

TEST_CASE("engine reaches the brute-force maximum") {
    std::mt19937 rng(29);
    for (int it = 0; it < 300; ++it) {
        int n = 3 + static_cast<int>(rng() % 7);
        Graph g = testutil::random_graph(rng, n, 0.4);
        BlossomMatcher engine(oracle::to_compact(g));
        engine.maximize();
        CHECK(engine.matched_pairs() == oracle::max_matching_size(g));
    }
}

TEST_CASE("engine augments without uncovering the initial matching") {
    std::mt19937 rng(31);
    for (int it = 0; it < 200; ++it) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = testutil::random_graph(rng, n, 0.5);
        Matching m = testutil::random_matching(rng, g);
        auto before = m.mates(g);
        auto after = max_cardinality_mates(oracle::to_compact(g), before);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (before[v] != -1) CHECK(after[v] != -1);
        }
    }
}

TEST_CASE("even-reachable set equals the vertices missed by some maximum matching") {
    std::mt19937 rng(37);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = testutil::random_graph(rng, n, 0.45);
        BlossomMatcher engine(oracle::to_compact(g));
        engine.maximize();
        auto even = engine.even_reachable();
        auto missed = oracle::missed_by_some_maximum(g);
        for (VertexId v = 0; v < n; ++v) CHECK(even[v] == missed[v]);
    }
}

TEST_CASE("triangle blossom makes every vertex even-reachable") {
    Graph g = cycle(3);
    BlossomMatcher engine(oracle::to_compact(g));
    engine.maximize();
    CHECK(engine.matched_pairs() == 1);
    auto even = engine.even_reachable();
    CHECK((even[0] && even[1] && even[2]));
}
