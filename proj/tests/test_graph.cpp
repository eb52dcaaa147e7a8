#include <doctest.h>

#include <random>
#include <set>

#include "strongmatch/graph.hpp"
#include "strongmatch/oracle.hpp"
#include "test_util.hpp"

using namespace strongmatch;

namespace {

Graph path4() {
    Graph g;
    for (const char* n : {"a", "b", "c", "d"}) g.add_vertex(n);
    g.add_edge(0, 1, Rational(1));
    g.add_edge(1, 2, Rational(1));
    g.add_edge(2, 3, Rational(1));
    return g;
}

}  // namespace

TEST_CASE("graph construction rules") {
    Graph g;
    VertexId a = g.add_vertex("a"), b = g.add_vertex("b");
    CHECK_THROWS_AS(g.add_edge(a, a, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(g.add_vertex("a"), std::invalid_argument);
    EdgeId e1 = g.add_edge(a, b, Rational(1));
    EdgeId e2 = g.add_edge(a, b, Rational(2));  // parallel edges are fine
    CHECK(e1 != e2);
    CHECK(g.incident(a).size() == 2);
    CHECK(g.other_end(e1, a) == b);
    CHECK(g.is_complete());
}

TEST_CASE("matching invariants") {
    Graph g = path4();
    CHECK_THROWS_AS(Matching::of(g, {0, 1}), std::invalid_argument);  // share b
    Matching m = Matching::of(g, {0, 2});
    CHECK(m.size() == 2);
    CHECK(m.support(g).size() == 4);
    CHECK(m.weight(g) == Rational(2));
    CHECK(Matching().weight(g) == Rational(0));

    Graph single;
    single.add_vertex("u");
    single.add_vertex("v");
    single.add_edge(0, 1, Rational(5, 3));
    CHECK(Matching::of(single, {0}).weight(single) == Rational(5, 3));

    Graph two;
    two.add_vertex("u");
    two.add_vertex("v");
    two.add_vertex("w");
    two.add_edge(0, 1, Rational(1, 2));
    two.add_edge(1, 2, Rational(1, 3));
    CHECK(Matching::of(two, {0}).weight(two) + Matching::of(two, {1}).weight(two) ==
          Rational(5, 6));
}

TEST_CASE("symmetric difference decomposition") {
    Graph g = path4();
    Matching m = Matching::of(g, {1});
    SUBCASE("equal matchings give nothing") {
        CHECK(symmetric_difference_decompose(g, m, m).empty());
    }
    SUBCASE("path against its two ends") {
        Matching n = Matching::of(g, {0, 2});
        auto comps = symmetric_difference_decompose(g, m, n);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].kind == AltComponent::Kind::path);
        CHECK(comps[0].edges.size() == 3);
        CHECK(comps[0].vertices.size() == 4);
    }
}

TEST_CASE("decomposition partitions the symmetric difference on K6") {
    std::mt19937 rng(11);
    Graph g = testutil::random_complete(rng, 6, 1, 9);
    for (int it = 0; it < 200; ++it) {
        Matching m = testutil::random_matching(rng, g);
        Matching n = testutil::random_matching(rng, g);
        auto comps = symmetric_difference_decompose(g, m, n);

        std::set<EdgeId> expected;
        for (EdgeId e : m.edges())
            if (!n.contains(e)) expected.insert(e);
        for (EdgeId e : n.edges())
            if (!m.contains(e)) expected.insert(e);

        std::set<EdgeId> got;
        for (const auto& comp : comps) {
            for (EdgeId e : comp.edges) CHECK(got.insert(e).second);  // no repeats
        }
        CHECK(got == expected);

        // Degrees within the difference stay <= 2.
        std::vector<int> deg(g.vertex_count(), 0);
        for (EdgeId e : expected) {
            ++deg[g.edge(e).u];
            ++deg[g.edge(e).v];
        }
        for (int d : deg) CHECK(d <= 2);
    }
}

TEST_CASE("weight normalization") {
    SUBCASE("denominators scale away") {
        Graph g;
        g.add_vertex("u");
        g.add_vertex("v");
        g.add_vertex("w");
        g.add_edge(0, 1, Rational(1, 2));
        g.add_edge(1, 2, Rational(3, 2));
        NormalizedGraph norm = normalize_weights(g);
        CHECK(norm.scale == Rational(2));
        CHECK(norm.shift == Rational(0));
        CHECK(norm.graph.edge(0).weight == Rational(1));
        CHECK(norm.graph.edge(1).weight == Rational(3));
    }
    SUBCASE("nonpositive weights get shifted to >= 1") {
        Graph g;
        g.add_vertex("u");
        g.add_vertex("v");
        g.add_vertex("w");
        g.add_edge(0, 1, Rational(0));
        g.add_edge(1, 2, Rational(-1));
        NormalizedGraph norm = normalize_weights(g);
        CHECK(norm.scale == Rational(1));
        CHECK(norm.shift == Rational(2));
        CHECK(norm.graph.edge(0).weight == Rational(2));
        CHECK(norm.graph.edge(1).weight == Rational(1));
    }
    SUBCASE("round trip through a truncated irrational") {
        // Weights 2a-1, a, 2a for a rational truncation of 1.01001...
        Rational a(101001, 100000);
        Graph g;
        g.add_vertex("u");
        g.add_vertex("v");
        g.add_vertex("w");
        g.add_edge(0, 1, Rational(2) * a - Rational(1));
        g.add_edge(1, 2, a);
        g.add_edge(0, 2, Rational(2) * a);
        NormalizedGraph norm = normalize_weights(g);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Rational& w = norm.graph.edge(e).weight;
            CHECK(w.is_integer());
            CHECK(w.sign() > 0);
            CHECK((w - norm.shift) / norm.scale == g.edge(e).weight);
        }
    }
}

TEST_CASE("normalization preserves the optimal perfect matching") {
    std::mt19937 rng(23);
    for (int it = 0; it < 30; ++it) {
        Graph g;
        for (int i = 0; i < 6; ++i) g.add_vertex();
        std::uniform_int_distribution<long> num(-4, 6), den(1, 4);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) g.add_edge(i, j, Rational(num(rng), den(rng)));
        NormalizedGraph norm = normalize_weights(g);
        auto before = oracle::min_weight_perfect(g);
        auto after = oracle::min_weight_perfect(norm.graph);
        REQUIRE(before.has_value());
        REQUIRE(after.has_value());
        CHECK(before->edges() == after->edges());
    }
}
