#include <doctest.h>

#include <random>

#include "strongmatch/alternating.hpp"
#include "strongmatch/oracle.hpp"
#include "strongmatch/reduction.hpp"
#include "test_util.hpp"

using namespace strongmatch;
using namespace strongmatch::reduction;

TEST_CASE("completion and negation") {
    SUBCASE("already complete: only negation") {
        std::mt19937 rng(3);
        Graph g = testutil::random_complete(rng, 4, 1, 5);
        CompletedNegated cn = complete_and_negate(g);
        CHECK(cn.graph.edge_count() == g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            CHECK(cn.graph.edge(e).weight == -g.edge(e).weight);
            CHECK(cn.origin[e] == e);
        }
    }
    SUBCASE("two isolated vertices gain one zero fill edge") {
        Graph g;
        g.add_vertex("u");
        g.add_vertex("v");
        CompletedNegated cn = complete_and_negate(g);
        CHECK(cn.graph.edge_count() == 1);
        CHECK(cn.graph.edge(0).weight == Rational(0));
        CHECK(cn.origin[0] == -1);
    }
    SUBCASE("random six-vertex graphs complete to 15 edges") {
        std::mt19937 rng(5);
        for (int it = 0; it < 20; ++it) {
            Graph g = testutil::random_graph(rng, 6, 0.5);
            CompletedNegated cn = complete_and_negate(g);
            CHECK(cn.graph.edge_count() == 15);  // simple input: fills top it up
            CHECK(cn.graph.is_complete());
            int originals = 0;
            for (size_t e = 0; e < cn.origin.size(); ++e) {
                if (cn.origin[e] != -1) {
                    ++originals;
                    CHECK(cn.graph.edge(e).weight == -g.edge(cn.origin[e]).weight);
                }
            }
            CHECK(originals == g.edge_count());
        }
    }
}

TEST_CASE("maximum weight via the completed instance") {
    SUBCASE("single edge") {
        Graph g;
        g.add_vertex("u");
        g.add_vertex("v");
        g.add_edge(0, 1, Rational(1));
        MaxWeightSolve mw = strongly_w_maximal(g);
        CHECK(mw.matching.size() == 1);
        CHECK(mw.weight == Rational(1));
    }
    SUBCASE("path picks the heavier edge") {
        Graph g;
        for (const char* n : {"a", "b", "c"}) g.add_vertex(n);
        g.add_edge(0, 1, Rational(1));
        EdgeId bc = g.add_edge(1, 2, Rational(2));
        MaxWeightSolve mw = strongly_w_maximal(g);
        CHECK(mw.matching.edges() == std::vector<EdgeId>{bc});
    }
    SUBCASE("matches the brute-force maximum on random weighted graphs") {
        std::mt19937 rng(7);
        for (int it = 0; it < 60; ++it) {
            int n = 2 + static_cast<int>(rng() % 5);
            Graph g = testutil::random_weighted_graph(rng, n, 0.55, 5, 3);
            MaxWeightSolve mw = strongly_w_maximal(g);
            CHECK(mw.weight == oracle::max_weight_matching(g).weight(g));
            CHECK(alternating::is_strongly_w_maximal(g, mw.matching));
        }
    }
    SUBCASE("nonpositive edges are never used") {
        Graph g;
        for (const char* n : {"a", "b", "c", "d"}) g.add_vertex(n);
        g.add_edge(0, 1, Rational(-3));
        g.add_edge(1, 2, Rational(0));
        EdgeId cd = g.add_edge(2, 3, Rational(2));
        MaxWeightSolve mw = strongly_w_maximal(g);
        CHECK(mw.matching.edges() == std::vector<EdgeId>{cd});
        CHECK(mw.weight == Rational(2));
        CHECK(mw.weight == oracle::max_weight_matching(g).weight(g));
    }
    SUBCASE("odd order routes through the almost-perfect inner solve") {
        std::mt19937 rng(11);
        Graph g = testutil::random_weighted_graph(rng, 5, 0.7, 4, 2);
        MaxWeightSolve mw = strongly_w_maximal(g);
        CHECK(mw.weight == oracle::max_weight_matching(g).weight(g));
        CHECK(mw.inner.certificate.exposed.has_value());
    }
}

TEST_CASE("fill edges in the inner matching carry zero weight") {
    std::mt19937 rng(13);
    for (int it = 0; it < 20; ++it) {
        Graph g = testutil::random_weighted_graph(rng, 6, 0.4, 5, 2);
        MaxWeightSolve mw = strongly_w_maximal(g);
        Rational fill_total;
        for (EdgeId e : mw.inner.matching.edges()) {
            if (mw.completed.origin[e] == -1) fill_total += mw.completed.graph.edge(e).weight;
        }
        CHECK(fill_total == Rational(0));
        // Dropping them is what the projection does; the projected weight is
        // the full original weight of the surviving edges.
        CHECK(mw.weight == mw.matching.weight(g));
    }
}

TEST_CASE("star of zero/one paths: deeper reroutes only improve") {
    // Paths sharing their first vertex w, the i-th with 2i edges weighted
    // 0,1,0,1,... from w. Matching w into a deeper path strictly lowers the
    // total weight of the almost perfect matching, and leaving w uncovered
    // is beaten by all of them.
    const int paths = 3;
    Graph g;
    VertexId w = g.add_vertex("w");
    std::vector<std::vector<VertexId>> chain(paths + 1);
    std::vector<std::vector<EdgeId>> edge(paths + 1);
    for (int i = 1; i <= paths; ++i) {
        VertexId prev = w;
        for (int j = 1; j <= 2 * i; ++j) {
            VertexId v = g.add_vertex("p" + std::to_string(i) + "_" + std::to_string(j));
            edge[i].push_back(g.add_edge(prev, v, Rational(j % 2 == 1 ? 0 : 1)));
            chain[i].push_back(v);
            prev = v;
        }
    }

    auto almost_perfect_into = [&](int i) {
        // w matched along P_i's zero edges; every other path takes its
        // weight-1 edges.
        std::vector<EdgeId> m;
        for (int k = 1; k <= paths; ++k) {
            for (size_t j = (k == i ? 0 : 1); j < edge[k].size(); j += 2) m.push_back(edge[k][j]);
        }
        return Matching::of(g, m);
    };

    std::vector<Rational> weights;
    for (int i = 1; i <= paths; ++i) {
        Matching m = almost_perfect_into(i);
        CHECK(2 * m.size() == g.vertex_count() - 1);
        weights.push_back(m.weight(g));
    }
    for (size_t i = 0; i + 1 < weights.size(); ++i) CHECK(weights[i] > weights[i + 1]);

    // Leaving w uncovered costs strictly more than any reroute.
    std::vector<EdgeId> no_w;
    for (int k = 1; k <= paths; ++k)
        for (size_t j = 1; j < edge[k].size(); j += 2) no_w.push_back(edge[k][j]);
    Matching m0 = Matching::of(g, no_w);
    CHECK(2 * m0.size() == g.vertex_count() - 1);
    for (const Rational& wgt : weights) CHECK(m0.weight(g) > wgt);

    // The deepest reroute is the optimum over all almost perfect matchings.
    auto best = oracle::min_weight_perfect(g);
    REQUIRE(best.has_value());
    CHECK(best->weight(g) == weights.back());
}

TEST_CASE("star of zero/one paths closed by a zero-weight clique") {
    // Same star, but the far end of every path joins a zero-weight clique
    // (with one extra clique vertex for parity), so perfect matchings
    // exist. Routing the hub into a deeper path still strictly improves,
    // and the deepest route is the minimum-weight perfect matching.
    const int paths = 3;
    Graph g;
    VertexId hub = g.add_vertex("w");
    std::vector<std::vector<EdgeId>> edge(paths + 1);
    std::vector<VertexId> clique;  // final vertex of each path
    for (int i = 1; i <= paths; ++i) {
        VertexId prev = hub;
        for (int j = 1; j <= 2 * i; ++j) {
            VertexId v = g.add_vertex("p" + std::to_string(i) + "_" + std::to_string(j));
            edge[i].push_back(g.add_edge(prev, v, Rational(j % 2 == 1 ? 0 : 1)));
            prev = v;
        }
        clique.push_back(prev);
    }
    clique.push_back(g.add_vertex("k"));
    std::vector<std::vector<EdgeId>> cedge(clique.size(), std::vector<EdgeId>(clique.size()));
    for (size_t i = 0; i < clique.size(); ++i)
        for (size_t j = i + 1; j < clique.size(); ++j)
            cedge[i][j] = g.add_edge(clique[i], clique[j], Rational(0));

    auto perfect_into = [&](int i) {
        // Hub into P_i's zero edges; its clique end pairs with the spare
        // vertex; every other path pairs off internally.
        std::vector<EdgeId> m;
        for (int k = 1; k <= paths; ++k) {
            if (k == i) {
                for (size_t j = 0; j + 1 < edge[k].size(); j += 2) m.push_back(edge[k][j]);
            } else {
                for (size_t j = 1; j < edge[k].size(); j += 2) m.push_back(edge[k][j]);
            }
        }
        m.push_back(cedge[i - 1][paths]);
        return Matching::of(g, m);
    };

    std::vector<Rational> weights;
    for (int i = 1; i <= paths; ++i) {
        Matching m = perfect_into(i);
        CHECK(2 * m.size() == g.vertex_count());
        weights.push_back(m.weight(g));
    }
    for (size_t i = 0; i + 1 < weights.size(); ++i) CHECK(weights[i] > weights[i + 1]);
    auto best = oracle::min_weight_perfect(g);
    REQUIRE(best.has_value());
    CHECK(best->weight(g) == weights.back());
}

TEST_CASE("zero weights on one near-perfect matching of K5") {
    // Weight 0 on a fixed near-perfect matching, 1 elsewhere: the solver
    // must find the all-zero almost perfect matching.
    Graph g;
    for (int i = 0; i < 5; ++i) g.add_vertex();
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            bool zero = (i == 0 && j == 1) || (i == 2 && j == 3);
            g.add_edge(i, j, Rational(zero ? 0 : 1));
        }
    NormalizedGraph norm = normalize_weights(g);
    auto res = primal_dual::run(norm.graph);
    CHECK(res.matching.weight(g) == Rational(0));
    CHECK(res.certificate.exposed == VertexId{4});
}
