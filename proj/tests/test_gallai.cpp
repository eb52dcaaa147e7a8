#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "strongmatch/alternating.hpp"
#include "strongmatch/gallai.hpp"
#include "strongmatch/oracle.hpp"
#include "test_util.hpp"

using namespace strongmatch;
using namespace strongmatch::gallai;

namespace {

Graph induced_on(const Graph& g, const std::vector<VertexId>& verts) {
    Graph out;
    std::vector<VertexId> remap(g.vertex_count(), -1);
    for (VertexId v : verts) remap[v] = out.add_vertex(g.name(v));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        VertexId a = remap[g.edge(e).u], b = remap[g.edge(e).v];
        if (a != -1 && b != -1) out.add_edge(a, b, g.edge(e).weight);
    }
    return out;
}

void check_decomposition(const Graph& g, const GEDecomposition& dec) {
    // Factor criticality of every listed component, by the oracle.
    for (const auto& comp : dec.components)
        CHECK(oracle::is_factor_critical(induced_on(g, comp)));
    // Injection with contact vertices adjacent in g.
    std::set<int> images(dec.f_map.begin(), dec.f_map.end());
    CHECK(images.size() == dec.f_map.size());
    for (size_t i = 0; i < dec.t.size(); ++i) {
        const auto& comp = dec.components[dec.f_map[i]];
        CHECK(std::binary_search(comp.begin(), comp.end(), dec.v_of_t[i]));
        bool adjacent = false;
        for (EdgeId e : g.incident(dec.t[i]))
            if (g.other_end(e, dec.t[i]) == dec.v_of_t[i]) adjacent = true;
        CHECK(adjacent);
    }
    // The remainder has a perfect matching.
    CHECK(oracle::has_perfect_matching(induced_on(g, dec.rest)));
    // T, components and rest partition the vertex set.
    std::vector<int> hits(g.vertex_count(), 0);
    for (VertexId v : dec.t) ++hits[v];
    for (const auto& comp : dec.components)
        for (VertexId v : comp) ++hits[v];
    for (VertexId v : dec.rest) ++hits[v];
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(hits[v] == 1);
}

}  // namespace

TEST_CASE("single edge: no deficiency") {
    Graph g;
    g.add_vertex("u");
    g.add_vertex("v");
    g.add_edge(0, 1, Rational(1));
    GEDecomposition dec = gallai_edmonds(g);
    CHECK(dec.t.empty());
    CHECK(dec.components.empty());
    CHECK(dec.rest == std::vector<VertexId>{0, 1});
}

TEST_CASE("three-vertex path: middle vertex separates two critical singletons") {
    Graph g;
    for (const char* n : {"a", "b", "c"}) g.add_vertex(n);
    g.add_edge(0, 1, Rational(1));
    g.add_edge(1, 2, Rational(1));
    GEDecomposition dec = gallai_edmonds(g);
    CHECK(dec.t == std::vector<VertexId>{1});
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components[0] == std::vector<VertexId>{0});
    CHECK(dec.components[1] == std::vector<VertexId>{2});
    CHECK(dec.f_map.size() == 1);
    CHECK(dec.rest.empty());
    check_decomposition(g, dec);

    Matching m = strongly_maximal_matching(g);
    CHECK(m.size() == 1);
    auto supp = m.support(g);
    CHECK(std::binary_search(supp.begin(), supp.end(), 1));  // covers b
}

TEST_CASE("triangle is one factor-critical component") {
    Graph g;
    for (const char* n : {"a", "b", "c"}) g.add_vertex(n);
    g.add_edge(0, 1, Rational(1));
    g.add_edge(1, 2, Rational(1));
    g.add_edge(0, 2, Rational(1));
    GEDecomposition dec = gallai_edmonds(g);
    CHECK(dec.t.empty());
    REQUIRE(dec.components.size() == 1);
    CHECK(dec.components[0] == std::vector<VertexId>{0, 1, 2});
    CHECK(dec.rest.empty());
    check_decomposition(g, dec);
}

TEST_CASE("empty graph gives the empty matching") {
    Graph g;
    CHECK(strongly_maximal_matching(g).empty());
}

TEST_CASE("decomposition invariants hold on random graphs") {
    std::mt19937 rng(59);
    for (int it = 0; it < 150; ++it) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = testutil::random_graph(rng, n, 0.35);
        GEDecomposition dec = gallai_edmonds(g);
        check_decomposition(g, dec);
    }
}

TEST_CASE("assembled matching is maximum and admits no improving path") {
    std::mt19937 rng(61);
    for (int it = 0; it < 120; ++it) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = testutil::random_graph(rng, n, 0.45);
        Matching m = strongly_maximal_matching(g);
        CHECK(m.size() == oracle::max_matching_size(g));
        CHECK_FALSE(alternating::find_finitely_improving_path(g, m).has_value());
    }
}

TEST_CASE("extension keeps the support and reaches maximum cardinality") {
    std::mt19937 rng(67);
    SUBCASE("empty matching on K4 extends to a perfect matching") {
        Graph g = testutil::random_complete(rng, 4, 1, 1);
        CHECK(extend_to_strongly_maximal(g, Matching()).size() == 2);
    }
    SUBCASE("an already-maximal matching stays maximal") {
        Graph g = testutil::random_complete(rng, 6, 1, 1);
        Matching m = strongly_maximal_matching(g);
        Matching ext = extend_to_strongly_maximal(g, m);
        CHECK(ext.size() == m.size());
    }
    SUBCASE("500 random pairs") {
        for (int it = 0; it < 500; ++it) {
            int n = 1 + static_cast<int>(rng() % 7);
            Graph g = testutil::random_graph(rng, n, 0.45);
            Matching m = testutil::random_matching(rng, g);
            Matching ext = extend_to_strongly_maximal(g, m);
            auto in = m.support(g);
            auto out = ext.support(g);
            CHECK(std::includes(out.begin(), out.end(), in.begin(), in.end()));
            CHECK(ext.size() == oracle::max_matching_size(g));
        }
    }
}

TEST_CASE("alternating walks from uncovered vertices stay inside T and the mapped components") {
    // In the assembled matching, once an alternating path from an uncovered
    // vertex enters T or a mapped component it never leaves that region.
    std::mt19937 rng(71);
    for (int it = 0; it < 60; ++it) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = testutil::random_graph(rng, n, 0.4);
        GEDecomposition dec = gallai_edmonds(g);
        Matching m = strongly_maximal_matching(g);
        auto mate = m.mates(g);

        std::vector<char> region(g.vertex_count(), 0);
        for (VertexId t : dec.t) region[t] = 1;
        for (int c : dec.f_map)
            for (VertexId v : dec.components[c]) region[v] = 1;

        // DFS over alternating simple paths starting with a non-matching edge.
        std::function<void(VertexId, bool, std::vector<char>&, bool)> dfs =
            [&](VertexId v, bool need_matched, std::vector<char>& visited, bool entered) {
                if (entered) CHECK(region[v]);
                for (EdgeId e : g.incident(v)) {
                    bool in_m = m.contains(e);
                    if (in_m != need_matched) continue;
                    VertexId u = g.other_end(e, v);
                    if (visited[u]) continue;
                    visited[u] = 1;
                    dfs(u, !need_matched, visited, entered || region[u]);
                    visited[u] = 0;
                }
            };
        for (VertexId s = 0; s < g.vertex_count(); ++s) {
            if (mate[s] != -1) continue;
            std::vector<char> visited(g.vertex_count(), 0);
            visited[s] = 1;
            dfs(s, false, visited, region[s]);
        }
    }
}
