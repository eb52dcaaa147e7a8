#include <doctest.h>

#include <random>
#include <sstream>

#include "strongmatch/io.hpp"
#include "strongmatch/oracle.hpp"
#include "strongmatch/primal_dual.hpp"
#include "test_util.hpp"

using namespace strongmatch;

TEST_CASE("edge-list parsing") {
    std::istringstream in(
        "# a comment line\n"
        "a b 1/2\n"
        "b c 3   # trailing comment\n"
        "\n"
        "a c -2/4\n");
    Graph g = io::read_graph(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.name(0) == "a");  // ids in order of first appearance
    CHECK(g.edge(0).weight == Rational(1, 2));
    CHECK(g.edge(2).weight == Rational(-1, 2));

    auto expect_line = [](const std::string& text, int line) {
        std::istringstream bad(text);
        try {
            io::read_graph(bad);
            FAIL("expected a parse error");
        } catch (const io::ParseError& err) {
            CHECK(err.line() == line);
        }
    };
    expect_line("a b 1\nu u 1\n", 2);          // self-loop
    expect_line("a b 1\nc d\n", 2);            // missing weight
    expect_line("a b 1/0\n", 1);               // zero denominator
    expect_line("a b 1 extra\n", 1);           // trailing token
    expect_line("# fine\na b notanumber\n", 2);
}

TEST_CASE("graph writing round-trips") {
    std::mt19937 rng(113);
    Graph g = testutil::random_weighted_graph(rng, 5, 0.6, 7, 3);
    std::istringstream in(io::write_graph(g));
    Graph back = io::read_graph(in);
    REQUIRE(back.edge_count() == g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        CHECK(back.edge(e).weight == g.edge(e).weight);
}

TEST_CASE("matching JSON round-trips with sorted pairs") {
    std::mt19937 rng(127);
    Graph g = testutil::random_complete(rng, 6, 1, 9);
    for (int it = 0; it < 50; ++it) {
        Matching m = testutil::random_matching(rng, g);
        nlohmann::json j = io::matching_to_json(g, m);
        // Pairs and the pair list are sorted.
        for (const auto& pair : j) CHECK(pair[0].get<std::string>() < pair[1].get<std::string>());
        Matching back = io::matching_from_json(g, j);
        CHECK(back == m);
    }
    CHECK_THROWS_AS(io::matching_from_json(g, nlohmann::json::parse(R"([["v0","nope"]])")),
                    std::invalid_argument);
}

TEST_CASE("ambiguous pairs resolve to the heaviest parallel edge") {
    Graph g;
    g.add_vertex("u");
    g.add_vertex("v");
    g.add_edge(0, 1, Rational(1));
    EdgeId heavy = g.add_edge(0, 1, Rational(5));
    Matching m = io::matching_from_json(g, nlohmann::json::parse(R"([["u","v"]])"));
    CHECK(m.edges() == std::vector<EdgeId>{heavy});
}

TEST_CASE("family JSON round-trips") {
    Graph g;
    for (const char* n : {"a", "b", "c", "d", "e"}) g.add_vertex(n);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) g.add_edge(i, j, Rational(1));
    LaminarFamily fam(5);
    SetId ab = fam.contract({fam.singleton_of(0), fam.singleton_of(1)}, HalfInt::half());
    fam.contract({ab, fam.singleton_of(2)}, HalfInt::whole(2));
    fam.set_potential(fam.singleton_of(3), -HalfInt::half());

    nlohmann::json j = io::family_to_json(g, fam);
    LaminarFamily back = io::family_from_json(g, j);
    CHECK(back.maximal_sets().size() == fam.maximal_sets().size());
    for (VertexId v = 0; v < 5; ++v) CHECK(back.energy(v) == fam.energy(v));
    // Dump again: stable representation.
    CHECK(io::family_to_json(g, back) == j);
}

TEST_CASE("solve payload round-trips through JSON") {
    std::mt19937 rng(131);
    Graph g = testutil::random_complete(rng, 6, 1, 9);
    NormalizedGraph norm = normalize_weights(g);
    auto res = primal_dual::run(norm.graph);
    nlohmann::json payload = io::certificate_to_json(g, res.matching, res.certificate,
                                                     norm.scale, norm.shift,
                                                     res.matching.weight(g));
    io::ParsedCertificate parsed = io::certificate_from_json(g, payload);
    CHECK(parsed.matching == res.matching);
    CHECK(parsed.scale == norm.scale);
    CHECK(parsed.shift == norm.shift);
    CHECK(parsed.certificate.steps == res.certificate.steps);
    CHECK(primal_dual::verify_certificate(norm.graph, parsed.matching, parsed.certificate).ok());
}

TEST_CASE("golden family dump") {
    Graph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_vertex("c");
    g.add_edge(0, 1, Rational(1));
    g.add_edge(1, 2, Rational(1));
    g.add_edge(0, 2, Rational(1));
    LaminarFamily fam(3);
    fam.contract({fam.singleton_of(0), fam.singleton_of(1), fam.singleton_of(2)},
                 HalfInt::half());
    fam.set_potential(fam.singleton_of(1), HalfInt::whole(-1) + HalfInt::half());
    const char* expected = R"([
      {"members": [
         {"potential": "0", "vertex": "a"},
         {"potential": "-1/2", "vertex": "b"},
         {"potential": "0", "vertex": "c"}],
       "potential": "1/2"}
    ])";
    CHECK(io::family_to_json(g, fam) == nlohmann::json::parse(expected));
}
