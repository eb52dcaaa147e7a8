#pragma once

#include <random>
#include <vector>

#include "strongmatch/graph.hpp"

namespace strongmatch::testutil {

inline Graph random_graph(std::mt19937& rng, int n, double edge_prob) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    std::bernoulli_distribution flip(edge_prob);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (flip(rng)) g.add_edge(i, j, Rational(1));
    return g;
}

inline Graph random_weighted_graph(std::mt19937& rng, int n, double edge_prob, long num_max,
                                   long den_max) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    std::bernoulli_distribution flip(edge_prob);
    std::uniform_int_distribution<long> num(1, num_max), den(1, den_max);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (flip(rng)) g.add_edge(i, j, Rational(num(rng), den(rng)));
    return g;
}

inline Graph random_complete(std::mt19937& rng, int n, long w_min, long w_max) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    std::uniform_int_distribution<long> w(w_min, w_max);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j, Rational(w(rng)));
    return g;
}

/// Random matching: greedy over a shuffled edge order, each accepted edge
/// then kept with probability 1/2, so sub-maximal matchings appear too.
inline Matching random_matching(std::mt19937& rng, const Graph& g) {
    std::vector<EdgeId> order(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) order[e] = e;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<EdgeId> picked;
    std::bernoulli_distribution keep(0.5);
    for (EdgeId e : order) {
        VertexId u = g.edge(e).u, v = g.edge(e).v;
        if (used[u] || used[v] || !keep(rng)) continue;
        used[u] = used[v] = 1;
        picked.push_back(e);
    }
    return Matching::of(g, picked);
}

}  // namespace strongmatch::testutil
