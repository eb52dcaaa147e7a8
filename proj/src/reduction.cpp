#include "strongmatch/reduction.hpp"

#include <algorithm>

#include "strongmatch/alternating.hpp"

namespace strongmatch::reduction {

CompletedNegated complete_and_negate(const Graph& g) {
    CompletedNegated out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.graph.add_vertex(g.name(v));
    std::vector<std::vector<char>> adjacent(g.vertex_count(),
                                            std::vector<char>(g.vertex_count(), 0));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Graph::Edge& ed = g.edge(e);
        out.graph.add_edge(ed.u, ed.v, -ed.weight);
        out.origin.push_back(e);
        adjacent[ed.u][ed.v] = adjacent[ed.v][ed.u] = 1;
    }
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
            if (adjacent[u][v]) continue;
            out.graph.add_edge(u, v, Rational(0));
            out.origin.push_back(-1);
        }
    }
    return out;
}

MaxWeightSolve strongly_w_maximal(const Graph& g, bool certify,
                                  const primal_dual::SolveOptions& options) {
    MaxWeightSolve out;

    // Nonpositive edges never help: any matching using them compares no
    // better than its restriction to positive edges.
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.positive.add_vertex(g.name(v));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).weight.sign() > 0) {
            out.positive.add_edge(g.edge(e).u, g.edge(e).v, g.edge(e).weight);
            out.positive_origin.push_back(e);
        }
    }

    out.completed = complete_and_negate(out.positive);
    out.normalized = normalize_weights(out.completed.graph);
    out.inner = primal_dual::run(out.normalized.graph, options);

    // Keep exactly the edges that came from the input; fill edges carried
    // weight zero and fall away.
    std::vector<EdgeId> original;
    for (EdgeId e : out.inner.matching.edges()) {
        EdgeId pos = out.completed.origin[e];
        if (pos != -1) original.push_back(out.positive_origin[pos]);
    }
    out.matching = Matching::of(g, std::move(original));
    out.weight = out.matching.weight(g);

    if (certify) {
        auto improvement = alternating::find_weighted_improvement(g, out.matching);
        detail::ensure(!improvement.has_value(),
                       "reduction output admits a weighted improvement");
    }
    return out;
}

}  // namespace strongmatch::reduction
