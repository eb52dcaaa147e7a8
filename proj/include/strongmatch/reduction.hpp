#pragma once

#include <vector>

#include "strongmatch/graph.hpp"
#include "strongmatch/primal_dual.hpp"

namespace strongmatch::reduction {

/// The completed, negated instance: every original edge reappears with
/// weight -w(e), and every non-adjacent vertex pair gets a weight-0 fill
/// edge. origin[e'] is the original edge id, or -1 for fill edges.
struct CompletedNegated {
    Graph graph;
    std::vector<EdgeId> origin;
};

CompletedNegated complete_and_negate(const Graph& g);

/// Everything needed to audit a maximum-weight solve: the intermediate
/// instances and the inner minimum-weight run on the completed graph.
struct MaxWeightSolve {
    Matching matching;              // on the input graph
    Rational weight;                // in input weights
    Graph positive;                 // input restricted to w > 0 (same vertex set)
    std::vector<EdgeId> positive_origin;
    CompletedNegated completed;     // built from `positive`
    NormalizedGraph normalized;     // completed graph made positive-integral
    primal_dual::SolveResult inner; // run on the normalized instance
};

/// Strongly w-maximal (= maximum weight, on finite graphs) matching via the
/// completed instance: drop nonpositive edges (a matching never benefits
/// from them), negate and complete, rescale to positive integers, solve the
/// minimum-weight perfect/almost-perfect problem, and keep the surviving
/// original edges. With certify set, the result is re-certified by the
/// alternating-switch search (exhaustive; intended for desk scale).
MaxWeightSolve strongly_w_maximal(const Graph& g, bool certify = true,
                                  const primal_dual::SolveOptions& options = {});

}  // namespace strongmatch::reduction
