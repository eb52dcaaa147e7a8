#pragma once

#include <optional>
#include <vector>

#include "strongmatch/graph.hpp"

namespace strongmatch::alternating {

/// A finitely improving path: alternates relative to a matching M, both
/// endpoints uncovered, odd edge count, first and last edges outside M.
/// Switching it grows |M| by one.
struct ImprovingPath {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

/// Returns the lexicographically least (by vertex sequence) finitely
/// improving M-alternating path, or nullopt when none exists. On finite
/// graphs, nullopt is equivalent to M having maximum cardinality, i.e.
/// being strongly maximal.
///
/// On finite graphs "maximal support" coincides with strong maximality
/// (there are no infinite paths to improve along), so this doubles as the
/// maximal-support test.
std::optional<ImprovingPath> find_finitely_improving_path(const Graph& g, const Matching& m);

/// A weight-improving switch: N = M (triangle) E(component) for a single
/// alternating path or cycle whose switch is a valid matching and whose
/// exact gain w[N\M] - w[M\N] is positive.
struct WeightedImprovement {
    Matching improved;           // N
    Rational gain;               // > 0
    std::vector<EdgeId> removed; // M \ N
    std::vector<EdgeId> added;   // N \ M
};

/// Searches for a positive-gain alternating switch (paths with
/// switch-compatible endpoints, and alternating cycles; cycles are needed
/// because they preserve cardinality while changing weight). Exhaustive over
/// alternating structures, exact arithmetic; exponential in the worst case
/// and intended for desk-scale graphs. Returned improvements are re-verified
/// by evaluating both sides.
std::optional<WeightedImprovement> find_weighted_improvement(const Graph& g, const Matching& m);

/// Certified iff no matching N satisfies w[N\M] > w[M\N]. (The comparison
/// is only meaningful for N differing finitely from M; on a finite graph
/// that is every N, so the quantifier is unrestricted here.)
inline bool is_strongly_w_maximal(const Graph& g, const Matching& m) {
    return !find_weighted_improvement(g, m).has_value();
}

enum class PathClass {
    finitely_improving,  // alternating, both endpoints uncovered
    indifferent,         // alternating, exactly one endpoint covered
    neither,             // alternating, both endpoints covered (unnamed case)
    not_alternating,
};

/// Classifies a vertex sequence against the matching. A sequence that is not
/// a simple path, has a non-adjacent consecutive pair, or admits no
/// alternating edge assignment classifies as not_alternating.
PathClass classify_path(const Graph& g, const Matching& m, const std::vector<VertexId>& path);

}  // namespace strongmatch::alternating
