#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "strongmatch/blossom.hpp"
#include "strongmatch/graph.hpp"

namespace strongmatch::oracle {

/// Brute-force ground truth at desk scale. Everything here enumerates; none
/// of it shares algorithmic code with the engines it is used to check.

struct Limits {
    // Full enumeration guard; enumerate_matchings refuses larger inputs.
    int max_edges = 24;
};

/// Calls visit() exactly once for every matching of g (including the empty
/// one), as sorted edge-id lists. Order: lexicographic by the sequence of
/// chosen edge ids.
void enumerate_matchings(const Graph& g, const std::function<void(const std::vector<EdgeId>&)>& visit,
                         Limits limits = {});

/// Number of matchings of g.
long count_matchings(const Graph& g, Limits limits = {});

/// Maximum cardinality over all matchings, by exhaustive branching. No edge
/// budget: branching on the first uncovered vertex keeps this tractable at
/// desk scale even for dense graphs.
int max_matching_size(const Graph& g);

/// Minimum-weight perfect matching; on odd-order graphs, minimum-weight
/// almost perfect matching (exactly one vertex uncovered). Ties broken by
/// lexicographically smallest edge-id list. nullopt when none exists.
std::optional<Matching> min_weight_perfect(const Graph& g);

/// Maximum-weight matching over all matchings (the empty one included),
/// ties broken lexicographically.
Matching max_weight_matching(const Graph& g);

/// Unweighted primitives on the compact view, shared by invariant audits.
bool has_perfect_matching(const CompactGraph& g);
bool is_uniformly_almost_matchable(const CompactGraph& g);
bool is_factor_critical(const CompactGraph& g);

bool has_perfect_matching(const Graph& g);
bool is_uniformly_almost_matchable(const Graph& g);
bool is_factor_critical(const Graph& g);

/// Vertices missed by at least one maximum matching, by enumeration.
std::vector<bool> missed_by_some_maximum(const Graph& g);

CompactGraph to_compact(const Graph& g);

}  // namespace strongmatch::oracle
