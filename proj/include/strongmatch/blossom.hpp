#pragma once

#include <utility>
#include <vector>

#include "strongmatch/rational.hpp"

namespace strongmatch {

/// Minimal dense unweighted graph used by the cardinality-matching engine.
/// Parallel edges are tolerated (they collapse in the adjacency), self-loops
/// are rejected.
struct CompactGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Maximum-cardinality matching via alternating-forest search with blossom
/// contraction.
///
/// Augmentation flips edges along augmenting paths only, so every vertex
/// covered by the initial matching stays covered: maximize() never shrinks
/// the support it starts from.
class BlossomMatcher {
public:
    /// initial_mate may be empty (empty matching) or a full mate vector
    /// (mate[v] = partner or -1) describing a valid matching.
    explicit BlossomMatcher(const CompactGraph& g, std::vector<int> initial_mate = {});

    /// Augments until no augmenting path exists. One pass over exposed
    /// vertices suffices: a vertex with no augmenting path now never gains
    /// one from later augmentations.
    void maximize();

    const std::vector<int>& mate() const { return mate_; }
    int matched_pairs() const;

    /// The set of vertices reachable from some uncovered vertex by an
    /// even-length alternating path (possibly trivial). Requires the current
    /// matching to be maximum; finding an augmenting path here is an
    /// internal error.
    std::vector<bool> even_reachable();

private:
    int find_path(const std::vector<int>& roots);  // returns exposed endpoint or -1
    void augment(int v);
    void mark_path(int v, int b, int child);
    int lowest_common_base(int a, int b);

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> mate_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<int> root_of_;
    std::vector<char> outer_;
    std::vector<char> in_blossom_;
};

/// Convenience wrapper: maximum-cardinality mate vector extending the given
/// initial matching.
std::vector<int> max_cardinality_mates(const CompactGraph& g, std::vector<int> initial_mate = {});

}  // namespace strongmatch
