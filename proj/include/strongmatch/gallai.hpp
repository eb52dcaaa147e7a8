#pragma once

#include <vector>

#include "strongmatch/graph.hpp"

namespace strongmatch::gallai {

/// Structure witness: T together with the factor-critical components of
/// G - T that absorb deficiency, an injection of T into those components
/// with contact vertices, and a perfectly matchable remainder. The witness
/// is not unique; consumers should check the invariants, not compare
/// against a canonical decomposition.
struct GEDecomposition {
    std::vector<VertexId> t;                        // sorted
    std::vector<std::vector<VertexId>> components;  // factor-critical components of G - T
    std::vector<int> f_map;                         // f_map[i]: component index for t[i]; injective
    std::vector<VertexId> v_of_t;                   // v_of_t[i]: contact vertex, adjacent to t[i]
    std::vector<VertexId> rest;                     // sorted; G[rest] has a perfect matching
};

/// Computes the decomposition from one maximum matching: the components
/// collect the vertices missed by some maximum matching (the even-reachable
/// set), T is their external neighborhood, and the injection follows the
/// matching edges out of T. Deterministic for a fixed input.
GEDecomposition gallai_edmonds(const Graph& g);

/// Assembles a strongly maximal (= maximum cardinality) matching from the
/// decomposition: contact edges t-v(t), perfect matchings of the mapped
/// components minus their contact vertices, near-perfect matchings of the
/// unmapped components (leaving the smallest-labeled vertex uncovered), and
/// a perfect matching of the remainder.
Matching strongly_maximal_matching(const Graph& g);

/// A strongly maximal matching whose support contains supp(m): on finite
/// graphs, augmenting to maximum cardinality never uncovers a vertex.
/// Edges of m that survive keep their identity.
Matching extend_to_strongly_maximal(const Graph& g, const Matching& m);

}  // namespace strongmatch::gallai
