#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "strongmatch/rational.hpp"

namespace strongmatch {

using VertexId = int;
using EdgeId = int;

/// Finite undirected multigraph with exact rational edge weights.
///
/// Parallel edges are first class: contracted views need to keep distinct
/// edge identities between the same pair of super-vertices. Self-loops are
/// rejected. Vertices are identified by dense ids in insertion order and
/// carry a display name (unique).
///
/// A Graph is built once and treated as immutable afterwards; all algorithms
/// take const references, so sharing across threads is safe.
class Graph {
public:
    struct Edge {
        VertexId u;
        VertexId v;
        Rational weight;
    };

    VertexId add_vertex(const std::string& name);
    /// Adds a vertex with a generated name "v<k>".
    VertexId add_vertex();
    EdgeId add_edge(VertexId u, VertexId v, Rational weight);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& name(VertexId v) const { return names_.at(v); }
    std::optional<VertexId> find_vertex(const std::string& name) const;
    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }
    VertexId other_end(EdgeId e, VertexId v) const;
    const std::vector<EdgeId>& incident(VertexId v) const { return adjacency_.at(v); }

    /// True when every pair of distinct vertices is joined by at least one edge.
    bool is_complete() const;

    std::optional<Rational> min_weight() const;
    std::optional<Rational> max_weight() const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> adjacency_;
};

/// A set of edges of a host graph with pairwise disjoint endpoints.
/// Stored as a sorted edge-id list; construction validates disjointness.
class Matching {
public:
    Matching() = default;
    static Matching of(const Graph& g, std::vector<EdgeId> edges);

    const std::vector<EdgeId>& edges() const { return edges_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }
    bool contains(EdgeId e) const;

    /// Exact total weight of the member edges.
    Rational weight(const Graph& g) const;

    /// Covered vertices, sorted. Always has size 2*size().
    std::vector<VertexId> support(const Graph& g) const;

    /// mate[v] = partner vertex, or -1 when v is uncovered.
    std::vector<VertexId> mates(const Graph& g) const;

    /// edge_at[v] = the member edge covering v, or -1.
    std::vector<EdgeId> edge_at(const Graph& g) const;

    friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }

private:
    std::vector<EdgeId> edges_;
};

/// One component of the symmetric difference of two matchings: a path or
/// cycle whose edges strictly alternate between the two sides.
struct AltComponent {
    enum class Kind { path, cycle };
    Kind kind;
    std::vector<EdgeId> edges;      // in walk order
    std::vector<VertexId> vertices; // walk order; for cycles, first == last is omitted
};

/// Decomposes M (triangle) N into alternating paths and cycles. Edges in
/// M cap N are excluded; every edge of the symmetric difference appears in
/// exactly one component.
std::vector<AltComponent> symmetric_difference_decompose(const Graph& g, const Matching& m,
                                                         const Matching& n);

/// Result of rescaling weights to positive integers: w'(e) = scale*w(e) + shift.
///
/// The shift is only order-preserving between matchings of equal cardinality,
/// which is why it lives solely inside the perfect/near-perfect pipeline.
struct NormalizedGraph {
    Graph graph;
    Rational scale;  // LCM of weight denominators; always >= 1
    Rational shift;  // 0, or a positive integer making every weight >= 1
};

NormalizedGraph normalize_weights(const Graph& g);

}  // namespace strongmatch
