#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "strongmatch/blossom.hpp"
#include "strongmatch/graph.hpp"

namespace strongmatch {

using SetId = int;

/// A laminar family over the vertices of a host graph: a forest of sets
/// whose leaves are the vertex singletons, with a half-integer potential on
/// every set. Any two member sets have disjoint or nested flattens, the
/// family always contains {v} for every vertex, and the flattens of the
/// maximal sets partition the vertex set.
///
/// Nodes are append-only: dissolving a set marks it dead and promotes its
/// children, but the node (and thus the full contraction history) stays in
/// the log, so decontraction can walk the final forest directly.
///
/// Single writer: one procedure run owns and mutates its family; read-only
/// snapshots (copies) may be shared freely for verification.
///
/// Singleton potentials may go negative; non-singletons are kept
/// nonnegative by the owning procedure, which dissolves them at zero.
class LaminarFamily {
public:
    LaminarFamily() = default;  // empty family; mainly for deferred initialization
    explicit LaminarFamily(int vertex_count);
    explicit LaminarFamily(const Graph& host) : LaminarFamily(host.vertex_count()) {}

    int vertex_count() const { return static_cast<int>(singleton_.size()); }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    bool alive(SetId u) const { return nodes_.at(u).alive; }
    bool is_singleton(SetId u) const { return nodes_.at(u).base.has_value(); }
    std::optional<VertexId> base_vertex(SetId u) const { return nodes_.at(u).base; }
    const std::vector<SetId>& children(SetId u) const { return nodes_.at(u).children; }
    SetId parent(SetId u) const { return nodes_.at(u).parent; }
    SetId singleton_of(VertexId v) const { return singleton_.at(v); }
    bool is_maximal(SetId u) const { return alive(u) && parent(u) == -1; }

    const HalfInt& potential(SetId u) const { return nodes_.at(u).potential; }
    void set_potential(SetId u, HalfInt p);
    void add_to_potential(SetId u, const HalfInt& delta);

    std::vector<SetId> alive_sets() const;
    std::vector<SetId> maximal_sets() const;

    /// Base vertices nested anywhere below u, sorted.
    std::vector<VertexId> flatten(SetId u) const;
    int flatten_size(SetId u) const { return nodes_.at(u).flat_size; }

    /// Host edges with exactly one endpoint in flatten(u).
    std::vector<EdgeId> boundary(SetId u, const Graph& g) const;

    /// The maximal set whose flatten contains v.
    SetId maximal_of(VertexId v) const;

    /// Wraps currently-maximal member sets into a new set. Members must be
    /// alive and maximal (hence pairwise disjoint); a single member is
    /// allowed and produces a one-child wrapper.
    SetId contract(const std::vector<SetId>& members, HalfInt potential);

    /// Removes a maximal non-singleton set whose potential is zero; its
    /// children become maximal. Rejects singletons and nonzero potentials.
    void dissolve(SetId u);

    /// Sum of potentials over alive sets U with e in the boundary of U.
    /// Equals energy(u) + energy(v) - 2 * (sum over sets containing both).
    HalfInt boundary_potential(const Graph& g, EdgeId e) const;

    /// Sum of potentials over alive sets whose flatten contains v.
    HalfInt energy(VertexId v) const;

    /// Deepest nesting over all alive chains (singleton-only family: 1).
    /// Arbitrary depth is supported; this is a diagnostic, not a bound.
    int max_depth() const;

    /// Validates laminarity, the partition property and singleton coverage;
    /// throws logic_error on violation.
    void check_structure() const;

private:
    struct Node {
        std::optional<VertexId> base;
        std::vector<SetId> children;
        SetId parent = -1;
        HalfInt potential;
        bool alive = true;
        int flat_size = 0;
    };
    std::vector<Node> nodes_;
    std::vector<SetId> singleton_;
};

/// Tight edges of g under the family's potentials: exactly those whose
/// boundary potential sum equals the edge weight.
struct TightEdges {
    std::vector<bool> mask;       // per host edge
    std::vector<EdgeId> list;     // ascending
};
TightEdges tight_edges(const Graph& g, const LaminarFamily& fam);

/// The tight subgraph as a standalone graph on the same vertices. Edge ids
/// are renumbered; pipeline code works with the mask instead.
Graph tight_subgraph(const Graph& g, const LaminarFamily& fam);

/// A graph whose vertices are laminar sets: either the maximal sets of the
/// family (the contracted graph) or the children of one set. Edges are host
/// edges passing the filter whose endpoints lie in distinct member flattens;
/// parallel view edges are kept, each remembering its host edge.
class ContractedView {
public:
    static ContractedView of_family(const Graph& g, const LaminarFamily& fam,
                                    const std::vector<bool>& edge_filter);
    static ContractedView of_set(const Graph& g, const LaminarFamily& fam, SetId u,
                                 const std::vector<bool>& edge_filter);

    int vertex_count() const { return static_cast<int>(sets_.size()); }
    SetId set_of(int view_vertex) const { return sets_.at(view_vertex); }
    const std::vector<SetId>& sets() const { return sets_; }
    std::optional<int> view_of_set(SetId u) const;
    /// View vertex whose flatten contains the host vertex, or -1.
    int view_of_host_vertex(VertexId v) const { return host_vertex_view_.at(v); }

    struct VEdge {
        EdgeId host;
        int a, b;  // view endpoints
    };
    const std::vector<VEdge>& edges() const { return edges_; }

    /// Unweighted projection for the cardinality engine.
    CompactGraph compact() const;

    /// Interprets host edges as a view matching (validating disjointness);
    /// mate[x] = partner view vertex or -1.
    std::vector<int> view_mates(const std::vector<EdgeId>& host_edges) const;

    /// Chooses concrete host edges for a view mate vector. Pairs keep their
    /// edge from `prefer` when one connects them; otherwise the smallest
    /// host edge id among the parallels is used.
    std::vector<EdgeId> realize(const std::vector<int>& mate,
                                const std::vector<EdgeId>& prefer = {}) const;

private:
    std::vector<SetId> sets_;                       // view vertex -> set
    std::unordered_map<SetId, int> set_index_;
    std::vector<int> host_vertex_view_;             // host vertex -> view vertex or -1
    std::vector<VEdge> edges_;
};

}  // namespace strongmatch
