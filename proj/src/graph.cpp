#include "strongmatch/graph.hpp"

#include <algorithm>

namespace strongmatch {

VertexId Graph::add_vertex(const std::string& name) {
    require(!name.empty(), "vertex name must be nonempty");
    require(index_.find(name) == index_.end(), "duplicate vertex name: " + name);
    VertexId id = static_cast<VertexId>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    adjacency_.emplace_back();
    return id;
}

VertexId Graph::add_vertex() {
    return add_vertex("v" + std::to_string(names_.size()));
}

EdgeId Graph::add_edge(VertexId u, VertexId v, Rational weight) {
    require(u >= 0 && u < vertex_count(), "edge endpoint out of range");
    require(v >= 0 && v < vertex_count(), "edge endpoint out of range");
    require(u != v, "self-loops are not allowed");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{u, v, std::move(weight)});
    adjacency_[u].push_back(id);
    adjacency_[v].push_back(id);
    return id;
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::other_end(EdgeId e, VertexId v) const {
    const Edge& ed = edges_.at(e);
    require(ed.u == v || ed.v == v, "vertex is not an endpoint of edge");
    return ed.u == v ? ed.v : ed.u;
}

bool Graph::is_complete() const {
    int n = vertex_count();
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    for (const Edge& e : edges_) seen[e.u][e.v] = seen[e.v][e.u] = 1;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (!seen[u][v]) return false;
    return true;
}

std::optional<Rational> Graph::min_weight() const {
    std::optional<Rational> best;
    for (const Edge& e : edges_)
        if (!best || e.weight < *best) best = e.weight;
    return best;
}

std::optional<Rational> Graph::max_weight() const {
    std::optional<Rational> best;
    for (const Edge& e : edges_)
        if (!best || e.weight > *best) best = e.weight;
    return best;
}

Matching Matching::of(const Graph& g, std::vector<EdgeId> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<char> used(g.vertex_count(), 0);
    for (EdgeId e : edges) {
        require(e >= 0 && e < g.edge_count(), "matching edge id out of range");
        const Graph::Edge& ed = g.edge(e);
        require(!used[ed.u] && !used[ed.v], "matching edges share endpoint " +
                                                g.name(used[ed.u] ? ed.u : ed.v));
        used[ed.u] = used[ed.v] = 1;
    }
    Matching m;
    m.edges_ = std::move(edges);
    return m;
}

bool Matching::contains(EdgeId e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Rational Matching::weight(const Graph& g) const {
    Rational total;
    for (EdgeId e : edges_) total += g.edge(e).weight;
    return total;
}

std::vector<VertexId> Matching::support(const Graph& g) const {
    std::vector<VertexId> out;
    out.reserve(edges_.size() * 2);
    for (EdgeId e : edges_) {
        out.push_back(g.edge(e).u);
        out.push_back(g.edge(e).v);
    }
    std::sort(out.begin(), out.end());
    detail::ensure(std::adjacent_find(out.begin(), out.end()) == out.end(),
                   "matching support smaller than 2|M|");
    return out;
}

std::vector<VertexId> Matching::mates(const Graph& g) const {
    std::vector<VertexId> mate(g.vertex_count(), -1);
    for (EdgeId e : edges_) {
        mate[g.edge(e).u] = g.edge(e).v;
        mate[g.edge(e).v] = g.edge(e).u;
    }
    return mate;
}

std::vector<EdgeId> Matching::edge_at(const Graph& g) const {
    std::vector<EdgeId> at(g.vertex_count(), -1);
    for (EdgeId e : edges_) {
        at[g.edge(e).u] = e;
        at[g.edge(e).v] = e;
    }
    return at;
}

std::vector<AltComponent> symmetric_difference_decompose(const Graph& g, const Matching& m,
                                                         const Matching& n) {
    // Edges of the symmetric difference; each vertex meets at most one edge
    // from each side, so degrees are <= 2 and components are paths/cycles.
    std::vector<EdgeId> diff;
    for (EdgeId e : m.edges())
        if (!n.contains(e)) diff.push_back(e);
    for (EdgeId e : n.edges())
        if (!m.contains(e)) diff.push_back(e);

    std::vector<std::vector<EdgeId>> at(g.vertex_count());
    for (EdgeId e : diff) {
        at[g.edge(e).u].push_back(e);
        at[g.edge(e).v].push_back(e);
        detail::ensure(at[g.edge(e).u].size() <= 2 && at[g.edge(e).v].size() <= 2,
                       "symmetric difference has degree > 2");
    }

    std::vector<char> done(g.edge_count(), 0);
    std::vector<AltComponent> out;

    auto walk = [&](VertexId start, EdgeId first, AltComponent::Kind kind) {
        AltComponent comp;
        comp.kind = kind;
        VertexId at_v = start;
        EdgeId at_e = first;
        comp.vertices.push_back(at_v);
        while (true) {
            done[at_e] = 1;
            comp.edges.push_back(at_e);
            at_v = g.other_end(at_e, at_v);
            if (kind == AltComponent::Kind::cycle && at_v == start) break;
            comp.vertices.push_back(at_v);
            EdgeId next = -1;
            for (EdgeId cand : at[at_v])
                if (cand != at_e) next = cand;
            if (next == -1) break;
            at_e = next;
        }
        // Membership must strictly alternate between the two sides.
        for (size_t i = 0; i + 1 < comp.edges.size(); ++i) {
            detail::ensure(m.contains(comp.edges[i]) != m.contains(comp.edges[i + 1]),
                           "component does not alternate");
        }
        out.push_back(std::move(comp));
    };

    // Paths first (start at degree-1 vertices), then the remaining cycles.
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (at[v].size() == 1 && !done[at[v][0]]) walk(v, at[v][0], AltComponent::Kind::path);
    }
    for (EdgeId e : diff) {
        if (!done[e]) walk(g.edge(e).u, e, AltComponent::Kind::cycle);
    }
    return out;
}

NormalizedGraph normalize_weights(const Graph& g) {
    mpz_class scale = 1;
    for (const Graph::Edge& e : g.edges())
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.weight.den().get_mpz_t());

    Rational rscale(scale);
    std::optional<Rational> scaled_min;
    for (const Graph::Edge& e : g.edges()) {
        Rational s = e.weight * rscale;
        detail::ensure(s.is_integer(), "scaled weight not integral");
        if (!scaled_min || s < *scaled_min) scaled_min = s;
    }

    Rational shift = 0;
    if (scaled_min && *scaled_min < Rational(1)) shift = Rational(1) - *scaled_min;

    NormalizedGraph out;
    out.scale = rscale;
    out.shift = shift;
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.graph.add_vertex(g.name(v));
    for (const Graph::Edge& e : g.edges()) {
        Rational w = e.weight * rscale + shift;
        detail::ensure(w.is_integer() && w.sign() > 0, "normalized weight not a positive integer");
        out.graph.add_edge(e.u, e.v, w);
    }
    return out;
}

}  // namespace strongmatch
