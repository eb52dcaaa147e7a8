#include "strongmatch/laminar.hpp"

#include <algorithm>

namespace strongmatch {

LaminarFamily::LaminarFamily(int vertex_count) {
    require(vertex_count >= 0, "negative vertex count");
    nodes_.reserve(vertex_count);
    singleton_.reserve(vertex_count);
    for (VertexId v = 0; v < vertex_count; ++v) {
        Node n;
        n.base = v;
        n.flat_size = 1;
        singleton_.push_back(static_cast<SetId>(nodes_.size()));
        nodes_.push_back(std::move(n));
    }
}

void LaminarFamily::set_potential(SetId u, HalfInt p) {
    require(alive(u), "potential of a dissolved set");
    nodes_[u].potential = std::move(p);
}

void LaminarFamily::add_to_potential(SetId u, const HalfInt& delta) {
    require(alive(u), "potential of a dissolved set");
    nodes_[u].potential += delta;
}

std::vector<SetId> LaminarFamily::alive_sets() const {
    std::vector<SetId> out;
    for (SetId u = 0; u < node_count(); ++u)
        if (nodes_[u].alive) out.push_back(u);
    return out;
}

std::vector<SetId> LaminarFamily::maximal_sets() const {
    std::vector<SetId> out;
    for (SetId u = 0; u < node_count(); ++u)
        if (nodes_[u].alive && nodes_[u].parent == -1) out.push_back(u);
    return out;
}

std::vector<VertexId> LaminarFamily::flatten(SetId u) const {
    std::vector<VertexId> out;
    std::vector<SetId> stack{u};
    while (!stack.empty()) {
        SetId s = stack.back();
        stack.pop_back();
        if (nodes_[s].base) {
            out.push_back(*nodes_[s].base);
        } else {
            stack.insert(stack.end(), nodes_[s].children.begin(), nodes_[s].children.end());
        }
    }
    std::sort(out.begin(), out.end());
    detail::ensure(static_cast<int>(out.size()) == nodes_[u].flat_size, "stale flatten size");
    return out;
}

std::vector<EdgeId> LaminarFamily::boundary(SetId u, const Graph& g) const {
    std::vector<char> inside(g.vertex_count(), 0);
    for (VertexId v : flatten(u)) inside[v] = 1;
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (inside[g.edge(e).u] != inside[g.edge(e).v]) out.push_back(e);
    }
    return out;
}

SetId LaminarFamily::maximal_of(VertexId v) const {
    SetId u = singleton_.at(v);
    while (nodes_[u].parent != -1) u = nodes_[u].parent;
    detail::ensure(nodes_[u].alive, "dead set on root path");
    return u;
}

SetId LaminarFamily::contract(const std::vector<SetId>& members, HalfInt potential) {
    require(!members.empty(), "contracting an empty member list");
    std::vector<SetId> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "duplicate member in contraction");
    for (SetId m : sorted)
        require(is_maximal(m), "contraction member must be alive and maximal");

    Node n;
    n.children = sorted;
    n.potential = std::move(potential);
    for (SetId m : sorted) n.flat_size += nodes_[m].flat_size;
    SetId id = static_cast<SetId>(nodes_.size());
    for (SetId m : sorted) nodes_[m].parent = id;
    nodes_.push_back(std::move(n));
    return id;
}

void LaminarFamily::dissolve(SetId u) {
    require(alive(u), "dissolving a dead set");
    require(is_maximal(u), "dissolving a non-maximal set");
    require(!is_singleton(u), "dissolving a singleton");
    require(nodes_[u].potential.is_zero(), "dissolving a set with nonzero potential");
    nodes_[u].alive = false;
    for (SetId c : nodes_[u].children) nodes_[c].parent = -1;
}

HalfInt LaminarFamily::energy(VertexId v) const {
    HalfInt sum;
    for (SetId u = singleton_.at(v); u != -1; u = nodes_[u].parent) sum += nodes_[u].potential;
    return sum;
}

HalfInt LaminarFamily::boundary_potential(const Graph& g, EdgeId e) const {
    // Sets with e in their boundary are exactly the ancestors of one
    // endpoint's singleton that are not ancestors of the other's, so sum the
    // two root chains and cancel the shared tail twice.
    VertexId a = g.edge(e).u, b = g.edge(e).v;
    std::vector<char> on_a_chain(node_count(), 0);
    for (SetId u = singleton_.at(a); u != -1; u = nodes_[u].parent) on_a_chain[u] = 1;
    HalfInt common;
    for (SetId u = singleton_.at(b); u != -1; u = nodes_[u].parent) {
        if (on_a_chain[u]) {
            for (SetId w = u; w != -1; w = nodes_[w].parent) common += nodes_[w].potential;
            break;
        }
    }
    return energy(a) + energy(b) - common - common;
}

int LaminarFamily::max_depth() const {
    int best = 0;
    for (VertexId v = 0; v < vertex_count(); ++v) {
        int depth = 0;
        for (SetId u = singleton_.at(v); u != -1; u = nodes_[u].parent) ++depth;
        best = std::max(best, depth);
    }
    return best;
}

void LaminarFamily::check_structure() const {
    for (VertexId v = 0; v < vertex_count(); ++v) {
        detail::ensure(alive(singleton_.at(v)), "singleton missing from family");
    }
    // Child/parent links consistent, and flattens of maximal sets partition V.
    std::vector<char> seen(vertex_count(), 0);
    for (SetId u : maximal_sets()) {
        for (VertexId v : flatten(u)) {
            detail::ensure(!seen[v], "maximal flattens overlap");
            seen[v] = 1;
        }
    }
    for (VertexId v = 0; v < vertex_count(); ++v)
        detail::ensure(seen[v], "vertex missing from maximal flattens");
    // Laminarity across every alive pair.
    auto sets = alive_sets();
    std::vector<std::vector<VertexId>> flats;
    flats.reserve(sets.size());
    for (SetId u : sets) flats.push_back(flatten(u));
    for (size_t i = 0; i < sets.size(); ++i) {
        for (size_t j = i + 1; j < sets.size(); ++j) {
            std::vector<VertexId> inter;
            std::set_intersection(flats[i].begin(), flats[i].end(), flats[j].begin(),
                                  flats[j].end(), std::back_inserter(inter));
            bool ok = inter.empty() || inter.size() == flats[i].size() ||
                      inter.size() == flats[j].size();
            detail::ensure(ok, "laminarity violated");
        }
    }
}

TightEdges tight_edges(const Graph& g, const LaminarFamily& fam) {
    TightEdges out;
    out.mask.assign(g.edge_count(), false);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (fam.boundary_potential(g, e).to_rational() == g.edge(e).weight) {
            out.mask[e] = true;
            out.list.push_back(e);
        }
    }
    return out;
}

Graph tight_subgraph(const Graph& g, const LaminarFamily& fam) {
    Graph out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.name(v));
    for (EdgeId e : tight_edges(g, fam).list)
        out.add_edge(g.edge(e).u, g.edge(e).v, g.edge(e).weight);
    return out;
}

std::optional<int> ContractedView::view_of_set(SetId u) const {
    auto it = set_index_.find(u);
    if (it == set_index_.end()) return std::nullopt;
    return it->second;
}

ContractedView ContractedView::of_family(const Graph& g, const LaminarFamily& fam,
                                         const std::vector<bool>& edge_filter) {
    ContractedView view;
    view.sets_ = fam.maximal_sets();
    view.host_vertex_view_.assign(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(view.sets_.size()); ++i) {
        view.set_index_.emplace(view.sets_[i], i);
        for (VertexId v : fam.flatten(view.sets_[i])) view.host_vertex_view_[v] = i;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!edge_filter[e]) continue;
        int a = view.host_vertex_view_[g.edge(e).u];
        int b = view.host_vertex_view_[g.edge(e).v];
        detail::ensure(a != -1 && b != -1, "host vertex outside the partition");
        if (a != b) view.edges_.push_back({e, a, b});
    }
    return view;
}

ContractedView ContractedView::of_set(const Graph& g, const LaminarFamily& fam, SetId u,
                                      const std::vector<bool>& edge_filter) {
    require(!fam.is_singleton(u), "view of a singleton set has no members");
    ContractedView view;
    view.sets_ = fam.children(u);
    view.host_vertex_view_.assign(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(view.sets_.size()); ++i) {
        view.set_index_.emplace(view.sets_[i], i);
        for (VertexId v : fam.flatten(view.sets_[i])) view.host_vertex_view_[v] = i;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!edge_filter[e]) continue;
        int a = view.host_vertex_view_[g.edge(e).u];
        int b = view.host_vertex_view_[g.edge(e).v];
        if (a == -1 || b == -1 || a == b) continue;  // outside U, or within one member
        view.edges_.push_back({e, a, b});
    }
    return view;
}

CompactGraph ContractedView::compact() const {
    CompactGraph c;
    c.n = vertex_count();
    c.edges.reserve(edges_.size());
    for (const VEdge& e : edges_) c.edges.emplace_back(e.a, e.b);
    return c;
}

std::vector<int> ContractedView::view_mates(const std::vector<EdgeId>& host_edges) const {
    std::unordered_map<EdgeId, const VEdge*> by_host;
    for (const VEdge& e : edges_) by_host.emplace(e.host, &e);
    std::vector<int> mate(vertex_count(), -1);
    for (EdgeId h : host_edges) {
        auto it = by_host.find(h);
        require(it != by_host.end(), "matching edge is not a view edge");
        const VEdge& e = *it->second;
        detail::ensure(mate[e.a] == -1 && mate[e.b] == -1, "view matching shares a vertex");
        mate[e.a] = e.b;
        mate[e.b] = e.a;
    }
    return mate;
}

std::vector<EdgeId> ContractedView::realize(const std::vector<int>& mate,
                                            const std::vector<EdgeId>& prefer) const {
    require(static_cast<int>(mate.size()) == vertex_count(), "mate vector size mismatch");
    auto key = [this](int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<long long>(a) * vertex_count() + b;
    };
    std::unordered_map<long long, EdgeId> best;
    for (const VEdge& e : edges_) {
        auto [it, inserted] = best.emplace(key(e.a, e.b), e.host);
        if (!inserted && e.host < it->second) it->second = e.host;
    }
    std::unordered_map<long long, EdgeId> preferred;
    if (!prefer.empty()) {
        std::unordered_map<EdgeId, const VEdge*> by_host;
        for (const VEdge& e : edges_) by_host.emplace(e.host, &e);
        for (EdgeId h : prefer) {
            auto it = by_host.find(h);
            if (it == by_host.end()) continue;
            auto [pit, inserted] = preferred.emplace(key(it->second->a, it->second->b), h);
            if (!inserted && h < pit->second) pit->second = h;
        }
    }
    std::vector<EdgeId> out;
    for (int a = 0; a < vertex_count(); ++a) {
        int b = mate[a];
        if (b == -1 || b < a) continue;
        detail::ensure(mate[b] == a, "inconsistent mate vector");
        auto pit = preferred.find(key(a, b));
        if (pit != preferred.end()) {
            out.push_back(pit->second);
            continue;
        }
        auto it = best.find(key(a, b));
        detail::ensure(it != best.end(), "matched pair has no view edge");
        out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace strongmatch
