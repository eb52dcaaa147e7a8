#include "strongmatch/gallai.hpp"

#include <algorithm>

#include "strongmatch/blossom.hpp"

namespace strongmatch::gallai {

namespace {

EdgeId smallest_edge_between(const Graph& g, VertexId u, VertexId v) {
    EdgeId best = -1;
    for (EdgeId e : g.incident(u)) {
        if (g.other_end(e, u) == v && (best == -1 || e < best)) best = e;
    }
    detail::ensure(best != -1, "expected an edge between " + g.name(u) + " and " + g.name(v));
    return best;
}

// Compact subgraph induced on a vertex subset, with the host mapping.
struct Induced {
    CompactGraph cg;
    std::vector<VertexId> to_host;
    std::vector<int> to_local;  // host -> local or -1

    Induced(const Graph& g, const std::vector<VertexId>& verts) : to_local(g.vertex_count(), -1) {
        to_host = verts;
        std::sort(to_host.begin(), to_host.end());
        for (int i = 0; i < static_cast<int>(to_host.size()); ++i) to_local[to_host[i]] = i;
        cg.n = static_cast<int>(to_host.size());
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            int a = to_local[g.edge(e).u], b = to_local[g.edge(e).v];
            if (a != -1 && b != -1) cg.edges.emplace_back(a, b);
        }
    }

    // Perfect matching of the induced subgraph as host edges; throws when
    // none exists.
    std::vector<EdgeId> perfect_matching(const Graph& g) const {
        auto mate = max_cardinality_mates(cg);
        std::vector<EdgeId> out;
        for (int a = 0; a < cg.n; ++a) {
            detail::ensure(mate[a] != -1, "expected a perfect matching on induced subgraph");
            if (mate[a] > a) out.push_back(smallest_edge_between(g, to_host[a], to_host[mate[a]]));
        }
        return out;
    }
};

}  // namespace

GEDecomposition gallai_edmonds(const Graph& g) {
    CompactGraph cg;
    cg.n = g.vertex_count();
    for (const Graph::Edge& e : g.edges()) cg.edges.emplace_back(e.u, e.v);

    BlossomMatcher engine(cg);
    engine.maximize();
    std::vector<bool> d = engine.even_reachable();
    const std::vector<int>& mate = engine.mate();

    GEDecomposition out;
    std::vector<char> in_t(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (d[v]) continue;
        for (EdgeId e : g.incident(v)) {
            if (d[g.other_end(e, v)]) {
                in_t[v] = 1;
                break;
            }
        }
        if (in_t[v]) out.t.push_back(v);
    }

    // Components of the even-reachable set. Neighbors of D lie in D or T,
    // so these are full components of G - T.
    std::vector<int> comp_of(g.vertex_count(), -1);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (!d[s] || comp_of[s] != -1) continue;
        int id = static_cast<int>(out.components.size());
        std::vector<VertexId> comp, stack{s};
        comp_of[s] = id;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (EdgeId e : g.incident(v)) {
                VertexId u = g.other_end(e, v);
                if (d[u] && comp_of[u] == -1) {
                    comp_of[u] = id;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
    }

    // Every maximum matching sends each T-vertex into a distinct component
    // of D; follow ours to get the injection and contact vertices.
    std::vector<char> comp_used(out.components.size(), 0);
    for (VertexId t : out.t) {
        VertexId v = mate[t];
        detail::ensure(v != -1 && d[v], "T-vertex not matched into the deficiency set");
        int c = comp_of[v];
        detail::ensure(!comp_used[c], "matching hits one component from two T-vertices");
        comp_used[c] = 1;
        out.f_map.push_back(c);
        out.v_of_t.push_back(v);
    }

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!d[v] && !in_t[v]) out.rest.push_back(v);
    }
    for (VertexId r : out.rest)
        detail::ensure(mate[r] != -1 && !d[mate[r]] && !in_t[mate[r]],
                       "remainder is not perfectly matched within itself");
    return out;
}

Matching strongly_maximal_matching(const Graph& g) {
    GEDecomposition dec = gallai_edmonds(g);
    std::vector<EdgeId> edges;

    std::vector<char> mapped(dec.components.size(), 0);
    for (size_t i = 0; i < dec.t.size(); ++i) {
        mapped[dec.f_map[i]] = 1;
        edges.push_back(smallest_edge_between(g, dec.t[i], dec.v_of_t[i]));
        // Mapped component minus its contact vertex is perfectly matchable.
        std::vector<VertexId> verts;
        for (VertexId v : dec.components[dec.f_map[i]])
            if (v != dec.v_of_t[i]) verts.push_back(v);
        auto pm = Induced(g, verts).perfect_matching(g);
        edges.insert(edges.end(), pm.begin(), pm.end());
    }
    for (size_t c = 0; c < dec.components.size(); ++c) {
        if (mapped[c]) continue;
        // Near-perfect: leave the smallest-labeled vertex uncovered.
        std::vector<VertexId> verts(dec.components[c].begin() + 1, dec.components[c].end());
        auto pm = Induced(g, verts).perfect_matching(g);
        edges.insert(edges.end(), pm.begin(), pm.end());
    }
    if (!dec.rest.empty()) {
        auto pm = Induced(g, dec.rest).perfect_matching(g);
        edges.insert(edges.end(), pm.begin(), pm.end());
    }

    Matching m = Matching::of(g, std::move(edges));
    // The assembly must already be maximum; a fresh engine run can only tie it.
    CompactGraph cg;
    cg.n = g.vertex_count();
    for (const Graph::Edge& e : g.edges()) cg.edges.emplace_back(e.u, e.v);
    BlossomMatcher check(cg);
    check.maximize();
    detail::ensure(check.matched_pairs() == m.size(), "assembled matching is not maximum");
    return m;
}

Matching extend_to_strongly_maximal(const Graph& g, const Matching& m) {
    CompactGraph cg;
    cg.n = g.vertex_count();
    for (const Graph::Edge& e : g.edges()) cg.edges.emplace_back(e.u, e.v);
    auto before = m.mates(g);
    auto before_edge = m.edge_at(g);
    auto after = max_cardinality_mates(cg, before);

    std::vector<EdgeId> edges;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        detail::ensure(before[v] == -1 || after[v] != -1, "augmentation uncovered a vertex");
        if (after[v] == -1 || after[v] < v) continue;
        if (before[v] == after[v]) {
            edges.push_back(before_edge[v]);  // surviving pair keeps its edge
        } else {
            edges.push_back(smallest_edge_between(g, v, after[v]));
        }
    }
    Matching out = Matching::of(g, std::move(edges));
    detail::ensure(out.size() >= m.size(), "extension lost cardinality");
    return out;
}

}  // namespace strongmatch::gallai
