#include "strongmatch/oracle.hpp"

#include <algorithm>

namespace strongmatch::oracle {

namespace {

// Shared recursion for the weighted optima: scan vertices in order, decide
// each uncovered vertex by trying every incident edge to an uncovered
// partner (edge by edge, so parallel edges keep their identity), plus the
// "leave uncovered" branch where allowed.
struct Search {
    const Graph& g;
    int skips_allowed;              // uncovered vertices permitted
    bool maximize;                  // otherwise minimize
    std::vector<char> covered;
    std::vector<EdgeId> chosen;
    std::optional<Rational> best_weight;
    std::vector<EdgeId> best_edges;
    Rational weight;

    explicit Search(const Graph& graph, int skips, bool maxim)
        : g(graph), skips_allowed(skips), maximize(maxim), covered(graph.vertex_count(), 0) {}

    void consider() {
        std::vector<EdgeId> sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        if (!best_weight || (maximize ? weight > *best_weight : weight < *best_weight) ||
            (weight == *best_weight && sorted < best_edges)) {
            best_weight = weight;
            best_edges = std::move(sorted);
        }
    }

    void run(VertexId v, int skips_left) {
        while (v < g.vertex_count() && covered[v]) ++v;
        if (v == g.vertex_count()) {
            consider();
            return;
        }
        if (skips_left > 0) {
            covered[v] = 1;
            run(v + 1, skips_left - 1);
            covered[v] = 0;
        }
        for (EdgeId e : g.incident(v)) {
            VertexId u = g.other_end(e, v);
            if (covered[u]) continue;
            covered[v] = covered[u] = 1;
            chosen.push_back(e);
            weight += g.edge(e).weight;
            run(v + 1, skips_left);
            weight -= g.edge(e).weight;
            chosen.pop_back();
            covered[v] = covered[u] = 0;
        }
    }
};

void enumerate_rec(const Graph& g, EdgeId from, std::vector<char>& covered,
                   std::vector<EdgeId>& chosen,
                   const std::function<void(const std::vector<EdgeId>&)>& visit) {
    visit(chosen);
    for (EdgeId e = from; e < g.edge_count(); ++e) {
        VertexId u = g.edge(e).u, v = g.edge(e).v;
        if (covered[u] || covered[v]) continue;
        covered[u] = covered[v] = 1;
        chosen.push_back(e);
        enumerate_rec(g, e + 1, covered, chosen, visit);
        chosen.pop_back();
        covered[u] = covered[v] = 0;
    }
}

using Mask = unsigned long long;

bool perfect_rec(const std::vector<Mask>& adj, Mask covered, Mask all) {
    if (covered == all) return true;
    int v = 0;
    while (covered & (Mask{1} << v)) ++v;
    Mask cand = adj[v] & ~covered;
    while (cand) {
        int u = __builtin_ctzll(cand);
        cand &= cand - 1;
        if (perfect_rec(adj, covered | (Mask{1} << v) | (Mask{1} << u), all)) return true;
    }
    return false;
}

std::vector<Mask> adjacency_masks(const CompactGraph& g) {
    require(g.n <= 62, "oracle: graph too large for exhaustive check");
    std::vector<Mask> adj(g.n, 0);
    for (auto [u, v] : g.edges) {
        detail::ensure(u != v, "oracle: self-loop");
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }
    return adj;
}

}  // namespace

void enumerate_matchings(const Graph& g, const std::function<void(const std::vector<EdgeId>&)>& visit,
                         Limits limits) {
    require(g.edge_count() <= limits.max_edges,
            "oracle: edge count exceeds full-enumeration budget");
    std::vector<char> covered(g.vertex_count(), 0);
    std::vector<EdgeId> chosen;
    enumerate_rec(g, 0, covered, chosen, visit);
}

long count_matchings(const Graph& g, Limits limits) {
    long c = 0;
    enumerate_matchings(g, [&](const std::vector<EdgeId>&) { ++c; }, limits);
    return c;
}

int max_matching_size(const Graph& g) {
    require(g.vertex_count() <= 20, "oracle: graph too large for exhaustive check");
    std::vector<char> covered(g.vertex_count(), 0);
    int best = 0;
    std::function<void(VertexId, int)> rec = [&](VertexId v, int depth) {
        while (v < g.vertex_count() && covered[v]) ++v;
        if (v == g.vertex_count()) {
            best = std::max(best, depth);
            return;
        }
        rec(v + 1, depth);  // leave v uncovered
        for (EdgeId e : g.incident(v)) {
            VertexId u = g.other_end(e, v);
            if (covered[u]) continue;
            covered[v] = covered[u] = 1;
            rec(v + 1, depth + 1);
            covered[v] = covered[u] = 0;
        }
    };
    rec(0, 0);
    return best;
}

std::optional<Matching> min_weight_perfect(const Graph& g) {
    require(g.vertex_count() <= 20, "oracle: graph too large for exhaustive check");
    int skips = g.vertex_count() % 2;  // almost perfect on odd order
    Search s(g, skips, false);
    s.run(0, skips);
    if (!s.best_weight) return std::nullopt;
    return Matching::of(g, s.best_edges);
}

Matching max_weight_matching(const Graph& g) {
    require(g.vertex_count() <= 16, "oracle: graph too large for exhaustive check");
    Search s(g, g.vertex_count(), true);
    s.run(0, g.vertex_count());
    return Matching::of(g, s.best_edges);
}

bool has_perfect_matching(const CompactGraph& g) {
    if (g.n % 2 != 0) return false;
    auto adj = adjacency_masks(g);
    Mask all = g.n == 0 ? 0 : (Mask{1} << g.n) - 1;
    return perfect_rec(adj, 0, all);
}

bool is_uniformly_almost_matchable(const CompactGraph& g) {
    if (g.n % 2 == 0 && g.n > 0) return false;  // G - v has odd order
    if (g.n == 0) return true;
    auto adj = adjacency_masks(g);
    Mask all = (Mask{1} << g.n) - 1;
    for (int v = 0; v < g.n; ++v) {
        if (!perfect_rec(adj, Mask{1} << v, all)) return false;
    }
    return true;
}

bool is_factor_critical(const CompactGraph& g) {
    return is_uniformly_almost_matchable(g) && !has_perfect_matching(g);
}

CompactGraph to_compact(const Graph& g) {
    CompactGraph c;
    c.n = g.vertex_count();
    c.edges.reserve(g.edge_count());
    for (const Graph::Edge& e : g.edges()) c.edges.emplace_back(e.u, e.v);
    return c;
}

bool has_perfect_matching(const Graph& g) { return has_perfect_matching(to_compact(g)); }
bool is_uniformly_almost_matchable(const Graph& g) {
    return is_uniformly_almost_matchable(to_compact(g));
}
bool is_factor_critical(const Graph& g) { return is_factor_critical(to_compact(g)); }

std::vector<bool> missed_by_some_maximum(const Graph& g) {
    int best = max_matching_size(g);
    std::vector<bool> missed(g.vertex_count(), false);
    std::vector<char> covered(g.vertex_count(), 0);
    std::function<void(VertexId, int)> rec = [&](VertexId v, int depth) {
        while (v < g.vertex_count() && covered[v]) ++v;
        if (v == g.vertex_count()) {
            if (depth == best) {
                for (VertexId x = 0; x < g.vertex_count(); ++x)
                    if (covered[x] == 2) missed[x] = true;
            }
            return;
        }
        covered[v] = 2;  // deliberately uncovered
        rec(v + 1, depth);
        covered[v] = 0;
        for (EdgeId e : g.incident(v)) {
            VertexId u = g.other_end(e, v);
            if (covered[u]) continue;
            covered[v] = covered[u] = 1;
            rec(v + 1, depth + 1);
            covered[v] = covered[u] = 0;
        }
    };
    rec(0, 0);
    return missed;
}

}  // namespace strongmatch::oracle
