#include "strongmatch/alternating.hpp"

#include <algorithm>

namespace strongmatch::alternating {

namespace {

// Extends a partial alternating path whose next edge must (not) lie in M.
// Neighbors are tried in ascending vertex order so the first complete path
// is the lexicographically least continuation.
struct LexSearch {
    const Graph& g;
    const std::vector<VertexId>& mate;
    const std::vector<EdgeId>& mate_edge;
    const Matching& m;
    std::vector<char> visited;
    std::vector<VertexId> verts;
    std::vector<EdgeId> edges;

    bool extend(VertexId v, bool need_matched) {
        if (need_matched) {
            VertexId u = mate[v];
            if (u == -1 || visited[u]) return false;
            visited[u] = 1;
            verts.push_back(u);
            edges.push_back(mate_edge[v]);
            if (extend(u, false)) return true;
            visited[u] = 0;
            verts.pop_back();
            edges.pop_back();
            return false;
        }
        // Candidate unmatched edges, ordered by endpoint then edge id.
        std::vector<std::pair<VertexId, EdgeId>> cands;
        for (EdgeId e : g.incident(v)) {
            if (m.contains(e)) continue;
            VertexId u = g.other_end(e, v);
            if (!visited[u]) cands.emplace_back(u, e);
        }
        std::sort(cands.begin(), cands.end());
        for (auto [u, e] : cands) {
            if (visited[u]) continue;  // may repeat among parallel edges
            visited[u] = 1;
            verts.push_back(u);
            edges.push_back(e);
            if (mate[u] == -1) return true;  // ends uncovered on an unmatched edge
            if (extend(u, true)) return true;
            visited[u] = 0;
            verts.pop_back();
            edges.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<ImprovingPath> find_finitely_improving_path(const Graph& g, const Matching& m) {
    auto mate = m.mates(g);
    auto mate_edge = m.edge_at(g);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (mate[s] != -1) continue;
        LexSearch search{g, mate, mate_edge, m, std::vector<char>(g.vertex_count(), 0), {}, {}};
        search.visited[s] = 1;
        search.verts.push_back(s);
        if (search.extend(s, false)) {
            return ImprovingPath{std::move(search.verts), std::move(search.edges)};
        }
    }
    return std::nullopt;
}

namespace {

// Enumerates alternating switch structures with exact gains. A structure is
// a simple path whose two ends are switch-compatible (end edge in M, or end
// vertex uncovered), or an alternating cycle.
struct SwitchSearch {
    const Graph& g;
    const Matching& m;
    const std::vector<VertexId>& mate;
    std::vector<char> on_path;
    std::vector<VertexId> verts;
    std::vector<EdgeId> edges;
    Rational gain;          // w[added] - w[removed] for the current prefix
    bool first_in_m = false;

    std::optional<WeightedImprovement> result;

    bool start_ok(VertexId v, bool in_m) const { return in_m || mate[v] == -1; }

    void record(std::vector<EdgeId> switched) {
        std::vector<EdgeId> next(m.edges().begin(), m.edges().end());
        std::vector<EdgeId> removed, added;
        for (EdgeId e : switched) {
            if (m.contains(e)) {
                next.erase(std::find(next.begin(), next.end(), e));
                removed.push_back(e);
            } else {
                next.push_back(e);
                added.push_back(e);
            }
        }
        Matching improved = Matching::of(g, next);  // validates the switch
        // Re-evaluate the claimed gain from scratch.
        Rational check;
        for (EdgeId e : added) check += g.edge(e).weight;
        for (EdgeId e : removed) check -= g.edge(e).weight;
        detail::ensure(check == gain && check.sign() > 0, "improvement gain re-evaluation failed");
        result = WeightedImprovement{std::move(improved), check, std::move(removed), std::move(added)};
    }

    // True once an improvement has been recorded; unwinds the search.
    bool extend(bool next_in_m) {
        VertexId v = verts.back();
        for (EdgeId e : g.incident(v)) {
            if (m.contains(e) != next_in_m) continue;
            VertexId u = g.other_end(e, v);
            if (u == verts.front() && !edges.empty() && next_in_m != first_in_m) {
                // Closing an alternating cycle. Two parallel edges of
                // opposite membership form the shortest valid one.
                Rational total = gain + (next_in_m ? -g.edge(e).weight : g.edge(e).weight);
                if (total.sign() > 0) {
                    gain = total;
                    auto switched = edges;
                    switched.push_back(e);
                    record(std::move(switched));
                    return true;
                }
            }
            if (on_path[u]) continue;
            Rational total = gain + (next_in_m ? -g.edge(e).weight : g.edge(e).weight);
            on_path[u] = 1;
            verts.push_back(u);
            edges.push_back(e);
            Rational saved = gain;
            gain = total;
            bool end_ok = next_in_m || mate[u] == -1;
            if (end_ok && total.sign() > 0) {
                record(edges);
                return true;
            }
            if (extend(!next_in_m)) return true;
            gain = saved;
            on_path[u] = 0;
            verts.pop_back();
            edges.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<WeightedImprovement> find_weighted_improvement(const Graph& g, const Matching& m) {
    auto mate = m.mates(g);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        for (bool first_in_m : {false, true}) {
            SwitchSearch search{g, m, mate, std::vector<char>(g.vertex_count(), 0), {}, {},
                                Rational(0), first_in_m, std::nullopt};
            if (!search.start_ok(s, first_in_m)) continue;
            search.on_path[s] = 1;
            search.verts.push_back(s);
            if (search.extend(first_in_m)) return search.result;
        }
    }
    return std::nullopt;
}

PathClass classify_path(const Graph& g, const Matching& m, const std::vector<VertexId>& path) {
    if (path.empty()) return PathClass::not_alternating;
    for (VertexId v : path) require(v >= 0 && v < g.vertex_count(), "path vertex out of range");
    // Simple path: no repeated vertices.
    std::vector<VertexId> sorted = path;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return PathClass::not_alternating;

    auto mate = m.mates(g);
    if (path.size() >= 2) {
        // For each consecutive pair, which memberships does some edge offer?
        std::vector<bool> offers_matched(path.size() - 1), offers_unmatched(path.size() - 1);
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            offers_matched[i] = mate[path[i]] == path[i + 1];
            for (EdgeId e : g.incident(path[i])) {
                if (g.other_end(e, path[i]) == path[i + 1] && !m.contains(e))
                    offers_unmatched[i] = true;
            }
            if (!offers_matched[i] && !offers_unmatched[i]) return PathClass::not_alternating;
        }
        bool alternates = false;
        for (bool first : {false, true}) {
            bool ok = true;
            for (size_t i = 0; i < offers_matched.size(); ++i) {
                bool want = first == (i % 2 == 0);
                if (want ? !offers_matched[i] : !offers_unmatched[i]) {
                    ok = false;
                    break;
                }
            }
            if (ok) alternates = true;
        }
        if (!alternates) return PathClass::not_alternating;
    }

    bool front_covered = mate[path.front()] != -1;
    bool back_covered = mate[path.back()] != -1;
    if (path.size() == 1) return PathClass::neither;  // trivial path: switching is a no-op
    if (!front_covered && !back_covered) return PathClass::finitely_improving;
    if (front_covered != back_covered) return PathClass::indifferent;
    return PathClass::neither;
}

}  // namespace strongmatch::alternating
