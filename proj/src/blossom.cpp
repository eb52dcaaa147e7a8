#include "strongmatch/blossom.hpp"

#include <algorithm>
#include <queue>

namespace strongmatch {

BlossomMatcher::BlossomMatcher(const CompactGraph& g, std::vector<int> initial_mate)
    : n_(g.n), adj_(g.n) {
    for (auto [u, v] : g.edges) {
        require(u >= 0 && u < n_ && v >= 0 && v < n_, "edge endpoint out of range");
        detail::ensure(u != v, "self-loop in matching engine input");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    if (initial_mate.empty()) {
        mate_.assign(n_, -1);
    } else {
        require(static_cast<int>(initial_mate.size()) == n_, "mate vector size mismatch");
        mate_ = std::move(initial_mate);
        for (int v = 0; v < n_; ++v)
            detail::ensure(mate_[v] == -1 || mate_[mate_[v]] == v, "inconsistent mate vector");
    }
}

void BlossomMatcher::mark_path(int v, int b, int child) {
    while (base_[v] != b) {
        in_blossom_[base_[v]] = 1;
        in_blossom_[base_[mate_[v]]] = 1;
        parent_[v] = child;
        child = mate_[v];
        v = parent_[mate_[v]];
    }
}

int BlossomMatcher::lowest_common_base(int a, int b) {
    std::vector<char> seen(n_, 0);
    int cur = a;
    while (true) {
        cur = base_[cur];
        seen[cur] = 1;
        if (mate_[cur] == -1) break;  // reached the tree root
        cur = parent_[mate_[cur]];
    }
    cur = b;
    while (true) {
        cur = base_[cur];
        if (seen[cur]) return cur;
        detail::ensure(mate_[cur] != -1, "blossom base search left the tree");
        cur = parent_[mate_[cur]];
    }
}

int BlossomMatcher::find_path(const std::vector<int>& roots) {
    parent_.assign(n_, -1);
    outer_.assign(n_, 0);
    root_of_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;

    std::queue<int> q;
    for (int r : roots) {
        detail::ensure(mate_[r] == -1, "search root is covered");
        outer_[r] = 1;
        root_of_[r] = r;
        q.push(r);
    }

    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int to : adj_[v]) {
            if (base_[v] == base_[to] || mate_[v] == to) continue;
            if (outer_[to]) {
                // Two outer vertices in distinct trees would give an
                // augmenting path between their roots; callers only run
                // multi-root searches on maximum matchings.
                detail::ensure(root_of_[to] == root_of_[v],
                               "cross-tree contact: matching is not maximum");
                // Odd cycle within one tree: contract it.
                int cur_base = lowest_common_base(v, to);
                in_blossom_.assign(n_, 0);
                mark_path(v, cur_base, to);
                mark_path(to, cur_base, v);
                for (int i = 0; i < n_; ++i) {
                    if (in_blossom_[base_[i]]) {
                        base_[i] = cur_base;
                        if (!outer_[i]) {
                            outer_[i] = 1;
                            root_of_[i] = root_of_[v];
                            q.push(i);
                        }
                    }
                }
            } else if (parent_[to] == -1) {
                parent_[to] = v;
                root_of_[to] = root_of_[v];
                if (mate_[to] == -1) {
                    return to;  // augmenting path ends here
                }
                int w = mate_[to];
                outer_[w] = 1;
                root_of_[w] = root_of_[v];
                q.push(w);
            }
        }
    }
    return -1;
}

void BlossomMatcher::augment(int v) {
    while (v != -1) {
        int pv = parent_[v];
        int next = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = next;
    }
}

void BlossomMatcher::maximize() {
    for (int v = 0; v < n_; ++v) {
        if (mate_[v] != -1) continue;
        int end = find_path({v});
        if (end >= 0) augment(end);
    }
}

int BlossomMatcher::matched_pairs() const {
    int c = 0;
    for (int v = 0; v < n_; ++v)
        if (mate_[v] != -1) ++c;
    return c / 2;
}

std::vector<bool> BlossomMatcher::even_reachable() {
    std::vector<int> roots;
    for (int v = 0; v < n_; ++v)
        if (mate_[v] == -1) roots.push_back(v);
    int end = find_path(roots);
    detail::ensure(end == -1, "matching passed to even_reachable is not maximum");
    std::vector<bool> out(n_);
    for (int v = 0; v < n_; ++v) out[v] = outer_[v] != 0;
    return out;
}

std::vector<int> max_cardinality_mates(const CompactGraph& g, std::vector<int> initial_mate) {
    BlossomMatcher m(g, std::move(initial_mate));
    m.maximize();
    return m.mate();
}

}  // namespace strongmatch
