#include "strongmatch/primal_dual.hpp"

#include <algorithm>
#include <functional>

#include "strongmatch/blossom.hpp"
#include "strongmatch/oracle.hpp"

namespace strongmatch::primal_dual {

namespace {

std::string describe_edge(const Graph& g, EdgeId e) {
    return g.name(g.edge(e).u) + "-" + g.name(g.edge(e).v) + "#" + std::to_string(e);
}

// Perfect matching of the view minus one vertex, as host edges. The skipped
// vertex is kept as an isolated vertex so indices stay aligned.
std::vector<EdgeId> near_perfect_of_view(const ContractedView& h, int skip) {
    CompactGraph c;
    c.n = h.vertex_count();
    for (const ContractedView::VEdge& e : h.edges())
        if (e.a != skip && e.b != skip) c.edges.emplace_back(e.a, e.b);
    auto mate = max_cardinality_mates(c);
    detail::ensure(mate[skip] == -1, "skipped vertex got matched");
    for (int x = 0; x < c.n; ++x)
        detail::ensure(x == skip || mate[x] != -1,
                       "interior view is not almost matchable around the chosen vertex");
    return h.realize(mate);
}

}  // namespace

Labeling label_view(const ContractedView& view, const std::vector<EdgeId>& matching) {
    auto mates = view.view_mates(matching);
    BlossomMatcher engine(view.compact(), mates);
    Labeling lab;
    lab.even = engine.even_reachable();  // throws when the matching is not maximum
    lab.odd.assign(view.vertex_count(), false);
    for (int x = 0; x < view.vertex_count(); ++x) {
        if (mates[x] == -1) {
            lab.unmatched.push_back(x);
        } else if (lab.even[x]) {
            // An even path into a covered vertex arrives along its matching
            // edge, so the mate is odd-reachable; uncovered vertices are
            // never odd-reachable while the matching is maximum.
            lab.odd[mates[x]] = true;
        }
    }
    for (int x : lab.unmatched)
        detail::ensure(lab.even[x], "uncovered vertex missing the trivial even label");
    for (const ContractedView::VEdge& e : view.edges()) {
        if (lab.even[e.a]) detail::ensure(lab.even[e.b] || lab.odd[e.b], "label gap at neighbor");
        if (lab.even[e.b]) detail::ensure(lab.even[e.a] || lab.odd[e.a], "label gap at neighbor");
    }
    return lab;
}

Procedure::Procedure(const Graph& g, SolveOptions options)
    : g_(g), options_(options), fam_(g.vertex_count()) {
    require(g.is_complete(), "the procedure requires a complete graph");
    for (const Graph::Edge& e : g.edges())
        require(e.weight.is_integer() && e.weight.sign() > 0,
                "the procedure requires positive integer weights; normalize first");
    auto max_w = g.max_weight();
    step_cap_ = max_w ? max_w->num() : mpz_class(0);
    never_matched_.assign(g.vertex_count(), 1);

    rebuild_views();
    BlossomMatcher engine(view_.compact());
    engine.maximize();
    matching_ = view_.realize(engine.mate());
    update_never_matched();
    if (options_.audit) {
        audit_state();
        audit_energy_law();
    }
}

void Procedure::rebuild_views() {
    tight_ = tight_edges(g_, fam_).mask;
    view_ = ContractedView::of_family(g_, fam_, tight_);
}

bool Procedure::finished() const {
    auto mates = view_.view_mates(matching_);
    int uncovered = 0;
    for (int x = 0; x < view_.vertex_count(); ++x)
        if (mates[x] == -1) ++uncovered;
    return uncovered <= 1;
}

Labeling Procedure::label() const { return label_view(view_, matching_); }

std::vector<std::vector<int>> Procedure::blossom_components(const Labeling& lab) const {
    int n = view_.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const ContractedView::VEdge& e : view_.edges()) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }

    auto collect = [&](const std::function<bool(int)>& keep) {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(n, 0);
        for (int s = 0; s < n; ++s) {
            if (!keep(s) || seen[s]) continue;
            std::vector<int> comp, stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int u : adj[v]) {
                    if (keep(u) && !seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        std::sort(comps.begin(), comps.end());
        return comps;
    };

    // Route one: components of the even-labeled induced subgraph.
    auto by_even = collect([&](int v) { return static_cast<bool>(lab.even[v]); });

    // Route two: components of the view minus odd-only vertices, kept when
    // they contain an even label. Both computations must agree.
    auto survives = [&](int v) { return lab.even[v] || !lab.odd[v]; };
    auto route_two_all = collect(survives);
    std::vector<std::vector<int>> route_two;
    for (auto& comp : route_two_all) {
        bool meets_even = std::any_of(comp.begin(), comp.end(),
                                      [&](int v) { return static_cast<bool>(lab.even[v]); });
        if (meets_even) route_two.push_back(comp);
    }
    detail::ensure(by_even == route_two, "component routes disagree");
    return by_even;
}

void Procedure::audit_components(const Labeling& lab,
                                 const std::vector<std::vector<int>>& comps) const {
    auto mates = view_.view_mates(matching_);
    std::unordered_map<EdgeId, std::pair<int, int>> view_ends;
    for (const ContractedView::VEdge& e : view_.edges()) view_ends[e.host] = {e.a, e.b};

    for (const auto& comp : comps) {
        std::vector<int> local(view_.vertex_count(), -1);
        for (size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
        for (int v : comp) detail::ensure(lab.even[v], "component member lacks the even label");

        // Uniform almost matchability of the induced view subgraph.
        CompactGraph sub;
        sub.n = static_cast<int>(comp.size());
        for (const ContractedView::VEdge& e : view_.edges()) {
            if (local[e.a] != -1 && local[e.b] != -1)
                sub.edges.emplace_back(local[e.a], local[e.b]);
        }
        detail::ensure(oracle::is_uniformly_almost_matchable(sub),
                       "component is not uniformly almost matchable");
        if (options_.stats) {
            ++options_.stats->components_audited;
            ++options_.stats->uam_checks;
        }

        // Boundary degree of the matching: one edge leaves the component
        // unless it holds an uncovered vertex, in which case none does.
        int crossing = 0;
        for (EdgeId e : matching_) {
            auto [a, b] = view_ends.at(e);
            if ((local[a] != -1) != (local[b] != -1)) ++crossing;
        }
        bool holds_uncovered = std::any_of(comp.begin(), comp.end(),
                                           [&](int v) { return mates[v] == -1; });
        detail::ensure(crossing == (holds_uncovered ? 0 : 1),
                       "matching boundary degree law violated on a component");

        // Exactly one member reaches every other member by an even
        // alternating path inside the component.
        if (comp.size() <= 12) {
            std::vector<std::vector<int>> un_adj(comp.size());
            for (const ContractedView::VEdge& e : view_.edges()) {
                if (local[e.a] == -1 || local[e.b] == -1) continue;
                bool in_m = std::binary_search(matching_.begin(), matching_.end(), e.host);
                if (!in_m) {
                    un_adj[local[e.a]].push_back(local[e.b]);
                    un_adj[local[e.b]].push_back(local[e.a]);
                }
            }
            std::vector<int> local_mate(comp.size(), -1);
            for (size_t i = 0; i < comp.size(); ++i) {
                int mv = mates[comp[i]];
                if (mv != -1 && local[mv] != -1) local_mate[i] = local[mv];
            }
            int dominators = 0;
            for (size_t start = 0; start < comp.size(); ++start) {
                std::vector<char> reached_even(comp.size(), 0), visited(comp.size(), 0);
                std::function<void(int, bool)> dfs = [&](int v, bool at_even) {
                    if (at_even) reached_even[v] = 1;
                    if (at_even) {
                        for (int u : un_adj[v]) {
                            if (visited[u]) continue;
                            visited[u] = 1;
                            dfs(u, false);
                            visited[u] = 0;
                        }
                    } else if (local_mate[v] != -1 && !visited[local_mate[v]]) {
                        int u = local_mate[v];
                        visited[u] = 1;
                        dfs(u, true);
                        visited[u] = 0;
                    }
                };
                visited[start] = 1;
                dfs(static_cast<int>(start), true);
                if (std::all_of(reached_even.begin(), reached_even.end(),
                                [](char c) { return c != 0; }))
                    ++dominators;
            }
            detail::ensure(dominators == 1, "component lacks a unique dominating vertex");
            if (options_.stats) ++options_.stats->dominating_vertex_checks;
        }
    }
}

void Procedure::audit_state() const {
    fam_.check_structure();
    for (SetId u : fam_.alive_sets()) {
        if (fam_.flatten_size(u) >= 3)
            detail::ensure(fam_.potential(u).sign() >= 0,
                           "negative potential on a set spanning >= 3 vertices");
    }
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
        HalfInt sum = fam_.boundary_potential(g_, e);
        detail::ensure(sum.to_rational() <= g_.edge(e).weight,
                       "oversaturated edge " + describe_edge(g_, e));
        // Independent recomputation of the boundary sum, set by set.
        HalfInt brute;
        for (SetId u : fam_.alive_sets()) {
            auto flat = fam_.flatten(u);
            bool has_u = std::binary_search(flat.begin(), flat.end(), g_.edge(e).u);
            bool has_v = std::binary_search(flat.begin(), flat.end(), g_.edge(e).v);
            if (has_u != has_v) brute += fam_.potential(u);
        }
        detail::ensure(brute == sum, "boundary potential disagrees with brute-force sum");
    }
    // Interior almost-matchability and tight-connectivity of every set.
    for (SetId u : fam_.alive_sets()) {
        if (!fam_.is_singleton(u)) {
            ContractedView h = ContractedView::of_set(g_, fam_, u, tight_);
            detail::ensure(oracle::is_uniformly_almost_matchable(h.compact()),
                           "set interior is not uniformly almost matchable");
            if (options_.stats) ++options_.stats->uam_checks;
        }
        auto flat = fam_.flatten(u);
        if (flat.size() > 1) {
            std::vector<char> inside(g_.vertex_count(), 0), seen(g_.vertex_count(), 0);
            for (VertexId v : flat) inside[v] = 1;
            std::vector<VertexId> stack{flat[0]};
            seen[flat[0]] = 1;
            int reached = 1;
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                for (EdgeId e : g_.incident(v)) {
                    if (!tight_[e]) continue;
                    VertexId w = g_.other_end(e, v);
                    if (inside[w] && !seen[w]) {
                        seen[w] = 1;
                        ++reached;
                        stack.push_back(w);
                    }
                }
            }
            detail::ensure(reached == static_cast<int>(flat.size()),
                           "tight subgraph disconnected inside a set");
        }
    }
}

void Procedure::audit_energy_law() const {
    auto mates = view_.view_mates(matching_);
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
        if (!never_matched_[v]) continue;
        detail::ensure(fam_.energy(v).doubled() == step_,
                       "energy law violated at " + g_.name(v));
        if (options_.stats) ++options_.stats->energy_law_checks;
    }
    // Each uncovered contracted vertex holds exactly one never-covered vertex.
    for (int x = 0; x < view_.vertex_count(); ++x) {
        if (mates[x] != -1) continue;
        int count = 0;
        for (VertexId v : fam_.flatten(view_.set_of(x)))
            if (never_matched_[v]) ++count;
        detail::ensure(count == 1, "uncovered set holds " + std::to_string(count) +
                                       " never-covered vertices");
    }
}

void Procedure::update_never_matched() {
    auto mates = view_.view_mates(matching_);
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
        if (!never_matched_[v]) continue;
        if (mates[view_.view_of_host_vertex(v)] != -1) never_matched_[v] = 0;
    }
}

void Procedure::advance() {
    detail::ensure(!finished(), "advance called after termination");
    detail::ensure(mpz_class(step_) < step_cap_,
                   "potential-update count exceeded the maximum edge weight");

    Labeling lab = label();
    auto comps = blossom_components(lab);
    if (options_.audit) audit_components(lab, comps);

    // Pre-step snapshots for the rebuild-time audits.
    ContractedView old_view = view_;
    auto old_mates = old_view.view_mates(matching_);
    std::vector<bool> old_tight = tight_;

    // Contract the components; each fresh set starts at potential 1/2.
    std::vector<SetId> fresh;
    for (const auto& comp : comps) {
        std::vector<SetId> members;
        members.reserve(comp.size());
        for (int x : comp) members.push_back(view_.set_of(x));
        SetId u = fam_.contract(members, HalfInt::half());
        detail::ensure(fam_.flatten_size(u) % 2 == 1, "contracted set spans an even vertex count");
        fresh.push_back(u);
    }

    // Maximal sets labeled odd-only lose 1/2.
    std::vector<SetId> s_side;
    for (int x = 0; x < old_view.vertex_count(); ++x) {
        if (lab.odd[x] && !lab.even[x]) s_side.push_back(old_view.set_of(x));
    }

    // Matching edges that still cross distinct maximal sets survive the
    // contraction; the boundary-degree law makes them a matching there.
    std::vector<EdgeId> surviving;
    for (EdgeId e : matching_) {
        if (fam_.maximal_of(g_.edge(e).u) != fam_.maximal_of(g_.edge(e).v))
            surviving.push_back(e);
    }

    if (options_.audit) {
        // Label transfer: on the contracted graph (under the old tight set),
        // the even labels are exactly the fresh sets and the odd labels
        // exactly the decremented ones.
        ContractedView star = ContractedView::of_family(g_, fam_, old_tight);
        Labeling star_lab = label_view(star, surviving);
        std::vector<char> is_fresh(fam_.node_count(), 0), is_s(fam_.node_count(), 0);
        for (SetId u : fresh) is_fresh[u] = 1;
        for (SetId u : s_side) is_s[u] = 1;
        for (int x = 0; x < star.vertex_count(); ++x) {
            detail::ensure(star_lab.even[x] == static_cast<bool>(is_fresh[star.set_of(x)]),
                           "even labels after contraction differ from the fresh sets");
            detail::ensure(star_lab.odd[x] == static_cast<bool>(is_s[star.set_of(x)]),
                           "odd labels after contraction differ from the decremented sets");
        }
    }

    for (SetId u : s_side) {
        detail::ensure(fam_.is_maximal(u), "decrement target is not maximal");
        fam_.add_to_potential(u, -HalfInt::half());
    }

    std::vector<SetId> dissolved;
    for (SetId u : s_side) {
        if (fam_.flatten_size(u) > 1 && fam_.potential(u).is_zero()) {
            fam_.dissolve(u);
            dissolved.push_back(u);
        }
        // Only sets spanning a single vertex may sit at potential <= 0.
        detail::ensure(fam_.flatten_size(u) == 1 || !fam_.alive(u) ||
                           fam_.potential(u).sign() > 0,
                       "multi-vertex set left alive at nonpositive potential");
    }

    rebuild_views();

    for (EdgeId e : surviving)
        detail::ensure(tight_[e], "surviving matching edge lost tightness");

    // Cover the children of each dissolved set: the child met by the
    // surviving edge keeps it, the remaining children get a perfect matching
    // of the dissolved set's interior view avoiding that child.
    std::vector<EdgeId> base = surviving;
    for (SetId u : dissolved) {
        auto flat = fam_.flatten(u);
        std::vector<char> inside(g_.vertex_count(), 0);
        for (VertexId v : flat) inside[v] = 1;
        EdgeId entry = -1;
        VertexId entry_vertex = -1;
        for (EdgeId e : surviving) {
            bool iu = inside[g_.edge(e).u], iv = inside[g_.edge(e).v];
            if (iu == iv) continue;
            detail::ensure(entry == -1, "two surviving edges enter a dissolved set");
            entry = e;
            entry_vertex = iu ? g_.edge(e).u : g_.edge(e).v;
        }
        detail::ensure(entry != -1, "dissolved set has no surviving matching edge");
        ContractedView h = ContractedView::of_set(g_, fam_, u, tight_);
        auto pm = near_perfect_of_view(h, h.view_of_host_vertex(entry_vertex));
        base.insert(base.end(), pm.begin(), pm.end());
    }

    // Extend to a maximum matching without uncovering anything just built.
    std::sort(base.begin(), base.end());
    auto base_mates = view_.view_mates(base);
    BlossomMatcher engine(view_.compact(), base_mates);
    engine.maximize();
    std::vector<EdgeId> next = view_.realize(engine.mate(), base);
    auto next_mates = view_.view_mates(next);
    for (int x = 0; x < view_.vertex_count(); ++x)
        detail::ensure(base_mates[x] == -1 || next_mates[x] != -1,
                       "rebuild uncovered a vertex");
    detail::ensure(static_cast<int>(next.size()) >= static_cast<int>(surviving.size()),
                   "rebuild lost matching edges");

    matching_ = std::move(next);
    ++step_;
    update_never_matched();

    if (options_.audit) {
        // Every uncovered contracted vertex is a fresh set with exactly one
        // element that was uncovered before the step.
        std::vector<char> is_fresh(fam_.node_count(), 0);
        for (SetId u : fresh) is_fresh[u] = 1;
        for (int x = 0; x < view_.vertex_count(); ++x) {
            if (next_mates[x] != -1) continue;
            SetId u = view_.set_of(x);
            detail::ensure(is_fresh[u], "uncovered vertex is not a fresh contraction");
            int uncovered_children = 0;
            for (SetId c : fam_.children(u)) {
                auto pos = old_view.view_of_set(c);
                detail::ensure(pos.has_value(), "fresh set child missing from the old view");
                if (old_mates[*pos] == -1) ++uncovered_children;
            }
            detail::ensure(uncovered_children == 1,
                           "fresh uncovered set does not hold exactly one uncovered element");
        }
        audit_state();
        audit_energy_law();
        if (options_.stats) ++options_.stats->steps;
    }
}

SolveResult Procedure::finish() {
    detail::ensure(finished(), "finish called before termination");
    auto mates = view_.view_mates(matching_);

    std::vector<EdgeId> result = matching_;
    std::optional<VertexId> exposed;

    // External anchor edge per covered contracted vertex.
    std::vector<EdgeId> anchor(view_.vertex_count(), -1);
    std::unordered_map<EdgeId, std::pair<int, int>> view_ends;
    for (const ContractedView::VEdge& e : view_.edges()) view_ends[e.host] = {e.a, e.b};
    for (EdgeId e : matching_) {
        auto [a, b] = view_ends.at(e);
        anchor[a] = anchor[b] = e;
    }

    // Recursively realize the interior of a set so that exactly the vertex
    // met by the anchor edge (or the chosen exposed vertex) stays distinct.
    std::function<void(SetId, EdgeId)> open_matched = [&](SetId u, EdgeId e) {
        if (fam_.is_singleton(u)) return;
        ContractedView h = ContractedView::of_set(g_, fam_, u, tight_);
        VertexId inner = h.view_of_host_vertex(g_.edge(e).u) != -1 ? g_.edge(e).u : g_.edge(e).v;
        int w = h.view_of_host_vertex(inner);
        detail::ensure(w != -1, "anchor edge does not meet the set");
        auto pm = near_perfect_of_view(h, w);
        result.insert(result.end(), pm.begin(), pm.end());
        open_matched(h.set_of(w), e);
        for (EdgeId f : pm) {
            int a = h.view_of_host_vertex(g_.edge(f).u);
            int b = h.view_of_host_vertex(g_.edge(f).v);
            open_matched(h.set_of(a), f);
            open_matched(h.set_of(b), f);
        }
    };
    std::function<void(SetId, VertexId)> open_exposed = [&](SetId u, VertexId x) {
        if (fam_.is_singleton(u)) return;
        ContractedView h = ContractedView::of_set(g_, fam_, u, tight_);
        int w = h.view_of_host_vertex(x);
        detail::ensure(w != -1, "exposed vertex lies outside the set");
        auto pm = near_perfect_of_view(h, w);
        result.insert(result.end(), pm.begin(), pm.end());
        open_exposed(h.set_of(w), x);
        for (EdgeId f : pm) {
            int a = h.view_of_host_vertex(g_.edge(f).u);
            int b = h.view_of_host_vertex(g_.edge(f).v);
            open_matched(h.set_of(a), f);
            open_matched(h.set_of(b), f);
        }
    };

    for (int x = 0; x < view_.vertex_count(); ++x) {
        SetId u = view_.set_of(x);
        if (mates[x] != -1) {
            open_matched(u, anchor[x]);
        } else {
            // Leave the maximum-energy vertex uncovered (ties: smallest id);
            // it is the one that was never covered, at energy steps/2.
            VertexId best = -1;
            HalfInt best_energy;
            for (VertexId v : fam_.flatten(u)) {
                HalfInt p = fam_.energy(v);
                if (best == -1 || p > best_energy) {
                    best = v;
                    best_energy = p;
                }
            }
            detail::ensure(best != -1 && best_energy.doubled() == step_,
                           "exposed vertex does not carry energy steps/2");
            exposed = best;
            open_exposed(u, best);
        }
    }

    Matching m = Matching::of(g_, std::move(result));
    detail::ensure(2 * m.size() >= g_.vertex_count() - 1,
                   "decontraction did not produce a (near-)perfect matching");
    SolveResult out{m, m.weight(g_), DualCertificate{fam_, step_, exposed}};
    return out;
}

SolveResult run(const Graph& g, const SolveOptions& options) {
    Procedure proc(g, options);
    while (!proc.finished()) proc.advance();
    SolveResult result = proc.finish();
    VerifyReport report = verify_certificate(g, result.matching, result.certificate);
    detail::ensure(report.ok(), "fresh certificate failed verification: " +
                                    (report.violations.empty()
                                         ? std::string()
                                         : report.violations.front().check + " at " +
                                               report.violations.front().subject));
    return result;
}

VerifyReport verify_certificate(const Graph& g, const Matching& m, const DualCertificate& cert) {
    VerifyReport rep;
    auto flag = [&rep](std::string check, std::string subject) {
        rep.violations.push_back({std::move(check), std::move(subject)});
    };

    const LaminarFamily& fam = cert.family;
    if (fam.vertex_count() != g.vertex_count()) {
        flag("family", "vertex count differs from the graph");
        return rep;
    }
    try {
        fam.check_structure();
    } catch (const std::logic_error& err) {
        flag("family-structure", err.what());
        return rep;
    }
    for (const Graph::Edge& e : g.edges()) {
        if (!e.weight.is_integer() || e.weight.sign() <= 0) {
            flag("weights", "non positive-integer weight present");
            return rep;
        }
    }

    // Coverage: perfect, or almost perfect exactly at the declared vertex.
    auto mates = m.mates(g);
    std::vector<VertexId> uncovered;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (mates[v] == -1) uncovered.push_back(v);
    if (cert.exposed) {
        if (uncovered.size() != 1 || uncovered[0] != *cert.exposed)
            flag("coverage", "declared exposed vertex does not match the matching");
    } else if (!uncovered.empty()) {
        flag("coverage", "matching is not perfect but no exposed vertex is declared");
    }

    for (EdgeId e : m.edges()) {
        if (fam.boundary_potential(g, e).to_rational() != g.edge(e).weight)
            flag("tightness", describe_edge(g, e));
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (fam.boundary_potential(g, e).to_rational() > g.edge(e).weight)
            flag("undersaturation", describe_edge(g, e));
    }
    for (SetId u : fam.alive_sets()) {
        if (fam.flatten_size(u) >= 3 && fam.potential(u).sign() < 0)
            flag("nonnegativity", "set " + std::to_string(u));
    }
    for (SetId u : fam.alive_sets()) {
        auto flat = fam.flatten(u);
        std::vector<char> inside(g.vertex_count(), 0);
        for (VertexId v : flat) inside[v] = 1;
        int crossing = 0;
        for (EdgeId e : m.edges())
            if (inside[g.edge(e).u] != inside[g.edge(e).v]) ++crossing;
        bool holds_exposed =
            cert.exposed && std::binary_search(flat.begin(), flat.end(), *cert.exposed);
        if (crossing > 1) {
            flag("boundary-degree", "set " + std::to_string(u) + " crossed " +
                                        std::to_string(crossing) + " times");
        } else if ((crossing == 0) != holds_exposed) {
            flag("boundary-degree", "set " + std::to_string(u));
        }
    }
    if (cert.exposed) {
        HalfInt p = fam.energy(*cert.exposed);
        if (p.doubled() != cert.steps) flag("energy", "exposed vertex energy is not steps/2");
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (fam.energy(v) > p) {
                flag("energy", "exposed vertex does not have maximum energy");
                break;
            }
        }
    }
    return rep;
}

}  // namespace strongmatch::primal_dual
