// Command-line front end: solve / check / decompose / verify / counterexample
// over the edge-list and JSON formats, plus hidden oracle/gen helpers.
// JSON results go to stdout, diagnostics to stderr.
// Exit codes: 0 success/certified, 1 refuted or witness emitted, 2 usage or
// input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "strongmatch/alternating.hpp"
#include "strongmatch/counterexample.hpp"
#include "strongmatch/gallai.hpp"
#include "strongmatch/io.hpp"
#include "strongmatch/oracle.hpp"
#include "strongmatch/primal_dual.hpp"
#include "strongmatch/reduction.hpp"

namespace {

using nlohmann::json;
using namespace strongmatch;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return json::parse(in);
}

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

long counterexample_edge_budget() {
    if (const char* env = std::getenv("STRONGMATCH_EDGE_BUDGET")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return v;
        std::cerr << "ignoring invalid STRONGMATCH_EDGE_BUDGET\n";
    }
    return counterexample::kDefaultEdgeBudget;
}

int run_solve(const std::string& graph_file, const std::string& objective) {
    Graph g = io::read_graph_file(graph_file);
    if (objective == "min-perfect") {
        if (!g.is_complete())
            throw std::invalid_argument(
                "min-perfect requires a complete graph; use --objective max for general graphs");
        NormalizedGraph norm = normalize_weights(g);
        primal_dual::SolveResult res = primal_dual::run(norm.graph);
        json out = io::certificate_to_json(g, res.matching, res.certificate, norm.scale,
                                           norm.shift, res.matching.weight(g));
        out["objective"] = "min-perfect";
        emit(out);
        return 0;
    }
    if (objective == "max") {
        reduction::MaxWeightSolve mw = reduction::strongly_w_maximal(g);
        json out;
        out["objective"] = "max";
        out["matching"] = io::matching_to_json(g, mw.matching);
        out["weight"] = mw.weight.str();
        out["steps"] = mw.inner.certificate.steps;
        if (mw.inner.certificate.exposed)
            out["exposed"] = g.name(*mw.inner.certificate.exposed);
        out["normalization"] = {{"scale", mw.normalized.scale.str()},
                                {"shift", mw.normalized.shift.str()}};
        out["certificate"] = {{"family", io::family_to_json(g, mw.inner.certificate.family)}};
        // The completed-instance matching, reconstructible deterministically:
        // either an input edge (by index) or a zero-weight fill pair.
        json inner = json::array();
        for (EdgeId e : mw.inner.matching.edges()) {
            EdgeId pos = mw.completed.origin[e];
            if (pos == -1) {
                inner.push_back({{"fill", {g.name(mw.completed.graph.edge(e).u),
                                           g.name(mw.completed.graph.edge(e).v)}}});
            } else {
                inner.push_back({{"edge", mw.positive_origin[pos]}});
            }
        }
        out["completed_matching"] = std::move(inner);
        emit(out);
        return 0;
    }
    throw std::invalid_argument("--objective must be min-perfect or max");
}

int run_check(const std::string& graph_file, const std::string& matching_file, bool weighted) {
    Graph g = io::read_graph_file(graph_file);
    Matching m = io::matching_from_json(g, read_json_file(matching_file));
    if (!weighted) {
        auto path = alternating::find_finitely_improving_path(g, m);
        if (!path) {
            emit({{"certified", true}});
            return 0;
        }
        json verts = json::array();
        for (VertexId v : path->vertices) verts.push_back(g.name(v));
        emit({{"certified", false}, {"improving_path", verts}});
        return 1;
    }
    auto imp = alternating::find_weighted_improvement(g, m);
    if (!imp) {
        emit({{"certified", true}});
        return 0;
    }
    auto pairs = [&g](const std::vector<EdgeId>& edges) {
        json arr = json::array();
        for (EdgeId e : edges) arr.push_back({g.name(g.edge(e).u), g.name(g.edge(e).v)});
        return arr;
    };
    emit({{"certified", false},
          {"gain", imp->gain.str()},
          {"remove", pairs(imp->removed)},
          {"add", pairs(imp->added)},
          {"improved", io::matching_to_json(g, imp->improved)}});
    return 1;
}

int run_decompose(const std::string& graph_file) {
    Graph g = io::read_graph_file(graph_file);
    gallai::GEDecomposition dec = gallai::gallai_edmonds(g);

    json comps = json::array();
    json flags = json::array();
    for (const auto& comp : dec.components) {
        json names = json::array();
        for (VertexId v : comp) names.push_back(g.name(v));
        comps.push_back(names);
        flags.push_back(true);
    }
    // Components of the perfectly matchable remainder, flagged false.
    std::vector<char> in_rest(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (VertexId v : dec.rest) in_rest[v] = 1;
    for (VertexId s : dec.rest) {
        if (seen[s]) continue;
        std::vector<VertexId> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (EdgeId e : g.incident(v)) {
                VertexId u = g.other_end(e, v);
                if (in_rest[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        json names = json::array();
        for (VertexId v : comp) names.push_back(g.name(v));
        comps.push_back(names);
        flags.push_back(false);
    }

    json t = json::array(), rest = json::array();
    for (VertexId v : dec.t) t.push_back(g.name(v));
    for (VertexId v : dec.rest) rest.push_back(g.name(v));
    json f_map = json::object(), v_of_t = json::object();
    for (size_t i = 0; i < dec.t.size(); ++i) {
        f_map[g.name(dec.t[i])] = dec.f_map[i];
        v_of_t[g.name(dec.t[i])] = g.name(dec.v_of_t[i]);
    }
    emit({{"T", t},
          {"components", comps},
          {"factor_critical", flags},
          {"f_map", f_map},
          {"v_of_t", v_of_t},
          {"rest", rest}});
    return 0;
}

int run_verify(const std::string& graph_file, const std::string& cert_file) {
    Graph g = io::read_graph_file(graph_file);
    json payload = read_json_file(cert_file);
    std::string objective = payload.value("objective", "min-perfect");

    primal_dual::VerifyReport report;
    auto flag = [&report](const std::string& check, const std::string& subject) {
        report.violations.push_back({check, subject});
    };

    if (objective == "min-perfect") {
        io::ParsedCertificate parsed = io::certificate_from_json(g, payload);
        NormalizedGraph norm = normalize_weights(g);
        if (norm.scale != parsed.scale || norm.shift != parsed.shift)
            flag("normalization", "recorded scale/shift differ from the graph's");
        if (payload.contains("weight") &&
            Rational::parse(payload.at("weight").get<std::string>()) !=
                parsed.matching.weight(g))
            flag("weight", "declared weight differs from the matching weight");
        auto inner = primal_dual::verify_certificate(norm.graph, parsed.matching,
                                                     parsed.certificate);
        report.violations.insert(report.violations.end(), inner.violations.begin(),
                                 inner.violations.end());
    } else if (objective == "max") {
        // Rebuild the deterministic pipeline and verify the inner solve.
        Graph positive;
        std::vector<EdgeId> positive_origin;
        for (VertexId v = 0; v < g.vertex_count(); ++v) positive.add_vertex(g.name(v));
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).weight.sign() > 0) {
                positive.add_edge(g.edge(e).u, g.edge(e).v, g.edge(e).weight);
                positive_origin.push_back(e);
            }
        }
        reduction::CompletedNegated completed = reduction::complete_and_negate(positive);
        NormalizedGraph norm = normalize_weights(completed.graph);
        if (Rational::parse(payload.at("normalization").at("scale").get<std::string>()) !=
                norm.scale ||
            Rational::parse(payload.at("normalization").at("shift").get<std::string>()) !=
                norm.shift)
            flag("normalization", "recorded scale/shift differ from the rebuilt instance");

        // Inner matching: input edges by index, fill edges by name pair.
        std::vector<EdgeId> inner_edges;
        std::vector<EdgeId> original_to_completed(g.edge_count(), -1);
        for (size_t pos = 0; pos < positive_origin.size(); ++pos)
            original_to_completed[positive_origin[pos]] = static_cast<EdgeId>(pos);
        for (const auto& item : payload.at("completed_matching")) {
            if (item.contains("edge")) {
                EdgeId orig = item.at("edge").get<EdgeId>();
                require(orig >= 0 && orig < g.edge_count() &&
                            original_to_completed[orig] != -1,
                        "completed matching references a non-positive input edge");
                inner_edges.push_back(original_to_completed[orig]);
            } else {
                auto names = item.at("fill");
                auto a = positive.find_vertex(names[0].get<std::string>());
                auto b = positive.find_vertex(names[1].get<std::string>());
                require(a.has_value() && b.has_value(), "unknown vertex in completed matching");
                EdgeId found = -1;
                for (EdgeId e = 0; e < completed.graph.edge_count(); ++e) {
                    if (completed.origin[e] != -1) continue;
                    const auto& ed = completed.graph.edge(e);
                    if ((ed.u == *a && ed.v == *b) || (ed.u == *b && ed.v == *a)) found = e;
                }
                require(found != -1, "no fill edge between the recorded pair");
                inner_edges.push_back(found);
            }
        }
        Matching inner = Matching::of(norm.graph, inner_edges);
        primal_dual::DualCertificate cert{
            io::family_from_json(g, payload.at("certificate").at("family")),
            payload.at("steps").get<int>(), std::nullopt};
        if (payload.contains("exposed")) {
            auto v = g.find_vertex(payload.at("exposed").get<std::string>());
            require(v.has_value(), "unknown exposed vertex");
            cert.exposed = *v;
        }
        auto inner_report = primal_dual::verify_certificate(norm.graph, inner, cert);
        report.violations.insert(report.violations.end(), inner_report.violations.begin(),
                                 inner_report.violations.end());

        // Projection: the declared matching must be the surviving input edges.
        Matching declared = io::matching_from_json(g, payload.at("matching"));
        std::vector<EdgeId> projected;
        for (EdgeId e : inner.edges()) {
            if (completed.origin[e] != -1)
                projected.push_back(positive_origin[completed.origin[e]]);
        }
        if (!(Matching::of(g, projected) == declared))
            flag("projection", "declared matching is not the surviving part of the inner one");
        if (payload.contains("weight") &&
            Rational::parse(payload.at("weight").get<std::string>()) != declared.weight(g))
            flag("weight", "declared weight differs from the matching weight");
    } else {
        flag("objective", "unknown objective: " + objective);
    }

    if (report.ok()) {
        emit({{"ok", true}});
        return 0;
    }
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"check", v.check}, {"subject", v.subject}});
    emit({{"ok", false}, {"violations", violations}});
    return 1;
}

json improvement_segments(const std::vector<counterexample::PrefixEdge>& edges) {
    // Edges of one switch form contiguous same-parity runs per path; encode
    // them as {path, first, last, step} runs.
    json runs = json::array();
    size_t i = 0;
    while (i < edges.size()) {
        size_t j = i;
        while (j + 1 < edges.size() && edges[j + 1].path == edges[i].path &&
               edges[j + 1].pos == edges[j].pos + 2)
            ++j;
        runs.push_back({{"path", edges[i].path},
                        {"first", edges[i].pos},
                        {"last", edges[j].pos},
                        {"step", 2}});
        i = j + 1;
    }
    return runs;
}

int run_counterexample(int depth, int truncation) {
    counterexample::Prefix prefix =
        counterexample::build_prefix(depth, truncation, counterexample_edge_budget());
    counterexample::Report rep = counterexample::verify_inequalities(prefix);
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(
            {{"id", c.id}, {"instance", c.instance}, {"holds", c.holds}, {"bounds", c.bounds}});
    json lengths = json::array(), light = json::array();
    for (int p = 1; p <= prefix.depth(); ++p) {
        lengths.push_back(prefix.n(p).get_str());
        light.push_back(prefix.light_odd_count(p).get_str());
    }
    emit({{"depth", rep.depth},
          {"truncation", rep.truncation},
          {"preface", rep.preface},
          {"path_lengths", lengths},
          {"total_edges", prefix.total_edges()},
          {"light_odd_counts", light},
          {"positions_checked", rep.positions_checked},
          {"checks", checks},
          {"all_hold", rep.all_hold()}});
    return rep.all_hold() ? 0 : 1;
}

int run_counterexample_improve(int depth, int truncation, const std::string& matching_file,
                               int use_odd) {
    counterexample::Prefix prefix =
        counterexample::build_prefix(depth, truncation, counterexample_edge_budget());
    counterexample::PrefixMatching m = [&] {
        if (use_odd > 0) return counterexample::odd_edges_matching(prefix, use_odd);
        json j = read_json_file(matching_file);
        require(j.is_array(), "matching JSON must be an array of name pairs");
        std::vector<counterexample::PrefixEdge> edges;
        // Vertex names are "x", "y", or "p<path>_<index>"; y is encoded as
        // index -1 until the path is known.
        auto parse_vertex = [&](const std::string& name) -> std::pair<int, long> {
            if (name == "x") return {0, 0};
            if (name == "y") return {0, -1};
            auto sep = name.find('_');
            require(name.size() > 2 && name[0] == 'p' && sep != std::string::npos,
                    "unknown vertex: " + name);
            int path = std::stoi(name.substr(1, sep - 1));
            long idx = std::stol(name.substr(sep + 1));
            require(path >= 1 && path <= prefix.depth(), "unknown vertex: " + name);
            require(idx >= 1 && idx < prefix.edges_on_path(path), "unknown vertex: " + name);
            return {path, idx};
        };
        for (const auto& item : j) {
            auto [pa, ia] = parse_vertex(item[0].get<std::string>());
            auto [pb, ib] = parse_vertex(item[1].get<std::string>());
            int path = pa != 0 ? pa : pb;
            require(path != 0, "x-y is not an edge of the prefix");
            require(pa == 0 || pb == 0 || pa == pb, "pair spans two paths");
            if (pa == 0) ia = ia == -1 ? prefix.edges_on_path(path) : 0;
            if (pb == 0) ib = ib == -1 ? prefix.edges_on_path(path) : 0;
            require(ia - ib == 1 || ib - ia == 1, "pair is not an edge: nonadjacent positions");
            edges.push_back({path, std::min(ia, ib)});
        }
        return counterexample::PrefixMatching::of(prefix, edges);
    }();

    counterexample::Improvement imp = counterexample::demonstrate_improvement(prefix, m);
    json out{{"kind", counterexample::kind_name(imp.kind)}, {"note", imp.note}};
    bool is_switch = imp.kind == counterexample::Improvement::Kind::subpath_switch ||
                     imp.kind == counterexample::Improvement::Kind::cross_path_switch ||
                     imp.kind == counterexample::Improvement::Kind::path_swap;
    if (is_switch) {
        out["gain"] = imp.gain.str();
        out["gain_bounds"] = {imp.gain_bounds.lo.str(), imp.gain_bounds.hi.str()};
        out["remove"] = improvement_segments(imp.remove);
        out["add"] = improvement_segments(imp.add);
    }
    emit(out);
    return is_switch ? 1 : 0;
}

int run_oracle(const std::string& graph_file, const std::string& what) {
    Graph g = io::read_graph_file(graph_file);
    if (what == "count") {
        emit({{"matchings", oracle::count_matchings(g)}});
    } else if (what == "max-size") {
        emit({{"max_matching_size", oracle::max_matching_size(g)}});
    } else if (what == "min-perfect") {
        auto m = oracle::min_weight_perfect(g);
        if (!m) throw std::runtime_error("no perfect (or almost perfect) matching exists");
        emit({{"matching", io::matching_to_json(g, *m)}, {"weight", m->weight(g).str()}});
    } else if (what == "max-weight") {
        Matching m = oracle::max_weight_matching(g);
        emit({{"matching", io::matching_to_json(g, m)}, {"weight", m.weight(g).str()}});
    } else {
        throw std::invalid_argument("unknown oracle query: " + what);
    }
    return 0;
}

int run_gen(int n, long max_weight, unsigned seed) {
    require(n >= 1 && max_weight >= 1, "gen needs n >= 1 and max weight >= 1");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> w(1, max_weight);
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j, Rational(w(rng)));
    std::cout << io::write_graph(g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted matching engine with exact rational arithmetic"};
    app.require_subcommand(1);
    unsigned seed = 0;
    app.add_option("--seed", seed, "seed for randomized generation");

    std::string graph_file, matching_file, cert_file, objective;
    bool weighted = false;

    auto* solve = app.add_subcommand("solve", "minimum perfect / maximum weight matching");
    solve->add_option("--graph", graph_file, "edge-list file")->required();
    solve->add_option("--objective", objective, "min-perfect or max")->required();

    auto* check = app.add_subcommand("check", "certify a matching, or emit an improvement");
    check->add_option("--graph", graph_file, "edge-list file")->required();
    check->add_option("--matching", matching_file, "matching JSON file")->required();
    check->add_flag("--weighted", weighted, "weighted certification");

    auto* decompose = app.add_subcommand("decompose", "structure of maximum matchings");
    decompose->add_option("--graph", graph_file, "edge-list file")->required();

    auto* verify = app.add_subcommand("verify", "re-check a solve certificate");
    verify->add_option("--graph", graph_file, "edge-list file")->required();
    verify->add_option("--certificate", cert_file, "solve output JSON")->required();

    int depth = 3, truncation = -1, use_odd = 0;
    auto* cx = app.add_subcommand("counterexample",
                                  "build the irrational-weight path family and verify it");
    cx->add_option("--depth", depth, "number of paths to build")->check(CLI::PositiveNumber);
    cx->add_option("--truncation", truncation, "interval truncation (default depth+4)");
    auto* improve = cx->add_subcommand("improve", "improving switch for a matching");
    improve->add_option("--matching", matching_file, "matching JSON (prefix vertex names)");
    improve->add_option("--use-odd", use_odd,
                        "use the perfect matching with the odd edges of this path");

    std::string oracle_what;
    auto* orc = app.add_subcommand("oracle", "brute-force ground truth (debugging)");
    orc->group("");  // hidden
    orc->add_option("--graph", graph_file)->required();
    orc->add_option("--query", oracle_what, "count | max-size | min-perfect | max-weight")
        ->required();

    int gen_n = 6;
    long gen_w = 10;
    auto* gen = app.add_subcommand("gen", "random complete instance (debugging)");
    gen->group("");  // hidden
    gen->add_option("--complete", gen_n, "vertex count");
    gen->add_option("--max-weight", gen_w, "weights drawn from 1..W");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) return run_solve(graph_file, objective);
        if (*check) return run_check(graph_file, matching_file, weighted);
        if (*decompose) return run_decompose(graph_file);
        if (*verify) return run_verify(graph_file, cert_file);
        if (*cx) {
            if (*improve) {
                require(!matching_file.empty() || use_odd > 0,
                        "improve needs --matching or --use-odd");
                return run_counterexample_improve(depth, truncation, matching_file, use_odd);
            }
            return run_counterexample(depth, truncation);
        }
        if (*orc) return run_oracle(graph_file, oracle_what);
        if (*gen) return run_gen(gen_n, gen_w, seed);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 2;
}
