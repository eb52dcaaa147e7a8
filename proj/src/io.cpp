#include "strongmatch/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace strongmatch::io {

namespace {

HalfInt half_from_rational(const Rational& r) {
    require(r.den() == 1 || r.den() == 2, "potential is not a half-integer: " + r.str());
    mpz_class doubled = r.num();
    if (r.den() == 1) doubled *= 2;
    return HalfInt::from_doubled(doubled);
}

}  // namespace

Graph read_graph(std::istream& in) {
    Graph g;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::string u, v, w;
        if (!(line >> u)) continue;  // blank or comment-only line
        if (!(line >> v >> w)) throw ParseError(line_no, "expected `u v weight`");
        std::string extra;
        if (line >> extra) throw ParseError(line_no, "trailing token: " + extra);
        if (u == v) throw ParseError(line_no, "self-loop at " + u);
        VertexId ui = g.find_vertex(u).value_or(-1);
        if (ui == -1) ui = g.add_vertex(u);
        VertexId vi = g.find_vertex(v).value_or(-1);
        if (vi == -1) vi = g.add_vertex(v);
        try {
            g.add_edge(ui, vi, Rational::parse(w));
        } catch (const std::invalid_argument& err) {
            throw ParseError(line_no, err.what());
        }
    }
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    for (const Graph::Edge& e : g.edges())
        out << g.name(e.u) << ' ' << g.name(e.v) << ' ' << e.weight.str() << '\n';
    return out.str();
}

nlohmann::json matching_to_json(const Graph& g, const Matching& m) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (EdgeId e : m.edges()) {
        std::string a = g.name(g.edge(e).u), b = g.name(g.edge(e).v);
        if (b < a) std::swap(a, b);
        pairs.emplace_back(std::move(a), std::move(b));
    }
    std::sort(pairs.begin(), pairs.end());
    nlohmann::json out = nlohmann::json::array();
    for (auto& [a, b] : pairs) out.push_back({a, b});
    return out;
}

Matching matching_from_json(const Graph& g, const nlohmann::json& j) {
    require(j.is_array(), "matching JSON must be an array of name pairs");
    std::vector<EdgeId> edges;
    for (const auto& item : j) {
        require(item.is_array() && item.size() == 2 && item[0].is_string() && item[1].is_string(),
                "matching entry must be a pair of vertex names");
        std::string a = item[0].get<std::string>(), b = item[1].get<std::string>();
        auto ai = g.find_vertex(a);
        auto bi = g.find_vertex(b);
        require(ai.has_value(), "unknown vertex in matching: " + a);
        require(bi.has_value(), "unknown vertex in matching: " + b);
        EdgeId best = -1;
        for (EdgeId e : g.incident(*ai)) {
            if (g.other_end(e, *ai) != *bi) continue;
            if (best == -1 || g.edge(e).weight > g.edge(best).weight) best = e;
        }
        require(best != -1, "matching pair " + a + "-" + b + " is not an edge");
        edges.push_back(best);
    }
    return Matching::of(g, std::move(edges));
}

namespace {

nlohmann::json set_to_json(const Graph& g, const LaminarFamily& fam, SetId u) {
    nlohmann::json out;
    out["potential"] = fam.potential(u).str();
    if (fam.is_singleton(u)) {
        out["vertex"] = g.name(*fam.base_vertex(u));
    } else {
        nlohmann::json members = nlohmann::json::array();
        for (SetId c : fam.children(u)) members.push_back(set_to_json(g, fam, c));
        out["members"] = std::move(members);
    }
    return out;
}

SetId set_from_json(const Graph& g, LaminarFamily& fam, const nlohmann::json& j) {
    require(j.is_object() && j.contains("potential"), "family set needs a potential");
    HalfInt pot = half_from_rational(Rational::parse(j.at("potential").get<std::string>()));
    if (j.contains("vertex")) {
        auto v = g.find_vertex(j.at("vertex").get<std::string>());
        require(v.has_value(), "unknown vertex in family: " + j.at("vertex").get<std::string>());
        SetId s = fam.singleton_of(*v);
        fam.set_potential(s, pot);
        return s;
    }
    require(j.contains("members") && j.at("members").is_array() && !j.at("members").empty(),
            "family set needs members");
    std::vector<SetId> members;
    for (const auto& item : j.at("members")) members.push_back(set_from_json(g, fam, item));
    return fam.contract(members, pot);
}

}  // namespace

nlohmann::json family_to_json(const Graph& g, const LaminarFamily& fam) {
    nlohmann::json out = nlohmann::json::array();
    for (SetId u : fam.maximal_sets()) out.push_back(set_to_json(g, fam, u));
    return out;
}

LaminarFamily family_from_json(const Graph& g, const nlohmann::json& j) {
    require(j.is_array(), "family JSON must be an array of maximal sets");
    LaminarFamily fam(g.vertex_count());
    for (const auto& item : j) set_from_json(g, fam, item);
    fam.check_structure();
    return fam;
}

nlohmann::json certificate_to_json(const Graph& original, const Matching& m,
                                   const primal_dual::DualCertificate& cert,
                                   const Rational& scale, const Rational& shift,
                                   const Rational& original_weight) {
    nlohmann::json out;
    out["matching"] = matching_to_json(original, m);
    out["weight"] = original_weight.str();
    out["steps"] = cert.steps;
    if (cert.exposed) out["exposed"] = original.name(*cert.exposed);
    out["normalization"] = {{"scale", scale.str()}, {"shift", shift.str()}};
    out["certificate"] = {{"family", family_to_json(original, cert.family)},
                          {"max_nesting_depth", cert.family.max_depth()}};
    return out;
}

ParsedCertificate certificate_from_json(const Graph& original, const nlohmann::json& j) {
    require(j.is_object() && j.contains("matching") && j.contains("certificate") &&
                j.contains("steps") && j.contains("normalization"),
            "certificate JSON is missing fields");
    LaminarFamily family = family_from_json(original, j.at("certificate").at("family"));
    Rational scale = Rational::parse(j.at("normalization").at("scale").get<std::string>());
    Rational shift = Rational::parse(j.at("normalization").at("shift").get<std::string>());

    // Resolve name pairs against the certificate: among parallel edges the
    // certified pick is a tight one (boundary potential = rescaled weight),
    // which need not be the heaviest. Fall back to the smallest id; the
    // verifier then reports the failure honestly.
    require(j.at("matching").is_array(), "matching JSON must be an array of name pairs");
    std::vector<EdgeId> edges;
    for (const auto& item : j.at("matching")) {
        require(item.is_array() && item.size() == 2, "matching entry must be a pair of names");
        auto a = original.find_vertex(item[0].get<std::string>());
        auto b = original.find_vertex(item[1].get<std::string>());
        require(a.has_value(), "unknown vertex in matching: " + item[0].get<std::string>());
        require(b.has_value(), "unknown vertex in matching: " + item[1].get<std::string>());
        EdgeId tight = -1, any = -1;
        for (EdgeId e : original.incident(*a)) {
            if (original.other_end(e, *a) != *b) continue;
            if (any == -1 || e < any) any = e;
            Rational rescaled = original.edge(e).weight * scale + shift;
            if (family.boundary_potential(original, e).to_rational() == rescaled &&
                (tight == -1 || e < tight))
                tight = e;
        }
        require(any != -1, "matching pair " + item[0].get<std::string>() + "-" +
                               item[1].get<std::string>() + " is not an edge");
        edges.push_back(tight != -1 ? tight : any);
    }

    ParsedCertificate out{
        Matching::of(original, std::move(edges)),
        primal_dual::DualCertificate{std::move(family), j.at("steps").get<int>(), std::nullopt},
        std::move(scale),
        std::move(shift),
    };
    if (j.contains("exposed")) {
        auto v = original.find_vertex(j.at("exposed").get<std::string>());
        require(v.has_value(), "unknown exposed vertex: " + j.at("exposed").get<std::string>());
        out.certificate.exposed = *v;
    }
    return out;
}

}  // namespace strongmatch::io
