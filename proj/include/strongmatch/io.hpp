#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "strongmatch/graph.hpp"
#include "strongmatch/laminar.hpp"
#include "strongmatch/primal_dual.hpp"

namespace strongmatch::io {

/// Parse error carrying the offending line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Edge-list text format: one edge per line as `u v p/q` (or an integer
/// weight `p`), `#` starts a comment, vertex names are arbitrary tokens.
/// Vertices get ids in order of first appearance.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
std::string write_graph(const Graph& g);

/// Matchings travel as JSON arrays of sorted name pairs:
/// [["a","b"],["c","d"]]. When parallel edges make a pair ambiguous, the
/// heaviest edge (smallest id among ties) is chosen: any lighter parallel
/// is never the certified/optimal pick.
nlohmann::json matching_to_json(const Graph& g, const Matching& m);
Matching matching_from_json(const Graph& g, const nlohmann::json& j);

/// Laminar family as nested arrays: a singleton is {"vertex": name,
/// "potential": "p/q"}, a composite {"members": [...], "potential": "p/q"};
/// the top level lists the maximal sets. Potentials are exact strings.
nlohmann::json family_to_json(const Graph& g, const LaminarFamily& fam);
LaminarFamily family_from_json(const Graph& g, const nlohmann::json& j);

/// Full solve payload: matching, weight, steps, normalization, certificate.
nlohmann::json certificate_to_json(const Graph& original, const Matching& m,
                                   const primal_dual::DualCertificate& cert,
                                   const Rational& scale, const Rational& shift,
                                   const Rational& original_weight);

struct ParsedCertificate {
    Matching matching;
    primal_dual::DualCertificate certificate;
    Rational scale;
    Rational shift;
};

/// Reads a solve payload back against the original graph; the certificate's
/// family is rebuilt over the graph's vertices.
ParsedCertificate certificate_from_json(const Graph& original, const nlohmann::json& j);

}  // namespace strongmatch::io
