#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strongmatch/graph.hpp"
#include "strongmatch/laminar.hpp"

namespace strongmatch::primal_dual {

/// Reachability labels on the contracted graph relative to the current
/// matching. `even` holds the vertices reachable from an uncovered vertex by
/// an even-length alternating path (the trivial path included), `odd` those
/// reachable by an odd-length one; a vertex may carry both labels.
struct Labeling {
    std::vector<int> unmatched;  // uncovered view vertices, ascending
    std::vector<bool> even;
    std::vector<bool> odd;
};

/// Counters filled by the per-step structural audits.
struct AuditStats {
    long steps = 0;
    long components_audited = 0;
    long dominating_vertex_checks = 0;
    long energy_law_checks = 0;
    long uam_checks = 0;
};

struct SolveOptions {
    /// Re-derive and assert the per-step structural laws (component
    /// almost-matchability, boundary degrees, label transfer, the unmatched
    /// and dominating-vertex statements, tight-connectivity, the energy
    /// law, and feasibility of the potentials) after every mutation.
    bool audit = false;
    AuditStats* stats = nullptr;
};

/// Dual certificate accompanying a solution: the final laminar family with
/// its potentials, the number of potential-update rounds, and the uncovered
/// vertex in the almost-perfect case. Together with the matching this is
/// checkable by verify_certificate without rerunning the procedure.
struct DualCertificate {
    LaminarFamily family;
    int steps = 0;
    std::optional<VertexId> exposed;
};

struct SolveResult {
    Matching matching;  // perfect, or almost perfect on odd order
    Rational weight;
    DualCertificate certificate;
};

/// Runs the contraction/potential-update procedure on a complete multigraph
/// with positive integer weights, producing a minimum-weight perfect (even
/// order) or almost perfect (odd order) matching plus its certificate.
/// The number of rounds never exceeds the maximum edge weight; exceeding it
/// signals a bug and throws. Inputs with rational or nonpositive weights
/// must go through normalize_weights first.
SolveResult run(const Graph& g, const SolveOptions& options = {});

struct Violation {
    std::string check;
    std::string subject;
};

struct VerifyReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Re-derives every certificate condition from scratch: family structure,
/// matching-edge tightness, undersaturation of all edges, nonnegativity of
/// potentials on sets spanning >= 3 vertices, boundary-degree <= 1 per set
/// (zero exactly on sets holding the uncovered vertex), and in the
/// almost-perfect case that the uncovered vertex has maximum energy equal to
/// steps/2. Passing implies the matching is strongly w-minimal among
/// perfect/almost-perfect matchings of g.
VerifyReport verify_certificate(const Graph& g, const Matching& m, const DualCertificate& cert);

/// One step of the procedure, exposed for tests and audits. States advance
/// through label -> components -> contraction -> potential update ->
/// dissolution -> matching rebuild.
class Procedure {
public:
    explicit Procedure(const Graph& g, SolveOptions options = {});

    /// True when at most one contracted vertex is uncovered.
    bool finished() const;
    void advance();
    SolveResult finish();

    int step() const { return step_; }
    const LaminarFamily& family() const { return fam_; }
    const std::vector<bool>& tight() const { return tight_; }
    const ContractedView& view() const { return view_; }
    const std::vector<EdgeId>& matching() const { return matching_; }

    Labeling label() const;
    /// Vertex sets of the components of view[even-labels]; asserted equal to
    /// the components of view minus (odd \ even) labels that meet an even
    /// label. Ordered by smallest member.
    std::vector<std::vector<int>> blossom_components(const Labeling& lab) const;

private:
    void rebuild_views();
    void audit_components(const Labeling& lab, const std::vector<std::vector<int>>& comps) const;
    void audit_state() const;
    void audit_energy_law() const;
    void update_never_matched();

    const Graph& g_;
    SolveOptions options_;
    mpz_class step_cap_;
    int step_ = 0;
    LaminarFamily fam_;
    std::vector<bool> tight_;
    ContractedView view_;
    std::vector<EdgeId> matching_;        // host edges forming a view matching
    std::vector<char> never_matched_;     // per host vertex
};

/// Labels for an arbitrary maximum view matching; used by Procedure and the
/// audits. Throws if the matching is not maximum in the view.
Labeling label_view(const ContractedView& view, const std::vector<EdgeId>& matching);

}  // namespace strongmatch::primal_dual
