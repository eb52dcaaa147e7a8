#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strongmatch/rational.hpp"

namespace strongmatch::counterexample {

/// Interval enclosure of the irrational constant
///   a = sum_{i>=1} 10^(1 - i(i+1)/2) = 1.010010001...
/// truncated after k terms. The tail after the k-th term is below twice the
/// next term, so a lies in [lower, upper] for every truncation, and every
/// comparison decided on the interval holds for a itself.
class IrrationalA {
public:
    explicit IrrationalA(int truncation);

    int truncation() const { return k_; }
    const Rational& lower() const { return lo_; }
    const Rational& upper() const { return hi_; }

private:
    int k_;
    Rational lo_;
    Rational hi_;
};

/// Affine form c0 + c1*a with exact rational coefficients. All weights and
/// weight sums of the path family live here; nothing is ever evaluated in
/// decimal.
struct LinearForm {
    Rational c0;
    Rational c1;

    static LinearForm constant(Rational c) { return {std::move(c), Rational(0)}; }
    static LinearForm times_a(Rational c) { return {Rational(0), std::move(c)}; }

    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    friend LinearForm operator+(LinearForm x, const LinearForm& y) { x += y; return x; }
    friend LinearForm operator-(LinearForm x, const LinearForm& y) { x -= y; return x; }
    friend bool operator==(const LinearForm& x, const LinearForm& y) {
        return x.c0 == y.c0 && x.c1 == y.c1;
    }

    std::string str() const;  // "c0 + c1 a"
};

struct Interval {
    Rational lo;
    Rational hi;
};

Interval evaluate(const LinearForm& f, const IrrationalA& a);

/// Sign of f: exact when c1 = 0 (0 allowed); otherwise decided on the
/// interval, nullopt when the truncation cannot separate it from zero.
std::optional<int> sign(const LinearForm& f, const IrrationalA& a);

/// Sign with automatic truncation widening; a form with c1 != 0 is never
/// zero (a is irrational), so this always decides or throws after the
/// widening allowance is exhausted.
int decided_sign(const LinearForm& f, int truncation, int widenings = 4);

/// n_1 = 1, n_{i+1} = 10^(i+1) n_i + 1; returns n_1..n_depth.
std::vector<mpz_class> path_lengths(int depth);

constexpr long kDefaultEdgeBudget = 250000;

/// The two-terminal path family: paths P_1..P_depth join x and y, P_i has
/// 2 n_i + 1 edges. Edge positions run 0..2n_i along a path; odd positions
/// carry weight 2a-1 ("even edges"); even positions 2k carry a or 2a by the
/// inductive rule comparing the running sum against k(2a-1).
class Prefix {
public:
    int depth() const { return depth_; }
    int truncation() const { return truncation_; }
    const mpz_class& n(int path) const { return n_.at(path - 1); }
    long edges_on_path(int path) const;   // 2 n_i + 1
    long total_edges() const { return total_edges_; }

    /// Weight of the edge at `pos` (0-based) on P_path (1-based).
    LinearForm weight(int path, long pos) const;
    /// Coefficient of a on the odd edge with index k (position 2k): 1 or 2.
    int odd_coefficient(int path, long k) const { return odd_coeff_.at(path - 1).at(k); }
    /// Number of weight-a odd edges strictly before the final one.
    mpz_class light_odd_count(int path) const;

    /// odd(x..x_pos) - even(x..x_pos) over the subpath ending at vertex
    /// `pos` (0..2n_i+1).
    LinearForm subpath_difference(int path, long pos) const;
    /// odd(P) - even(P) over the whole path.
    LinearForm path_difference(int path) const;

    /// Vertex names: "x", "y", and "p<i>_<j>" for the j-th interior vertex
    /// of P_i (j = 1..2n_i).
    std::string vertex_name(int path, long vertex_index) const;

private:
    friend Prefix build_prefix(int depth, int truncation, long edge_budget);
    int depth_ = 0;
    int truncation_ = 0;
    std::vector<mpz_class> n_;
    std::vector<std::vector<signed char>> odd_coeff_;   // per path, k = 0..n_i
    std::vector<std::vector<long long>> odd_prefix_;    // prefix sums of odd_coeff_
    long total_edges_ = 0;
};

/// Builds the family down to `depth` (n_depth must fit the edge budget;
/// depth 4 already needs about 2*10^9 edges and is rejected). truncation -1
/// selects depth + 4, which leaves every margin decidable.
Prefix build_prefix(int depth, int truncation = -1, long edge_budget = kDefaultEdgeBudget);

struct InequalityCheck {
    std::string id;        // which inequality family
    std::string instance;  // which index/position
    bool holds = false;
    std::string bounds;    // exact interval bounds as rational strings
};

struct Report {
    int depth = 0;
    int truncation = 0;
    std::string preface;
    std::vector<InequalityCheck> checks;
    long positions_checked = 0;  // per-position scans are summarized, not listed
    bool all_hold() const;
};

/// Exact interval verification of the family's inequalities: the
/// near-integrality of 10^(i(i+1)/2-1) a for i <= depth+3, the running-sum
/// bounds at every position of every path, the count of weight-a odd edges,
/// the sandwich on odd(P_j)-even(P_j), and the strict ordering of those
/// differences across paths. Per-position families report one summary line
/// per path; failures are always listed individually.
Report verify_inequalities(const Prefix& prefix);

/// An edge of the prefix graph.
struct PrefixEdge {
    int path;  // 1-based
    long pos;  // 0..2n_path
    friend bool operator==(const PrefixEdge& a, const PrefixEdge& b) {
        return a.path == b.path && a.pos == b.pos;
    }
    friend bool operator<(const PrefixEdge& a, const PrefixEdge& b) {
        return a.path != b.path ? a.path < b.path : a.pos < b.pos;
    }
};

/// Matching on the prefix graph, validated for endpoint disjointness
/// (including the shared terminals x and y).
class PrefixMatching {
public:
    static PrefixMatching of(const Prefix& prefix, std::vector<PrefixEdge> edges);
    const std::vector<long>& on_path(int path) const { return positions_.at(path - 1); }
    bool contains(int path, long pos) const;
    /// Path whose first (resp. last) edge covers x (resp. y), or 0.
    int path_matching_x() const { return x_path_; }
    int path_matching_y() const { return y_path_; }

private:
    std::vector<std::vector<long>> positions_;  // sorted per path
    int x_path_ = 0;
    int y_path_ = 0;
};

/// The perfect matching using the odd edges of P_i and the even edges of
/// every other path.
PrefixMatching odd_edges_matching(const Prefix& prefix, int path_i);

struct Improvement {
    enum class Kind {
        subpath_switch,     // two uncovered vertices on one path
        cross_path_switch,  // x and y covered in different paths
        path_swap,          // perfect matching shifted from P_i to P_{i+1}
        beyond_prefix,      // the shift would need P_{depth+1}
        prefix_optimal,     // nothing in the case analysis applies
    };
    Kind kind;
    std::vector<PrefixEdge> remove;
    std::vector<PrefixEdge> add;
    LinearForm gain;        // w[add] - w[remove]; positive for the switch kinds
    Interval gain_bounds;
    std::string note;
};

/// Produces the concrete improving switch the case analysis yields for the
/// given matching, with its exact gain; or reports that the improvement
/// lies beyond the built prefix (the matching is then optimal within it).
Improvement demonstrate_improvement(const Prefix& prefix, const PrefixMatching& m);

const char* kind_name(Improvement::Kind kind);

}  // namespace strongmatch::counterexample
