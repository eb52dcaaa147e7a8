#include "strongmatch/counterexample.hpp"

#include <algorithm>

namespace strongmatch::counterexample {

IrrationalA::IrrationalA(int truncation) : k_(truncation) {
    require(k_ >= 1, "truncation must be at least one term");
    Rational sum;
    for (long i = 1; i <= k_; ++i) sum += pow10(1 - i * (i + 1) / 2);
    lo_ = sum;
    // The terms shrink faster than a geometric factor 10, so the tail is
    // under twice the first omitted term.
    hi_ = sum + Rational(2) * pow10(1 - static_cast<long>(k_ + 1) * (k_ + 2) / 2);
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    c0 += o.c0;
    c1 += o.c1;
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
    c0 -= o.c0;
    c1 -= o.c1;
    return *this;
}

std::string LinearForm::str() const { return c0.str() + " + " + c1.str() + " a"; }

Interval evaluate(const LinearForm& f, const IrrationalA& a) {
    Rational at_lo = f.c0 + f.c1 * a.lower();
    Rational at_hi = f.c0 + f.c1 * a.upper();
    if (at_lo <= at_hi) return {at_lo, at_hi};
    return {at_hi, at_lo};
}

std::optional<int> sign(const LinearForm& f, const IrrationalA& a) {
    if (f.c1.is_zero()) return f.c0.sign();
    Interval box = evaluate(f, a);
    // a lies strictly inside its enclosure, so touching zero at an endpoint
    // still decides the sign.
    if (box.lo.sign() >= 0) return 1;
    if (box.hi.sign() <= 0) return -1;
    return std::nullopt;
}

int decided_sign(const LinearForm& f, int truncation, int widenings) {
    for (int w = 0; w <= widenings; ++w) {
        if (auto s = sign(f, IrrationalA(truncation + 2 * w))) return *s;
    }
    throw std::runtime_error("interval truncation too small to decide the sign of " + f.str());
}

std::vector<mpz_class> path_lengths(int depth) {
    require(depth >= 1, "depth must be at least 1");
    std::vector<mpz_class> n{1};
    for (int i = 1; i < depth; ++i) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(i + 1));
        n.push_back(p * n.back() + 1);
    }
    return n;
}

long Prefix::edges_on_path(int path) const {
    return 2 * n_.at(path - 1).get_si() + 1;
}

LinearForm Prefix::weight(int path, long pos) const {
    require(path >= 1 && path <= depth_, "path index out of range");
    require(pos >= 0 && pos < edges_on_path(path), "edge position out of range");
    if (pos % 2 == 1) return LinearForm{Rational(-1), Rational(2)};  // 2a - 1
    return LinearForm{Rational(0), Rational(odd_coeff_[path - 1][pos / 2])};
}

mpz_class Prefix::light_odd_count(int path) const {
    long n = n_.at(path - 1).get_si();
    // Among the first n odd edges, coefficients are 1 or 2 and sum to the
    // prefix total, so the number of 1s is 2n minus that total.
    return mpz_class(2 * n - static_cast<long>(odd_prefix_[path - 1][n]));
}

LinearForm Prefix::subpath_difference(int path, long pos) const {
    require(pos >= 0 && pos <= edges_on_path(path), "vertex position out of range");
    long odd_edges = (pos + 1) / 2;  // even positions 0,2,... below pos
    long even_edges = pos / 2;
    return LinearForm{Rational(even_edges),
                      Rational(static_cast<long>(odd_prefix_[path - 1][odd_edges]) - 2 * even_edges)};
}

LinearForm Prefix::path_difference(int path) const {
    return subpath_difference(path, edges_on_path(path));
}

std::string Prefix::vertex_name(int path, long vertex_index) const {
    long last = edges_on_path(path);
    require(vertex_index >= 0 && vertex_index <= last, "vertex index out of range");
    if (vertex_index == 0) return "x";
    if (vertex_index == last) return "y";
    return "p" + std::to_string(path) + "_" + std::to_string(vertex_index);
}

Prefix build_prefix(int depth, int truncation, long edge_budget) {
    Prefix out;
    out.depth_ = depth;
    out.truncation_ = truncation == -1 ? depth + 4 : truncation;
    require(out.truncation_ >= 1, "truncation must be positive");
    out.n_ = path_lengths(depth);

    mpz_class total = 0;
    for (const mpz_class& n : out.n_) total += 2 * n + 1;
    require(total <= edge_budget,
            "edge budget exceeded: the prefix needs " + total.get_str() + " edges");
    out.total_edges_ = total.get_si();

    for (const mpz_class& nz : out.n_) {
        long n = nz.get_si();
        std::vector<signed char> coeff;
        std::vector<long long> prefix{0};
        coeff.reserve(n + 1);
        prefix.reserve(n + 2);
        for (long k = 0; k <= n; ++k) {
            // Weight 2a exactly when the running odd-edge sum is still below
            // k(2a-1), i.e. when k + (sum_coeff - 2k) a is negative.
            LinearForm margin{Rational(k), Rational(static_cast<long>(prefix[k]) - 2 * k)};
            int s = decided_sign(margin, out.truncation_);
            signed char c = s < 0 ? 2 : 1;
            coeff.push_back(c);
            prefix.push_back(prefix[k] + c);
        }
        out.odd_coeff_.push_back(std::move(coeff));
        out.odd_prefix_.push_back(std::move(prefix));
    }
    return out;
}

bool Report::all_hold() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const InequalityCheck& c) { return c.holds; });
}

namespace {

std::string bounds_string(const LinearForm& f, int truncation) {
    Interval box = evaluate(f, IrrationalA(truncation));
    return "(" + f.str() + ") in [" + box.lo.str() + ", " + box.hi.str() + "]";
}

}  // namespace

Report verify_inequalities(const Prefix& prefix) {
    Report rep;
    rep.depth = prefix.depth();
    rep.truncation = prefix.truncation();
    rep.preface =
        "Exact interval verification at truncation " + std::to_string(rep.truncation) +
        ": every verdict holds for every value of the constant inside its interval enclosure. "
        "Per-index results are numerical facts for this prefix, not symbolic proofs for all "
        "indices, and a finite prefix witnesses the improvement chain only between built paths.";
    int trunc = prefix.truncation();

    auto push = [&rep](std::string id, std::string instance, bool holds, std::string bounds) {
        rep.checks.push_back({std::move(id), std::move(instance), holds, std::move(bounds)});
    };

    // Near-integrality of 10^(i(i+1)/2 - 1) a, three indices past the depth.
    auto lengths = path_lengths(prefix.depth() + 3);
    for (int i = 1; i <= prefix.depth() + 3; ++i) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10,
                      static_cast<unsigned long>(static_cast<long>(i) * (i + 1) / 2 - 1));
        LinearForm f{Rational(-lengths[i - 1]), Rational(scale)};
        bool low = decided_sign(f - LinearForm::constant(pow10(-(i + 1))), trunc) > 0;
        bool high = decided_sign(f - LinearForm::constant(pow10(-i)), trunc) < 0;
        push("near-integral", "i=" + std::to_string(i), low && high, bounds_string(f, trunc));
    }

    // Running-sum bounds at every position of every path.
    for (int p = 1; p <= prefix.depth(); ++p) {
        long n = prefix.n(p).get_si();
        long bad = 0;
        for (long k = 0; k <= n; ++k) {
            LinearForm g = prefix.subpath_difference(p, 2 * k);
            bool lower =
                decided_sign(g - LinearForm{Rational(1), Rational(-1)}, trunc) >= 0;  // >= 1 - a
            bool upper = decided_sign(g - LinearForm::constant(Rational(1)), trunc) < 0;
            if (!(lower && upper)) {
                ++bad;
                if (bad <= 10)
                    push("running-sum", "P_" + std::to_string(p) + " k=" + std::to_string(k),
                         false, bounds_string(g, trunc));
            }
            ++rep.positions_checked;
        }
        push("running-sum", "P_" + std::to_string(p) + " (all k)", bad == 0,
             std::to_string(n + 1) + " positions");

        long bad_even = 0, bad_odd = 0;
        for (long pos = 0; pos <= 2 * n + 1; ++pos) {
            LinearForm d = prefix.subpath_difference(p, pos);
            if (pos % 2 == 0) {
                if (decided_sign(d - LinearForm::constant(Rational(1)), trunc) >= 0) {
                    ++bad_even;
                    if (bad_even <= 10)
                        push("even-position", "P_" + std::to_string(p) + " pos=" +
                                                  std::to_string(pos),
                             false, bounds_string(d, trunc));
                }
            } else {
                if (decided_sign(d - LinearForm::times_a(Rational(1)), trunc) < 0) {
                    ++bad_odd;
                    if (bad_odd <= 10)
                        push("odd-position", "P_" + std::to_string(p) + " pos=" +
                                                 std::to_string(pos),
                             false, bounds_string(d, trunc));
                }
            }
            ++rep.positions_checked;
        }
        push("even-position", "P_" + std::to_string(p) + " (all even pos): difference < 1",
             bad_even == 0, std::to_string(n + 1) + " positions");
        push("odd-position", "P_" + std::to_string(p) + " (all odd pos): difference >= a",
             bad_odd == 0, std::to_string(n + 1) + " positions");

        // Count of weight-a odd edges before the final one, and the final
        // odd edge itself.
        mpz_class expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), 10,
                      static_cast<unsigned long>(static_cast<long>(p) * (p + 1) / 2 - 1));
        push("light-odd-count", "P_" + std::to_string(p),
             prefix.light_odd_count(p) == expected,
             prefix.light_odd_count(p).get_str() + " vs 10^(p(p+1)/2-1) = " + expected.get_str());
        push("final-odd-edge", "P_" + std::to_string(p), prefix.odd_coefficient(p, n) == 2,
             "coefficient " + std::to_string(prefix.odd_coefficient(p, n)));
    }

    // Sandwich on the whole-path differences, and their strict ordering.
    for (int p = 1; p <= prefix.depth(); ++p) {
        LinearForm d = prefix.path_difference(p);
        LinearForm low = LinearForm::times_a(Rational(2)) -
                         LinearForm::constant(pow10(-p));          // 2a - 10^-p
        LinearForm high = LinearForm::times_a(Rational(2)) -
                          LinearForm::constant(pow10(-(p + 1)));   // 2a - 10^-(p+1)
        bool holds = decided_sign(d - low, trunc) > 0 && decided_sign(d - high, trunc) < 0;
        push("difference-sandwich", "P_" + std::to_string(p), holds, bounds_string(d, trunc));
    }
    for (int p = 1; p < prefix.depth(); ++p) {
        LinearForm delta = prefix.path_difference(p + 1) - prefix.path_difference(p);
        push("difference-order", "P_" + std::to_string(p) + " < P_" + std::to_string(p + 1),
             decided_sign(delta, trunc) > 0, bounds_string(delta, trunc));
    }
    return rep;
}

PrefixMatching PrefixMatching::of(const Prefix& prefix, std::vector<PrefixEdge> edges) {
    PrefixMatching m;
    m.positions_.resize(prefix.depth());
    for (const PrefixEdge& e : edges) {
        require(e.path >= 1 && e.path <= prefix.depth(), "matching edge path out of range");
        require(e.pos >= 0 && e.pos < prefix.edges_on_path(e.path),
                "matching edge position out of range");
        m.positions_[e.path - 1].push_back(e.pos);
    }
    for (int p = 1; p <= prefix.depth(); ++p) {
        auto& pos = m.positions_[p - 1];
        std::sort(pos.begin(), pos.end());
        for (size_t i = 0; i + 1 < pos.size(); ++i)
            require(pos[i + 1] - pos[i] >= 2, "matching edges share an interior vertex");
        if (!pos.empty() && pos.front() == 0) {
            require(m.x_path_ == 0, "two matching edges cover x");
            m.x_path_ = p;
        }
        if (!pos.empty() && pos.back() == prefix.edges_on_path(p) - 1) {
            require(m.y_path_ == 0, "two matching edges cover y");
            m.y_path_ = p;
        }
    }
    return m;
}

bool PrefixMatching::contains(int path, long pos) const {
    const auto& v = positions_.at(path - 1);
    return std::binary_search(v.begin(), v.end(), pos);
}

PrefixMatching odd_edges_matching(const Prefix& prefix, int path_i) {
    require(path_i >= 1 && path_i <= prefix.depth(), "path index out of range");
    std::vector<PrefixEdge> edges;
    for (int p = 1; p <= prefix.depth(); ++p) {
        long last = prefix.edges_on_path(p);
        if (p == path_i) {
            for (long pos = 0; pos < last; pos += 2) edges.push_back({p, pos});
        } else {
            for (long pos = 1; pos < last; pos += 2) edges.push_back({p, pos});
        }
    }
    return PrefixMatching::of(prefix, edges);
}

const char* kind_name(Improvement::Kind kind) {
    switch (kind) {
        case Improvement::Kind::subpath_switch: return "subpath-switch";
        case Improvement::Kind::cross_path_switch: return "cross-path-switch";
        case Improvement::Kind::path_swap: return "path-swap";
        case Improvement::Kind::beyond_prefix: return "beyond-prefix";
        case Improvement::Kind::prefix_optimal: return "prefix-optimal";
    }
    return "unknown";
}

namespace {

// Uncovered vertex indices on one path, in order; terminals use the global
// coverage of x and y.
std::vector<long> uncovered_on_path(const Prefix& prefix, const PrefixMatching& m, int p) {
    std::vector<long> out;
    long last_vertex = prefix.edges_on_path(p);  // index of y
    if (m.path_matching_x() == 0) out.push_back(0);
    for (long v = 1; v < last_vertex; ++v) {
        if (!m.contains(p, v - 1) && !m.contains(p, v)) out.push_back(v);
    }
    if (m.path_matching_y() == 0) out.push_back(last_vertex);
    return out;
}

// Switch the edges of path p in [from_pos, to_pos) against the matching,
// accumulating removed/added edges and the exact gain.
void switch_range(const Prefix& prefix, const PrefixMatching& m, int p, long from_pos,
                  long to_pos, Improvement& out) {
    for (long pos = from_pos; pos < to_pos; ++pos) {
        if (m.contains(p, pos)) {
            out.remove.push_back({p, pos});
            out.gain -= prefix.weight(p, pos);
        } else {
            out.add.push_back({p, pos});
            out.gain += prefix.weight(p, pos);
        }
    }
}

}  // namespace

Improvement demonstrate_improvement(const Prefix& prefix, const PrefixMatching& m) {
    int trunc = prefix.truncation();
    Improvement out;
    out.gain = LinearForm{Rational(0), Rational(0)};

    // Two uncovered vertices on one path: switch the stretch between a
    // consecutive uncovered pair.
    for (int p = 1; p <= prefix.depth(); ++p) {
        auto uncovered = uncovered_on_path(prefix, m, p);
        if (uncovered.size() < 2) continue;
        long j = uncovered[0], k = uncovered[1];
        out.kind = Improvement::Kind::subpath_switch;
        switch_range(prefix, m, p, j, k, out);
        out.note = "uncovered vertices " + prefix.vertex_name(p, j) + " and " +
                   prefix.vertex_name(p, k) + " on P_" + std::to_string(p);
        detail::ensure(decided_sign(out.gain, trunc) > 0, "subpath switch gain not positive");
        out.gain_bounds = evaluate(out.gain, IrrationalA(trunc));
        return out;
    }

    int xp = m.path_matching_x();
    int yp = m.path_matching_y();
    if (xp == 0 || yp == 0) {
        // Unreached for valid inputs: an uncovered terminal forces a second
        // uncovered vertex on some path by parity.
        out.kind = Improvement::Kind::prefix_optimal;
        out.note = "case analysis does not apply: a terminal is uncovered but no path has two "
                   "uncovered vertices";
        return out;
    }

    if (xp != yp) {
        // x and y covered in different paths: switch both stretches across x.
        auto ui = uncovered_on_path(prefix, m, xp);
        auto uj = uncovered_on_path(prefix, m, yp);
        detail::ensure(ui.size() == 1 && uj.size() == 1,
                       "expected exactly one uncovered vertex on each terminal path");
        detail::ensure(ui[0] % 2 == 0 && uj[0] % 2 == 1,
                       "uncovered vertices have unexpected parity");
        out.kind = Improvement::Kind::cross_path_switch;
        switch_range(prefix, m, xp, 0, ui[0], out);
        switch_range(prefix, m, yp, 0, uj[0], out);
        out.note = "x covered in P_" + std::to_string(xp) + ", y in P_" + std::to_string(yp) +
                   "; rerouted toward " + prefix.vertex_name(xp, ui[0]) + " and " +
                   prefix.vertex_name(yp, uj[0]);
        detail::ensure(decided_sign(out.gain, trunc) > 0, "cross-path switch gain not positive");
        out.gain_bounds = evaluate(out.gain, IrrationalA(trunc));
        return out;
    }

    // Both terminals covered in the same path: the matching is perfect and
    // uses exactly the even positions of that path and the odd positions of
    // every other path.
    for (int p = 1; p <= prefix.depth(); ++p)
        detail::ensure(uncovered_on_path(prefix, m, p).empty(),
                       "matching unexpectedly leaves a vertex uncovered");
    int i = xp;
    for (int p = 1; p <= prefix.depth(); ++p) {
        long expected = p == i ? prefix.n(p).get_si() + 1 : prefix.n(p).get_si();
        detail::ensure(static_cast<long>(m.on_path(p).size()) == expected,
                       "perfect matching has unexpected shape");
    }

    if (i >= prefix.depth()) {
        out.kind = Improvement::Kind::beyond_prefix;
        out.note = "the matching occupies the innermost built path P_" + std::to_string(i) +
                   "; the improving shift needs P_" + std::to_string(i + 1) +
                   ", beyond this prefix. Within the prefix the matching is optimal "
                   "(prefix-optimal).";
        return out;
    }

    out.kind = Improvement::Kind::path_swap;
    switch_range(prefix, m, i, 0, prefix.edges_on_path(i), out);
    switch_range(prefix, m, i + 1, 0, prefix.edges_on_path(i + 1), out);
    out.note = "shift the perfect matching from P_" + std::to_string(i) + " to P_" +
               std::to_string(i + 1);
    // The gain must equal the difference of the whole-path differences.
    LinearForm expected = prefix.path_difference(i + 1) - prefix.path_difference(i);
    detail::ensure(out.gain == expected, "path swap gain disagrees with the path differences");
    detail::ensure(decided_sign(out.gain, trunc) > 0, "path swap gain not positive");
    out.gain_bounds = evaluate(out.gain, IrrationalA(trunc));
    return out;
}

}  // namespace strongmatch::counterexample
