#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace strongmatch {

inline void require(bool condition, const std::string& what) {
    if (!condition) throw std::invalid_argument(what);
}

namespace detail {
// Internal invariant check. A failure means a bug in this library, not bad
// input, hence logic_error.
inline void ensure(bool condition, const std::string& what) {
    if (!condition) throw std::logic_error("internal invariant violated: " + what);
}
}  // namespace detail

/// Exact rational number, kept in lowest terms with positive denominator.
///
/// Wraps GMP so that numerators and denominators are arbitrary precision;
/// the digit-sensitive checks elsewhere in this library are meaningless
/// under fixed-width overflow or floating point rounding.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                 // NOLINT(google-explicit-constructor)
    Rational(long n) : v_(n) {}                // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& n) : v_(n) {}    // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        require(d != 0, "rational denominator must be nonzero");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    /// Parses "p/q" or "p" with optional sign. Throws invalid_argument on
    /// malformed text or zero denominator.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    /// "p/q", or just "p" when the value is integral.
    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        require(!o.is_zero(), "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

/// Half-integer value stored as a doubled integer, so every +-1/2 update is
/// an exact integer operation and parity ("2*pi is an integer") is directly
/// observable.
class HalfInt {
public:
    HalfInt() : doubled_(0) {}
    static HalfInt whole(long n) { return HalfInt(mpz_class(2 * n)); }
    static HalfInt half() { return HalfInt(mpz_class(1)); }
    static HalfInt from_doubled(mpz_class d) { return HalfInt(std::move(d)); }

    const mpz_class& doubled() const { return doubled_; }
    bool is_integer() const { return doubled_ % 2 == 0; }
    bool is_zero() const { return doubled_ == 0; }
    int sign() const { return sgn(doubled_); }

    Rational to_rational() const { return Rational(doubled_, mpz_class(2)); }
    std::string str() const { return to_rational().str(); }

    HalfInt& operator+=(const HalfInt& o) { doubled_ += o.doubled_; return *this; }
    HalfInt& operator-=(const HalfInt& o) { doubled_ -= o.doubled_; return *this; }
    friend HalfInt operator+(HalfInt a, const HalfInt& b) { a += b; return a; }
    friend HalfInt operator-(HalfInt a, const HalfInt& b) { a -= b; return a; }
    friend HalfInt operator-(const HalfInt& a) { return HalfInt(-a.doubled_); }

    friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.doubled_ == b.doubled_; }
    friend bool operator!=(const HalfInt& a, const HalfInt& b) { return a.doubled_ != b.doubled_; }
    friend bool operator<(const HalfInt& a, const HalfInt& b) { return a.doubled_ < b.doubled_; }
    friend bool operator<=(const HalfInt& a, const HalfInt& b) { return a.doubled_ <= b.doubled_; }
    friend bool operator>(const HalfInt& a, const HalfInt& b) { return a.doubled_ > b.doubled_; }
    friend bool operator>=(const HalfInt& a, const HalfInt& b) { return a.doubled_ >= b.doubled_; }

private:
    explicit HalfInt(mpz_class d) : doubled_(std::move(d)) {}
    mpz_class doubled_;
};

/// 10^e as an exact rational; e may be negative.
Rational pow10(long e);

}  // namespace strongmatch
