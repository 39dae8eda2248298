#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rafloat {

/// Exact arbitrary-precision rational, always in canonical form:
/// denominator > 0, gcd(|num|, den) = 1, zero is 0/1. Equality is
/// therefore structural. Values are immutable and safe to share across
/// threads.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // integers embed implicitly
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den);

    /// Parses canonical text: "n" or "n/d", optional leading '-'.
    /// Throws ParseError on malformed text, std::domain_error on d = 0.
    static Rational from_string(std::string_view text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const;

    /// Exact value · 2^k, either sign of k.
    Rational scaled_pow2(long k) const;

    /// Canonical text, "/d" omitted when d = 1: "-1/2", "3", "0".
    std::string str() const { return q_.get_str(); }

    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ + b.q_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ - b.q_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ * b.q_));
    }
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c <=> 0;
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

/// floor(log2 |x|), exact; requires x != 0.
long floor_log2_abs(const Rational& x);

/// 2^k as a rational, either sign of k.
Rational pow2(long k);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace rafloat
