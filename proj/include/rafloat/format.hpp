#pragma once

#include <cstddef>
#include <vector>

#include "rafloat/rational.hpp"

namespace rafloat {

/// Floating-point format descriptor. `precision` counts significand bits
/// including the hidden bit; binary64 is (53, -1022, 1023). Tiny instances
/// exist so brute-force oracles can enumerate every value.
struct FloatFormat {
    int precision;
    int emin;
    int emax;

    static constexpr FloatFormat binary64() { return {53, -1022, 1023}; }

    bool valid() const { return precision >= 2 && emin < 0 && 0 < emax; }

    /// Exponent of the fixed subnormal quantum, emin - precision + 1
    /// (-1074 for binary64).
    long quantum_min() const { return static_cast<long>(emin) - precision + 1; }

    /// 2^quantum_min, the smallest positive value.
    Rational min_subnormal() const;

    /// (2^precision - 1) · 2^(emax - precision + 1).
    Rational max_finite() const;

    /// 2^(emax+1) - 2^(emax - precision): the midpoint above max_finite.
    /// Round-to-nearest-even sends |x| at or beyond it out of range.
    Rational overflow_threshold() const;

    /// Number of finite values, both signs, one zero.
    mpz_class finite_count() const;

    friend bool operator==(const FloatFormat&, const FloatFormat&) = default;
};

/// Recognizer for representable rationals: true iff x is exactly the value
/// of a finite datum of fmt, i.e. rounding is a fixpoint at x.
bool fpp(const Rational& x, const FloatFormat& fmt = FloatFormat::binary64());

/// All finite values of fmt in strictly ascending order, negatives and zero
/// included. Refuses formats with more than `limit` values; this is an
/// oracle for tiny formats, not a binary64 iterator.
std::vector<Rational> enumerate_values(const FloatFormat& fmt,
                                       std::size_t limit = std::size_t{1} << 22);

}  // namespace rafloat
