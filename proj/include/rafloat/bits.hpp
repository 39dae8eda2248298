#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "rafloat/format.hpp"
#include "rafloat/rational.hpp"

namespace rafloat {

/// One decoded IEEE binary64 datum. The rational model itself has no signed
/// zero, infinities or NaNs; those classes exist here only so raw hardware
/// results can be described exactly. `negative_zero` is a decode-fidelity
/// flag — at the model level -0.0 compares equal to 0.
struct Binary64Value {
    enum class Class { Finite, PosInf, NegInf, NaN };

    Class cls = Class::Finite;
    Rational value;              // meaningful iff cls == Finite
    bool negative_zero = false;  // implies value == 0

    static Binary64Value finite(Rational v, bool negative_zero = false) {
        return {Class::Finite, std::move(v), negative_zero};
    }
    static Binary64Value pos_inf() { return {Class::PosInf, Rational(0), false}; }
    static Binary64Value neg_inf() { return {Class::NegInf, Rational(0), false}; }
    static Binary64Value nan() { return {Class::NaN, Rational(0), false}; }

    bool is_finite() const { return cls == Class::Finite; }

    friend bool operator==(const Binary64Value&, const Binary64Value&) = default;
};

/// Exact decode of a 64-bit pattern; total on all patterns.
Binary64Value bits_to_value(std::uint64_t bits);

/// Inverse of bits_to_value. Throws EncodeError when a finite value is not
/// representable. NaN encodes as the canonical quiet NaN.
std::uint64_t value_to_bits(const Binary64Value& v);

/// Encode a representable rational (never produces the -0.0 pattern).
std::uint64_t rational_to_bits(const Rational& x);

/// "0x" + 16 upper-case hex digits.
std::string bits_to_hex(std::uint64_t bits);

/// Accepts the bits_to_hex form, case-insensitive. Throws ParseError.
std::uint64_t hex_to_bits(std::string_view text);

}  // namespace rafloat
