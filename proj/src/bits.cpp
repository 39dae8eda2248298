#include "rafloat/bits.hpp"

#include <algorithm>
#include <cctype>

#include "rafloat/errors.hpp"

namespace rafloat {

static_assert(sizeof(unsigned long) == 8, "64-bit longs assumed for GMP interop");

namespace {

constexpr std::uint64_t kSignMask = 0x8000000000000000ull;
constexpr std::uint64_t kFracMask = 0x000FFFFFFFFFFFFFull;
constexpr int kFracBits = 52;
constexpr int kBias = 1023;

}  // namespace

Binary64Value bits_to_value(std::uint64_t bits) {
    const bool negative = (bits & kSignMask) != 0;
    const int biased = static_cast<int>((bits >> kFracBits) & 0x7FF);
    const std::uint64_t frac = bits & kFracMask;

    if (biased == 0x7FF) {
        if (frac != 0) return Binary64Value::nan();
        return negative ? Binary64Value::neg_inf() : Binary64Value::pos_inf();
    }
    if (biased == 0 && frac == 0) {
        return Binary64Value::finite(Rational(0), negative);
    }

    Rational magnitude;
    if (biased == 0) {
        // subnormal: frac · 2^-1074
        magnitude = Rational(mpz_class(static_cast<unsigned long>(frac)))
                        .scaled_pow2(-1074);
    } else {
        // normal: (2^52 + frac) · 2^(biased - 1023 - 52)
        mpz_class m = (mpz_class(1) << kFracBits) + static_cast<unsigned long>(frac);
        magnitude = Rational(m).scaled_pow2(biased - kBias - kFracBits);
    }
    return Binary64Value::finite(negative ? -magnitude : magnitude);
}

std::uint64_t value_to_bits(const Binary64Value& v) {
    switch (v.cls) {
        case Binary64Value::Class::PosInf:
            return 0x7FF0000000000000ull;
        case Binary64Value::Class::NegInf:
            return 0xFFF0000000000000ull;
        case Binary64Value::Class::NaN:
            return 0x7FF8000000000000ull;
        case Binary64Value::Class::Finite:
            break;
    }

    const Rational& x = v.value;
    if (x.is_zero()) {
        return v.negative_zero ? kSignMask : 0;
    }

    const FloatFormat fmt = FloatFormat::binary64();
    if (!fpp(x, fmt)) {
        throw EncodeError("not a binary64 value: " + x.str());
    }
    const bool negative = x.sign() < 0;
    const long e = std::max(floor_log2_abs(x), static_cast<long>(fmt.emin));
    const long q = e - fmt.precision + 1;
    const Rational scaled = x.abs().scaled_pow2(-q);
    const mpz_class& m = scaled.num();  // integer significand, < 2^53

    std::uint64_t biased;
    std::uint64_t frac;
    if (mpz_sizeinbase(m.get_mpz_t(), 2) < static_cast<std::size_t>(fmt.precision)) {
        biased = 0;  // subnormal
        frac = m.get_ui();
    } else {
        biased = static_cast<std::uint64_t>(e + kBias);
        frac = mpz_class(m - (mpz_class(1) << kFracBits)).get_ui();
    }
    return (negative ? kSignMask : 0) | (biased << kFracBits) | frac;
}

std::uint64_t rational_to_bits(const Rational& x) {
    return value_to_bits(Binary64Value::finite(x));
}

std::string bits_to_hex(std::uint64_t bits) {
    static const char digits[] = "0123456789ABCDEF";
    std::string out = "0x";
    for (int shift = 60; shift >= 0; shift -= 4) {
        out += digits[(bits >> shift) & 0xF];
    }
    return out;
}

std::uint64_t hex_to_bits(std::string_view text) {
    if (text.size() < 3 || text.size() > 18 || text[0] != '0' ||
        (text[1] != 'x' && text[1] != 'X')) {
        throw ParseError("malformed bit pattern \"" + std::string(text) + "\"", 0);
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 2; i < text.size(); ++i) {
        const char c = text[i];
        int digit;
        if (c >= '0' && c <= '9') digit = c - '0';
        else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
        else throw ParseError("malformed bit pattern \"" + std::string(text) + "\"", i);
        bits = (bits << 4) | static_cast<std::uint64_t>(digit);
    }
    return bits;
}

}  // namespace rafloat
