#include "rafloat/format.hpp"

#include <algorithm>

#include "rafloat/errors.hpp"

namespace rafloat {

Rational FloatFormat::min_subnormal() const {
    return pow2(quantum_min());
}

Rational FloatFormat::max_finite() const {
    mpz_class top = (mpz_class(1) << precision) - 1;
    return Rational(top).scaled_pow2(static_cast<long>(emax) - precision + 1);
}

Rational FloatFormat::overflow_threshold() const {
    return pow2(static_cast<long>(emax) + 1) - pow2(static_cast<long>(emax) - precision);
}

mpz_class FloatFormat::finite_count() const {
    // Per sign: 2^(p-1) normals in each of the emax-emin+1 binades plus
    // 2^(p-1) - 1 subnormals; one shared zero.
    mpz_class per_binade = mpz_class(1) << (precision - 1);
    mpz_class positives = per_binade * (static_cast<long>(emax) - emin + 1) + per_binade - 1;
    return 2 * positives + 1;
}

bool fpp(const Rational& x, const FloatFormat& fmt) {
    if (x.is_zero()) {
        return true;
    }
    // Representable values are dyadic: denominator must be a power of two.
    if (mpz_popcount(x.den().get_mpz_t()) != 1) {
        return false;
    }
    const long e = floor_log2_abs(x);
    if (e > fmt.emax) {
        return false;
    }
    // x must be an integer multiple of the quantum of its binade (or of the
    // fixed subnormal quantum below emin); the significand bound is then
    // automatic from e = floor(log2 |x|).
    const long q = std::max(e, static_cast<long>(fmt.emin)) - fmt.precision + 1;
    const long j = static_cast<long>(mpz_sizeinbase(x.den().get_mpz_t(), 2)) - 1;
    const long shift = -q - j;  // x · 2^-q = num · 2^shift
    if (shift >= 0) {
        return true;
    }
    mpz_class n = abs(x.num());
    return mpz_scan1(n.get_mpz_t(), 0) >= static_cast<mp_bitcnt_t>(-shift);
}

std::vector<Rational> enumerate_values(const FloatFormat& fmt, std::size_t limit) {
    if (!fmt.valid()) {
        throw Error("enumerate_values: invalid format");
    }
    const mpz_class count = fmt.finite_count();
    if (count > static_cast<unsigned long>(limit)) {
        throw Error("enumerate_values: format has " + count.get_str() +
                    " values, above the enumeration bound");
    }

    std::vector<Rational> positives;
    const long qmin = fmt.quantum_min();
    for (long m = 1; m < (1L << (fmt.precision - 1)); ++m) {
        positives.push_back(Rational(m).scaled_pow2(qmin));
    }
    for (int e = fmt.emin; e <= fmt.emax; ++e) {
        const long q = static_cast<long>(e) - fmt.precision + 1;
        for (long m = 1L << (fmt.precision - 1); m < (1L << fmt.precision); ++m) {
            positives.push_back(Rational(m).scaled_pow2(q));
        }
    }

    std::vector<Rational> out;
    out.reserve(2 * positives.size() + 1);
    for (auto it = positives.rbegin(); it != positives.rend(); ++it) {
        out.push_back(-*it);
    }
    out.push_back(Rational(0));
    out.insert(out.end(), positives.begin(), positives.end());
    return out;
}

}  // namespace rafloat
