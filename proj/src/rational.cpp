#include "rafloat/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "rafloat/errors.hpp"

namespace rafloat {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    mpq_class q;
    mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
    mpq_canonicalize(q.get_mpq_t());
    return q;
}

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den)
    : q_(make_canonical(num, den)) {}

Rational::Rational(long num, long den)
    : q_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational Rational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_text = text.substr(0, slash);
    if (!valid_integer_text(num_text)) {
        throw ParseError("malformed rational \"" + std::string(text) + "\"", 0);
    }
    mpz_class num(std::string(num_text), 10);
    if (slash == std::string_view::npos) {
        return Rational(num);
    }
    std::string_view den_text = text.substr(slash + 1);
    if (!valid_integer_text(den_text) || den_text.front() == '-') {
        throw ParseError("malformed rational \"" + std::string(text) + "\"", slash + 1);
    }
    mpz_class den(std::string(den_text), 10);
    return Rational(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    return Rational(mpq_class(a.q_ / b.q_));
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::scaled_pow2(long k) const {
    mpq_class out;
    if (k >= 0) {
        mpq_mul_2exp(out.get_mpq_t(), q_.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
    } else {
        mpq_div_2exp(out.get_mpq_t(), q_.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
    }
    return Rational(std::move(out));
}

long floor_log2_abs(const Rational& x) {
    if (x.is_zero()) {
        throw std::domain_error("floor_log2_abs of zero");
    }
    mpz_class n = ::abs(x.num());
    const mpz_class& d = x.den();
    // 2^(a-1) <= n < 2^a and 2^(b-1) <= d < 2^b pin the result to
    // {a-b-1, a-b}; one exact comparison decides.
    const long a = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    const long b = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    const long e = a - b;
    mpz_class lhs = n, rhs = d;
    if (e >= 0) {
        rhs <<= e;
    } else {
        lhs <<= -e;
    }
    return lhs >= rhs ? e : e - 1;
}

Rational pow2(long k) {
    return Rational(1).scaled_pow2(k);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

}  // namespace rafloat
