#include "zpm/rational.hpp"

#include "zpm/errors.hpp"

#include <cmath>

namespace zpm {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) {
        throw ArgumentError("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ArgumentError("malformed rational '" + text + "'");
    }
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) {
        throw ArgumentError("cannot represent non-finite double exactly");
    }
    return Rational(mpq_class(value));
}

Rational Rational::pow(unsigned exponent) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
    return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw ArgumentError("rational division by zero");
    }
    q_ /= o.q_;
    return *this;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binom(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace zpm
