#include "zpm/decimal.hpp"

#include "zpm/errors.hpp"

#include <cmath>

namespace zpm {

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
    if (!a.is_rational() && !b.is_rational() && a.radicand != b.radicand) {
        throw ArgumentError("surd product needs a common radicand");
    }
    const BigInt d = a.is_rational() ? b.radicand : a.radicand;
    QuadraticSurd out;
    out.rational = a.rational * b.rational + a.surd_coef * b.surd_coef * Rational(d);
    out.surd_coef = a.rational * b.surd_coef + a.surd_coef * b.rational;
    out.radicand = d;
    return out;
}

double QuadraticSurd::to_double() const {
    return rational.to_double() + surd_coef.to_double() * std::sqrt(mpz_get_d(radicand.get_mpz_t()));
}

namespace {

// floor(value * 10^scale) for value >= 0.
BigInt scaled_floor(const Rational& value, long scale) {
    BigInt p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(scale));
    BigInt num = value.numerator() * p10;
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), value.denominator().get_mpz_t());
    return q;
}

// Formats integer digits as digits * 10^-scale, keeping `significant` digits.
std::string format_scaled(const BigInt& digits, long scale, int significant, bool negative) {
    std::string s = digits.get_str();
    if (digits == 0) {
        return "0";
    }
    // Pad so there is at least one digit before the decimal point.
    if (static_cast<long>(s.size()) <= scale) {
        s.insert(0, static_cast<std::size_t>(scale - static_cast<long>(s.size()) + 1), '0');
    }
    const std::size_t point = s.size() - static_cast<std::size_t>(scale);
    std::string out = s.substr(0, point) + "." + s.substr(point);
    // Truncate after `significant` significant digits.
    int seen = 0;
    bool started = false;
    std::size_t cut = out.size();
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] == '.') {
            continue;
        }
        if (out[i] != '0') {
            started = true;
        }
        if (started && ++seen == significant) {
            cut = i + 1;
            break;
        }
    }
    out.resize(cut);
    if (out.back() == '.') {
        out.pop_back();
    }
    return negative ? "-" + out : out;
}

long needed_scale(double magnitude, int significant) {
    const double lg = magnitude > 0 ? std::floor(std::log10(magnitude)) : 0.0;
    return std::max<long>(0, static_cast<long>(significant) - static_cast<long>(lg) + 4);
}

}  // namespace

std::string to_decimal(const Rational& value, int significant) {
    const bool negative = value.sign() < 0;
    const Rational mag = value.abs();
    const long scale = needed_scale(mag.to_double(), significant);
    return format_scaled(scaled_floor(mag, scale), scale, significant, negative);
}

std::string to_decimal(const QuadraticSurd& value, int significant) {
    if (value.is_rational()) {
        return to_decimal(value.rational, significant);
    }
    const double approx = value.to_double();
    const bool negative = approx < 0;
    // Guard digits absorb the cancellation between the rational and surd parts.
    const long scale = needed_scale(std::fabs(approx), significant) + 20;
    // value * 10^scale = (r*10^scale) + s * sqrt(d * 10^(2 scale))
    BigInt p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(scale));
    BigInt root;
    BigInt radicand_scaled = value.radicand * p10 * p10;
    mpz_sqrt(root.get_mpz_t(), radicand_scaled.get_mpz_t());
    // root <= sqrt(d)*10^scale < root + 1, so the sum is known to within |s|.
    const Rational total = value.rational * Rational(p10) + value.surd_coef * Rational(root);
    const Rational mag = total.abs();
    BigInt digits;
    mpz_fdiv_q(digits.get_mpz_t(), mag.numerator().get_mpz_t(), mag.denominator().get_mpz_t());
    return format_scaled(digits, scale, significant, negative);
}

const Rational& pi_rational() {
    static const Rational pi = Rational::parse(
        "3141592653589793238462643383279502884197169399375105820974944/"
        "1000000000000000000000000000000000000000000000000000000000000");
    return pi;
}

std::string render_with_a2(const Rational& value, bool a2_normalized, int significant) {
    if (!a2_normalized) {
        return to_decimal(value, significant);
    }
    const Rational& pi = pi_rational();
    return to_decimal(value * Rational(6) / (pi * pi), significant);
}

}  // namespace zpm
