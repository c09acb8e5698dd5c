#pragma once

#include "zpm/rational.hpp"

#include <string>

namespace zpm {

// r + s * sqrt(radicand) with rational r, s and a non-negative integer radicand.
struct QuadraticSurd {
    Rational rational;
    Rational surd_coef;
    BigInt radicand;

    // Exact product of two surds sharing the same radicand.
    friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
    bool is_rational() const { return surd_coef.is_zero() || radicand == 0; }
    double to_double() const;
};

// Decimal rendering with `significant` significant digits, truncated (not
// rounded) so that every printed digit is correct.
std::string to_decimal(const Rational& value, int significant = 30);
std::string to_decimal(const QuadraticSurd& value, int significant = 30);

// pi to 60 decimal places; only used when rendering a2- or pi-bearing values.
const Rational& pi_rational();

// value, times a2 = 6/pi^2 when a2_normalized, rendered to `significant` digits.
std::string render_with_a2(const Rational& value, bool a2_normalized, int significant = 20);

}  // namespace zpm
