#pragma once

#include "zpm/decimal.hpp"
#include "zpm/main_term.hpp"
#include "zpm/rational.hpp"
#include "zpm/seq_descriptor.hpp"

#include <optional>
#include <string>

namespace zpm::exact {

// Leading coefficient (without the a2 factor) of
//   sum_{n<=t} d^(n1,n2)(n) d^(n3,n4)(n) / n,
// a polynomial in log t of degree n1+n2+n3+n4+4.  Uses the simplified
// double sum over binomials rather than the four-fold factorial sum.
Rational leading_coeff_T4(unsigned n1, unsigned n2, unsigned n3, unsigned n4);

inline constexpr unsigned kMaxT4Order = 8;

// C(mu, nu) = mu! nu! / (mu+nu+4)! * (binom(mu+nu+2, mu+1) - 1).
Rational coeff_C(unsigned mu, unsigned nu);

// Main term of sum_{n<=t} a(n) b(n) / n in the variable l = log t.
MainTerm main_term_T(const SeqDescriptor& a, const SeqDescriptor& b);

// Main term of sum_{n<=t} a(n) b(pn) / n in (l, u) = (log t, log p).
MainTerm main_term_Tp(const SeqDescriptor& a, const SeqDescriptor& b);

// Partial-summation log-power operator: s u^a l^v  ->  s v/(v+j) u^a l^(v+j).
MainTerm apply_log_weight(const MainTerm& m, unsigned j);

// sum_uv s_uv u! v! / (u+v+1)!
Coefficient functional_A(const MainTerm& m);

// Closed form of functional_A(main_term_Tp(d^(mu), d^(nu))).
Coefficient closed_form_A(unsigned mu, unsigned nu);

// c_{a,b} - A(a,b) - A(b,a): coefficient of a2 T L^(beta+1) / 2pi in the
// mean value of D_a(rho) D_b(1-rho) over zeros.
Coefficient mean_value_coefficient(const SeqDescriptor& a, const SeqDescriptor& b);

struct Corollary1Coefficients {
    // Coefficients of a2 T L^9 / 2pi.
    Coefficient s_alpha;
    Coefficient s_beta;
    // Same constants in units of T L^9 / pi^3 (a2/2pi = 3/pi^3 folded in).
    Rational s_alpha_pi3;
    Rational s_beta_pi3;
    // s_beta from the collapsed six-term (conjugate-paired) combination and
    // from the nine ordered products of the beta_t expansion.
    Rational s_beta_paired;
    Rational s_beta_nine_term;
};

// Throws ConsistencyError when the assembly routes disagree.
Corollary1Coefficients corollary1_coefficients();

struct Theorem1Bounds {
    Rational a;
    Rational b;
    QuadraticSurd c1;  // (sqrt a - sqrt b)^2
    QuadraticSurd c2;  // (sqrt a + sqrt b)^2
    std::string c1_decimal;
    std::string c2_decimal;
    // c1 * c2 computed exactly in Q(sqrt(ab)); equals (a - b)^2.
    Rational product;
};

Theorem1Bounds theorem1_bounds(int significant_digits = 30);

struct MSeries {
    GaussianRational value;  // in units of L^(degree+1)
    Rational tail_bound;
    bool a2_normalized = true;
};

// Partial sum over k < terms of (i lambda)^k / k! sum_uv s_uv (u+k)! v! / (u+v+k+1)!.
MSeries M_series(const MainTerm& m, const Rational& lambda, unsigned terms);

// 1/120 - 4 sum_{1<=j<=J} (-1)^j lambda^(2j) / (5+2j)!, coefficient of a2 T L^5 / 2pi.
Rational theorem2_coefficient(const Rational& lambda, unsigned J);

// Same coefficient assembled as 1/24 - 2 Re M_series(main_term_Tp(d, d), lambda, K).
Rational theorem2_coefficient_via_M(const Rational& lambda, unsigned K);

struct RmtConstant {
    unsigned k = 0;
    Rational barnes_ratio;       // G(k+2)^2 / G(2k+3)
    double a_k = 0.0;            // arithmetic factor (Euler product)
    double coefficient = 0.0;    // barnes_ratio * a_k / 2pi: J_k ~ coefficient * T L^(k(k+2)+1)
    double tail_estimate = 0.0;  // relative size of the omitted primes
    bool certified = false;      // tail small enough for 6 significant digits
    std::optional<std::string> warning;
};

// G(n) for integer n >= 1, from G(n+1) = prod_{j<n} j!.
BigInt barnes_g(unsigned n);

// Random-matrix prediction for J_k, 1 <= k <= 3, with the Euler product for
// a_k truncated to primes below prime_bound.
RmtConstant rmt_leading_constant(unsigned k, unsigned long prime_bound = 1000000);

}  // namespace zpm::exact
