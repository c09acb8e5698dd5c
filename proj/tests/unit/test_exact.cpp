#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zpm/decimal.hpp"
#include "zpm/errors.hpp"
#include "zpm/exact_constants.hpp"

#include <cmath>

using namespace zpm;
using namespace zpm::exact;

namespace {

// Four-fold factorial sum for the leading coefficient of
// sum d^(n1,n2)(n) d^(n3,n4)(n) / n, before the binomial simplifications.
Rational four_fold_oracle(unsigned n1, unsigned n2, unsigned n3, unsigned n4) {
    BigInt total = 0;
    for (unsigned a = 0; a <= n1; ++a) {
        for (unsigned c = 0; c <= n2; ++c) {
            for (unsigned e = 0; e <= n3; ++e) {
                for (unsigned g = 0; g <= n4; ++g) {
                    const unsigned b = n1 - a, dd = n2 - c, f = n3 - e, h = n4 - g;
                    total += binom(n1, a) * binom(n2, c) * binom(n3, e) * binom(n4, g) *
                             factorial(a + e) * factorial(c + f) * factorial(b + g) *
                             factorial(dd + h);
                }
            }
        }
    }
    return Rational(total, factorial(n1 + n2 + n3 + n4 + 4));
}

Rational r(const char* s) { return Rational::parse(s); }

}  // namespace

TEST_CASE("rationals stay reduced and exact") {
    CHECK(Rational(6, 8) == r("3/4"));
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK(Rational(3, -6).sign() == -1);
    CHECK((r("1/3") + r("1/6")) == r("1/2"));
    CHECK(Rational::from_double(0.1) != r("1/10"));
    CHECK(Rational::from_double(0.375) == r("3/8"));
    CHECK_THROWS_AS(Rational(1, 0), ArgumentError);
}

TEST_CASE("binomial coefficients vanish outside [0, n]") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(5, 6) == 0);
    CHECK(binom(0, 0) == 1);
}

TEST_CASE("Vandermonde-type identity sum_k C(l-k,m) C(q+k,n) = C(l+q+1,m+n+1)") {
    for (long l = 0; l <= 9; ++l) {
        for (long m = 0; m <= 5; ++m) {
            for (long n = 0; n <= 5; ++n) {
                for (long q = 0; q <= n; ++q) {
                    BigInt lhs = 0;
                    for (long k = 0; k <= l; ++k) {
                        lhs += binom(l - k, m) * binom(q + k, n);
                    }
                    CHECK(lhs == binom(l + q + 1, m + n + 1));
                }
            }
        }
    }
}

TEST_CASE("hockey-stick identity sum_k C(r+k,k) = C(r+n+1,n)") {
    for (long rr = 0; rr <= 10; ++rr) {
        for (long n = 0; n <= 10; ++n) {
            BigInt lhs = 0;
            for (long k = 0; k <= n; ++k) {
                lhs += binom(rr + k, k);
            }
            CHECK(lhs == binom(rr + n + 1, n));
        }
    }
}

TEST_CASE("leading_coeff_T4 matches the four-fold factorial sum") {
    for (unsigned n1 = 0; n1 <= 2; ++n1) {
        for (unsigned n2 = 0; n2 <= 2; ++n2) {
            for (unsigned n3 = 0; n3 <= 2; ++n3) {
                for (unsigned n4 = 0; n4 <= 2; ++n4) {
                    CHECK(leading_coeff_T4(n1, n2, n3, n4) == four_fold_oracle(n1, n2, n3, n4));
                }
            }
        }
    }
    CHECK(leading_coeff_T4(3, 1, 4, 0) == four_fold_oracle(3, 1, 4, 0));
    CHECK(leading_coeff_T4(0, 0, 0, 0) == r("1/24"));
}

TEST_CASE("leading_coeff_T4 symmetries") {
    for (unsigned n1 = 0; n1 <= 2; ++n1) {
        for (unsigned n2 = 0; n2 <= 2; ++n2) {
            for (unsigned n3 = 0; n3 <= 2; ++n3) {
                for (unsigned n4 = 0; n4 <= 2; ++n4) {
                    const Rational v = leading_coeff_T4(n1, n2, n3, n4);
                    CHECK(v == leading_coeff_T4(n2, n1, n4, n3));
                    CHECK(v == leading_coeff_T4(n3, n4, n1, n2));
                    CHECK(v == leading_coeff_T4(n2, n1, n3, n4));
                }
            }
        }
    }
    CHECK_THROWS_AS(leading_coeff_T4(kMaxT4Order + 1, 0, 0, 0), ArgumentError);
}

TEST_CASE("coeff_C is the special case (mu, 0, nu, 0)") {
    for (unsigned mu = 0; mu <= 4; ++mu) {
        for (unsigned nu = 0; nu <= 4; ++nu) {
            CHECK(coeff_C(mu, nu) == leading_coeff_T4(mu, 0, nu, 0));
            const MainTerm m = main_term_T(SeqDescriptor::divisor(mu), SeqDescriptor::divisor(nu));
            CHECK(m.coefficient(0, mu + nu + 4) == coeff_C(mu, nu));
        }
    }
}

TEST_CASE("alpha and d^(1,1) are the same sequence to every consumer") {
    const auto alpha = SeqDescriptor::alpha();
    const auto d11 = SeqDescriptor::divisor(1, 1);
    for (const auto& other : {SeqDescriptor::divisor(0), SeqDescriptor::divisor(1),
                              SeqDescriptor::divisor(2), alpha}) {
        CHECK(main_term_T(alpha, other) == main_term_T(d11, other));
        CHECK(main_term_Tp(alpha, other) == main_term_Tp(d11, other));
        CHECK(main_term_Tp(other, alpha) == main_term_Tp(other, d11));
    }
}

TEST_CASE("apply_log_weight follows partial summation") {
    // sum log^j(n) f(n) with f ~ s l^v has main term s v / (v + j) l^(v + j).
    const MainTerm m = MainTerm::monomial(r("1/24"), 0, 4);
    CHECK(apply_log_weight(m, 2) == MainTerm::monomial(r("1/36"), 0, 6));
    CHECK(apply_log_weight(m, 0) == m);
    // A u-power is carried through unchanged.
    const MainTerm mu = MainTerm::monomial(r("1/24"), 1, 4);
    CHECK(apply_log_weight(mu, 1).coefficient(1, 5) == r("1/30"));
}

TEST_CASE("MainTerm rejects inhomogeneous terms") {
    MainTerm m(5);
    CHECK_THROWS_AS(m.add(1, 3, r("1")), ArgumentError);
    m.add(1, 4, r("0"));
    CHECK(m.empty());
}

TEST_CASE("functional_A of a monomial is u! v! / (u+v+1)!") {
    CHECK(functional_A(MainTerm::monomial(r("1"), 2, 3)).value ==
          Rational(factorial(2) * factorial(3), factorial(6)));
}

TEST_CASE("closed_form_A equals functional_A(main_term_Tp) for mu, nu <= 4") {
    for (unsigned mu = 0; mu <= 4; ++mu) {
        for (unsigned nu = 0; nu <= 4; ++nu) {
            const auto tp = main_term_Tp(SeqDescriptor::divisor(mu), SeqDescriptor::divisor(nu));
            CHECK(closed_form_A(mu, nu) == functional_A(tp));
        }
    }
}

TEST_CASE("assembled S_alpha and S_beta") {
    const auto c = corollary1_coefficients();
    CHECK(c.s_alpha.value == r("61/181440"));
    CHECK(c.s_beta.value == r("97/181440"));
    CHECK(c.s_alpha_pi3 == r("61/60480"));
    CHECK(c.s_beta_pi3 == r("97/60480"));
    CHECK(c.s_beta_paired == c.s_beta_nine_term);
}

TEST_CASE("J_2 bound constants") {
    const auto b = theorem1_bounds(30);
    CHECK(b.product == Rational(36, 60480).pow(2));
    CHECK(b.c1_decimal.rfind("0.0000687", 0) == 0);
    CHECK(b.c2_decimal.rfind("0.0051561", 0) == 0);
    const double a = 61.0 / 60480.0, bb = 97.0 / 60480.0;
    CHECK(b.c1.to_double() == doctest::Approx(std::pow(std::sqrt(a) - std::sqrt(bb), 2)).epsilon(1e-12));
    CHECK(b.c2.to_double() == doctest::Approx(std::pow(std::sqrt(a) + std::sqrt(bb), 2)).epsilon(1e-12));
    // c1 + c2 = 2(a + b) is rational.
    CHECK((b.c1.rational + b.c2.rational) == Rational(2) * r("158/60480"));
}

TEST_CASE("shifted pair-sum coefficient: series route equals M route") {
    for (const char* lambda : {"0", "1/2", "1", "2", "-1"}) {
        CHECK(theorem2_coefficient(r(lambda), 5) == theorem2_coefficient_via_M(r(lambda), 12));
    }
    CHECK(theorem2_coefficient(r("0"), 5) == r("1/120"));
}

TEST_CASE("shifted pair-sum coefficient against a floating series") {
    // 1/120 - 4 sum_j (-1)^j lambda^(2j) / (5+2j)!, evaluated independently.
    const double lambda = 1.5;
    double series = 1.0 / 120.0;
    for (int j = 1; j <= 12; ++j) {
        series -= 4.0 * std::pow(-1.0, j) * std::pow(lambda, 2 * j) / std::tgamma(6.0 + 2 * j);
    }
    CHECK(theorem2_coefficient(r("3/2"), 12).to_double() == doctest::Approx(series).epsilon(1e-14));
}

TEST_CASE("M_series at lambda = 0 reduces to functional_A") {
    const auto tp = main_term_Tp(SeqDescriptor::divisor(1), SeqDescriptor::divisor(2));
    const auto ms = M_series(tp, r("0"), 4);
    CHECK(ms.value.re == functional_A(tp).value);
    CHECK(ms.value.im.is_zero());
    CHECK(M_series(tp, r("1"), 12).tail_bound < M_series(tp, r("1"), 6).tail_bound);
    CHECK_THROWS_AS(M_series(tp, r("5"), 4), ArgumentError);
}

TEST_CASE("Barnes G at integers and random-matrix constants") {
    CHECK(barnes_g(1) == 1);
    CHECK(barnes_g(2) == 1);
    CHECK(barnes_g(3) == 1);
    CHECK(barnes_g(4) == 2);
    CHECK(barnes_g(5) == 12);
    CHECK(barnes_g(6) == 288);
    const auto k1 = rmt_leading_constant(1);
    CHECK(k1.barnes_ratio == r("1/12"));
    CHECK(k1.a_k == doctest::Approx(1.0));
    CHECK(k1.certified);
    const auto k2 = rmt_leading_constant(2);
    CHECK(k2.barnes_ratio == r("1/8640"));
    CHECK(k2.a_k == doctest::Approx(6.0 / (M_PI * M_PI)).epsilon(1e-6));
    CHECK(k2.certified);
    CHECK(k2.coefficient * M_PI * M_PI * M_PI == doctest::Approx(1.0 / 2880.0).epsilon(1e-6));
    const auto k3 = rmt_leading_constant(3);
    CHECK_FALSE(k3.certified);
    CHECK(k3.warning.has_value());
    CHECK_THROWS_AS(rmt_leading_constant(4), ArgumentError);
}

TEST_CASE("decimal rendering truncates") {
    CHECK(to_decimal(r("2/3"), 5) == "0.66666");
    CHECK(to_decimal(r("-1/8"), 3) == "-0.125");
}
