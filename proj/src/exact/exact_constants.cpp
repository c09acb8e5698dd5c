#include "zpm/exact_constants.hpp"

#include "zpm/errors.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace zpm::exact {

namespace {

Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }

Rational inverse_factorial_ratio(unsigned a, unsigned b, unsigned c) {
    // a! b! / c!
    return ratio(factorial(a) * factorial(b), factorial(c));
}

void check_order(unsigned n, const char* what) {
    if (n > kMaxT4Order) {
        throw ArgumentError(std::string(what) + " order " + std::to_string(n) +
                            " exceeds supported maximum " + std::to_string(kMaxT4Order));
    }
}

// Main term of T_{mu,nu;p}(t) = sum_{n<=t} d^(mu)(n) d^(nu)(pn)/n:
//   2 C(mu,nu) l^(mu+nu+4) + sum_{k<nu} binom(nu,k) u^(nu-k) l^(mu+k+4) C(mu,k)
MainTerm divisor_pair_Tp(unsigned mu, unsigned nu) {
    MainTerm m(mu + nu + 4);
    m.add(0, mu + nu + 4, Rational(2) * coeff_C(mu, nu));
    for (unsigned k = 0; k < nu; ++k) {
        m.add(nu - k, mu + k + 4, Rational(binom(nu, k)) * coeff_C(mu, k));
    }
    return m;
}

bool plain_divisor(const SeqDescriptor& s) {
    return s.kind() == SeqDescriptor::Kind::divisor_deriv;
}

}  // namespace

Rational leading_coeff_T4(unsigned n1, unsigned n2, unsigned n3, unsigned n4) {
    for (unsigned n : {n1, n2, n3, n4}) {
        check_order(n, "divisor derivative");
    }
    BigInt sum = 0;
    for (unsigned a = 0; a <= n1; ++a) {
        for (unsigned c = 0; c <= n2; ++c) {
            sum += binom(n3 + 1 + a + c, n3) * binom(n4 + 1 + n1 + n2 - a - c, n4);
        }
    }
    const BigInt prefactor = factorial(n1) * factorial(n2) * factorial(n3) * factorial(n4);
    return ratio(prefactor * sum, factorial(n1 + n2 + n3 + n4 + 4));
}

Rational coeff_C(unsigned mu, unsigned nu) {
    return inverse_factorial_ratio(mu, nu, mu + nu + 4) *
           Rational(BigInt(binom(mu + nu + 2, mu + 1) - 1));
}

MainTerm apply_log_weight(const MainTerm& m, unsigned j) {
    if (j == 0) {
        return m;
    }
    MainTerm out(m.degree() + j, m.a2_normalized());
    for (const auto& [key, coef] : m.coefficients()) {
        const auto [u, v] = key;
        if (v == 0) {
            continue;
        }
        out.add(u, v + j, coef * Rational(static_cast<long>(v)) / Rational(static_cast<long>(v + j)));
    }
    return out;
}

MainTerm main_term_T(const SeqDescriptor& a, const SeqDescriptor& b) {
    if (plain_divisor(a) && plain_divisor(b)) {
        const unsigned degree = static_cast<unsigned>(a.degree() + b.degree() + 4);
        return MainTerm::monomial(
            leading_coeff_T4(static_cast<unsigned>(a.mu()), static_cast<unsigned>(a.nu()),
                             static_cast<unsigned>(b.mu()), static_cast<unsigned>(b.nu())),
            0, degree);
    }
    MainTerm total(static_cast<unsigned>(a.degree() + b.degree() + 4));
    for (const auto& ta : expand_log_divisor(a)) {
        for (const auto& tb : expand_log_divisor(b)) {
            check_order(static_cast<unsigned>(ta.mu), a.name().c_str());
            check_order(static_cast<unsigned>(tb.mu), b.name().c_str());
            const auto mu = static_cast<unsigned>(ta.mu);
            const auto nu = static_cast<unsigned>(tb.mu);
            MainTerm base = MainTerm::monomial(coeff_C(mu, nu), 0, mu + nu + 4);
            total += apply_log_weight(base, static_cast<unsigned>(ta.log_power + tb.log_power))
                         .scaled(ta.coef * tb.coef);
        }
    }
    return total;
}

MainTerm main_term_Tp(const SeqDescriptor& a, const SeqDescriptor& b) {
    MainTerm total(static_cast<unsigned>(a.degree() + b.degree() + 4));
    for (const auto& ta : expand_log_divisor(a)) {
        for (const auto& tb : expand_log_divisor(b)) {
            check_order(static_cast<unsigned>(ta.mu), a.name().c_str());
            check_order(static_cast<unsigned>(tb.mu), b.name().c_str());
            const MainTerm base =
                divisor_pair_Tp(static_cast<unsigned>(ta.mu), static_cast<unsigned>(tb.mu));
            // log^j(pn) = sum_i binom(j,i) log^(j-i)(p) log^i(n)
            const int j = tb.log_power;
            for (int i = 0; i <= j; ++i) {
                const Rational c = ta.coef * tb.coef * Rational(binom(j, i));
                total += apply_log_weight(base, static_cast<unsigned>(ta.log_power + i))
                             .times_log_p(static_cast<unsigned>(j - i))
                             .scaled(c);
            }
        }
    }
    return total;
}

Coefficient functional_A(const MainTerm& m) {
    Rational sum;
    for (const auto& [key, coef] : m.coefficients()) {
        const auto [u, v] = key;
        sum += coef * inverse_factorial_ratio(u, v, u + v + 1);
    }
    return {sum, m.a2_normalized()};
}

Coefficient closed_form_A(unsigned mu, unsigned nu) {
    if (nu == 0) {
        const long m = mu;
        return {Rational(2) / Rational((m + 5) * (m + 4) * (m + 3) * (m + 2)), true};
    }
    const Rational bracket = Rational(BigInt(BigInt(2) * binom(mu + nu + 2, nu + 1) +
                                             binom(mu + nu + 2, nu) - static_cast<long>(nu) - 3));
    return {inverse_factorial_ratio(mu, nu, mu + nu + 5) * bracket, true};
}

Coefficient mean_value_coefficient(const SeqDescriptor& a, const SeqDescriptor& b) {
    const MainTerm t = main_term_T(a, b);
    const unsigned beta = t.degree();
    const Rational c_ab = t.coefficient(0, beta);
    const Coefficient a_ab = functional_A(main_term_Tp(a, b));
    const Coefficient a_ba = functional_A(main_term_Tp(b, a));
    return {c_ab - a_ab.value - a_ba.value, true};
}

Corollary1Coefficients corollary1_coefficients() {
    const auto d = SeqDescriptor::divisor(0);
    const auto d1 = SeqDescriptor::divisor(1);
    const auto alpha = SeqDescriptor::alpha();

    // S_alpha: T_{alpha,alpha} leading term minus 2 A(alpha, alpha).
    const Rational t_alpha = main_term_T(alpha, alpha).coefficient(0, 8);
    const Rational t_alpha_direct = leading_coeff_T4(1, 1, 1, 1);
    if (t_alpha != t_alpha_direct) {
        throw ConsistencyError("T_{alpha,alpha}: log-weight route " + t_alpha.str() +
                               " differs from d^(1,1) route " + t_alpha_direct.str());
    }
    const Rational s_alpha = t_alpha - Rational(2) * functional_A(main_term_Tp(alpha, alpha)).value;

    // Paired form: I4(d,d) + 4 I2(d1,d1) + I(alpha,alpha) - 4 Re I3(d,d1)
    //              + 2 Re I2(d,alpha) - 4 Re I1(d1,alpha).
    const auto I = [](const SeqDescriptor& a, const SeqDescriptor& b) {
        return mean_value_coefficient(a, b).value;
    };
    const Rational paired = I(d, d) + Rational(4) * I(d1, d1) + s_alpha -
                            Rational(4) * I(d, d1) + Rational(2) * I(d, alpha) -
                            Rational(4) * I(d1, alpha);

    // Nine ordered products of beta_t(m) beta_t(n) = (l^2 d - 2l d1 + alpha)(m) (...)(n).
    const SeqDescriptor basis[3] = {d, d1, alpha};
    const long weights[3] = {1, -2, 1};
    Rational nine;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            nine += Rational(weights[i] * weights[j]) * I(basis[i], basis[j]);
        }
    }
    if (paired != nine) {
        throw ConsistencyError("S_beta: paired route " + paired.str() + " differs from nine-term route " +
                               nine.str());
    }
    if (s_alpha != I(alpha, alpha)) {
        throw ConsistencyError("S_alpha: direct assembly differs from mean-value coefficient");
    }

    Corollary1Coefficients out;
    out.s_alpha = {s_alpha, true};
    out.s_beta = {paired, true};
    out.s_alpha_pi3 = Rational(3) * s_alpha;
    out.s_beta_pi3 = Rational(3) * paired;
    out.s_beta_paired = paired;
    out.s_beta_nine_term = nine;
    return out;
}

Theorem1Bounds theorem1_bounds(int significant_digits) {
    const auto cor = corollary1_coefficients();
    Theorem1Bounds out;
    out.a = cor.s_alpha_pi3;
    out.b = cor.s_beta_pi3;
    // sqrt(ab) = sqrt(p q) / q for ab = p/q.
    const Rational ab = out.a * out.b;
    const BigInt radicand = ab.numerator() * ab.denominator();
    const Rational unit = Rational(BigInt(1), ab.denominator());
    out.c1 = {out.a + out.b, Rational(-2) * unit, radicand};
    out.c2 = {out.a + out.b, Rational(2) * unit, radicand};
    out.c1_decimal = to_decimal(out.c1, significant_digits);
    out.c2_decimal = to_decimal(out.c2, significant_digits);
    const QuadraticSurd prod = out.c1 * out.c2;
    if (!prod.surd_coef.is_zero()) {
        throw ConsistencyError("c1*c2 has an irrational part");
    }
    out.product = prod.rational;
    return out;
}

MSeries M_series(const MainTerm& m, const Rational& lambda, unsigned terms) {
    if (terms == 0) {
        throw ArgumentError("M_series needs at least one term");
    }
    MSeries out;
    out.a2_normalized = m.a2_normalized();
    Rational lambda_pow(1);
    for (unsigned k = 0; k < terms; ++k) {
        Rational weight;
        for (const auto& [key, coef] : m.coefficients()) {
            const auto [u, v] = key;
            weight += coef * inverse_factorial_ratio(u + k, v, u + v + k + 1);
        }
        const Rational term = lambda_pow * Rational(BigInt(1), factorial(k)) * weight;
        switch (k % 4) {
        case 0: out.value.re += term; break;
        case 1: out.value.im += term; break;
        case 2: out.value.re -= term; break;
        default: out.value.im -= term; break;
        }
        lambda_pow *= lambda;
    }
    // Each weight is a Beta integral <= 1, so the tail is at most
    // sum|s_uv| * sum_{k>=K} |lambda|^k/k! <= sum|s_uv| |lambda|^K/K! (K+1)/(K+1-|lambda|).
    const Rational abs_lambda = lambda.abs();
    const Rational k1(static_cast<long>(terms) + 1);
    if (abs_lambda >= k1) {
        throw ArgumentError("truncation order " + std::to_string(terms) +
                            " too small for |lambda| = " + abs_lambda.str());
    }
    Rational coef_mass;
    for (const auto& [key, coef] : m.coefficients()) {
        coef_mass += coef.abs();
    }
    out.tail_bound = coef_mass * abs_lambda.pow(terms) * Rational(BigInt(1), factorial(terms)) *
                     k1 / (k1 - abs_lambda);
    return out;
}

Rational theorem2_coefficient(const Rational& lambda, unsigned J) {
    if (J == 0) {
        throw ArgumentError("theorem2_coefficient needs J >= 1");
    }
    Rational sum;
    const Rational lambda2 = lambda * lambda;
    Rational power(1);
    for (unsigned j = 1; j <= J; ++j) {
        power *= lambda2;
        Rational term = power * Rational(BigInt(1), factorial(5 + 2 * j));
        if (j % 2 == 1) {
            term = -term;
        }
        sum += term;
    }
    return Rational(BigInt(1), BigInt(120)) - Rational(4) * sum;
}

Rational theorem2_coefficient_via_M(const Rational& lambda, unsigned K) {
    const auto d = SeqDescriptor::divisor(0);
    const Rational c_dd = main_term_T(d, d).coefficient(0, 4);
    const MSeries m = M_series(main_term_Tp(d, d), lambda, K);
    return c_dd - Rational(2) * m.value.re;
}

BigInt barnes_g(unsigned n) {
    if (n == 0) {
        throw ArgumentError("Barnes G has a zero at 0; only n >= 1 supported");
    }
    BigInt g = 1;
    for (unsigned j = 1; j + 1 < n; ++j) {
        g *= factorial(j);
    }
    return g;
}

namespace {

std::vector<unsigned long> primes_below(unsigned long bound) {
    std::vector<bool> composite(bound, false);
    std::vector<unsigned long> primes;
    for (unsigned long i = 2; i < bound; ++i) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(i);
        for (unsigned long j = i * i; j < bound; j += i) {
            composite[j] = true;
        }
    }
    return primes;
}

// log of (1-x)^(k^2) sum_m binom(m+k-1, m)^2 x^m
double log_local_factor(unsigned k, double x) {
    long double series = 0.0L;
    long double power = 1.0L;
    for (unsigned m = 0; m < 4000; ++m) {
        const long double c = mpz_get_d(binom(m + k - 1, m).get_mpz_t());
        const long double term = c * c * power;
        series += term;
        if (m > 4 && term < 1e-21L * series) {
            break;
        }
        power *= x;
    }
    return static_cast<double>(static_cast<long double>(k * k) * std::log1p(-static_cast<long double>(x)) +
                               std::log(series));
}

}  // namespace

RmtConstant rmt_leading_constant(unsigned k, unsigned long prime_bound) {
    if (k < 1 || k > 3) {
        throw ArgumentError("random-matrix constant implemented for integer 1 <= k <= 3");
    }
    if (prime_bound < 3) {
        throw ArgumentError("prime bound must be at least 3");
    }
    RmtConstant out;
    out.k = k;
    const BigInt g_num = barnes_g(k + 2);
    out.barnes_ratio = Rational(g_num * g_num, barnes_g(2 * k + 3));

    long double log_sum = 0.0L;
    for (unsigned long p : primes_below(prime_bound)) {
        log_sum += log_local_factor(k, 1.0 / static_cast<double>(p));
    }
    out.a_k = std::exp(static_cast<double>(log_sum));

    // Local factor is 1 + c2 x^2 + O(x^3); the omitted primes contribute about
    // |c2| sum_{p >= P} p^-2 ~ |c2| / (P log P).
    const long K = static_cast<long>(k) * static_cast<long>(k);
    const long bk = static_cast<long>(k) * (static_cast<long>(k) + 1) / 2;
    const long c2 = bk * bk - K * K + K * (K - 1) / 2;
    const double P = static_cast<double>(prime_bound);
    out.tail_estimate = std::fabs(static_cast<double>(c2)) / (P * std::log(P));
    out.certified = out.tail_estimate < 5e-7;
    if (!out.certified) {
        out.warning = "prime bound " + std::to_string(prime_bound) +
                      " leaves relative tail ~" + std::to_string(out.tail_estimate) +
                      "; fewer than 6 significant digits certified";
    }
    out.coefficient = out.barnes_ratio.to_double() * out.a_k / (2.0 * std::numbers::pi);
    return out;
}

}  // namespace zpm::exact
