#include "zpm/zeta.hpp"

#include "zpm/errors.hpp"
#include "zpm/summation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace zpm {

namespace {

// B_{2j} / (2j)! for j = 1..16
constexpr std::array<long double, 17> kBernoulliOverFactorial = [] {
    constexpr long double num[17] = {0.0L,
                                     1.0L,
                                     -1.0L,
                                     1.0L,
                                     -1.0L,
                                     5.0L,
                                     -691.0L,
                                     7.0L,
                                     -3617.0L,
                                     43867.0L,
                                     -174611.0L,
                                     854513.0L,
                                     -236364091.0L,
                                     8553103.0L,
                                     -23749461029.0L,
                                     8615841276005.0L,
                                     -7709321041217.0L};
    constexpr long double den[17] = {1.0L,  6.0L,   30.0L,  42.0L, 30.0L,  66.0L,
                                     2730.0L, 6.0L, 510.0L, 798.0L, 330.0L, 138.0L,
                                     2730.0L, 6.0L, 870.0L, 14322.0L, 510.0L};
    std::array<long double, 17> out{};
    long double fact = 1.0L;
    for (int j = 1; j <= 16; ++j) {
        fact *= static_cast<long double>((2 * j - 1) * (2 * j));
        out[j] = num[j] / den[j] / fact;
    }
    return out;
}();

// Complex helpers written out so that negating every imaginary input
// negates every imaginary output exactly.
inline Complex mul(Complex a, Complex b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}
inline Complex div(Complex a, Complex b) {
    const double den = b.real() * b.real() + b.imag() * b.imag();
    return {(a.real() * b.real() + a.imag() * b.imag()) / den,
            (a.imag() * b.real() - a.real() * b.imag()) / den};
}
inline Complex scale(Complex a, double k) { return {a.real() * k, a.imag() * k}; }

// n^{-s} given log n
inline Complex neg_power(double log_n, Complex s) {
    const double mag = std::exp(-s.real() * log_n);
    double sine;
    double cosine;
    ::sincos(s.imag() * log_n, &sine, &cosine);
    return {mag * cosine, -(mag * sine)};
}

long initial_length(Complex s) {
    return static_cast<long>(std::ceil(std::fabs(s.imag()) / std::numbers::pi + 10.0));
}

// Magnitude of the first omitted Bernoulli term (and of its s-derivative),
// times |s+2M+1|/(sigma+2M+1).
double remainder_bound(Complex s, long N, int terms) {
    const double logN = std::log(static_cast<double>(N));
    Complex poly(1.0, 0.0);
    Complex dpoly(0.0, 0.0);
    for (int i = 0; i <= 2 * terms; ++i) {
        const Complex factor = s + static_cast<double>(i);
        dpoly = mul(dpoly, factor) + poly;
        poly = mul(poly, factor);
    }
    const double w = std::exp(-(s.real() + 2.0 * terms + 1.0) * logN);
    const double c = std::fabs(static_cast<double>(kBernoulliOverFactorial[terms + 1]));
    const double grow =
        std::abs(s + static_cast<double>(2 * terms + 1)) / (s.real() + 2.0 * terms + 1.0);
    const double value_term = c * std::abs(poly) * w;
    const double deriv_term = c * w * std::abs(dpoly - scale(poly, logN));
    return grow * std::max(value_term, deriv_term);
}

}  // namespace

ZetaEngine::ZetaEngine(EvalConfig cfg) : cfg_(cfg) {
    if (cfg_.bernoulli_terms < 1 || cfg_.bernoulli_terms > 15) {
        throw ArgumentError("bernoulli_terms must lie in [1, 15]");
    }
    if (!(cfg_.target_abs_error > 0.0) || !(cfg_.max_height > 0.0)) {
        throw ArgumentError("EvalConfig needs positive max_height and target_abs_error");
    }
    const auto size = static_cast<std::size_t>(
        2.0 * (std::min(cfg_.max_height, 1e6) / std::numbers::pi + 10.0));
    log_table_.resize(size);
    rsqrt_table_.resize(size);
    spf_table_.assign(size, 0);
    for (std::size_t n = 1; n < size; ++n) {
        log_table_[n] = std::log(static_cast<double>(n));
        rsqrt_table_[n] = 1.0 / std::sqrt(static_cast<double>(n));
    }
    for (std::size_t p = 2; p < size; ++p) {
        if (spf_table_[p] != 0) {
            continue;
        }
        for (std::size_t m = p; m < size; m += p) {
            if (spf_table_[m] == 0) {
                spf_table_[m] = static_cast<std::uint32_t>(p);
            }
        }
    }
}

void ZetaEngine::check_domain(Complex s) const {
    if (s.real() == 1.0 && s.imag() == 0.0) {
        throw PoleError("zeta has a pole at s = 1");
    }
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        throw ArgumentError("non-finite argument");
    }
    if (s.real() < -1.0) {
        throw RangeError("Re(s) = " + std::to_string(s.real()) + " below supported -1");
    }
    if (std::fabs(s.imag()) > cfg_.max_height) {
        throw RangeError("|Im(s)| = " + std::to_string(std::fabs(s.imag())) +
                         " above configured max_height " + std::to_string(cfg_.max_height));
    }
}

long ZetaEngine::truncation_length(Complex s) const {
    check_domain(s);
    long N = initial_length(s);
    while (remainder_bound(s, N, cfg_.bernoulli_terms) > cfg_.target_abs_error) {
        N += N / 4 + 1;
    }
    return N;
}

std::pair<Complex, Complex> ZetaEngine::zeta_and_deriv(Complex s) const {
    const long N = truncation_length(s);
    ComplexNeumaierSum value;
    ComplexNeumaierSum deriv;

    // Plain sums inside blocks of 256 terms, compensated across blocks.
    // On the critical line n^{-s} is multiplicative, so only primes need a
    // sincos; composites are products of two earlier terms.
    const bool critical = s.real() == 0.5 && N <= static_cast<long>(log_table_.size());
    std::vector<Complex> powers;
    if (critical) {
        powers.resize(static_cast<std::size_t>(N));
        powers[1] = Complex(1.0, 0.0);
    }
    for (long start = 1; start < N; start += 256) {
        const long stop = std::min(N, start + 256);
        double vr = 0.0, vi = 0.0, dr = 0.0, di = 0.0;
        for (long n = start; n < stop; ++n) {
            double re;
            double im;
            double ln;
            if (critical) {
                ln = log_table_[n];
                const auto p = static_cast<long>(spf_table_[n]);
                if (n > 1 && p != n) {
                    powers[n] = mul(powers[p], powers[n / p]);
                } else if (n > 1) {
                    double sine;
                    double cosine;
                    ::sincos(s.imag() * ln, &sine, &cosine);
                    powers[n] = Complex(rsqrt_table_[n] * cosine, -(rsqrt_table_[n] * sine));
                }
                re = powers[n].real();
                im = powers[n].imag();
            } else {
                ln = std::log(static_cast<double>(n));
                const Complex term = neg_power(ln, s);
                re = term.real();
                im = term.imag();
            }
            vr += re;
            vi += im;
            dr -= re * ln;
            di -= im * ln;
        }
        value.add({vr, vi});
        deriv.add({dr, di});
    }

    const double logN = std::log(static_cast<double>(N));
    const double dN = static_cast<double>(N);
    const Complex w = neg_power(logN, s);  // N^{-s}
    const Complex sm1 = s - 1.0;

    // N^{1-s}/(s-1)
    const Complex tail = div(scale(w, dN), sm1);
    value.add(tail);
    deriv.add(scale(tail, -logN) - div(tail, sm1));

    // N^{-s}/2
    value.add(scale(w, 0.5));
    deriv.add(scale(w, -0.5 * logN));

    // sum_j B_2j/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1}
    Complex poly = s;
    Complex dpoly(1.0, 0.0);
    double npow = 1.0 / dN;  // N^{1-2j}
    for (int j = 1; j <= cfg_.bernoulli_terms; ++j) {
        if (j > 1) {
            for (int i = 2 * j - 3; i <= 2 * j - 2; ++i) {
                const Complex factor = s + static_cast<double>(i);
                dpoly = mul(dpoly, factor) + poly;
                poly = mul(poly, factor);
            }
            npow /= dN * dN;
        }
        const double c = static_cast<double>(kBernoulliOverFactorial[j]) * npow;
        value.add(scale(mul(poly, w), c));
        deriv.add(scale(mul(dpoly - scale(poly, logN), w), c));
    }
    return {value.value(), deriv.value()};
}

Complex ZetaEngine::zeta(Complex s) const { return zeta_and_deriv(s).first; }
Complex ZetaEngine::zeta_deriv(Complex s) const { return zeta_and_deriv(s).second; }

Complex zeta(Complex s, const EvalConfig& cfg) { return ZetaEngine(cfg).zeta(s); }
Complex zeta_deriv(Complex s, const EvalConfig& cfg) { return ZetaEngine(cfg).zeta_deriv(s); }

}  // namespace zpm
