#include "zpm/divisor_lab.hpp"
#include "zpm/errors.hpp"
#include "zpm/rational.hpp"
#include "zpm/summation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace zpm {

namespace {

std::uint64_t floor_index(double t) {
    return t < 1.0 ? 0 : static_cast<std::uint64_t>(std::floor(t));
}

void require_within(const SieveTable& sieve, std::uint64_t n, const char* what) {
    if (n > sieve.bound()) {
        throw RangeError(std::string(what) + " needs n up to " + std::to_string(n) +
                         " but sieve bound is " + std::to_string(sieve.bound()));
    }
}

void require_prime(const SieveTable& sieve, std::uint64_t p) {
    if (p < 2 || p > sieve.bound() || !sieve.is_prime(p)) {
        throw ArgumentError(std::to_string(p) + " is not a prime within the sieve");
    }
}

double relative(double diff, double scale) {
    return scale == 0.0 ? (diff == 0.0 ? 0.0 : INFINITY) : diff / scale;
}

IdentityResidual residual(double lhs, double rhs) {
    IdentityResidual r{lhs, rhs, std::fabs(lhs - rhs), 0.0};
    r.relative = relative(r.absolute, std::max(std::fabs(lhs), std::fabs(rhs)));
    return r;
}

// sum_{n<=t} a(n) b(p n) / n with arrays already resolved far enough.
double shifted_sum(const std::vector<double>& a, const std::vector<double>& b, std::uint64_t p,
                   std::uint64_t upto) {
    NeumaierSum acc;
    for (std::uint64_t n = 1; n <= upto; ++n) {
        acc.add(a[n] * b[p * n] / static_cast<double>(n));
    }
    return acc.value();
}

double plain_sum(const std::vector<double>& a, const std::vector<double>& b, std::uint64_t upto) {
    NeumaierSum acc;
    for (std::uint64_t n = 1; n <= upto; ++n) {
        acc.add(a[n] * b[n] / static_cast<double>(n));
    }
    return acc.value();
}

}  // namespace

double beta_t(const SieveTable& sieve, std::uint64_t n, double t) {
    const double X = t / (2.0 * std::numbers::pi);
    if (n < 1 || static_cast<double>(n) > X) {
        throw ArgumentError("beta_t needs 1 <= n <= t/2pi");
    }
    require_within(sieve, n, "beta_t");
    const double l = std::log(X);
    const double via_sieve = l * l * sieve.d(n) - 2.0 * l * sieve.d1(n) + sieve.alpha(n);

    // Divisors of n from its factorisation.
    std::vector<std::uint64_t> divisors{1};
    std::uint64_t m = n;
    while (m > 1) {
        const std::uint64_t p = sieve.smallest_prime_factor(m);
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        const std::size_t count = divisors.size();
        std::uint64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i) {
                divisors.push_back(divisors[i] * pk);
            }
        }
    }
    std::sort(divisors.begin(), divisors.end());
    NeumaierSum direct;
    for (std::uint64_t a : divisors) {
        direct.add(std::log(X / static_cast<double>(a)) * std::log(X / static_cast<double>(n / a)));
    }
    const double scale = std::max(std::fabs(via_sieve), l * l * sieve.d(n));
    if (std::fabs(direct.value() - via_sieve) > 1e-10 * scale) {
        throw ConsistencyError("beta_t(" + std::to_string(n) + ", " + std::to_string(t) +
                               "): convolution and sieve routes disagree");
    }
    return via_sieve;
}

double sum_T(const SieveTable& sieve, const SeqDescriptor& a, const SeqDescriptor& b, double t) {
    const std::uint64_t upto = floor_index(t);
    require_within(sieve, upto, "sum_T");
    return plain_sum(sieve.resolve(a, upto), sieve.resolve(b, upto), upto);
}

double sum_Tp(const SieveTable& sieve, const SeqDescriptor& a, const SeqDescriptor& b,
              std::uint64_t p, double t) {
    require_prime(sieve, p);
    const std::uint64_t upto = floor_index(t);
    require_within(sieve, p * upto, "sum_Tp");
    return shifted_sum(sieve.resolve(a, upto), sieve.resolve(b, p * upto), p, upto);
}

IdentityResidual check_stylo(const SieveTable& sieve, int mu, int nu, std::uint64_t p, double t) {
    require_prime(sieve, p);
    const std::uint64_t upto = floor_index(t);
    if (upto == 0) {
        return {};
    }
    require_within(sieve, p * upto, "check_stylo");
    const std::uint64_t upto_p = floor_index(t / static_cast<double>(p));
    const double lp = std::log(static_cast<double>(p));
    const auto seq = [](int k) { return SeqDescriptor::divisor(k); };

    const double lhs = sum_Tp(sieve, seq(mu), seq(nu), p, t);

    NeumaierSum rhs;
    rhs.add(2.0 * sum_T(sieve, seq(mu), seq(nu), t));
    for (int k = 0; k < nu; ++k) {
        rhs.add(mpz_get_d(binom(nu, k).get_mpz_t()) * std::pow(lp, nu - k) *
                sum_T(sieve, seq(mu), seq(k), t));
    }
    const auto d_mu = sieve.resolve(seq(mu), p * upto_p);
    for (int k = 0; k <= nu; ++k) {
        const auto d_k = sieve.resolve(seq(k), upto_p);
        rhs.add(-mpz_get_d(binom(nu, k).get_mpz_t()) * std::pow(lp, nu - k) *
                shifted_sum(d_k, d_mu, p, upto_p) / static_cast<double>(p));
    }
    return residual(lhs, rhs.value());
}

IdentityResidual check_pain(const SieveTable& sieve, double z, std::uint64_t p, double t) {
    require_prime(sieve, p);
    const std::uint64_t upto = floor_index(t);
    if (upto == 0) {
        return {};
    }
    require_within(sieve, p * upto, "check_pain");
    const std::uint64_t upto_p = floor_index(t / static_cast<double>(p));
    const auto sig = sieve.sigma(z, p * upto);
    const double pz = std::exp(z * std::log(static_cast<double>(p)));

    IdentityResidual worst;
    for (int mu = 0; mu <= 2; ++mu) {
        const auto dm = sieve.resolve(SeqDescriptor::divisor(mu), p * upto);
        const double lhs = shifted_sum(dm, sig, p, upto);
        NeumaierSum rhs;
        rhs.add(sig[p] * plain_sum(dm, sig, upto));
        NeumaierSum tail;
        for (std::uint64_t j = 1; j <= upto_p; ++j) {
            tail.add(dm[p * j] * sig[j] / static_cast<double>(j));
        }
        rhs.add(-pz / static_cast<double>(p) * tail.value());
        const IdentityResidual r = residual(lhs, rhs.value());
        if (mu == 0 || r.relative > worst.relative) {
            worst = r;
        }
    }
    return worst;
}

std::complex<double> sum_M(const SieveTable& sieve, const SeqDescriptor& a, const SeqDescriptor& b,
                           double X, double delta) {
    const std::uint64_t upto = floor_index(X);
    require_within(sieve, upto, "sum_M");
    if (upto < 2) {
        return {0.0, 0.0};
    }
    const auto av = sieve.resolve(a, upto);
    const auto bv = sieve.resolve(b, upto);
    ComplexNeumaierSum acc;
    for (std::uint64_t k = 2; k <= upto; ++k) {
        const double lam = sieve.lambda(k);
        if (lam == 0.0) {
            continue;
        }
        NeumaierSum inner;
        for (std::uint64_t m = 1; m * k <= upto; ++m) {
            inner.add(av[m] * bv[m * k] / static_cast<double>(m));
        }
        const double phase = delta * sieve.log(k);
        const double w = lam * inner.value() / static_cast<double>(k);
        acc.add({w * std::cos(phase), w * std::sin(phase)});
    }
    return acc.value();
}

double shifted_divisor_ratio(const SieveTable& sieve, std::uint64_t r, double x) {
    const std::uint64_t upto = floor_index(x);
    if (r < 1 || static_cast<double>(r) >= x) {
        throw ArgumentError("shifted_divisor_ratio needs 1 <= r < x");
    }
    require_within(sieve, upto, "shifted_divisor_ratio");
    NeumaierSum sum;
    for (std::uint64_t n = r + 1; n <= upto; ++n) {
        sum.add(static_cast<double>(sieve.d(n)) * static_cast<double>(sieve.d(n - r)));
    }
    double sigma_minus_one = 0.0;
    for (std::uint64_t q = 1; q <= r; ++q) {
        if (r % q == 0) {
            sigma_minus_one += 1.0 / static_cast<double>(q);
        }
    }
    const double lx = std::log(x);
    return sum.value() / (sigma_minus_one * x * lx * lx);
}

double chebyshev_ratio(const SieveTable& sieve, double X) {
    const std::uint64_t upto = floor_index(X);
    require_within(sieve, upto, "chebyshev_ratio");
    NeumaierSum psi;
    for (std::uint64_t n = 2; n <= upto; ++n) {
        psi.add(sieve.lambda(n));
    }
    return psi.value() / X;
}

}  // namespace zpm
