#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace zpm {

using Complex = std::complex<double>;

struct EvalConfig {
    double max_height = 1e5;
    int bernoulli_terms = 12;  // at most 15
    double target_abs_error = 1e-9;
};

// Euler-Maclaurin evaluation of zeta and zeta' for Re(s) >= -1, |Im s| <= max_height.
//
// The main sum length starts at ceil(|Im s|/pi + 10) and grows until the
// bound on the first omitted Bernoulli term is below target_abs_error.  All
// arithmetic is written so that conj(s) gives the bitwise conjugate result.
class ZetaEngine {
public:
    explicit ZetaEngine(EvalConfig cfg = {});

    const EvalConfig& config() const { return cfg_; }

    Complex zeta(Complex s) const;
    Complex zeta_deriv(Complex s) const;
    // Both at once; shares the main sum.
    std::pair<Complex, Complex> zeta_and_deriv(Complex s) const;

    // Main-sum length used at s (after remainder-driven growth).
    long truncation_length(Complex s) const;

private:
    void check_domain(Complex s) const;

    EvalConfig cfg_;
    // log n and n^{-1/2} for n below the longest main sum max_height needs.
    std::vector<double> log_table_;
    std::vector<double> rsqrt_table_;
    std::vector<std::uint32_t> spf_table_;
};

Complex zeta(Complex s, const EvalConfig& cfg = {});
Complex zeta_deriv(Complex s, const EvalConfig& cfg = {});

// Principal branch of log Gamma(z) via Stirling after shifting |z| past 10.
// Throws PoleError within 1e-10 of a non-positive integer.
Complex log_gamma(Complex z);

// chi(s) = pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2), so zeta(s) = chi(s) zeta(1-s).
Complex chi(Complex s);

}  // namespace zpm
