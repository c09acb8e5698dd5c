#include "zpm/afe.hpp"

#include "zpm/errors.hpp"
#include "zpm/summation.hpp"

#include <cmath>
#include <numbers>

namespace zpm {

AfeResidual afe_residual(double t, double sigma, const SieveTable& sieve, const ZetaEngine& engine) {
    const double X = t / (2.0 * std::numbers::pi);
    if (!(X > 1.0) || t > engine.config().max_height) {
        throw RangeError("afe_residual needs 2pi < t <= max_height");
    }
    if (sigma < 0.4 || sigma > 0.6) {
        throw ArgumentError("afe_residual needs sigma in [0.4, 0.6]");
    }
    const auto length = static_cast<std::uint64_t>(std::floor(X));
    if (length > sieve.bound()) {
        throw RangeError("sieve does not cover t/2pi");
    }
    const double l = std::log(X);
    ComplexNeumaierSum d_alpha;
    ComplexNeumaierSum d_beta;
    for (std::uint64_t n = 1; n <= length; ++n) {
        const double ln = sieve.log(n);
        const double phase = t * ln;
        const double c = std::cos(phase);
        const double s = std::sin(phase);
        // n^{-sigma - it} and n^{-(1 - sigma - it)} = n^{sigma - 1 + it}
        const double m1 = std::exp(-sigma * ln);
        const double m2 = std::exp((sigma - 1.0) * ln);
        const double beta = l * l * sieve.d(n) - 2.0 * l * sieve.d1(n) + sieve.alpha(n);
        d_alpha.add({sieve.alpha(n) * m1 * c, -sieve.alpha(n) * m1 * s});
        d_beta.add({beta * m2 * c, beta * m2 * s});
    }
    const Complex s(sigma, t);
    const Complex zp = engine.zeta_deriv(s);
    const Complex x = chi(s);
    const Complex x_reflected = chi(1.0 - s);
    AfeResidual out;
    out.residual = std::abs(zp * zp - d_alpha.value() - x * x * d_beta.value());
    const double lt = std::log(t);
    out.bound_ratio = out.residual / (lt * lt * lt);
    out.chi_identity_gap = std::abs(x * x * x_reflected * x_reflected - 1.0);
    return out;
}

}  // namespace zpm
