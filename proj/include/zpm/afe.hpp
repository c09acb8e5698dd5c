#pragma once

#include "zpm/divisor_lab.hpp"
#include "zpm/zeta.hpp"

namespace zpm {

struct AfeResidual {
    double residual = 0.0;     // |zeta'(s)^2 - D_alpha(s) - chi(s)^2 D_beta_t(1-s)|
    double bound_ratio = 0.0;  // residual / log^3 t
    double chi_identity_gap = 0.0;  // |chi(s)^2 chi(1-s)^2 - 1|
};

// Residual of the approximate functional equation for zeta'(s)^2 at
// s = sigma + i t, both Dirichlet polynomials running over n <= t/2pi.
// Requires 2pi < t <= engine max_height, sigma in [0.4, 0.6] and a sieve
// covering t/2pi.
AfeResidual afe_residual(double t, double sigma, const SieveTable& sieve, const ZetaEngine& engine);

}  // namespace zpm
