#include "zpm/errors.hpp"
#include "zpm/zeta.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace zpm {

namespace {

// B_2k / (2k (2k-1)) for k = 1..10
constexpr double kStirling[] = {1.0 / 12.0,
                                -1.0 / 360.0,
                                1.0 / 1260.0,
                                -1.0 / 1680.0,
                                1.0 / 1188.0,
                                -691.0 / 360360.0,
                                1.0 / 156.0,
                                -3617.0 / 122400.0,
                                43867.0 / 244188.0,
                                -174611.0 / 125400.0};

}  // namespace

Complex log_gamma(Complex z) {
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z - Complex(nearest, 0.0)) < 1e-10) {
        throw PoleError("Gamma has a pole at " + std::to_string(nearest));
    }
    if (z.real() < -1e6) {
        throw ArgumentError("log_gamma argument too far left");
    }
    Complex shift(0.0, 0.0);
    while (z.real() < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series(0.0, 0.0);
    Complex power = inv;
    for (double c : kStirling) {
        series += c * power;
        power *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series - shift;
}

Complex chi(Complex s) {
    const Complex log_chi = (s - 0.5) * std::log(std::numbers::pi) + log_gamma((1.0 - s) / 2.0) -
                            log_gamma(s / 2.0);
    return std::exp(log_chi);
}

}  // namespace zpm
