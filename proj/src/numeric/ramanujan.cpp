#include "zpm/divisor_lab.hpp"
#include "zpm/errors.hpp"
#include "zpm/summation.hpp"
#include "zpm/zeta.hpp"

#include <cmath>

namespace zpm {

namespace {

// sigma_{u,v}(n) = sum_{ab=n} a^u b^v for n <= N
std::vector<double> two_parameter_sigma(double u, double v, std::uint64_t N) {
    std::vector<double> pu(N + 1), pv(N + 1), out(N + 1, 0.0);
    for (std::uint64_t n = 1; n <= N; ++n) {
        const double ln = std::log(static_cast<double>(n));
        pu[n] = std::exp(u * ln);
        pv[n] = std::exp(v * ln);
    }
    for (std::uint64_t a = 1; a <= N; ++a) {
        for (std::uint64_t b = 1; a * b <= N; ++b) {
            out[a * b] += pu[a] * pv[b];
        }
    }
    return out;
}

}  // namespace

RamanujanResult ramanujan_ratio(double s, const double (&z)[4], std::uint64_t N) {
    if (s <= 1.0) {
        throw ArgumentError("ramanujan_ratio needs s > 1");
    }
    if (N < 1) {
        throw ArgumentError("ramanujan_ratio needs N >= 1");
    }
    for (double zi : z) {
        if (std::fabs(zi) > 0.25) {
            throw ArgumentError("shifts must lie in [-1/4, 1/4]");
        }
    }
    const auto left = two_parameter_sigma(-z[0], -z[1], N);
    const auto right = two_parameter_sigma(-z[2], -z[3], N);
    NeumaierSum lhs;
    for (std::uint64_t n = 1; n <= N; ++n) {
        lhs.add(left[n] * right[n] * std::exp(-(s + 1.0) * std::log(static_cast<double>(n))));
    }

    const ZetaEngine engine;
    const auto zr = [&](double x) { return engine.zeta(Complex(x, 0.0)).real(); };
    const double rhs = zr(1 + s + z[1] + z[3]) * zr(1 + s + z[0] + z[3]) *
                       zr(1 + s + z[1] + z[2]) * zr(1 + s + z[0] + z[2]) /
                       zr(2 + 2 * s + z[0] + z[1] + z[2] + z[3]);
    RamanujanResult out;
    out.lhs = lhs.value();
    out.rhs = rhs;
    out.relative_gap = std::fabs(out.lhs - rhs) / std::fabs(rhs);
    return out;
}

}  // namespace zpm
