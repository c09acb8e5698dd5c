#include "zpm/dirichlet.hpp"

#include "zpm/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace zpm {

DirichletEvaluator::DirichletEvaluator(const SieveTable& sieve, std::vector<SeqDescriptor> sequences)
    : sieve_(sieve), sequences_(std::move(sequences)), coefficients_(sequences_.size()) {
    rsqrt_.push_back(0.0);
    for (auto& c : coefficients_) {
        c.push_back(0.0);
    }
}

std::size_t DirichletEvaluator::length_at(double gamma) {
    const double x = gamma / (2.0 * std::numbers::pi);
    return x < 1.0 ? 0 : static_cast<std::size_t>(std::floor(x));
}

void DirichletEvaluator::advance_to(double gamma) {
    const std::size_t target = length_at(gamma);
    if (target <= length_) {
        return;
    }
    if (target > sieve_.bound()) {
        throw RangeError("Dirichlet polynomial length " + std::to_string(target) +
                         " exceeds sieve bound " + std::to_string(sieve_.bound()));
    }
    for (std::size_t i = 0; i < sequences_.size(); ++i) {
        const auto values = sieve_.resolve(sequences_[i], target);
        coefficients_[i].insert(coefficients_[i].end(), values.begin() + static_cast<std::ptrdiff_t>(length_ + 1),
                                values.end());
    }
    for (std::size_t n = length_ + 1; n <= target; ++n) {
        rsqrt_.push_back(1.0 / std::sqrt(static_cast<double>(n)));
    }
    length_ = target;
}

void DirichletEvaluator::phases(double t, std::size_t length, std::vector<Complex>& out) const {
    if (length > length_) {
        throw RangeError("Dirichlet evaluator not advanced far enough");
    }
    out.resize(length + 1);
    out[0] = Complex(0.0, 0.0);
    if (length == 0) {
        return;
    }
    out[1] = Complex(1.0, 0.0);
    for (std::size_t n = 2; n <= length; ++n) {
        const std::size_t p = sieve_.smallest_prime_factor(n);
        if (p == n) {
            double sine;
            double cosine;
            ::sincos(t * sieve_.log(n), &sine, &cosine);
            out[n] = Complex(rsqrt_[n] * cosine, -(rsqrt_[n] * sine));
        } else {
            const Complex a = out[p];
            const Complex b = out[n / p];
            out[n] = Complex(a.real() * b.real() - a.imag() * b.imag(),
                             a.real() * b.imag() + a.imag() * b.real());
        }
    }
}

Complex DirichletEvaluator::evaluate(std::size_t index, const std::vector<Complex>& phase,
                                     std::size_t length) const {
    const auto& a = coefficients_[index];
    double re = 0.0;
    double im = 0.0;
    for (std::size_t n = 1; n <= length; ++n) {
        re += a[n] * phase[n].real();
        im += a[n] * phase[n].imag();
    }
    return {re, im};
}

Complex DirichletEvaluator::evaluate_direct(const std::vector<double>& coefficients, double sigma,
                                            double t, std::size_t length) {
    Complex sum(0.0, 0.0);
    for (std::size_t n = 1; n <= length; ++n) {
        sum += coefficients[n] * std::pow(static_cast<double>(n), Complex(-sigma, -t));
    }
    return sum;
}

}  // namespace zpm
