#pragma once

#include "zpm/divisor_lab.hpp"
#include "zpm/seq_descriptor.hpp"
#include "zpm/zeta.hpp"

#include <cstddef>
#include <vector>

namespace zpm {

// Dirichlet polynomials D_a(1/2 + it) = sum_{n <= gamma/2pi} a(n) n^{-1/2-it}
// for a fixed set of real sequences.
//
// Static per-n data (coefficients, n^{-1/2}, log n) lives behind a cursor
// that only moves forward; advancing never touches earlier entries.  After
// advancing, the const members are safe to call from several threads.
class DirichletEvaluator {
public:
    DirichletEvaluator(const SieveTable& sieve, std::vector<SeqDescriptor> sequences);

    // Extends the static tables to cover n <= floor(gamma/2pi).
    void advance_to(double gamma);
    std::size_t cursor() const { return length_; }
    static std::size_t length_at(double gamma);

    std::size_t sequence_count() const { return coefficients_.size(); }
    const std::vector<double>& coefficients(std::size_t index) const { return coefficients_[index]; }
    double log(std::size_t n) const { return sieve_.log(n); }

    // out[n] = n^{-1/2 - it} for 1 <= n <= length (out[0] = 0), built from
    // prime values through the smallest-prime-factor table.
    void phases(double t, std::size_t length, std::vector<Complex>& out) const;

    // sum_{n<=length} a(n) out[n] for sequence `index`.
    Complex evaluate(std::size_t index, const std::vector<Complex>& phase, std::size_t length) const;

    // Same polynomial from scratch with std::pow, for cross-checks.
    static Complex evaluate_direct(const std::vector<double>& coefficients, double sigma, double t,
                                   std::size_t length);

private:
    const SieveTable& sieve_;
    std::vector<SeqDescriptor> sequences_;
    std::vector<std::vector<double>> coefficients_;
    std::vector<double> rsqrt_;
    std::size_t length_ = 0;
};

}  // namespace zpm
