#pragma once

#include "zpm/seq_descriptor.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace zpm {

inline constexpr std::uint64_t kDefaultSieveCap = 10'000'000;

// Per-integer arithmetic data for 1 <= n <= bound.  Index 0 is unused.
class SieveTable {
public:
    // Throws ArgumentError for bound < 2 and ResourceError above cap.
    static SieveTable build(std::uint64_t bound, std::uint64_t cap = kDefaultSieveCap);

    std::uint64_t bound() const { return bound_; }

    std::uint32_t d(std::uint64_t n) const { return d_[n]; }
    double d1(std::uint64_t n) const { return d1_[n]; }
    double d2(std::uint64_t n) const { return d2_[n]; }
    double alpha(std::uint64_t n) const { return alpha_[n]; }
    double lambda(std::uint64_t n) const { return lambda_[n]; }
    double log(std::uint64_t n) const { return log_[n]; }
    std::uint32_t smallest_prime_factor(std::uint64_t n) const { return spf_[n]; }
    bool is_prime(std::uint64_t n) const { return n >= 2 && spf_[n] == n; }

    // Values a(1..upto) of a descriptor; entry 0 is 0.
    std::vector<double> resolve(const SeqDescriptor& seq, std::uint64_t upto) const;
    // d^(mu,nu)(n) for 1 <= n <= upto by direct convolution over divisor pairs.
    std::vector<double> convolution(int mu, int nu, std::uint64_t upto) const;
    // sigma_z(n) = sum_{d | n} d^z.
    std::vector<double> sigma(double z, std::uint64_t upto) const;

private:
    std::uint64_t bound_ = 0;
    std::vector<std::uint32_t> d_;
    std::vector<double> d1_;
    std::vector<double> d2_;
    std::vector<double> alpha_;
    std::vector<double> lambda_;
    std::vector<double> log_;
    std::vector<std::uint32_t> spf_;
};

// beta_t(n) = l^2 d(n) - 2 l d^(1)(n) + alpha(n), l = log(t/2pi).  Also
// evaluates the divisor-pair convolution of log(t/2pi a) log(t/2pi b) and
// throws ConsistencyError when the two disagree beyond 1e-10 relative.
double beta_t(const SieveTable& sieve, std::uint64_t n, double t);

// sum_{n<=t} a(n) b(n) / n
double sum_T(const SieveTable& sieve, const SeqDescriptor& a, const SeqDescriptor& b, double t);
// sum_{n<=t} a(n) b(pn) / n
double sum_Tp(const SieveTable& sieve, const SeqDescriptor& a, const SeqDescriptor& b,
              std::uint64_t p, double t);

struct IdentityResidual {
    double lhs = 0.0;
    double rhs = 0.0;
    double absolute = 0.0;
    double relative = 0.0;
};

// Exact recursion for T_{mu,nu;p}(t) in terms of unshifted sums and T_{k,mu;p}(t/p).
IdentityResidual check_stylo(const SieveTable& sieve, int mu, int nu, std::uint64_t p, double t);

// sigma_z(pn) = sigma_z(p) sigma_z(n) - p^z sigma_z(n/p) summed against d^(mu),
// mu in {0,1,2}.  Returns the worst of the three.
IdentityResidual check_pain(const SieveTable& sieve, double z, std::uint64_t p, double t);

// sum_{mk <= X} Lambda(k) a(m) b(mk) / (k^(1 - i delta) m)
std::complex<double> sum_M(const SieveTable& sieve, const SeqDescriptor& a, const SeqDescriptor& b,
                           double X, double delta);

struct RamanujanResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double relative_gap = 0.0;
};

// Truncated sum_{n<=N} sigma_{-z1,-z2}(n) sigma_{-z3,-z4}(n) / n^(s+1) against
// the zeta quotient.  No sieve needed: the divisor sums are built to N here.
RamanujanResult ramanujan_ratio(double s, const double (&z)[4], std::uint64_t N);

// [sum_{r<n<=x} d(n) d(n-r)] / [sigma_{-1}(r) x log^2 x]
double shifted_divisor_ratio(const SieveTable& sieve, std::uint64_t r, double x);

// psi(X) / X
double chebyshev_ratio(const SieveTable& sieve, double X);

}  // namespace zpm
