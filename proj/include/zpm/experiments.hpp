#pragma once

#include "zpm/dirichlet.hpp"
#include "zpm/divisor_lab.hpp"
#include "zpm/seq_descriptor.hpp"
#include "zpm/zero_table.hpp"
#include "zpm/zeta.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace zpm {

// One grid point of an experiment.
struct TrendPoint {
    double T = 0.0;
    std::size_t zero_count = 0;
    Complex empirical;
    Complex predicted;
    double ratio = 0.0;
    std::map<std::string, double> extra;
};

// All sums over zeros take rho = 1/2 + i gamma (RH assumed numerically).
struct ExperimentResult {
    std::string experiment;
    std::map<std::string, std::string> parameters;
    std::vector<TrendPoint> trend;  // strictly increasing T
    bool rh_assumed = true;

    const TrendPoint& last() const { return trend.back(); }
};

// Shared read-only inputs plus the zeta'(rho) cache.
class ExperimentContext {
public:
    ExperimentContext(const ZeroTable& zeros, const SieveTable& sieve, const ZetaEngine& engine,
                      unsigned workers = 1);

    const ZeroTable& zeros() const { return zeros_; }
    const SieveTable& sieve() const { return sieve_; }
    const ZetaEngine& engine() const { return engine_; }
    unsigned workers() const { return workers_; }

    // zeta'(1/2 + i gamma_j) for j < count, computed once and reused.
    const std::vector<Complex>& zeta_prime(std::size_t count);

    // Number of ordinates <= T; RangeError when T exceeds the table.
    std::size_t zeros_up_to(double T) const;

private:
    const ZeroTable& zeros_;
    const SieveTable& sieve_;
    const ZetaEngine& engine_;
    unsigned workers_;
    std::vector<Complex> zeta_prime_;
};

// Splits [0, count) into one contiguous block per worker and runs
// body(begin, end) on each.  Callers write per-index results and reduce them
// serially in index order, so outputs do not depend on the worker count.
void parallel_blocks(std::size_t count, unsigned workers,
                     const std::function<void(std::size_t, std::size_t)>& body);

// sum_{gamma <= T} x^{1/2 + i gamma} against -(T/2pi) Lambda(x).
ExperimentResult landau_sum(ExperimentContext& ctx, double x, const std::vector<double>& T_grid);

// J_k(T) = sum |zeta'(rho)|^{2k}, normalised by T L^{k(k+2)+1}, L = log(T/2pi).
ExperimentResult discrete_moment(ExperimentContext& ctx, int k, const std::vector<double>& T_grid);

// sum_{gamma <= T} log^N(gamma/2pi) D_a(rho + i delta) D_b(1 - rho - i delta)
Complex dirichlet_pair_sum(ExperimentContext& ctx, const SeqDescriptor& a, const SeqDescriptor& b,
                           double T, double delta, unsigned log_weight);
// Same sum evaluated at every grid point in one pass.
std::vector<Complex> dirichlet_pair_sum(ExperimentContext& ctx, const SeqDescriptor& a,
                                        const SeqDescriptor& b, const std::vector<double>& T_grid,
                                        double delta, unsigned log_weight);

// I(a,b;T,delta) against the fully computed main term
// (T/2pi)(L sum_T(a,b,X) - sum_M(a,b,X,delta) - sum_M(b,a,X,-delta)), X = T/2pi.
// With scale_by_L the shift at each grid point is delta / L.
ExperimentResult check_bunny(ExperimentContext& ctx, const SeqDescriptor& a, const SeqDescriptor& b,
                             const std::vector<double>& T_grid, double delta, bool scale_by_L = false);

// S_alpha and S_beta (two routes) against 61/181440 and 97/181440 times a2 (T/2pi) L^9.
// Throws ConsistencyError when the S_beta routes differ by more than 1e-8 relative.
ExperimentResult corollary1_empirical(ExperimentContext& ctx, const std::vector<double>& T_grid);

// sum D_d(rho + i delta) D_d(1 - rho - i delta), delta = lambda / L, against
// (3/pi^3) theorem2_coefficient(lambda) T L^5.
ExperimentResult theorem2_empirical(ExperimentContext& ctx, double lambda,
                                    const std::vector<double>& T_grid);

}  // namespace zpm
