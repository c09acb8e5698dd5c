#pragma once

#include "zpm/zeta.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace zpm {

// (T/2pi) log(T/2pi) - T/2pi + 7/8
double rvm_estimate(double T);
// Allowed |N(T) - rvm_estimate(T)|: 0.5 + 0.05 log T.
double rvm_band(double T);

struct BandReport {
    bool ok = true;
    std::size_t first_violation = 0;  // prefix length, 0 when ok
    double worst_excess = 0.0;        // max |deviation| - band over all prefixes
};

// For each prefix of length k, the deviation k - 1/2 - rvm_estimate(gamma_k)
// (the midpoint of the jump at gamma_k) averaged over the last
// kRvmWindow prefixes must stay within rvm_band(gamma_k).  The single-prefix
// deviation is S(t), which exceeds the band at a handful of heights below
// 1e5; the short average removes that while one missing or spurious zero
// still shifts every later window by about 1.
inline constexpr std::size_t kRvmWindow = 10;

BandReport check_rvm_band(const std::vector<double>& ordinates);

struct SpotReport {
    bool ok = true;
    std::size_t checked = 0;
    double worst_abs_zeta = 0.0;
    std::size_t worst_index = 0;
};

// |zeta(1/2 + i gamma)| for the first `count` ordinates.
SpotReport spot_check(const std::vector<double>& ordinates, std::size_t count, double tolerance,
                      const ZetaEngine& engine);

// Ascending zero ordinates with source metadata.
class ZeroTable {
public:
    ZeroTable() = default;
    ZeroTable(std::vector<double> ordinates, std::string source, int precision);

    const std::vector<double>& ordinates() const { return ordinates_; }
    std::size_t size() const { return ordinates_.size(); }
    bool empty() const { return ordinates_.empty(); }
    double max_ordinate() const { return ordinates_.empty() ? 0.0 : ordinates_.back(); }
    double operator[](std::size_t i) const { return ordinates_[i]; }
    const std::string& source() const { return source_; }
    int precision() const { return precision_; }

    // N(T): ordinates <= T.
    std::size_t count_up_to(double T) const;
    // First n ordinates.
    ZeroTable prefix(std::size_t n) const;

private:
    std::vector<double> ordinates_;
    std::string source_;
    int precision_ = 0;
};

struct LoadOptions {
    bool check_band = true;
    std::size_t spot_checks = 10;
    double spot_tolerance = 1e-6;
};

// Parses one ordinate per line ('#' comments and blank lines skipped).
// ParseError (with line number) for malformed text, a non-increasing
// ordinate, or a final line cut short; IntegrityError for an empty table,
// an RvM band violation (with prefix length) or a failed spot check.
ZeroTable load_zeros(const std::string& path, const LoadOptions& options = {});

// Same checks on in-memory text; `source` labels the table.
ZeroTable parse_zeros(const std::string& text, const std::string& source,
                      const LoadOptions& options = {});

}  // namespace zpm
