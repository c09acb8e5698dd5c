#pragma once

#include "zpm/errors.hpp"
#include "zpm/main_term.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace zpm::report {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitDataError = 2;
inline constexpr int kExitUsage = 64;

// Bad command line or configuration.
class UsageError : public Error {
public:
    using Error::Error;
};

enum class Format { json, csv };

// Experiment ids accepted in the `experiments` key.
inline const std::vector<std::string> kExperimentIds = {"landau", "moments", "bunny",
                                                        "corollary1", "theorem2", "afe"};

// Key = value configuration for the experiments command.
//
//   zeros_path       zero table (relative paths resolve against the config file)
//   sieve_bound      must cover max(T_grid) / 2pi
//   T_grid           ascending heights, comma separated, within the zero table
//   lambda_grid      shifts for the theorem2 experiment
//   output_dir       created if missing
//   format           json | csv
//   workers          threads for the sums over zeros (outputs do not depend on it)
//   calibration      band file, default the data/calibration.txt shipped with the build
//   experiments      subset of kExperimentIds, default all
//   landau_x         evaluation points of the explicit-formula sum
//   afe_t            heights for the approximate functional equation residual
//   <id>.T_grid      per-experiment grid replacing T_grid
//   fetch_url, expected_line_count   source of the zero table for `zeros fetch`
struct RunConfig {
    std::filesystem::path zeros_path;
    long sieve_bound = 0;
    std::vector<double> T_grid;
    std::vector<double> lambda_grid{0.0, 1.0};
    std::filesystem::path output_dir{"zpm-report"};
    Format format = Format::json;
    unsigned workers = 1;
    std::filesystem::path calibration_path;
    std::vector<std::string> experiments = kExperimentIds;
    std::vector<double> landau_x{2.0, 3.0, 5.0, 6.0};
    std::vector<double> afe_t{1000.0, 10000.0};
    std::map<std::string, std::vector<double>> grid_overrides;
    std::optional<std::string> fetch_url;
    std::optional<std::size_t> expected_line_count;

    const std::vector<double>& grid_for(const std::string& experiment) const;
    bool wants(const std::string& experiment) const;
};

// UsageError on unknown keys, malformed values or an empty T_grid.
RunConfig parse_run_config(const std::string& text, const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);

// Invariants that need the loaded table: every grid inside it and the sieve
// long enough for the largest Dirichlet polynomial.
void validate_run_config(const RunConfig& cfg, double max_ordinate);

// Pilot-calibrated bands, one `key = number` per line.
class Calibration {
public:
    static Calibration parse(const std::string& text, const std::string& source);
    static Calibration load(const std::filesystem::path& path);

    // IntegrityError when the key is absent.
    double get(const std::string& key) const;
    const std::map<std::string, double>& values() const { return values_; }
    const std::string& source() const { return source_; }

private:
    std::map<std::string, double> values_;
    std::string source_;
};

// One row of the exact verification table.
struct VerifyEntry {
    using Value = std::variant<MainTerm, Coefficient, std::string>;

    std::string group;     // e.g. "Table 2 (d,d^(1))"
    std::string quantity;  // e.g. "main term"
    Value expected;        // tabulated value, or an independent route
    Value computed;
    bool match = false;

    std::string name() const { return group + " " + quantity; }
};

// Recomputes every constant.  `fault` names a group whose first computed
// value is negated before comparison (test hook); UsageError if unknown.
std::vector<VerifyEntry> verify_exact_entries(const std::optional<std::string>& fault = {});

struct VerifyOptions {
    bool json = false;
    std::optional<std::string> fault;
};

int cmd_verify_exact(const VerifyOptions& options, std::ostream& out, std::ostream& err);

// Writes one result file per experiment run and a summary of verdicts.
int cmd_run_experiments(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_run_experiments(const std::filesystem::path& config_path, std::ostream& out,
                        std::ostream& err);

int cmd_zeros_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err);

// Downloads a table, checks its line count, validates it and stores it at dest.
int cmd_zeros_fetch(const std::string& url, std::size_t expected_lines,
                    const std::filesystem::path& dest, std::ostream& out, std::ostream& err);

}  // namespace zpm::report
