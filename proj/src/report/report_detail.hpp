#pragma once

#include "zpm/experiments.hpp"
#include "zpm/report.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace zpm::report::detail {

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);
double parse_double(const std::string& key, const std::string& value);
std::vector<std::pair<std::string, std::string>> key_values(const std::string& text,
                                                            const std::string& source);
std::string read_file(const std::filesystem::path& path);

// %.17g, enough to round-trip a double.
std::string number(double value);

enum class Provenance { exact_rational, empirical, calibrated_band };

const char* provenance_name(Provenance p);

struct Field {
    std::string name;
    double value = 0.0;
    Provenance provenance = Provenance::empirical;
};

// One pass/fail assertion of the experiments run.
struct Verdict {
    std::string id;          // result the assertion reads
    std::string assertion;   // human-readable statement
    bool passed = false;
    std::vector<Field> values;
};

// Experiment output under a stable file stem, e.g. "landau_x2".
struct NamedResult {
    std::string id;
    ExperimentResult result;
};

nlohmann::json rational_json(const Rational& r);
nlohmann::json value_json(const VerifyEntry::Value& v);
std::string value_text(const VerifyEntry::Value& v);

nlohmann::json result_json(const NamedResult& r);
std::string result_csv(const NamedResult& r);
nlohmann::json summary_json(const std::vector<Verdict>& verdicts, bool passed);
std::string summary_csv(const std::vector<Verdict>& verdicts);

// Writes text to path; ResourceError on failure.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace zpm::report::detail
