#include "zpm/zero_table.hpp"

#include "zpm/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace zpm {

double rvm_estimate(double T) {
    const double x = T / (2.0 * std::numbers::pi);
    return x * std::log(x) - x + 0.875;
}

double rvm_band(double T) { return 0.5 + 0.05 * std::log(T); }

BandReport check_rvm_band(const std::vector<double>& ordinates) {
    BandReport report;
    report.worst_excess = -INFINITY;
    double window_sum = 0.0;
    std::vector<double> deviation(ordinates.size());
    for (std::size_t i = 0; i < ordinates.size(); ++i) {
        const double T = ordinates[i];
        deviation[i] = static_cast<double>(i) + 0.5 - rvm_estimate(T);
        window_sum += deviation[i];
        if (i >= kRvmWindow) {
            window_sum -= deviation[i - kRvmWindow];
        }
        const auto width = static_cast<double>(std::min(i + 1, kRvmWindow));
        const double excess = std::fabs(window_sum / width) - rvm_band(T);
        report.worst_excess = std::max(report.worst_excess, excess);
        if (excess > 0.0 && report.ok) {
            report.ok = false;
            report.first_violation = i + 1;
        }
    }
    return report;
}

SpotReport spot_check(const std::vector<double>& ordinates, std::size_t count, double tolerance,
                      const ZetaEngine& engine) {
    SpotReport report;
    report.checked = std::min(count, ordinates.size());
    for (std::size_t i = 0; i < report.checked; ++i) {
        const double v = std::abs(engine.zeta(Complex(0.5, ordinates[i])));
        if (v > report.worst_abs_zeta) {
            report.worst_abs_zeta = v;
            report.worst_index = i;
        }
    }
    report.ok = report.worst_abs_zeta <= tolerance;
    return report;
}

ZeroTable::ZeroTable(std::vector<double> ordinates, std::string source, int precision)
    : ordinates_(std::move(ordinates)), source_(std::move(source)), precision_(precision) {}

std::size_t ZeroTable::count_up_to(double T) const {
    return static_cast<std::size_t>(std::upper_bound(ordinates_.begin(), ordinates_.end(), T) -
                                    ordinates_.begin());
}

ZeroTable ZeroTable::prefix(std::size_t n) const {
    n = std::min(n, ordinates_.size());
    return ZeroTable(std::vector<double>(ordinates_.begin(), ordinates_.begin() + static_cast<std::ptrdiff_t>(n)),
                     source_, precision_);
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int decimals_of(const std::string& token) {
    const auto dot = token.find('.');
    return dot == std::string::npos ? 0 : static_cast<int>(token.size() - dot - 1);
}

}  // namespace

ZeroTable parse_zeros(const std::string& text, const std::string& source, const LoadOptions& options) {
    std::vector<double> ordinates;
    int min_decimals = -1;
    int last_decimals = -1;
    int previous_decimals = -1;
    std::size_t last_line = 0;

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
        if (ec != std::errc() || ptr != line.data() + line.size() || !std::isfinite(value) ||
            value <= 0.0) {
            throw ParseError("malformed ordinate '" + line + "'", line_no);
        }
        if (!ordinates.empty() && value <= ordinates.back()) {
            throw ParseError("ordinate does not exceed its predecessor", line_no);
        }
        ordinates.push_back(value);
        previous_decimals = last_decimals;
        last_decimals = decimals_of(line);
        last_line = line_no;
        min_decimals = min_decimals < 0 ? last_decimals : std::min(min_decimals, last_decimals);
    }
    if (ordinates.empty()) {
        throw IntegrityError("zero table '" + source + "' contains no ordinates", 0);
    }
    // A last line without its newline and with fewer digits than the line
    // before it was cut off mid-write.
    const bool unterminated = !text.empty() && text.back() != '\n';
    if (unterminated && previous_decimals >= 0 && last_decimals < previous_decimals) {
        throw ParseError("truncated final ordinate", last_line);
    }
    if (options.check_band) {
        const BandReport band = check_rvm_band(ordinates);
        if (!band.ok) {
            throw IntegrityError("count outside Riemann-von Mangoldt band at prefix " +
                                     std::to_string(band.first_violation),
                                 band.first_violation);
        }
    }
    if (options.spot_checks > 0) {
        EvalConfig cfg;
        cfg.max_height = std::max(cfg.max_height, ordinates.back());
        const SpotReport spot = spot_check(ordinates, options.spot_checks, options.spot_tolerance,
                                           ZetaEngine(cfg));
        if (!spot.ok) {
            throw IntegrityError("|zeta(1/2 + i gamma)| = " + std::to_string(spot.worst_abs_zeta) +
                                     " at ordinate " + std::to_string(spot.worst_index + 1),
                                 spot.worst_index + 1);
        }
    }
    return ZeroTable(std::move(ordinates), source, min_decimals);
}

ZeroTable load_zeros(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ResourceError("cannot open zero table '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_zeros(buffer.str(), path, options);
}

}  // namespace zpm
