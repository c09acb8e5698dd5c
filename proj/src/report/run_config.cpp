#include "zpm/report.hpp"

#include "report_detail.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace zpm::report {

namespace {

std::vector<double> parse_grid(const std::string& key, const std::string& value) {
    std::vector<double> out;
    for (const auto& item : detail::split(value, ',')) {
        out.push_back(detail::parse_double(key, item));
    }
    return out;
}

void check_ascending(const std::string& key, const std::vector<double>& grid) {
    if (grid.empty()) {
        throw UsageError(key + " is empty");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0) || (i > 0 && grid[i] <= grid[i - 1])) {
            throw UsageError(key + " must be positive and strictly ascending");
        }
    }
}

std::vector<double> parse_ascending_grid(const std::string& key, const std::string& value) {
    auto grid = parse_grid(key, value);
    check_ascending(key, grid);
    return grid;
}

long parse_long(const std::string& key, const std::string& value) {
    long out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw UsageError(key + ": not an integer: '" + value + "'");
    }
    return out;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& value) {
    const std::filesystem::path p(value);
    return (p.is_absolute() ? p : base / p).lexically_normal();
}

}  // namespace

namespace detail {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(out)) {
        throw UsageError(key + ": not a number: '" + value + "'");
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> key_values(const std::string& text,
                                                            const std::string& source) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(source + ":" + std::to_string(line_no) + ": expected key = value");
        }
        out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ResourceError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace detail

const std::vector<double>& RunConfig::grid_for(const std::string& experiment) const {
    const auto it = grid_overrides.find(experiment);
    return it == grid_overrides.end() ? T_grid : it->second;
}

bool RunConfig::wants(const std::string& experiment) const {
    return std::find(experiments.begin(), experiments.end(), experiment) != experiments.end();
}

RunConfig parse_run_config(const std::string& text, const std::filesystem::path& base_dir) {
    RunConfig cfg;
    cfg.calibration_path = ZPM_DEFAULT_CALIBRATION;
    bool have_grid = false;
    for (const auto& [key, value] : detail::key_values(text, "config")) {
        if (key == "zeros_path") {
            cfg.zeros_path = resolve(base_dir, value);
        } else if (key == "sieve_bound") {
            cfg.sieve_bound = parse_long(key, value);
        } else if (key == "T_grid") {
            cfg.T_grid = parse_grid(key, value);
            have_grid = true;
        } else if (key == "lambda_grid") {
            cfg.lambda_grid = parse_grid(key, value);
        } else if (key == "output_dir") {
            cfg.output_dir = resolve(base_dir, value);
        } else if (key == "format") {
            if (value == "json") {
                cfg.format = Format::json;
            } else if (value == "csv") {
                cfg.format = Format::csv;
            } else {
                throw UsageError("format must be json or csv, got '" + value + "'");
            }
        } else if (key == "workers") {
            const long w = parse_long(key, value);
            if (w < 1 || w > 256) {
                throw UsageError("workers must lie in [1, 256]");
            }
            cfg.workers = static_cast<unsigned>(w);
        } else if (key == "calibration") {
            cfg.calibration_path = resolve(base_dir, value);
        } else if (key == "experiments") {
            cfg.experiments = detail::split(value, ',');
            for (const auto& id : cfg.experiments) {
                if (std::find(kExperimentIds.begin(), kExperimentIds.end(), id) ==
                    kExperimentIds.end()) {
                    throw UsageError("unknown experiment '" + id + "'");
                }
            }
        } else if (key == "landau_x") {
            cfg.landau_x = parse_grid(key, value);
        } else if (key == "afe_t") {
            cfg.afe_t = parse_ascending_grid(key, value);
        } else if (key.size() > 7 && key.ends_with(".T_grid")) {
            const std::string id = key.substr(0, key.size() - 7);
            if (std::find(kExperimentIds.begin(), kExperimentIds.end(), id) == kExperimentIds.end()) {
                throw UsageError("grid override for unknown experiment '" + id + "'");
            }
            cfg.grid_overrides[id] = parse_ascending_grid(key, value);
        } else if (key == "fetch_url") {
            cfg.fetch_url = value;
        } else if (key == "expected_line_count") {
            const long n = parse_long(key, value);
            if (n < 1) {
                throw UsageError("expected_line_count must be positive");
            }
            cfg.expected_line_count = static_cast<std::size_t>(n);
        } else {
            throw UsageError("unknown config key '" + key + "'");
        }
    }
    if (!have_grid) {
        throw UsageError("T_grid is required");
    }
    check_ascending("T_grid", cfg.T_grid);
    if (cfg.zeros_path.empty()) {
        throw UsageError("zeros_path is required");
    }
    if (cfg.experiments.empty()) {
        throw UsageError("no experiments selected");
    }
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::string text;
    try {
        text = detail::read_file(path);
    } catch (const ResourceError& e) {
        throw UsageError(e.what());
    }
    return parse_run_config(text, path.parent_path());
}

void validate_run_config(const RunConfig& cfg, double max_ordinate) {
    double highest = 0.0;
    for (const auto& id : cfg.experiments) {
        const auto& grid = cfg.grid_for(id);
        if (id == "afe") {
            continue;
        }
        if (grid.back() > max_ordinate) {
            throw UsageError(id + " grid reaches T = " + detail::number(grid.back()) +
                             " beyond the zero table (max " + detail::number(max_ordinate) + ")");
        }
        highest = std::max(highest, grid.back());
    }
    if (cfg.wants("afe")) {
        highest = std::max(highest, cfg.afe_t.back());
    }
    const double needed = std::floor(highest / (2.0 * M_PI));
    if (static_cast<double>(cfg.sieve_bound) < needed) {
        throw UsageError("sieve_bound " + std::to_string(cfg.sieve_bound) +
                         " is below max(T_grid)/2pi = " + detail::number(needed));
    }
}

}  // namespace zpm::report
