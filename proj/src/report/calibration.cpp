#include "report_detail.hpp"

namespace zpm::report {

Calibration Calibration::parse(const std::string& text, const std::string& source) {
    Calibration c;
    c.source_ = source;
    for (const auto& [key, value] : detail::key_values(text, source)) {
        try {
            c.values_[key] = detail::parse_double(key, value);
        } catch (const UsageError& e) {
            throw IntegrityError(source + ": " + e.what());
        }
    }
    return c;
}

Calibration Calibration::load(const std::filesystem::path& path) {
    const std::string text = detail::read_file(path);
    try {
        return parse(text, path.string());
    } catch (const UsageError& e) {
        throw IntegrityError(e.what());
    }
}

double Calibration::get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) {
        throw IntegrityError("calibration '" + source_ + "' has no value for " + key);
    }
    return it->second;
}

}  // namespace zpm::report
