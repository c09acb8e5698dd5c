#include "report_detail.hpp"

#include <httplib.h>

#include <algorithm>
#include <ostream>

namespace zpm::report {

namespace {

constexpr std::size_t kSpotPrefix = 100;
constexpr double kSpotTolerance = 1e-6;

// Band and spot checks on an already parsed table; prints the verdicts.
int report_table(const ZeroTable& zeros, std::ostream& out, std::ostream& err) {
    out << "source     " << zeros.source() << '\n';
    out << "count      " << zeros.size() << '\n';
    out << "height     " << detail::number(zeros.max_ordinate()) << '\n';
    out << "decimals   " << zeros.precision() << '\n';

    const BandReport band = check_rvm_band(zeros.ordinates());
    out << "rvm band   " << (band.ok ? "ok" : "VIOLATED") << " (worst excess "
        << detail::number(band.worst_excess) << ")\n";
    if (!band.ok) {
        err << "count outside Riemann-von Mangoldt band, first violating prefix "
            << band.first_violation << '\n';
        return kExitMismatch;
    }

    const ZetaEngine engine;
    const std::size_t n = std::min(kSpotPrefix, zeros.size());
    const SpotReport spot = spot_check(zeros.ordinates(), n, kSpotTolerance, engine);
    out << "spot check " << (spot.ok ? "ok" : "FAILED") << " (" << spot.checked
        << " ordinates, worst |zeta| " << detail::number(spot.worst_abs_zeta) << ")\n";
    if (!spot.ok) {
        err << "|zeta(1/2 + i gamma)| above " << kSpotTolerance << " at index " << spot.worst_index
            << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}

LoadOptions parse_only() {
    LoadOptions o;
    o.check_band = false;
    o.spot_checks = 0;
    return o;
}

}  // namespace

int cmd_zeros_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
    ZeroTable zeros;
    try {
        zeros = load_zeros(path.string(), parse_only());
    } catch (const Error& e) {
        err << "data error: " << e.what() << '\n';
        return kExitDataError;
    }
    return report_table(zeros, out, err);
}

int cmd_zeros_fetch(const std::string& url, std::size_t expected_lines,
                    const std::filesystem::path& dest, std::ostream& out, std::ostream& err) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        err << "usage: url needs a scheme: " << url << '\n';
        return kExitUsage;
    }
    const auto path_start = url.find('/', scheme_end + 3);
    const std::string origin = url.substr(0, path_start);
    const std::string resource = path_start == std::string::npos ? "/" : url.substr(path_start);

    std::string body;
    try {
        httplib::Client client(origin);
        client.set_follow_location(true);
        client.set_connection_timeout(30);
        client.set_read_timeout(300);
        const auto res = client.Get(resource);
        if (!res) {
            err << "data error: fetch failed: " << httplib::to_string(res.error()) << '\n';
            return kExitDataError;
        }
        if (res->status != 200) {
            err << "data error: HTTP status " << res->status << '\n';
            return kExitDataError;
        }
        body = res->body;
    } catch (const std::exception& e) {
        err << "data error: fetch failed: " << e.what() << '\n';
        return kExitDataError;
    }

    const auto lines = static_cast<std::size_t>(std::count(body.begin(), body.end(), '\n')) +
                       (!body.empty() && body.back() != '\n' ? 1 : 0);
    if (lines != expected_lines) {
        err << "data error: expected " << expected_lines << " lines, got " << lines << '\n';
        return kExitDataError;
    }

    ZeroTable zeros;
    try {
        zeros = parse_zeros(body, url, parse_only());
    } catch (const Error& e) {
        err << "data error: " << e.what() << '\n';
        return kExitDataError;
    }
    const int status = report_table(zeros, out, err);
    if (status != kExitOk) {
        return status;
    }
    try {
        if (dest.has_parent_path()) {
            std::filesystem::create_directories(dest.parent_path());
        }
        detail::write_file(dest, body);
    } catch (const std::exception& e) {
        err << "data error: " << e.what() << '\n';
        return kExitDataError;
    }
    out << "written    " << dest.string() << '\n';
    return kExitOk;
}

}  // namespace zpm::report
