#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zpm/report.hpp"

#include <httplib.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

using namespace zpm;
using namespace zpm::report;
namespace fs = std::filesystem;

namespace {

const fs::path kTable = fs::path(ZPM_DATA_DIR) / "zeros_1e5.txt";

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "zpm_test_report";
    fs::create_directories(dir);
    return dir / name;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// First `count` ordinate lines of the bundled table, optionally skipping one.
std::string head(std::size_t count, std::size_t skip = 0) {
    std::ifstream in(kTable);
    std::ostringstream out;
    std::string line;
    std::size_t k = 0;
    while (k < count && std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') {
            continue;
        }
        if (++k != skip) {
            out << line << '\n';
        }
    }
    return out.str();
}

int cli(const std::string& args) {
    const std::string cmd = std::string(ZPM_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string small_config(const fs::path& out_dir, const std::string& extra = "",
                         const std::string& grid = "1000, 2000") {
    return "zeros_path = " + kTable.string() +
           "\n"
           "sieve_bound = 400\n"
           "T_grid = " + grid + "\n"
           "experiments = landau, moments, theorem2\n"
           "landau_x = 2, 6\n"
           "output_dir = " +
           out_dir.string() + "\nformat = json\n" + extra;
}

}  // namespace

TEST_CASE("config parsing") {
    const auto cfg = parse_run_config(
        "# comment\nzeros_path = z.txt\nsieve_bound = 2000\nT_grid = 1000, 5000\n"
        "bunny.T_grid = 1000\nformat = csv\nworkers = 4\n",
        "/base");
    CHECK(cfg.zeros_path == fs::path("/base/z.txt"));
    CHECK(cfg.T_grid == std::vector<double>{1000.0, 5000.0});
    CHECK(cfg.grid_for("bunny") == std::vector<double>{1000.0});
    CHECK(cfg.grid_for("landau") == cfg.T_grid);
    CHECK(cfg.format == Format::csv);
    CHECK(cfg.workers == 4);
    CHECK(cfg.wants("afe"));

    const std::string base = "zeros_path = z.txt\nsieve_bound = 2000\n";
    CHECK_THROWS_AS(parse_run_config(base, "/"), UsageError);
    CHECK_THROWS_AS(parse_run_config(base + "T_grid =\n", "/"), UsageError);
    CHECK_THROWS_AS(parse_run_config(base + "T_grid = 5000, 1000\n", "/"), UsageError);
    CHECK_THROWS_AS(parse_run_config(base + "T_grid = 1000\ncolour = red\n", "/"), UsageError);
    CHECK_THROWS_AS(parse_run_config(base + "T_grid = 1000\nworkers = many\n", "/"), UsageError);
    CHECK_THROWS_AS(parse_run_config(base + "T_grid = 1000\nnope.T_grid = 1000\n", "/"), UsageError);
    CHECK_THROWS_AS(parse_run_config(base + "T_grid = 1000\nexperiments = landau, zeta\n", "/"),
                    UsageError);
}

TEST_CASE("config validation against the table") {
    auto cfg = parse_run_config("zeros_path = z\nsieve_bound = 2000\nT_grid = 1000, 10000\n", "/");
    CHECK_NOTHROW(validate_run_config(cfg, 99999.7));
    CHECK_THROWS_AS(validate_run_config(cfg, 5000.0), UsageError);
    cfg.sieve_bound = 1000;
    CHECK_THROWS_AS(validate_run_config(cfg, 99999.7), UsageError);
}

TEST_CASE("calibration file") {
    const auto c = Calibration::parse("# bands\nlandau.ratio_min = 0.8\n", "inline");
    CHECK(c.get("landau.ratio_min") == 0.8);
    CHECK_THROWS_AS(c.get("landau.ratio_max"), IntegrityError);
    CHECK_THROWS_AS(Calibration::parse("landau.ratio_min = wide\n", "inline"), IntegrityError);
    CHECK_THROWS_AS(Calibration::load("/nonexistent/calibration.txt"), ResourceError);
}

TEST_CASE("verify-exact passes and names an injected fault") {
    std::ostringstream out, err;
    CHECK(cmd_verify_exact({}, out, err) == kExitOk);
    CHECK(err.str().empty());
    CHECK(out.str().find("all match") != std::string::npos);

    std::ostringstream out2, err2;
    CHECK(cmd_verify_exact({false, "Table 2 (d,d^(1))"}, out2, err2) == kExitMismatch);
    CHECK(err2.str().find("Table 2 (d,d^(1))") != std::string::npos);

    std::ostringstream out3, err3;
    CHECK(cmd_verify_exact({false, "Table 9"}, out3, err3) == kExitUsage);
}

TEST_CASE("verify-exact JSON carries exact rationals as strings") {
    std::ostringstream out, err;
    REQUIRE(cmd_verify_exact({true, std::nullopt}, out, err) == kExitOk);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["all_match"] == true);
    CHECK(doc["count"] == doc["entries"].size());
    bool found = false;
    for (const auto& e : doc["entries"]) {
        if (e["group"] == "S_beta" && e["quantity"] == "coefficient of T L^9 / pi^3") {
            CHECK(e["computed"]["numerator"] == "97");
            CHECK(e["computed"]["denominator"] == "60480");
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("zeros validate exit codes") {
    std::ostringstream out, err;
    CHECK(cmd_zeros_validate(kTable, out, err) == kExitOk);

    const auto truncated = scratch("truncated.txt");
    write(truncated, head(50) + "11.2");
    std::ostringstream o1, e1;
    CHECK(cmd_zeros_validate(truncated, o1, e1) == kExitDataError);
    CHECK(e1.str().find("line 51") != std::string::npos);

    const auto deleted = scratch("deleted.txt");
    write(deleted, head(40000, 20000));
    std::ostringstream o2, e2;
    CHECK(cmd_zeros_validate(deleted, o2, e2) == kExitMismatch);
    CHECK(e2.str().find("prefix") != std::string::npos);

    std::ostringstream o3, e3;
    CHECK(cmd_zeros_validate("/nonexistent/zeros.txt", o3, e3) == kExitDataError);
}

TEST_CASE("zeros fetch from a local server") {
    httplib::Server server;
    const std::string body = head(200);
    server.Get("/zeros.txt", [&](const httplib::Request&, httplib::Response& res) {
        res.set_content(body, "text/plain");
    });
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread thread([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    const std::string url = "http://127.0.0.1:" + std::to_string(port) + "/zeros.txt";

    const auto dest = scratch("fetched.txt");
    fs::remove(dest);
    std::ostringstream o1, e1;
    CHECK(cmd_zeros_fetch(url, 200, dest, o1, e1) == kExitOk);
    CHECK(slurp(dest) == body);

    std::ostringstream o2, e2;
    CHECK(cmd_zeros_fetch(url, 201, scratch("short.txt"), o2, e2) == kExitDataError);
    CHECK(e2.str().find("expected 201 lines") != std::string::npos);

    std::ostringstream o3, e3;
    CHECK(cmd_zeros_fetch("127.0.0.1/zeros.txt", 200, scratch("x.txt"), o3, e3) == kExitUsage);

    server.stop();
    thread.join();
}

TEST_CASE("experiments run writes results and a summary") {
    const auto dir = scratch("run");
    fs::remove_all(dir);
    const auto cfg_path = scratch("run.conf");
    write(cfg_path, small_config(dir));
    std::ostringstream out, err;
    CHECK(cmd_run_experiments(cfg_path, out, err) == kExitOk);
    CHECK(fs::exists(dir / "summary.json"));
    CHECK(fs::exists(dir / "landau_x2.json"));
    CHECK(fs::exists(dir / "moment_k2.json"));
    CHECK(fs::exists(dir / "theorem2_lambda1.json"));
    const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
    CHECK(summary.is_object());
    const auto landau = nlohmann::json::parse(slurp(dir / "landau_x2.json"));
    CHECK(landau["rh_assumed"] == true);

    // Exit codes for broken inputs.
    std::ostringstream o1, e1;
    write(cfg_path, small_config(dir, "calibration = /nonexistent/calibration.txt\n"));
    CHECK(cmd_run_experiments(cfg_path, o1, e1) == kExitDataError);
    std::ostringstream o2, e2;
    write(cfg_path, small_config(dir, "", ""));
    CHECK(cmd_run_experiments(cfg_path, o2, e2) == kExitUsage);
    std::ostringstream o3, e3;
    write(cfg_path, small_config(dir, "", "1000, 2e5"));
    CHECK(cmd_run_experiments(cfg_path, o3, e3) == kExitUsage);
    std::ostringstream o4, e4;
    CHECK(cmd_run_experiments(scratch("missing.conf"), o4, e4) == kExitUsage);
}

TEST_CASE("command-line exit codes") {
    CHECK(cli("--help") == kExitOk);
    CHECK(cli("verify-exact") == kExitOk);
    CHECK(cli("verify-exact --inject-fault 'Table 2 (d,d^(1))'") == kExitMismatch);
    CHECK(cli("frobnicate") == kExitUsage);
    CHECK(cli("experiments") == kExitUsage);
    CHECK(cli("zeros validate /nonexistent/zeros.txt") == kExitDataError);
}
