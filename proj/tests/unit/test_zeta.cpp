#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zpm/afe.hpp"
#include "zpm/errors.hpp"
#include "zpm/zero_table.hpp"
#include "zpm/zeta.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

using namespace zpm;

namespace {

const ZetaEngine& engine() {
    static const ZetaEngine e;
    return e;
}

std::string table_path() { return std::string(ZPM_DATA_DIR) + "/zeros_1e5.txt"; }

const ZeroTable& table() {
    static const ZeroTable z = load_zeros(table_path());
    return z;
}

// First lines of the bundled table, as text.
std::string head_text(std::size_t count) {
    std::ifstream in(table_path());
    std::string line;
    std::ostringstream out;
    std::size_t kept = 0;
    while (kept < count && std::getline(in, line)) {
        out << line << '\n';
        if (!line.empty() && line[0] != '#') {
            ++kept;
        }
    }
    return out.str();
}

}  // namespace

TEST_CASE("classical values") {
    CHECK(std::abs(zeta(Complex(2, 0)) - M_PI * M_PI / 6.0) <= 1e-12);
    CHECK(std::abs(zeta(Complex(-1, 0)) + 1.0 / 12.0) <= 1e-12);
    CHECK(std::abs(zeta(Complex(4, 0)) - std::pow(M_PI, 4) / 90.0) <= 1e-12);
}

TEST_CASE("zeta'(2) against the series -sum log n / n^2 with an integral tail") {
    const long N = 200000;
    double s = 0.0;
    for (long n = N; n >= 2; --n) {
        s -= std::log(double(n)) / (double(n) * double(n));
    }
    // tail sum_{n>N} log n / n^2 ~ (log N + 1) / N - log N / (2 N^2)
    const double ln = std::log(double(N));
    s -= (ln + 1.0) / N - ln / (2.0 * N * N);
    CHECK(zeta_deriv(Complex(2, 0)).real() == doctest::Approx(s).epsilon(1e-10));
    CHECK(zeta_deriv(Complex(2, 0)).real() == doctest::Approx(-0.937548254315844).epsilon(1e-13));
}

TEST_CASE("conjugate symmetry is exact") {
    for (double t : {14.0, 100.0, 5000.0, 77777.7}) {
        const Complex s(0.5, t);
        const auto a = engine().zeta_and_deriv(s);
        const auto b = engine().zeta_and_deriv(std::conj(s));
        CHECK(a.first == std::conj(b.first));
        CHECK(a.second == std::conj(b.second));
    }
}

TEST_CASE("derivative agrees with central differences on a grid") {
    const double h = 1e-5;
    for (double sigma : {0.3, 0.5, 0.8, 2.0}) {
        for (double t : {10.0, 100.0, 1000.0, 5000.0, 20000.0}) {
            const Complex s(sigma, t);
            const Complex fd = (zeta(s + Complex(h, 0)) - zeta(s - Complex(h, 0))) / (2.0 * h);
            const Complex d = zeta_deriv(s);
            CHECK(std::abs(fd - d) <= 1e-5 * std::max(1.0, std::abs(d)));
        }
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(zeta(Complex(1, 0)), PoleError);
    CHECK_THROWS_AS(zeta(Complex(-2, 0)), RangeError);
    CHECK_THROWS_AS(zeta(Complex(0.5, 2e5)), RangeError);
    EvalConfig cfg;
    cfg.bernoulli_terms = 0;
    CHECK_THROWS_AS(ZetaEngine{cfg}, ArgumentError);
}

TEST_CASE("chi functional equation factor") {
    CHECK(std::abs(chi(Complex(0.5, 0)) - 1.0) <= 1e-12);
    for (double sigma : {0.3, 0.5, 0.7}) {
        for (double t : {10.0, 100.0, 1000.0, 10000.0}) {
            const Complex s(sigma, t);
            CHECK(std::abs(chi(s) * chi(1.0 - s) - 1.0) <= 1e-9);
        }
    }
    CHECK(std::abs(std::abs(chi(Complex(0.5, 1000))) - 1.0) <= 1e-9);
    // zeta(s) = chi(s) zeta(1 - s)
    const Complex s(0.3, 40.0);
    CHECK(std::abs(zeta(s) - chi(s) * zeta(1.0 - s)) <= 1e-9);
}

TEST_CASE("zeta vanishes at tabulated ordinates") {
    const auto& z = table();
    for (std::size_t i = 0; i < 100; ++i) {
        CHECK(std::abs(zeta(Complex(0.5, z[i]))) <= 1e-6);
    }
    CHECK(std::abs(zeta(Complex(0.5, z[z.size() - 1]))) <= 1e-6);
}

TEST_CASE("bundled table: count, height and band") {
    const auto& z = table();
    CHECK(z.size() == 138069);
    CHECK(z.max_ordinate() < 1e5);
    CHECK(z.precision() >= 9);
    CHECK(z[0] == doctest::Approx(14.134725142));
    CHECK(z.count_up_to(15.0) == 1);
    const double x = 15.0 / (2.0 * M_PI);
    CHECK(rvm_estimate(15.0) == doctest::Approx(x * std::log(x) - x + 0.875));
    CHECK(std::fabs(1.0 - rvm_estimate(15.0)) <= rvm_band(15.0));
    CHECK(check_rvm_band(z.ordinates()).ok);
}

TEST_CASE("zero-table parse failures") {
    CHECK_THROWS_AS(parse_zeros("", "empty"), IntegrityError);
    CHECK_THROWS_AS(parse_zeros("# only a comment\n", "empty"), IntegrityError);
    try {
        parse_zeros("14.134725142\n25.010857580\n21.022039639\n", "shuffled");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        parse_zeros("14.134725142\nabc\n", "garbage");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    try {
        parse_zeros("14.134725142\n21.022039639\n25.0108", "truncated");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(load_zeros("/nonexistent/zeros.txt"), ResourceError);
}

TEST_CASE("first three ordinates load cleanly") {
    const auto z = parse_zeros(head_text(3), "head");
    CHECK(z.size() == 3);
    CHECK(z.count_up_to(15.0) == 1);
}

TEST_CASE("deleting one zero breaks the counting band") {
    const std::string text = head_text(40000);
    // Drop the line of the 20000th ordinate.
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    std::size_t k = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#' && ++k == 20000) {
            continue;
        }
        out << line << '\n';
    }
    LoadOptions opts;
    opts.spot_checks = 0;
    CHECK_NOTHROW(parse_zeros(text, "intact", opts));
    try {
        parse_zeros(out.str(), "deleted", opts);
        FAIL("expected an integrity error");
    } catch (const IntegrityError& e) {
        CHECK(e.prefix() >= 19999);
    }
}

TEST_CASE("spot check catches an ordinate that is not a zero") {
    LoadOptions opts;
    opts.check_band = false;
    CHECK_THROWS_AS(parse_zeros("14.134725142\n21.0230\n25.010857580\n", "bad", opts), IntegrityError);
}

TEST_CASE("approximate functional equation residual") {
    SieveTable s = SieveTable::build(20000);
    const auto r3 = afe_residual(1e3, 0.5, s, engine());
    const auto r4 = afe_residual(1e4, 0.5, s, engine());
    CHECK(r3.chi_identity_gap <= 1e-9);
    CHECK(r4.chi_identity_gap <= 1e-9);
    CHECK(r3.bound_ratio < 0.02);
    CHECK(r4.bound_ratio <= 3.0 * r3.bound_ratio);
    CHECK_THROWS_AS(afe_residual(5.0, 0.5, s, engine()), RangeError);
    CHECK_THROWS_AS(afe_residual(1e3, 0.7, s, engine()), ArgumentError);
}
