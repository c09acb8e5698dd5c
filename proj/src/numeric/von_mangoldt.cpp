#include "zpm/von_mangoldt.hpp"

#include "zpm/errors.hpp"

#include <cmath>
#include <limits>

namespace zpm {

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    if (n % 2 == 0) {
        return n == 2;
    }
    for (std::uint64_t q = 3; q * q <= n; q += 2) {
        if (n % q == 0) {
            return false;
        }
    }
    return true;
}

namespace {

// floor(n^(1/k)) exactly
std::uint64_t integer_root(std::uint64_t n, unsigned k) {
    auto r = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
    const auto power_le = [&](std::uint64_t base) {
        std::uint64_t acc = 1;
        for (unsigned i = 0; i < k; ++i) {
            if (acc > n / base) {
                return false;
            }
            acc *= base;
        }
        return acc <= n;
    };
    while (r > 0 && !power_le(r)) {
        --r;
    }
    while (power_le(r + 1)) {
        ++r;
    }
    return r;
}

}  // namespace

std::uint64_t prime_power_base(std::uint64_t n) {
    if (n < 2) {
        return 0;
    }
    for (unsigned k = 1; (std::uint64_t{1} << k) <= n; ++k) {
        const std::uint64_t r = integer_root(n, k);
        std::uint64_t acc = 1;
        for (unsigned i = 0; i < k; ++i) {
            acc *= r;
        }
        if (acc == n && is_prime(r)) {
            return r;
        }
    }
    return 0;
}

VonMangoldtValue vonmangoldt_real(double x) {
    if (!(x > 1.0) || x > 1e9) {
        throw ArgumentError("vonmangoldt_real needs 1 < x <= 1e9");
    }
    VonMangoldtValue out;
    const auto nearest = static_cast<std::uint64_t>(std::llround(x));
    const bool at_integer = std::fabs(x - static_cast<double>(nearest)) <= 1e-9;
    if (at_integer) {
        if (const std::uint64_t p = prime_power_base(nearest)) {
            out.value = std::log(static_cast<double>(p));
        }
    }
    // Nearest prime power excluding x itself; 2 is always a candidate below.
    double best = std::numeric_limits<double>::infinity();
    const auto lower_start = static_cast<std::uint64_t>(std::floor(x));
    for (std::uint64_t n = lower_start; n >= 2; --n) {
        if (at_integer && n == nearest) {
            continue;
        }
        if (prime_power_base(n)) {
            best = std::min(best, std::fabs(x - static_cast<double>(n)));
            break;
        }
    }
    for (std::uint64_t n = static_cast<std::uint64_t>(std::ceil(x));; ++n) {
        if (at_integer && n == nearest) {
            continue;
        }
        if (static_cast<double>(n) - x >= best) {
            break;
        }
        if (prime_power_base(n)) {
            best = std::fabs(static_cast<double>(n) - x);
            break;
        }
    }
    out.distance = best;
    return out;
}

}  // namespace zpm
