#pragma once

#include <cstdint>

namespace zpm {

struct VonMangoldtValue {
    double value = 0.0;     // log p when x is within 1e-9 of p^k, else 0
    double distance = 0.0;  // distance from x to the nearest prime power other than x
};

// Prime-power detection by exact integer k-th roots of round(x).
// Requires 1 < x <= 1e9.
VonMangoldtValue vonmangoldt_real(double x);

bool is_prime(std::uint64_t n);
// Returns the prime p with n = p^k, or 0 when n is not a prime power.
std::uint64_t prime_power_base(std::uint64_t n);

}  // namespace zpm
