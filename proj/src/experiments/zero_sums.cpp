#include "zpm/errors.hpp"
#include "zpm/experiments.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace zpm {

void parallel_blocks(std::size_t count, unsigned workers,
                     const std::function<void(std::size_t, std::size_t)>& body) {
    workers = std::max(1u, workers);
    if (workers == 1 || count < 2 * static_cast<std::size_t>(workers)) {
        body(0, count);
        return;
    }
    const std::size_t block = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * block);
        const std::size_t end = std::min(count, begin + block);
        pool.emplace_back([&, w, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

ExperimentContext::ExperimentContext(const ZeroTable& zeros, const SieveTable& sieve,
                                     const ZetaEngine& engine, unsigned workers)
    : zeros_(zeros), sieve_(sieve), engine_(engine), workers_(std::max(1u, workers)) {}

std::size_t ExperimentContext::zeros_up_to(double T) const {
    if (T > zeros_.max_ordinate()) {
        throw RangeError("T = " + std::to_string(T) + " beyond the zero table (max ordinate " +
                         std::to_string(zeros_.max_ordinate()) + ")");
    }
    return zeros_.count_up_to(T);
}

const std::vector<Complex>& ExperimentContext::zeta_prime(std::size_t count) {
    if (count <= zeta_prime_.size()) {
        return zeta_prime_;
    }
    const std::size_t start = zeta_prime_.size();
    zeta_prime_.resize(count);
    const auto& g = zeros_.ordinates();
    parallel_blocks(count - start, workers_, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = start + begin; j < start + end; ++j) {
            zeta_prime_[j] = engine_.zeta_deriv(Complex(0.5, g[j]));
        }
    });
    return zeta_prime_;
}

}  // namespace zpm
