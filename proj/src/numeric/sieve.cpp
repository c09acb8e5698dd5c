#include "zpm/divisor_lab.hpp"
#include "zpm/errors.hpp"

#include <cmath>
#include <string>

namespace zpm {

SieveTable SieveTable::build(std::uint64_t bound, std::uint64_t cap) {
    if (bound < 2) {
        throw ArgumentError("sieve bound must be at least 2");
    }
    if (bound > cap) {
        throw ResourceError("sieve bound " + std::to_string(bound) + " exceeds configured cap " +
                            std::to_string(cap));
    }
    SieveTable s;
    s.bound_ = bound;
    const std::size_t size = bound + 1;
    s.d_.assign(size, 0);
    s.d1_.assign(size, 0.0);
    s.d2_.assign(size, 0.0);
    s.alpha_.assign(size, 0.0);
    s.lambda_.assign(size, 0.0);
    s.log_.assign(size, 0.0);
    s.spf_.assign(size, 0);

    for (std::uint64_t n = 1; n <= bound; ++n) {
        s.log_[n] = std::log(static_cast<double>(n));
    }

    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (s.spf_[i] != 0) {
            continue;
        }
        for (std::uint64_t j = i; j <= bound; j += i) {
            if (s.spf_[j] == 0) {
                s.spf_[j] = static_cast<std::uint32_t>(i);
            }
        }
    }

    // d^(mu)(n) = sum_{ab=n} log^mu(a)
    for (std::uint64_t a = 1; a <= bound; ++a) {
        const double la = s.log_[a];
        const double la2 = la * la;
        for (std::uint64_t n = a; n <= bound; n += a) {
            s.d_[n] += 1;
            s.d1_[n] += la;
            s.d2_[n] += la2;
        }
    }

    // alpha(n) = sum_{ab=n} log(a) log(b), summed directly: the
    // log(n) d^(1) - d^(2) form cancels badly at primes.
    for (std::uint64_t a = 2; a * 2 <= bound; ++a) {
        const double la = s.log_[a];
        for (std::uint64_t b = 2; a * b <= bound; ++b) {
            s.alpha_[a * b] += la * s.log_[b];
        }
    }

    for (std::uint64_t n = 2; n <= bound; ++n) {
        const std::uint32_t p = s.spf_[n];
        std::uint64_t m = n;
        while (m % p == 0) {
            m /= p;
        }
        if (m == 1) {
            s.lambda_[n] = s.log_[p];
        }
    }
    return s;
}

std::vector<double> SieveTable::convolution(int mu, int nu, std::uint64_t upto) const {
    if (upto > bound_) {
        throw RangeError("convolution length " + std::to_string(upto) + " exceeds sieve bound " +
                         std::to_string(bound_));
    }
    std::vector<double> out(upto + 1, 0.0);
    for (std::uint64_t a = 1; a <= upto; ++a) {
        const double wa = std::pow(log_[a], mu);
        if (wa == 0.0) {
            continue;
        }
        for (std::uint64_t b = 1; a * b <= upto; ++b) {
            out[a * b] += wa * std::pow(log_[b], nu);
        }
    }
    return out;
}

std::vector<double> SieveTable::resolve(const SeqDescriptor& seq, std::uint64_t upto) const {
    if (upto > bound_) {
        throw RangeError("sequence " + seq.name() + " requested to " + std::to_string(upto) +
                         " beyond sieve bound " + std::to_string(bound_));
    }
    std::vector<double> out(upto + 1, 0.0);
    switch (seq.kind()) {
    case SeqDescriptor::Kind::alpha:
        std::copy(alpha_.begin(), alpha_.begin() + static_cast<std::ptrdiff_t>(upto + 1), out.begin());
        return out;
    case SeqDescriptor::Kind::log_weighted: {
        out = resolve(seq.inner(), upto);
        for (std::uint64_t n = 1; n <= upto; ++n) {
            out[n] *= std::pow(log_[n], seq.log_power());
        }
        return out;
    }
    case SeqDescriptor::Kind::divisor_deriv:
        break;
    }
    const int mu = seq.mu();
    const int nu = seq.nu();
    const int single = mu == 0 ? nu : (nu == 0 ? mu : -1);
    if (mu == 1 && nu == 1) {
        return resolve(SeqDescriptor::alpha(), upto);
    }
    if (single < 0 || single > 2) {
        return convolution(mu, nu, upto);
    }
    for (std::uint64_t n = 1; n <= upto; ++n) {
        out[n] = single == 0 ? static_cast<double>(d_[n]) : (single == 1 ? d1_[n] : d2_[n]);
    }
    return out;
}

std::vector<double> SieveTable::sigma(double z, std::uint64_t upto) const {
    if (upto > bound_) {
        throw RangeError("sigma length " + std::to_string(upto) + " exceeds sieve bound " +
                         std::to_string(bound_));
    }
    std::vector<double> out(upto + 1, 0.0);
    for (std::uint64_t a = 1; a <= upto; ++a) {
        const double w = std::exp(z * log_[a]);
        for (std::uint64_t n = a; n <= upto; n += a) {
            out[n] += w;
        }
    }
    return out;
}

}  // namespace zpm
