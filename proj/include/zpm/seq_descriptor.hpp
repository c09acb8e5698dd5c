#pragma once

#include "zpm/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace zpm {

// Symbolic name for an arithmetic sequence n -> a(n).
//
//   divisor(mu, nu)       d^(mu,nu)(n) = sum_{ab=n} log^mu(a) log^nu(b)
//   alpha()               alpha(n) = d^(1,1)(n) = log(n) d^(1)(n) - d^(2)(n)
//   log_weighted(j, a)    log^j(n) a(n)
//
// Every consumer must treat alpha() and divisor(1, 1) as the same sequence.
class SeqDescriptor {
public:
    enum class Kind { divisor_deriv, alpha, log_weighted };

    static SeqDescriptor divisor(int mu = 0, int nu = 0);
    static SeqDescriptor alpha();
    static SeqDescriptor log_weighted(int power, const SeqDescriptor& inner);

    // Accepts "d", "d1", "d2", "d(2,1)", "alpha", "log^2*alpha", "log*d1".
    static SeqDescriptor parse(const std::string& text);

    Kind kind() const { return kind_; }
    int mu() const { return mu_; }
    int nu() const { return nu_; }
    int log_power() const { return log_power_; }
    const SeqDescriptor& inner() const { return *inner_; }

    // Total log-degree: a(n) << log^degree(n) d(n).
    int degree() const;

    std::string name() const;

    friend bool operator==(const SeqDescriptor& a, const SeqDescriptor& b);

private:
    SeqDescriptor() = default;

    Kind kind_ = Kind::divisor_deriv;
    int mu_ = 0;
    int nu_ = 0;
    int log_power_ = 0;
    std::shared_ptr<const SeqDescriptor> inner_;
};

// One term coef * log^log_power(n) * d^(mu)(n) of a linear expansion.
struct LogDivisorTerm {
    Rational coef;
    int log_power = 0;
    int mu = 0;
};

// Rewrites any descriptor as a combination of log-weighted d^(mu) sequences,
// using d^(mu,nu)(n) = sum_k binom(nu,k) (-1)^k log^(nu-k)(n) d^(mu+k)(n).
std::vector<LogDivisorTerm> expand_log_divisor(const SeqDescriptor& seq);

}  // namespace zpm
