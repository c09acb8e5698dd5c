#pragma once

#include "zpm/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace zpm {

// A rational constant that optionally carries the factor a2 = 6/pi^2.
struct Coefficient {
    Rational value;
    bool a2_normalized = true;

    friend bool operator==(const Coefficient&, const Coefficient&) = default;
    std::string str() const;
};

// Homogeneous polynomial sum_{u+v=degree} s_uv * log^u(p) * log^v(t).
//
// Keys are (u_exp, v_exp): u counts powers of log p, v powers of log t.
// Zero coefficients are never stored.  When a2_normalized is set, the
// polynomial is implicitly multiplied by a2 = 6/pi^2.
class MainTerm {
public:
    using Key = std::pair<unsigned, unsigned>;

    explicit MainTerm(unsigned degree = 0, bool a2_normalized = true)
        : degree_(degree), a2_normalized_(a2_normalized) {}

    // Single monomial coef * u^u_exp * l^v_exp.
    static MainTerm monomial(const Rational& coef, unsigned u_exp, unsigned v_exp,
                             bool a2_normalized = true);

    unsigned degree() const { return degree_; }
    bool a2_normalized() const { return a2_normalized_; }
    bool empty() const { return coeffs_.empty(); }
    const std::map<Key, Rational>& coefficients() const { return coeffs_; }

    Rational coefficient(unsigned u_exp, unsigned v_exp) const;
    // Adds coef at (u, v); throws if u + v differs from degree().
    void add(unsigned u_exp, unsigned v_exp, const Rational& coef);

    MainTerm& operator+=(const MainTerm& other);
    MainTerm& operator-=(const MainTerm& other);
    MainTerm scaled(const Rational& factor) const;
    // Multiplies by log^k(p).
    MainTerm times_log_p(unsigned k) const;

    friend bool operator==(const MainTerm& a, const MainTerm& b);

    // e.g. "a2*(1/30 l^5 + 1/24 l^4 u)"
    std::string str() const;

private:
    unsigned degree_;
    bool a2_normalized_;
    std::map<Key, Rational> coeffs_;
};

}  // namespace zpm
