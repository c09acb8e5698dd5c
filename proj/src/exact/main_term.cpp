#include "zpm/main_term.hpp"

#include "zpm/errors.hpp"

#include <sstream>

namespace zpm {

std::string Coefficient::str() const {
    return a2_normalized ? "a2*" + value.str() : value.str();
}

MainTerm MainTerm::monomial(const Rational& coef, unsigned u_exp, unsigned v_exp,
                            bool a2_normalized) {
    MainTerm m(u_exp + v_exp, a2_normalized);
    m.add(u_exp, v_exp, coef);
    return m;
}

Rational MainTerm::coefficient(unsigned u_exp, unsigned v_exp) const {
    auto it = coeffs_.find({u_exp, v_exp});
    return it == coeffs_.end() ? Rational{} : it->second;
}

void MainTerm::add(unsigned u_exp, unsigned v_exp, const Rational& coef) {
    if (u_exp + v_exp != degree_) {
        throw ArgumentError("monomial of degree " + std::to_string(u_exp + v_exp) +
                            " added to main term of degree " + std::to_string(degree_));
    }
    if (coef.is_zero()) {
        return;
    }
    auto [it, inserted] = coeffs_.try_emplace({u_exp, v_exp}, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) {
            coeffs_.erase(it);
        }
    }
}

MainTerm& MainTerm::operator+=(const MainTerm& other) {
    if (other.empty()) {
        return *this;
    }
    if (a2_normalized_ != other.a2_normalized_) {
        throw ArgumentError("cannot add main terms with different a2 normalisation");
    }
    if (empty()) {
        degree_ = other.degree_;
    }
    for (const auto& [key, coef] : other.coeffs_) {
        add(key.first, key.second, coef);
    }
    return *this;
}

MainTerm& MainTerm::operator-=(const MainTerm& other) {
    return *this += other.scaled(Rational(-1));
}

MainTerm MainTerm::scaled(const Rational& factor) const {
    MainTerm out(degree_, a2_normalized_);
    for (const auto& [key, coef] : coeffs_) {
        out.add(key.first, key.second, coef * factor);
    }
    return out;
}

MainTerm MainTerm::times_log_p(unsigned k) const {
    MainTerm out(degree_ + k, a2_normalized_);
    for (const auto& [key, coef] : coeffs_) {
        out.add(key.first + k, key.second, coef);
    }
    return out;
}

bool operator==(const MainTerm& a, const MainTerm& b) {
    if (a.empty() && b.empty()) {
        return a.a2_normalized_ == b.a2_normalized_;
    }
    return a.degree_ == b.degree_ && a.a2_normalized_ == b.a2_normalized_ && a.coeffs_ == b.coeffs_;
}

std::string MainTerm::str() const {
    std::ostringstream os;
    if (a2_normalized_) {
        os << "a2*(";
    }
    if (coeffs_.empty()) {
        os << "0";
    }
    bool first = true;
    // Highest power of l first, matching how the tables are printed.
    for (auto it = coeffs_.begin(); it != coeffs_.end(); ++it) {
        const auto& [key, coef] = *it;
        if (!first) {
            os << (coef.sign() < 0 ? " - " : " + ");
        } else if (coef.sign() < 0) {
            os << "-";
        }
        first = false;
        os << coef.abs().str();
        if (key.second > 0) {
            os << " l";
            if (key.second > 1) {
                os << "^" << key.second;
            }
        }
        if (key.first > 0) {
            os << " u";
            if (key.first > 1) {
                os << "^" << key.first;
            }
        }
    }
    if (a2_normalized_) {
        os << ")";
    }
    return os.str();
}

}  // namespace zpm
