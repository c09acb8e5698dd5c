#include "zpm/seq_descriptor.hpp"

#include "zpm/errors.hpp"

#include <charconv>

namespace zpm {

SeqDescriptor SeqDescriptor::divisor(int mu, int nu) {
    if (mu < 0 || nu < 0) {
        throw ArgumentError("divisor derivative orders must be non-negative");
    }
    SeqDescriptor s;
    s.kind_ = Kind::divisor_deriv;
    s.mu_ = mu;
    s.nu_ = nu;
    return s;
}

SeqDescriptor SeqDescriptor::alpha() {
    SeqDescriptor s;
    s.kind_ = Kind::alpha;
    s.mu_ = 1;
    s.nu_ = 1;
    return s;
}

SeqDescriptor SeqDescriptor::log_weighted(int power, const SeqDescriptor& inner) {
    if (power < 0) {
        throw ArgumentError("log weight must be non-negative");
    }
    if (power == 0) {
        return inner;
    }
    if (inner.kind_ == Kind::log_weighted) {
        return log_weighted(power + inner.log_power_, *inner.inner_);
    }
    SeqDescriptor s;
    s.kind_ = Kind::log_weighted;
    s.log_power_ = power;
    s.inner_ = std::make_shared<const SeqDescriptor>(inner);
    return s;
}

namespace {

int parse_int(std::string_view text, const std::string& whole) {
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || value < 0) {
        throw ArgumentError("malformed sequence name '" + whole + "'");
    }
    return value;
}

}  // namespace

SeqDescriptor SeqDescriptor::parse(const std::string& text) {
    std::string_view sv(text);
    if (sv.starts_with("log")) {
        const auto star = sv.find('*');
        if (star == std::string_view::npos) {
            throw ArgumentError("malformed sequence name '" + text + "'");
        }
        auto head = sv.substr(3, star - 3);
        int power = 1;
        if (!head.empty()) {
            if (head.front() != '^') {
                throw ArgumentError("malformed sequence name '" + text + "'");
            }
            power = parse_int(head.substr(1), text);
        }
        return log_weighted(power, parse(std::string(sv.substr(star + 1))));
    }
    if (sv == "alpha") {
        return alpha();
    }
    if (sv == "d") {
        return divisor(0, 0);
    }
    if (sv.starts_with("d(") && sv.ends_with(")")) {
        auto inside = sv.substr(2, sv.size() - 3);
        const auto comma = inside.find(',');
        if (comma == std::string_view::npos) {
            return divisor(parse_int(inside, text), 0);
        }
        return divisor(parse_int(inside.substr(0, comma), text),
                       parse_int(inside.substr(comma + 1), text));
    }
    if (sv.starts_with("d")) {
        return divisor(parse_int(sv.substr(1), text), 0);
    }
    throw ArgumentError("unknown sequence '" + text + "'");
}

int SeqDescriptor::degree() const {
    switch (kind_) {
    case Kind::divisor_deriv:
    case Kind::alpha:
        return mu_ + nu_;
    case Kind::log_weighted:
        return log_power_ + inner_->degree();
    }
    return 0;
}

std::string SeqDescriptor::name() const {
    switch (kind_) {
    case Kind::alpha:
        return "alpha";
    case Kind::divisor_deriv:
        if (mu_ == 0 && nu_ == 0) {
            return "d";
        }
        if (nu_ == 0) {
            return "d^(" + std::to_string(mu_) + ")";
        }
        return "d^(" + std::to_string(mu_) + "," + std::to_string(nu_) + ")";
    case Kind::log_weighted: {
        std::string head = log_power_ == 1 ? "log" : "log^" + std::to_string(log_power_);
        return head + "*" + inner_->name();
    }
    }
    return {};
}

bool operator==(const SeqDescriptor& a, const SeqDescriptor& b) {
    if (a.kind_ != b.kind_) {
        return false;
    }
    if (a.kind_ == SeqDescriptor::Kind::log_weighted) {
        return a.log_power_ == b.log_power_ && *a.inner_ == *b.inner_;
    }
    return a.mu_ == b.mu_ && a.nu_ == b.nu_;
}

std::vector<LogDivisorTerm> expand_log_divisor(const SeqDescriptor& seq) {
    switch (seq.kind()) {
    case SeqDescriptor::Kind::alpha:
        return expand_log_divisor(SeqDescriptor::divisor(1, 1));
    case SeqDescriptor::Kind::log_weighted: {
        auto terms = expand_log_divisor(seq.inner());
        for (auto& t : terms) {
            t.log_power += seq.log_power();
        }
        return terms;
    }
    case SeqDescriptor::Kind::divisor_deriv:
        break;
    }
    // d^(mu,nu) is symmetric; put the larger order first to keep expansions short.
    int mu = seq.mu();
    int nu = seq.nu();
    if (nu > mu) {
        std::swap(mu, nu);
    }
    std::vector<LogDivisorTerm> terms;
    for (int k = 0; k <= nu; ++k) {
        Rational coef(binom(nu, k));
        if (k % 2 == 1) {
            coef = -coef;
        }
        terms.push_back({coef, nu - k, mu + k});
    }
    return terms;
}

}  // namespace zpm
