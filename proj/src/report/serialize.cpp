#include "report_detail.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace zpm::report::detail {

namespace {

// Extra fields that are evaluations of exact constants rather than measurements.
const std::set<std::string> kDerivedExtras = {
    "lambda_x",          "rmt_coefficient",           "lower_constant", "upper_constant",
    "s_beta_predicted",  "beta_over_alpha_predicted", "coefficient",
};

nlohmann::json tagged(double value, Provenance p) {
    return {{"value", value}, {"provenance", provenance_name(p)}};
}

std::vector<Field> point_fields(const TrendPoint& p) {
    std::vector<Field> out = {
        {"T", p.T, Provenance::empirical},
        {"zero_count", static_cast<double>(p.zero_count), Provenance::empirical},
        {"empirical_re", p.empirical.real(), Provenance::empirical},
        {"empirical_im", p.empirical.imag(), Provenance::empirical},
        {"predicted_re", p.predicted.real(), Provenance::exact_rational},
        {"predicted_im", p.predicted.imag(), Provenance::exact_rational},
        {"ratio", p.ratio, Provenance::empirical},
    };
    for (const auto& [key, value] : p.extra) {
        out.push_back({key, value,
                       kDerivedExtras.count(key) ? Provenance::exact_rational : Provenance::empirical});
    }
    return out;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

}  // namespace

std::string number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::exact_rational:
            return "exact-rational";
        case Provenance::empirical:
            return "empirical";
        case Provenance::calibrated_band:
            return "calibrated-band";
    }
    return "empirical";
}

nlohmann::json rational_json(const Rational& r) {
    return {{"numerator", r.numerator().get_str()},
            {"denominator", r.denominator().get_str()},
            {"provenance", "exact-rational"}};
}

nlohmann::json value_json(const VerifyEntry::Value& v) {
    if (const auto* m = std::get_if<MainTerm>(&v)) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [key, coef] : m->coefficients()) {
            nlohmann::json t = rational_json(coef);
            t["log_p_power"] = key.first;
            t["log_t_power"] = key.second;
            terms.push_back(t);
        }
        return {{"kind", "main_term"}, {"a2_normalized", m->a2_normalized()}, {"terms", terms}};
    }
    if (const auto* c = std::get_if<Coefficient>(&v)) {
        nlohmann::json j = rational_json(c->value);
        j["kind"] = "rational";
        j["a2_normalized"] = c->a2_normalized;
        return j;
    }
    return {{"kind", "decimal"}, {"digits", std::get<std::string>(v)}};
}

std::string value_text(const VerifyEntry::Value& v) {
    if (const auto* m = std::get_if<MainTerm>(&v)) {
        return m->str();
    }
    if (const auto* c = std::get_if<Coefficient>(&v)) {
        return c->str();
    }
    return std::get<std::string>(v);
}

nlohmann::json result_json(const NamedResult& r) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : r.result.trend) {
        nlohmann::json point = nlohmann::json::object();
        for (const auto& f : point_fields(p)) {
            point[f.name] = tagged(f.value, f.provenance);
        }
        points.push_back(point);
    }
    return {{"id", r.id},
            {"experiment", r.result.experiment},
            {"parameters", r.result.parameters},
            {"rh_assumed", r.result.rh_assumed},
            {"points", points}};
}

std::string result_csv(const NamedResult& r) {
    std::ostringstream out;
    out << "id,experiment,parameters,rh_assumed,T,field,value,provenance\n";
    std::string params;
    for (const auto& [key, value] : r.result.parameters) {
        params += (params.empty() ? "" : ";") + key + "=" + value;
    }
    for (const auto& p : r.result.trend) {
        for (const auto& f : point_fields(p)) {
            out << csv_quote(r.id) << ',' << csv_quote(r.result.experiment) << ','
                << csv_quote(params) << ',' << (r.result.rh_assumed ? "true" : "false") << ','
                << number(p.T) << ',' << f.name << ',' << number(f.value) << ','
                << provenance_name(f.provenance) << '\n';
        }
    }
    return out.str();
}

nlohmann::json summary_json(const std::vector<Verdict>& verdicts, bool passed) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& v : verdicts) {
        nlohmann::json values = nlohmann::json::object();
        for (const auto& f : v.values) {
            values[f.name] = tagged(f.value, f.provenance);
        }
        list.push_back(
            {{"id", v.id}, {"assertion", v.assertion}, {"passed", v.passed}, {"values", values}});
    }
    return {{"passed", passed}, {"verdicts", list}};
}

std::string summary_csv(const std::vector<Verdict>& verdicts) {
    std::ostringstream out;
    out << "id,assertion,passed,field,value,provenance\n";
    for (const auto& v : verdicts) {
        const std::string head =
            csv_quote(v.id) + ',' + csv_quote(v.assertion) + ',' + (v.passed ? "true" : "false");
        if (v.values.empty()) {
            out << head << ",,,\n";
        }
        for (const auto& f : v.values) {
            out << head << ',' << f.name << ',' << number(f.value) << ','
                << provenance_name(f.provenance) << '\n';
        }
    }
    return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ResourceError("cannot write '" + path.string() + "'");
    }
    out << text;
    if (!out) {
        throw ResourceError("write failed for '" + path.string() + "'");
    }
}

}  // namespace zpm::report::detail
