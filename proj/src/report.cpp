#include "epir/report.hpp"

#include <json.hpp>
#include <sstream>

namespace epir {

using nlohmann::json;

namespace {

// RFC-4180 quoting for fields that carry commas or quotes (scopes like
// "n=2,d=1" would otherwise split into extra columns)
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string failure_table_csv(const std::vector<FailureRow>& rows) {
    std::ostringstream os;
    os << "n,modulus,F,eta_exact_num,eta_exact_den,eta_5dp\n";
    for (const auto& r : rows)
        os << r.n << "," << csv_field(r.modulus) << "," << csv_field(r.F_text) << ","
           << r.eta.numerator() << "," << r.eta.denominator() << "," << to_5dp(r.eta) << "\n";
    return os.str();
}

std::string failure_table_json(const std::vector<FailureRow>& rows) {
    json j = json::array();
    for (const auto& r : rows)
        j.push_back({{"n", r.n},
                     {"modulus", r.modulus},
                     {"F", r.F_text},
                     {"eta_exact_num", r.eta.numerator().str()},
                     {"eta_exact_den", r.eta.denominator().str()},
                     {"eta_5dp", to_5dp(r.eta)},
                     {"F_in_P", r.in_P}});
    return j.dump(2);
}

std::string bounds_table_csv(const std::vector<BoundRecord>& rows) {
    std::ostringstream os;
    os << "n,h,omega_exact_num,omega_exact_den,omega_5dp\n";
    for (const auto& r : rows)
        os << r.n << "," << r.h << "," << r.omega.numerator() << "," << r.omega.denominator()
           << "," << to_5dp(r.omega) << "\n";
    return os.str();
}

std::string bounds_table_json(const std::vector<BoundRecord>& rows) {
    json j = json::array();
    for (const auto& r : rows)
        j.push_back({{"n", r.n},
                     {"h", r.h},
                     {"omega_exact_num", r.omega.numerator().str()},
                     {"omega_exact_den", r.omega.denominator().str()},
                     {"omega_5dp", to_5dp(r.omega)}});
    return j.dump(2);
}

std::string lemma_checks_csv(const std::vector<LemmaCheck>& checks) {
    std::ostringstream os;
    os << "check,scope,lhs,rhs,holds\n";
    for (const auto& c : checks)
        os << csv_field(c.name) << "," << csv_field(c.scope) << "," << csv_field(c.lhs) << ","
           << csv_field(c.rhs) << "," << (c.holds ? "true" : "false") << "\n";
    return os.str();
}

std::string lemma_checks_json(const std::vector<LemmaCheck>& checks) {
    json j = json::array();
    for (const auto& c : checks)
        j.push_back({{"check", c.name},
                     {"scope", c.scope},
                     {"lhs", c.lhs},
                     {"rhs", c.rhs},
                     {"holds", c.holds}});
    return j.dump(2);
}

std::string failure_table_text(const std::vector<FailureRow>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << "n=" << r.n << "  Min_g(t)=" << r.modulus << "  F=" << r.F_text
           << "  eta=" << to_5dp(r.eta) << "  (" << r.eta.numerator() << "/"
           << r.eta.denominator() << ")";
        if (!r.in_P) os << "  [F not in P; value exploratory]";
        os << "\n";
    }
    return os.str();
}

std::string bounds_table_text(const std::vector<BoundRecord>& rows) {
    std::ostringstream os;
    for (const auto& r : rows)
        os << "n=" << r.n << "  h=" << r.h << "  omega=" << to_5dp(r.omega) << "  ("
           << r.omega.numerator() << "/" << r.omega.denominator() << ")\n";
    return os.str();
}

std::string lemma_checks_text(const std::vector<LemmaCheck>& checks) {
    std::ostringstream os;
    for (const auto& c : checks)
        os << (c.holds ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.scope << "]  "
           << c.lhs << " vs " << c.rhs << "\n";
    return os.str();
}

}  // namespace epir
