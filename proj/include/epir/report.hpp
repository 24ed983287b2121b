#ifndef EPIR_REPORT_HPP
#define EPIR_REPORT_HPP

#include <string>
#include <vector>

#include "epir/analysis.hpp"

namespace epir {

struct FailureRow {
    int n = 0;
    std::string modulus;
    std::string F_text;
    Rational eta;
    bool in_P = true;
};

// CSV columns: n,modulus,F,eta_exact_num,eta_exact_den,eta_5dp
std::string failure_table_csv(const std::vector<FailureRow>& rows);
std::string failure_table_json(const std::vector<FailureRow>& rows);

// CSV columns: n,h,omega_exact_num,omega_exact_den,omega_5dp
std::string bounds_table_csv(const std::vector<BoundRecord>& rows);
std::string bounds_table_json(const std::vector<BoundRecord>& rows);

// CSV columns: check,scope,lhs,rhs,holds
std::string lemma_checks_csv(const std::vector<LemmaCheck>& checks);
std::string lemma_checks_json(const std::vector<LemmaCheck>& checks);

std::string failure_table_text(const std::vector<FailureRow>& rows);
std::string bounds_table_text(const std::vector<BoundRecord>& rows);
std::string lemma_checks_text(const std::vector<LemmaCheck>& checks);

}  // namespace epir

#endif
