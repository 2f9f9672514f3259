#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace galdens {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    unsigned threads = 1;
    std::uint64_t seed = 20240601;
};

CriterionResult check_steinberg_zero_density(const AcceptanceOptions& o);   // 1
CriterionResult check_tetrahedral_density(const AcceptanceOptions& o);      // 2
CriterionResult check_serre_family(const AcceptanceOptions& o);             // 3
CriterionResult check_planners(const AcceptanceOptions& o);                 // 4
CriterionResult check_product_density(const AcceptanceOptions& o);          // 5
CriterionResult check_shifting(const AcceptanceOptions& o);                 // 6
CriterionResult check_chebotarev(const AcceptanceOptions& o);               // 7
CriterionResult check_gl1_exactness(const AcceptanceOptions& o);            // 8
CriterionResult check_character_tables(const AcceptanceOptions& o);         // 9
CriterionResult check_rs_diagnostic(const AcceptanceOptions& o);            // 10

/// Runs the selected criteria (all when empty) in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o, const std::vector<int>& only = {});

/// "[PASS] 3 serre family: ... (0.01 s)"
std::string format_result(const CriterionResult& r);

}  // namespace galdens
