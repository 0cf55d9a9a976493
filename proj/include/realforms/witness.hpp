#ifndef REALFORMS_WITNESS_HPP
#define REALFORMS_WITNESS_HPP

#include <string>
#include <vector>

#include "realforms/matrix.hpp"

namespace realforms {

struct WitnessAssertion {
    std::string kind;
    std::string description;
    bool pass = false;
    std::string detail;  // exact matrices involved, for failures and audits
};

struct WitnessReport {
    std::string case_id;
    std::string title;
    std::vector<WitnessAssertion> assertions;

    bool all_pass() const;
    int passed() const;
    int failed() const;
};

// Runs one bundled witness suite. Error: CaseNotFound.
WitnessReport run_case(const std::string& case_id);

// Runs a case document given as JSON text (same schema as the bundled ones).
WitnessReport run_case_text(const std::string& json_text);

std::vector<std::string> bundled_case_ids();
const std::string& bundled_case_text(const std::string& case_id);  // CaseNotFound

}  // namespace realforms

#endif
