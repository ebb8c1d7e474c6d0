#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mhuff/oracle.hpp"

namespace mhuff {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string suite;
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct VerifyOptions {
    std::string golden_dir;
    OracleLimits limits;
    std::uint64_t seed = 20070101;
    std::size_t random_cases = 200;
};

std::vector<CheckResult> verify_tables(const VerifyOptions& options);
std::vector<CheckResult> verify_formulas(const VerifyOptions& options);
std::vector<CheckResult> verify_oracle(const VerifyOptions& options);

const char* status_name(CheckStatus status);

}  // namespace mhuff
