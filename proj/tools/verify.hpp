#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace latmut::cli {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed, unsigned threads);

}  // namespace latmut::cli
