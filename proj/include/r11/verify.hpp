#pragma once

// Self-checks run by `r11 verify`: each suite compares library results with
// closed forms or with an independent route through the algebra.

#include <cstdint>
#include <string>
#include <vector>

namespace r11 {

struct Check {
    std::string name;
    double error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    [[nodiscard]] bool pass() const;
};

/// clifford, moebius, representations, transforms, operators, taylor.
const std::vector<std::string>& suite_names();
bool known_suite(const std::string& name);

/// Runs one suite, or every suite for "all".  Throws DomainError for an unknown name.
std::vector<SuiteReport> run_verify(const std::string& suite, std::uint64_t seed);

/// {"seed": N, "pass": bool, "suites": [{"suite", "pass", "checks": [...]}]}
std::string to_json(const std::vector<SuiteReport>& reports, std::uint64_t seed);

}  // namespace r11
