#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multiseg/order.hpp"

namespace multiseg {

struct VerifyConfig {
    int max_end = 7;          // grid endpoint bound
    int max_segments = 5;     // random-case segment count bound
    std::size_t budget = kDefaultDownsetBudget;
    std::uint64_t seed = 20240901;
    long trials = 10000;      // seeded random cases per randomized suite
    bool parallel = false;
};

struct Failure {
    std::string inputs;
    std::string expected;
    std::string got;
};

struct Report {
    std::string suite;
    long cases_run = 0;
    std::vector<Failure> failures;
    double wall_time = 0.0;
    VerifyConfig config;

    bool passed() const { return failures.empty(); }
    std::string to_json() const;
};

/// Names of all property suites, in canonical order.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws std::invalid_argument for unknown names.
Report run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace multiseg
