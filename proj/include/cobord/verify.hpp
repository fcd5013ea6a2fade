#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cobord/poly.hpp"

namespace cobord {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // diagnostic on failure, optional note on success
    double ms = 0.0;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    double ms = 0.0;

    bool pass() const;
};

// fgl, schur, segre, gysin, quadratic, appendix
std::vector<std::string> suite_names();

// Run one identity suite.  `cap` scales the series precision where a check
// does not pin its own; `seed` feeds the randomized ring/action property
// checks (fixed default keeps output deterministic).
SuiteResult run_suite(const std::string& name, int cap, std::uint64_t seed);

// All suites, optionally on several threads; results always come back in
// canonical suite order regardless of the schedule.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, int cap,
                                    std::uint64_t seed, int jobs);

// The thirteen acceptance criteria, one result each, tolerances pinned.
std::vector<CheckResult> run_acceptance(std::uint64_t seed);

} // namespace cobord
