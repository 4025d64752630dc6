#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mplab/report.hpp"

namespace mplab {

struct CriterionResult {
    int id = 0;
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Runs the acceptance criteria ("all" or one of: counterexamples, greenmean,
// scheme, completeness, drifted, cli). Deterministic for a fixed seed.
std::vector<CriterionResult> run_acceptance(const std::string& suite, std::uint64_t seed);

bool known_suite(const std::string& suite);

Json acceptance_json(const std::vector<CriterionResult>& results, std::uint64_t seed);

// One line per criterion plus a summary; returns true iff everything passed.
bool print_acceptance(const std::vector<CriterionResult>& results);

// The reference report bundle used by the determinism criterion and the CLI
// golden tests: a fixed set of JSON/CSV artifacts rendered to one string.
std::string determinism_bundle(std::uint64_t seed);

}  // namespace mplab
