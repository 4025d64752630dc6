#pragma once

#include "mplab/report.hpp"

namespace mplab {

// Command bodies shared by the CLI and the determinism checks. Each returns
// the artifact it would write; the CLI handles paths and exit codes.

Json counterexample_report(const ExperimentConfig& c);
Json sc_test_report(const ExperimentConfig& c);
Json experiment_report(const ExperimentConfig& c);   // modes: linfty, l1
Json iterate_report(const ExperimentConfig& c);
Json envelope_report(const ExperimentConfig& c);
std::string alpha_csv(const ExperimentConfig& c);    // t, alpha, alpha_prime
std::string green_csv(const ExperimentConfig& c);    // x, y, green
std::string meanvalue_csv(const ExperimentConfig& c);  // x, r, v, m_r
std::string approx_csv(const ExperimentConfig& c);   // x, k, v, v_k, sup_bound_ok

// exit code convention: 0 pass/consistent, 2 violated (unless expected)
int verdict_exit_code(const Json& report, const ExperimentConfig& c);

}  // namespace mplab
