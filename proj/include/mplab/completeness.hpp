#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mplab/profiles.hpp"

namespace mplab {

enum class ScVerdict { COMPLETE_EVIDENCE, INCOMPLETE_EVIDENCE, INCONCLUSIVE };
enum class OracleVerdict { SC, NOT_SC, INCONCLUSIVE };

std::string to_string(ScVerdict v);
std::string to_string(OracleVerdict v);

struct CompletenessVerdict {
    ScVerdict verdict = ScVerdict::INCONCLUSIVE;
    double lambda = 0;
    double horizon = 0;       // t actually reached
    double log_u = 0;         // log of the radial solution at the horizon
    double u = 0;             // exp(log_u); +inf when not representable
    double u_log_deriv = 0;   // u'/u at the horizon
    double tail_increment = 0;  // log u(t) - log u(t/10) at the end of the run
    bool analytic_tail = false;  // trailing decades resolved on the slow manifold
    std::vector<std::pair<double, double>> trace;  // (t, log u) checkpoints
};

// Integrates u'' + (n-1)(sigma'/sigma) u' = lambda*u outward from the pole in
// the variables (log u, u'/u). Grows past growth_threshold -> evidence of
// stochastic completeness; log u converging (increment over the trailing
// decade of t below 1e-8) -> a bounded positive solution, evidence of
// incompleteness; otherwise inconclusive at this horizon.
CompletenessVerdict sc_ode_test(const ModelManifold& m, double lambda, double horizon,
                                double growth_threshold);

// Curvature criterion: true iff -sigma''/sigma >= -C t^2 on a dense grid of
// [r0, T]. Sufficient for completeness only; false decides nothing.
bool hsu_test(const ModelManifold& m, double C, double r0, double T);

// Independent volume-quotient oracle: classifies int^inf vol(B_t)/area(dB_t)
// as divergent (SC) or convergent (NOT_SC) from the warping's analytic tail
// data; UNKNOWN tails give INCONCLUSIVE.
OracleVerdict volume_oracle(const ModelManifold& m, double T);

// Tail test for int_1^inf t/vol(t) dt given the ball-volume function and its
// derivative (2*pi*sigma*alpha^2 in the weighted case). decided_from is the
// window end; the measured log-slope on [decided_from/2, decided_from] must
// certify an integrable majorant. Returns true iff the tail integral is
// finite by that certificate.
bool tail_integral_finite(const std::function<double(double)>& vol,
                          const std::function<double(double)>& dvol, double decided_from);

// Volume-growth test for the weighted manifold (weight alpha^2): true iff
// int_1^T t/vol_alpha(B_t) dt has an integrable majorant beyond T.
bool alpha_volume_test(const ModelManifold& m, const RadialProfile& alpha, double T);

}  // namespace mplab
