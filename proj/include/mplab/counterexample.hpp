#pragma once

#include <vector>

#include "mplab/logdomain.hpp"
#include "mplab/profiles.hpp"

namespace mplab {

// The cusp family: sigma = t near the pole, = exp(-t^{2+2e})/t^{1+e} beyond
// the matching radius, and the unbounded supersolution profile carried in
// log form. All large quantities go through (log, sign) arithmetic; the sweep
// never forms exp(t^{2+2e}) directly.
struct CuspFamily {
    double epsilon;
    double t_eps;  // (2(1+e)e)^{-1/(2e)}
    ModelManifold manifold;
    ProfilePtr sigma;  // alias of manifold.warping
    ProfilePtr growth;  // u(t) = (exp(t^{2+2e}) - exp(t_eps^{2+2e}))_+
};

CuspFamily build_cusp(double epsilon);

struct SupersolutionReport {
    double epsilon = 0;
    double t_eps = 0;
    double t_max = 0;
    long points = 0;
    int min_residual_sign = 0;     // sign of (Delta u - u) minimized over the grid
    double min_scaled_residual = 0;  // (Delta u - u) / exp(t^{2+2e}), min over grid
    double boundary_flux = 0;        // one-sided derivative u'(t_eps+)
    double boundary_flux_log = 0;    // log of the same
    bool pass = false;
};

// Sign sweep of Delta u - u over a log-spaced grid on (t_eps, t_max].
// PASS iff every residual sign is >= 0 and the boundary flux is positive.
SupersolutionReport verify_supersolution(const CuspFamily& f, double t_max, long points);

// scaled residuals on the log-spaced sweep grid; serial reference + kernel
void residual_sweep_serial(const CuspFamily& f, double t_max, long points,
                           std::vector<double>& scaled);
void residual_sweep_parallel(const CuspFamily& f, double t_max, long points,
                             std::vector<double>& scaled);

// Scaled residual at one point: (Delta u - u) / exp(t^{2+2e}) for t > t_eps.
double supersolution_scaled_residual(const CuspFamily& f, double t);

// Same quantity assembled in (log, sign) arithmetic; used to cross-check the
// factored form.
LogValue supersolution_residual_logdomain(const CuspFamily& f, double t);

struct MassReport {
    double mass = 0;        // integral of |u| over the manifold
    double upper_bound = 0;  // 2*pi*t_eps^{-e}/e
    bool finite = false;
};

MassReport l1_mass(const CuspFamily& f);

// The unit-disc counterexample with u(r) = -r: (-Laplace + 1)u = 1/r - r >= 0
// on (0,1) while u <= 0; reports the L^1, L^2, L^inf norms.
struct DiscRemarkReport {
    double min_residual = 0;  // min over (0,1) of 1/r - r
    double max_u = 0;         // max of u = -r
    double norm_l1 = 0;
    double norm_l2 = 0;
    double norm_linf = 0;
    bool pass = false;
};

DiscRemarkReport disc_remark_check();

}  // namespace mplab
