#pragma once

#include "mplab/hermite.hpp"
#include "mplab/profiles.hpp"

namespace mplab {

// Positive radial solution of alpha'' + (n-1)(sigma'/sigma) alpha' = c*alpha
// with alpha(0)=1, alpha'(0)=0, carried as (log alpha, alpha'/alpha) Hermite
// tables. alpha is strictly increasing with alpha >= 1; second derivatives
// are re-evaluated from the defining equation.
class AlphaSolution {
  public:
    AlphaSolution() = default;

    double value(double t) const;
    double deriv1(double t) const;
    double deriv2(double t) const;  // from the ODE
    double log_value(double t) const { return log_alpha_.value(clamp(t)); }
    double log_deriv(double t) const { return q_.value(clamp(t)); }  // alpha'/alpha

    double horizon() const { return horizon_; }
    double constant() const { return c_; }
    const ModelManifold& manifold() const { return *manifold_; }

    double sup_deriv1() const { return sup_d1_; }  // max alpha' over (0,horizon]
    double inf_value() const { return 1.0; }       // attained at the pole

    // RadialProfile adapter over this solution
    ProfilePtr as_profile() const;

    friend AlphaSolution solve_alpha(const ModelManifold& m, double horizon, double c,
                                     const std::vector<double>& mandatory_nodes);

  private:
    double clamp(double t) const;

    std::shared_ptr<const ModelManifold> manifold_;
    HermiteSpline log_alpha_, q_;
    double horizon_ = 0;
    double c_ = 1;
    double sup_d1_ = 0;
};

// Integrates the defining equation out to the horizon. The constant c > 0
// defaults to 1; mandatory_nodes are landed on exactly (useful for
// comparisons at specific abscissae).
AlphaSolution solve_alpha(const ModelManifold& m, double horizon, double c = 1.0,
                          const std::vector<double>& mandatory_nodes = {});

// v'' + [(n-1) sigma'/sigma + 2 alpha'/alpha] v' at a radial point.
double drifted_apply(const AlphaSolution& a, const RadialProfile& v, double t);

struct ConjugationReport {
    double max_pointwise_residual = 0;  // max | alpha*D_alpha(phi/alpha) - (Lphi) |
    double duality_residual = 0;        // weak-form cross-check with a test u
};

// Verifies alpha * D_alpha(phi/alpha) = (Laplace - c) phi pointwise on a grid
// over the support of phi, and in duality against a smooth u.
ConjugationReport conjugation_check(const AlphaSolution& a, const RadialProfile& phi,
                                    double support_lo, double support_hi, int grid_points = 800);

}  // namespace mplab
