#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "mplab/profiles.hpp"
#include "mplab/quadrature.hpp"

namespace mplab {

using Fn1D = std::function<double(double)>;

// Level-set ball of the 1D kernel: the superlevel interval {G(x,.) > 1/r}
// together with the boundary flux weights (they sum to 1 exactly).
struct LevelBall1D {
    double center = 0;
    double r = 0;
    bool degenerate = true;
    double lo = 0, hi = 0;          // interval ends; meaningless when degenerate
    double w_lo = 0, w_hi = 0;      // flux weights at lo / hi
    bool pole_side = false;         // left end of the ball is the domain's pole end
    double sup_dist() const;
};

// Closed-form Sturm-Liouville Dirichlet kernel on a weighted interval (a,b):
// with h(t) = int ds/w(s),
//   G(x,y) = (h(x^y) - h(a)) (h(b) - h(x_y)) / (h(b) - h(a)).
// A left pole (h(a) = -inf, e.g. w = alpha^2 sigma on a model disc) turns the
// kernel into G = h(b) - h(max(x,y)) with no boundary condition at a.
class ExactInterval1D {
  public:
    ExactInterval1D(double a, double b, ProfilePtr weight, bool left_pole = false);

    double lower() const { return a_; }
    double upper() const { return b_; }
    bool left_pole() const { return left_pole_; }
    const RadialProfile& weight() const { return *w_; }

    double h(double t) const;           // the kernel coordinate
    double green(double x, double y) const;
    double green_peak(double x) const;  // lim_{y->x} G(x,y)

    LevelBall1D ball(double x, double r) const;

    // boundary average against the flux weights; v(x) when the ball is {x}
    double mean_value(const Fn1D& v, double x, double r) const;
    double mean_value(const Fn1D& v, const LevelBall1D& b) const;

    // |v(x) - m_r(v)(x) + int_ball (G - 1/r) (w v')' dy| for C^2 v
    double representation_residual(const RadialProfile& v, double x, double r) const;

    // mollified mean: int_0^1 phi(tau) m_{tau*scale/k}(v)(x) dtau
    double mollified_mean(const Fn1D& v, double x, double k, double radius_scale = 1.0) const;

    // sup distance over ball(x, radius_scale/k); 0 when degenerate
    double radius_bound(double x, double k, double radius_scale = 1.0) const;

    // L1 norm of f over (a,b) against the weight measure, dense trapezoid
    double norm_l1(const Fn1D& f, int samples = 4000) const;

  private:
    double a_, b_;
    ProfilePtr w_;
    bool left_pole_;
    CumulativeIntegral hcum_;  // h relative to the anchor
    double h_a_, h_b_;         // h at the ends (h_a = -inf for pole)
    double solve_h(double target, double lo, double hi) const;  // h monotone root
};

// Mollifier 30 s^2 (1-s)^2 on [0,1]: nonnegative, C^1, unit mass.
double mollifier(double s);
double mollifier_cdf(double s);

// --- Riesz decomposition of piecewise-C^2 subharmonic functions -----------

struct ProfilePiece {
    double lo, hi;
    ProfilePtr f;
};

struct RieszMeasure {
    std::vector<std::pair<double, double>> atoms;  // (location, mass = jump of w v')
    std::vector<double> grid;                      // density sample abscissae
    std::vector<double> density;                   // (w v')' at the samples
    Fn1D density_fn;                               // same thing as a callable
};

struct RieszDecomposition {
    RieszMeasure measure;
    double affine_a = 0, affine_b = 0;       // harmonic part h(t) = a + b*h_coord(t)
    double affinity_residual = 0;            // max |v + G*nu - (a + b*h_coord)|
    double reassembly_residual = 0;          // max |v - (h - G*nu)| with the fitted h
    Fn1D potential;                          // G*nu as a callable
};

// Splits the distributional (w v')' of a piecewise-C^2 v into density + atoms,
// rejects downward kinks / negative density, and verifies v + G*nu is affine
// in the h-coordinate.
RieszDecomposition riesz_decompose(const ExactInterval1D& s,
                                   const std::vector<ProfilePiece>& pieces);

// Evaluate a piecewise profile.
double piecewise_value(const std::vector<ProfilePiece>& pieces, double t);

}  // namespace mplab
