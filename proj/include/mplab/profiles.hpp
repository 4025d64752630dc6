#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace mplab {

// Analytic tail behaviour of the log-derivative sigma'/sigma on [t_from, inf).
// Consumed by the completeness tests to certify divergent minorants /
// integrable majorants without pretending a finite window decides a tail.
struct TailInfo {
    enum Kind {
        UNKNOWN,
        SIGMA_DECREASING,   // sigma' < 0 on [t_from, inf), total volume finite
        DLOG_BOUNDED,       // |sigma'/sigma| <= bound on [t_from, inf)
        DLOG_GROWING_POWER  // sigma'/sigma >= coeff * t^power on [t_from, inf), coeff>0
    };
    Kind kind = UNKNOWN;
    double t_from = 1.0;
    double bound = 0.0;
    double coeff = 0.0;
    double power = 0.0;
};

// Scalar radial function with analytic value / first / second derivative, plus
// log-form accessors that stay finite when the plain value over/underflows.
class RadialProfile {
  public:
    virtual ~RadialProfile() = default;

    virtual double value(double t) const = 0;
    virtual double deriv1(double t) const;  // default: centered differences
    virtual double deriv2(double t) const;

    virtual double log_value(double t) const;
    virtual double dlog(double t) const;      // f'/f
    virtual double d2_ratio(double t) const;  // f''/f

    virtual double domain_lo() const { return 0.0; }
    virtual double domain_hi() const { return std::numeric_limits<double>::infinity(); }

    virtual TailInfo tail_info() const { return {}; }
    virtual std::string name() const = 0;

    bool inside(double t) const { return t > domain_lo() && t < domain_hi(); }
    void require_inside(double t) const;  // throws std::domain_error
};

using ProfilePtr = std::shared_ptr<const RadialProfile>;

// --- profile constructors ------------------------------------------------

ProfilePtr identity_profile();                     // t
ProfilePtr sinh_profile();                         // sinh t
ProfilePtr constant_profile(double c);             // c on (-inf, inf)
ProfilePtr power_profile(double p);                // t^p
ProfilePtr exp_profile(double rate);               // exp(rate * t)
ProfilePtr cusp_j_profile(double epsilon);         // exp(-t^{2+2e}) / t^{1+e}
ProfilePtr superexp_tail_profile(double delta);    // exp(t^{2+delta})
ProfilePtr quintic_log_blend(const RadialProfile& left, const RadialProfile& right, double a,
                             double b);
ProfilePtr piecewise_profile(std::vector<double> breaks, std::vector<ProfilePtr> pieces,
                             std::string name, TailInfo tail = {});

// Generic closed-form profile from callables; derivative callables optional
// (centered differences otherwise).
ProfilePtr function_profile(std::function<double(double)> f, std::string name,
                            std::function<double(double)> d1 = nullptr,
                            std::function<double(double)> d2 = nullptr, double lo = 0.0,
                            double hi = std::numeric_limits<double>::infinity());

// --- model geometry -------------------------------------------------------

// Rotationally symmetric manifold: (0,inf) x S^{n-1} with metric
// dt^2 + sigma(t)^2 dtheta^2.
struct ModelManifold {
    int dim = 2;
    ProfilePtr warping;
    std::string profile_name;

    ModelManifold(int n, ProfilePtr sigma, std::string name);
};

// Builtin catalog: "euclidean", "hyperbolic", "cusp" (epsilon), "superexp"
// (epsilon read as the tail exponent offset). Throws std::invalid_argument on
// unknown names or bad parameters.
ModelManifold make_manifold(const std::string& profile, double epsilon = 1.0, int dim = 2);

double sphere_volume(int dim_minus_1);  // vol(S^{n-1})

// Radial sectional curvature -sigma''/sigma.
double gaussian_curvature(const ModelManifold& m, double t);

// f'' + (n-1)(sigma'/sigma) f'
double radial_laplacian(const ModelManifold& m, const RadialProfile& f, double t);

// vol(B_t) = vol(S^{n-1}) * int_0^t sigma^{n-1}
double volume_ball(const ModelManifold& m, double t);

// area(dB_t) = vol(S^{n-1}) * sigma^{n-1}(t)
double boundary_area(const ModelManifold& m, double t);

// Total volume; +inf unless the warping tail certifies integrability.
double volume_total(const ModelManifold& m);

}  // namespace mplab
