#include "mplab/counterexample.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mplab/parallel.hpp"
#include "mplab/quadrature.hpp"

namespace mplab {

namespace {

// u(t) = (exp(t^p) - exp(t_eps^p))_+ with p = 2+2e. Plain accessors overflow
// past t^p ~ 709; the sweep uses the scaled/log forms instead.
class GrowthProfile final : public RadialProfile {
  public:
    GrowthProfile(double eps, double t_eps)
        : e_(eps), p_(2 + 2 * eps), te_(t_eps), base_(std::exp(std::pow(t_eps, p_))) {}

    double value(double t) const override {
        if (t <= te_) return 0.0;
        return std::exp(std::pow(t, p_)) - base_;
    }
    double deriv1(double t) const override {
        if (t <= te_) return 0.0;
        return 2 * (1 + e_) * std::pow(t, 1 + 2 * e_) * std::exp(std::pow(t, p_));
    }
    double deriv2(double t) const override {
        if (t <= te_) return 0.0;
        return 2 * (1 + e_) * std::exp(std::pow(t, p_)) *
               (2 * (1 + e_) * std::pow(t, 2 + 4 * e_) + (1 + 2 * e_) * std::pow(t, 2 * e_));
    }
    double log_value(double t) const override {
        if (t <= te_) return -std::numeric_limits<double>::infinity();
        double tp = std::pow(t, p_);
        return tp + std::log1p(-std::exp(std::pow(te_, p_) - tp));
    }
    std::string name() const override { return "cusp-growth"; }

  private:
    double e_, p_, te_, base_;
};

}  // namespace

CuspFamily build_cusp(double epsilon) {
    if (!(epsilon > 0)) throw std::invalid_argument("build_cusp: epsilon must be positive");
    double t_eps = std::pow(2 * (1 + epsilon) * epsilon, -1 / (2 * epsilon));
    ModelManifold m = make_manifold("cusp", epsilon);
    ProfilePtr u = std::make_shared<GrowthProfile>(epsilon, t_eps);
    return {epsilon, t_eps, m, m.warping, u};
}

double supersolution_scaled_residual(const CuspFamily& f, double t) {
    if (!(t > f.t_eps)) throw std::domain_error("scaled residual defined for t > t_eps");
    double p = 2 + 2 * f.epsilon;
    double bracket = 2 * (1 + f.epsilon) * f.epsilon * std::pow(t, 2 * f.epsilon) - 1;
    return bracket + std::exp(std::pow(f.t_eps, p) - std::pow(t, p));
}

LogValue supersolution_residual_logdomain(const CuspFamily& f, double t) {
    double p = 2 + 2 * f.epsilon;
    double bracket = 2 * (1 + f.epsilon) * f.epsilon * std::pow(t, 2 * f.epsilon) - 1;
    LogValue lead = LogValue::from_double(bracket);
    if (!lead.is_zero()) lead.log_abs += std::pow(t, p);
    LogValue shift = LogValue::from_log(std::pow(f.t_eps, p), +1);
    return lead + shift;
}

namespace {

double sweep_point(const CuspFamily& f, double t_max, long points, long i) {
    double ratio = std::log(t_max / f.t_eps);
    return f.t_eps * std::exp(ratio * static_cast<double>(i + 1) / points);
}

}  // namespace

void residual_sweep_serial(const CuspFamily& f, double t_max, long points,
                           std::vector<double>& scaled) {
    scaled.assign(points, 0.0);
    serial_for(points, [&](long i) {
        scaled[i] = supersolution_scaled_residual(f, sweep_point(f, t_max, points, i));
    });
}

void residual_sweep_parallel(const CuspFamily& f, double t_max, long points,
                             std::vector<double>& scaled) {
    scaled.assign(points, 0.0);
    parallel_for(points, [&](long i) {
        scaled[i] = supersolution_scaled_residual(f, sweep_point(f, t_max, points, i));
    });
}

SupersolutionReport verify_supersolution(const CuspFamily& f, double t_max, long points) {
    if (!(t_max > f.t_eps)) throw std::invalid_argument("verify_supersolution: t_max <= t_eps");
    if (points < 2) throw std::invalid_argument("verify_supersolution: need >= 2 points");

    SupersolutionReport rep;
    rep.epsilon = f.epsilon;
    rep.t_eps = f.t_eps;
    rep.t_max = t_max;
    rep.points = points;

    std::vector<double> scaled;
    residual_sweep_parallel(f, t_max, points, scaled);
    std::vector<int> signs(points);
    parallel_for(points, [&](long i) {
        double r = scaled[i];
        LogValue lv = supersolution_residual_logdomain(f, sweep_point(f, t_max, points, i));
        int s = (r > 0) ? 1 : (r < 0 ? -1 : 0);
        // both routes must agree; a mismatch means the scaled form overflowed
        signs[i] = (lv.sign != s && r != 0.0) ? 2 : s;
    });
    rep.min_scaled_residual = scaled[0];
    rep.min_residual_sign = 1;
    for (long i = 0; i < points; ++i) {
        if (signs[i] == 2)
            throw std::runtime_error("verify_supersolution: log-domain disagreement");
        rep.min_scaled_residual = std::min(rep.min_scaled_residual, scaled[i]);
        rep.min_residual_sign = std::min(rep.min_residual_sign, signs[i]);
    }

    double p = 2 + 2 * f.epsilon;
    rep.boundary_flux_log = std::log(2 * (1 + f.epsilon)) +
                            (1 + 2 * f.epsilon) * std::log(f.t_eps) + std::pow(f.t_eps, p);
    rep.boundary_flux = std::exp(rep.boundary_flux_log);
    rep.pass = rep.min_residual_sign >= 0 && rep.boundary_flux_log > -700;
    return rep;
}

MassReport l1_mass(const CuspFamily& f) {
    MassReport rep;
    const double e = f.epsilon;
    const double p = 2 + 2 * e;
    const double tep = std::pow(f.t_eps, p);
    rep.upper_bound = 2 * M_PI * std::pow(f.t_eps, -e) / e;

    // |u| j = (1 - exp(t_eps^p - t^p)) / t^{1+e} beyond t_eps, zero below
    auto integrand = [&](double t) {
        return -std::expm1(tep - std::pow(t, p)) / std::pow(t, 1 + e);
    };
    // split point: exp(t_eps^p - T^p) below 1e-18 makes the tail closed-form
    double T = std::max(2 * f.t_eps, std::pow(tep + 42.0, 1 / p));
    double body = integrate(integrand, f.t_eps, T, 1e-12, 1e-10);
    double tail = std::pow(T, -e) / e;
    rep.mass = 2 * M_PI * (body + tail);
    rep.finite = std::isfinite(rep.mass) && rep.mass <= rep.upper_bound;
    return rep;
}

DiscRemarkReport disc_remark_check() {
    DiscRemarkReport rep;
    // (-Laplace + 1)(-r) = 1/r - r in the plane
    rep.min_residual = std::numeric_limits<double>::infinity();
    rep.max_u = -std::numeric_limits<double>::infinity();
    for (int i = 1; i < 10000; ++i) {
        double r = i / 10000.0;
        rep.min_residual = std::min(rep.min_residual, 1 / r - r);
        rep.max_u = std::max(rep.max_u, -r);
    }
    rep.norm_l1 = integrate([](double r) { return r * 2 * M_PI * r; }, 0, 1, 1e-14, 1e-14);
    rep.norm_l2 = std::sqrt(integrate([](double r) { return r * r * 2 * M_PI * r; }, 0, 1,
                                      1e-14, 1e-14));
    rep.norm_linf = 1.0;
    rep.pass = rep.min_residual >= 0 && rep.max_u <= 0 && std::isfinite(rep.norm_l1);
    return rep;
}

}  // namespace mplab
