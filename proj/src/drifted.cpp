#include "mplab/drifted.hpp"

#include <cmath>
#include <stdexcept>

#include "mplab/ode45.hpp"
#include "mplab/quadrature.hpp"

namespace mplab {

double AlphaSolution::clamp(double t) const {
    if (!(t >= 0) || t > horizon_ * (1 + 1e-12))
        throw std::domain_error("AlphaSolution: t outside [0, horizon]");
    return std::min(std::max(t, log_alpha_.front_t()), horizon_);
}

double AlphaSolution::value(double t) const { return std::exp(log_alpha_.value(clamp(t))); }

double AlphaSolution::deriv1(double t) const {
    t = clamp(t);
    return q_.value(t) * std::exp(log_alpha_.value(t));
}

double AlphaSolution::deriv2(double t) const {
    t = clamp(t);
    double a = std::exp(log_alpha_.value(t));
    double q = q_.value(t);
    return c_ * a - (manifold_->dim - 1) * manifold_->warping->dlog(t) * q * a;
}

namespace {

class AlphaProfile final : public RadialProfile {
  public:
    explicit AlphaProfile(AlphaSolution a) : a_(std::move(a)) {}
    double value(double t) const override { return a_.value(t); }
    double deriv1(double t) const override { return a_.deriv1(t); }
    double deriv2(double t) const override { return a_.deriv2(t); }
    double log_value(double t) const override { return a_.log_value(t); }
    double dlog(double t) const override { return a_.log_deriv(t); }
    double domain_hi() const override { return a_.horizon(); }
    std::string name() const override { return "alpha"; }

  private:
    AlphaSolution a_;
};

}  // namespace

ProfilePtr AlphaSolution::as_profile() const { return std::make_shared<AlphaProfile>(*this); }

AlphaSolution solve_alpha(const ModelManifold& m, double horizon, double c,
                          const std::vector<double>& mandatory_nodes) {
    if (!(horizon > 0)) throw std::invalid_argument("solve_alpha: horizon must be positive");
    if (!(c > 0)) throw std::invalid_argument("solve_alpha: constant must be positive");

    const auto& sigma = *m.warping;
    const double n = m.dim;
    const double t0 = 1e-6;

    std::vector<double> y0 = {std::log1p(c * t0 * t0 / (2 * n)),
                              c * t0 / n / (1 + c * t0 * t0 / (2 * n))};
    auto rhs = [&](double t, const std::vector<double>& y, std::vector<double>& dy) {
        double q = y[1];
        dy[0] = q;
        dy[1] = c - q * q - (n - 1) * sigma.dlog(t) * q;
    };

    std::vector<double> ts = {t0}, lu = {y0[0]}, qs = {y0[1]};
    auto observer = [&](double t, const std::vector<double>& y) {
        if (!(y[1] > 0))
            throw std::runtime_error("solve_alpha: positivity lost (internal invariant)");
        ts.push_back(t);
        lu.push_back(y[0]);
        qs.push_back(y[1]);
        return true;
    };

    std::vector<double> nodes = mandatory_nodes;
    std::sort(nodes.begin(), nodes.end());

    Ode45Options opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-13;
    opt.initial_step = t0 / 10;
    // node spacing tight enough that the Hermite tables stay consistent to
    // ~1e-10 between samples
    opt.max_step = [](double t) { return 0.01 * std::max(t, 1e-2); };
    ode45(rhs, t0, y0, horizon, opt, observer, nodes);

    // q' at the nodes from the ODE, for the q Hermite table
    std::vector<double> dq(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        double q = qs[i];
        dq[i] = c - q * q - (n - 1) * sigma.dlog(ts[i]) * q;
    }

    AlphaSolution a;
    a.manifold_ = std::make_shared<ModelManifold>(m);
    a.log_alpha_ = HermiteSpline(ts, lu, qs);
    a.q_ = HermiteSpline(ts, qs, dq);
    a.horizon_ = horizon;
    a.c_ = c;
    double sup = 0;
    for (std::size_t i = 0; i < ts.size(); ++i)
        sup = std::max(sup, qs[i] * std::exp(lu[i]));
    a.sup_d1_ = sup;
    return a;
}

double drifted_apply(const AlphaSolution& a, const RadialProfile& v, double t) {
    if (!(t > 0) || !(t < a.horizon()))
        throw std::domain_error("drifted_apply: t outside (0, horizon)");
    const ModelManifold& m = a.manifold();
    double drift = (m.dim - 1) * m.warping->dlog(t) + 2 * a.log_deriv(t);
    return v.deriv2(t) + drift * v.deriv1(t);
}

ConjugationReport conjugation_check(const AlphaSolution& a, const RadialProfile& phi,
                                    double support_lo, double support_hi, int grid_points) {
    if (!(support_lo > 0) || !(support_hi < a.horizon()) || !(support_hi > support_lo))
        throw std::invalid_argument("conjugation_check: support must sit inside (0, horizon)");
    // compact support check at the declared edges
    if (std::fabs(phi.value(support_lo)) > 1e-12 || std::fabs(phi.value(support_hi)) > 1e-12)
        throw std::invalid_argument("conjugation_check: phi does not vanish at support ends");

    const ModelManifold& m = a.manifold();
    const double c = a.constant();
    const auto& sigma = *m.warping;

    auto ratio_d1 = [&](double t) {
        double al = a.value(t);
        return (phi.deriv1(t) * al - phi.value(t) * a.deriv1(t)) / (al * al);
    };
    auto ratio_d2 = [&](double t) {
        double al = a.value(t), ad = a.deriv1(t), add = a.deriv2(t);
        double f = phi.value(t), fd = phi.deriv1(t), fdd = phi.deriv2(t);
        return (fdd * al - f * add) / (al * al) -
               2 * ad * (fd * al - f * ad) / (al * al * al);
    };
    auto drifted_of_ratio = [&](double t) {
        double drift = (m.dim - 1) * sigma.dlog(t) + 2 * a.log_deriv(t);
        return ratio_d2(t) + drift * ratio_d1(t);
    };
    auto schrodinger_phi = [&](double t) {
        return phi.deriv2(t) + (m.dim - 1) * sigma.dlog(t) * phi.deriv1(t) - c * phi.value(t);
    };

    ConjugationReport rep;
    for (int i = 1; i < grid_points; ++i) {
        double t = support_lo + (support_hi - support_lo) * i / grid_points;
        double lhs = a.value(t) * drifted_of_ratio(t);
        double rhs = schrodinger_phi(t);
        rep.max_pointwise_residual = std::max(rep.max_pointwise_residual, std::fabs(lhs - rhs));
    }

    // duality in the plain measure: int D_alpha(u/alpha) (alpha phi) sigma dt
    // equals int u (Laplace - c) phi sigma dt for compactly supported phi
    auto u = [&](double t) { return 1 + t * t; };
    auto u_d1 = [](double t) { return 2 * t; };
    auto u_d2 = [](double) { return 2.0; };
    auto lhs_f = [&](double t) {
        double al = a.value(t), ad = a.deriv1(t), add = a.deriv2(t);
        double f = u(t), fd = u_d1(t), fdd = u_d2(t);
        double r1 = (fd * al - f * ad) / (al * al);
        double r2 = (fdd * al - f * add) / (al * al) - 2 * ad * (fd * al - f * ad) / (al * al * al);
        double drift = (m.dim - 1) * sigma.dlog(t) + 2 * a.log_deriv(t);
        double dalpha_u = r2 + drift * r1;
        return dalpha_u * (al * phi.value(t)) * sigma.value(t);
    };
    auto rhs_f = [&](double t) {
        double lphi = phi.deriv2(t) + (m.dim - 1) * sigma.dlog(t) * phi.deriv1(t) -
                      c * phi.value(t);
        return u(t) * lphi * sigma.value(t);
    };
    double lhs = integrate(lhs_f, support_lo, support_hi, 1e-12, 1e-12);
    double rhs = integrate(rhs_f, support_lo, support_hi, 1e-12, 1e-12);
    rep.duality_residual = std::fabs(lhs - rhs);
    return rep;
}

}  // namespace mplab
