#include "mplab/profiles.hpp"

#include <cmath>
#include <stdexcept>

#include "mplab/quadrature.hpp"

namespace mplab {

void RadialProfile::require_inside(double t) const {
    if (!(t > domain_lo()) || !(t < domain_hi()))
        throw std::domain_error(name() + ": t=" + std::to_string(t) + " outside domain");
}

double RadialProfile::deriv1(double t) const {
    double h = 1e-5 * std::max(1.0, std::fabs(t));
    return (value(t + h) - value(t - h)) / (2 * h);
}

double RadialProfile::deriv2(double t) const {
    double h = 1e-5 * std::max(1.0, std::fabs(t));
    return (value(t + h) - 2 * value(t) + value(t - h)) / (h * h);
}

double RadialProfile::log_value(double t) const { return std::log(value(t)); }
double RadialProfile::dlog(double t) const { return deriv1(t) / value(t); }
double RadialProfile::d2_ratio(double t) const { return deriv2(t) / value(t); }

namespace {

class IdentityProfile final : public RadialProfile {
  public:
    double value(double t) const override { return t; }
    double deriv1(double) const override { return 1.0; }
    double deriv2(double) const override { return 0.0; }
    double log_value(double t) const override { return std::log(t); }
    double dlog(double t) const override { return 1.0 / t; }
    double d2_ratio(double) const override { return 0.0; }
    TailInfo tail_info() const override { return {TailInfo::DLOG_BOUNDED, 1.0, 1.0, 0, 0}; }
    std::string name() const override { return "euclidean"; }
};

class SinhProfile final : public RadialProfile {
  public:
    double value(double t) const override { return std::sinh(t); }
    double deriv1(double t) const override { return std::cosh(t); }
    double deriv2(double t) const override { return std::sinh(t); }
    double log_value(double t) const override { return std::log(std::sinh(t)); }
    double dlog(double t) const override { return 1.0 / std::tanh(t); }
    double d2_ratio(double) const override { return 1.0; }
    TailInfo tail_info() const override {
        return {TailInfo::DLOG_BOUNDED, 1.0, 1.0 / std::tanh(1.0), 0, 0};
    }
    std::string name() const override { return "hyperbolic"; }
};

class ConstantProfile final : public RadialProfile {
  public:
    explicit ConstantProfile(double c) : c_(c) {}
    double value(double) const override { return c_; }
    double deriv1(double) const override { return 0.0; }
    double deriv2(double) const override { return 0.0; }
    double domain_lo() const override { return -std::numeric_limits<double>::infinity(); }
    std::string name() const override { return "constant"; }

  private:
    double c_;
};

class PowerProfile final : public RadialProfile {
  public:
    explicit PowerProfile(double p) : p_(p) {}
    double value(double t) const override { return std::pow(t, p_); }
    double deriv1(double t) const override { return p_ * std::pow(t, p_ - 1); }
    double deriv2(double t) const override { return p_ * (p_ - 1) * std::pow(t, p_ - 2); }
    double log_value(double t) const override { return p_ * std::log(t); }
    double dlog(double t) const override { return p_ / t; }
    double d2_ratio(double t) const override { return p_ * (p_ - 1) / (t * t); }
    std::string name() const override { return "power"; }

  private:
    double p_;
};

class ExpProfile final : public RadialProfile {
  public:
    explicit ExpProfile(double r) : r_(r) {}
    double value(double t) const override { return std::exp(r_ * t); }
    double deriv1(double t) const override { return r_ * value(t); }
    double deriv2(double t) const override { return r_ * r_ * value(t); }
    double log_value(double t) const override { return r_ * t; }
    double dlog(double) const override { return r_; }
    double d2_ratio(double) const override { return r_ * r_; }
    double domain_lo() const override { return -std::numeric_limits<double>::infinity(); }
    std::string name() const override { return "exp"; }

  private:
    double r_;
};

// j(t) = exp(-t^{2+2e}) / t^{1+e}
class CuspJProfile final : public RadialProfile {
  public:
    explicit CuspJProfile(double eps) : e_(eps) {}
    double value(double t) const override { return std::exp(log_value(t)); }
    double deriv1(double t) const override { return dlog(t) * value(t); }
    double deriv2(double t) const override { return d2_ratio(t) * value(t); }
    double log_value(double t) const override {
        return -std::pow(t, 2 + 2 * e_) - (1 + e_) * std::log(t);
    }
    double dlog(double t) const override {
        return -(2 + 2 * e_) * std::pow(t, 1 + 2 * e_) - (1 + e_) / t;
    }
    double d2_ratio(double t) const override {
        return (1 + e_) * (2 * std::pow(t, 2 * e_) + 4 * (1 + e_) * std::pow(t, 2 + 4 * e_) +
                           (2 + e_) / (t * t));
    }
    TailInfo tail_info() const override {
        // j' < 0 for all t > 0
        return {TailInfo::SIGMA_DECREASING, 1.0, 0, 0, 0};
    }
    std::string name() const override { return "cusp-j"; }

  private:
    double e_;
};

// exp(t^{2+d})
class SuperExpProfile final : public RadialProfile {
  public:
    explicit SuperExpProfile(double d) : d_(d) {}
    double value(double t) const override { return std::exp(log_value(t)); }
    double deriv1(double t) const override { return dlog(t) * value(t); }
    double deriv2(double t) const override { return d2_ratio(t) * value(t); }
    double log_value(double t) const override { return std::pow(t, 2 + d_); }
    double dlog(double t) const override { return (2 + d_) * std::pow(t, 1 + d_); }
    double d2_ratio(double t) const override {
        double g = dlog(t);
        return g * g + (2 + d_) * (1 + d_) * std::pow(t, d_);
    }
    TailInfo tail_info() const override {
        return {TailInfo::DLOG_GROWING_POWER, 1.0, 0, 2 + d_, 1 + d_};
    }
    std::string name() const override { return "superexp-tail"; }

  private:
    double d_;
};

// Quintic Hermite interpolation of log f between two profiles; C^2 joints.
class QuinticLogBlend final : public RadialProfile {
  public:
    QuinticLogBlend(const RadialProfile& left, const RadialProfile& right, double a, double b)
        : a_(a), len_(b - a) {
        if (!(b > a)) throw std::invalid_argument("blend: empty window");
        double la = left.log_value(a), ga = left.dlog(a);
        double ha = left.d2_ratio(a) - ga * ga;  // (log f)''
        double lb = right.log_value(b), gb = right.dlog(b);
        double hb = right.d2_ratio(b) - gb * gb;
        f0_ = la;
        f1_ = ga * len_;
        f2_ = ha * len_ * len_;
        g0_ = lb;
        g1_ = gb * len_;
        g2_ = hb * len_ * len_;
    }

    double value(double t) const override { return std::exp(log_value(t)); }
    double deriv1(double t) const override { return dlog(t) * value(t); }
    double deriv2(double t) const override { return d2_ratio(t) * value(t); }

    double log_value(double t) const override { return p(s(t)); }
    double dlog(double t) const override { return dp(s(t)) / len_; }
    double d2_ratio(double t) const override {
        double g = dp(s(t)) / len_;
        return g * g + ddp(s(t)) / (len_ * len_);
    }
    std::string name() const override { return "blend"; }

  private:
    double s(double t) const { return (t - a_) / len_; }

    double p(double s) const {
        double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
        double h0 = 1 - 10 * s3 + 15 * s4 - 6 * s5;
        double h1 = s - 6 * s3 + 8 * s4 - 3 * s5;
        double h2 = 0.5 * (s2 - 3 * s3 + 3 * s4 - s5);
        double h3 = 10 * s3 - 15 * s4 + 6 * s5;
        double h4 = -4 * s3 + 7 * s4 - 3 * s5;
        double h5 = 0.5 * (s3 - 2 * s4 + s5);
        return f0_ * h0 + f1_ * h1 + f2_ * h2 + g0_ * h3 + g1_ * h4 + g2_ * h5;
    }
    double dp(double s) const {
        double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
        double h0 = -30 * s2 + 60 * s3 - 30 * s4;
        double h1 = 1 - 18 * s2 + 32 * s3 - 15 * s4;
        double h2 = 0.5 * (2 * s - 9 * s2 + 12 * s3 - 5 * s4);
        double h3 = 30 * s2 - 60 * s3 + 30 * s4;
        double h4 = -12 * s2 + 28 * s3 - 15 * s4;
        double h5 = 0.5 * (3 * s2 - 8 * s3 + 5 * s4);
        return f0_ * h0 + f1_ * h1 + f2_ * h2 + g0_ * h3 + g1_ * h4 + g2_ * h5;
    }
    double ddp(double s) const {
        double s2 = s * s, s3 = s2 * s;
        double h0 = -60 * s + 180 * s2 - 120 * s3;
        double h1 = -36 * s + 96 * s2 - 60 * s3;
        double h2 = 0.5 * (2 - 18 * s + 36 * s2 - 20 * s3);
        double h3 = 60 * s - 180 * s2 + 120 * s3;
        double h4 = -24 * s + 84 * s2 - 60 * s3;
        double h5 = 0.5 * (6 * s - 24 * s2 + 20 * s3);
        return f0_ * h0 + f1_ * h1 + f2_ * h2 + g0_ * h3 + g1_ * h4 + g2_ * h5;
    }

    double a_, len_;
    double f0_, f1_, f2_, g0_, g1_, g2_;
};

class PiecewiseProfile final : public RadialProfile {
  public:
    PiecewiseProfile(std::vector<double> breaks, std::vector<ProfilePtr> pieces, std::string nm,
                     TailInfo tail)
        : breaks_(std::move(breaks)), pieces_(std::move(pieces)), name_(std::move(nm)),
          tail_(tail) {
        if (pieces_.size() != breaks_.size() + 1)
            throw std::invalid_argument("piecewise: need one more piece than breaks");
    }

    double value(double t) const override { return at(t).value(t); }
    double deriv1(double t) const override { return at(t).deriv1(t); }
    double deriv2(double t) const override { return at(t).deriv2(t); }
    double log_value(double t) const override { return at(t).log_value(t); }
    double dlog(double t) const override { return at(t).dlog(t); }
    double d2_ratio(double t) const override { return at(t).d2_ratio(t); }
    TailInfo tail_info() const override { return tail_; }
    std::string name() const override { return name_; }

  private:
    const RadialProfile& at(double t) const {
        std::size_t i = 0;
        while (i < breaks_.size() && t >= breaks_[i]) ++i;
        return *pieces_[i];
    }

    std::vector<double> breaks_;
    std::vector<ProfilePtr> pieces_;
    std::string name_;
    TailInfo tail_;
};

class FunctionProfile final : public RadialProfile {
  public:
    FunctionProfile(std::function<double(double)> f, std::string nm,
                    std::function<double(double)> d1, std::function<double(double)> d2,
                    double lo, double hi)
        : f_(std::move(f)), d1_(std::move(d1)), d2_(std::move(d2)), lo_(lo), hi_(hi),
          name_(std::move(nm)) {}

    double value(double t) const override { return f_(t); }
    double deriv1(double t) const override {
        return d1_ ? d1_(t) : RadialProfile::deriv1(t);
    }
    double deriv2(double t) const override {
        return d2_ ? d2_(t) : RadialProfile::deriv2(t);
    }
    double domain_lo() const override { return lo_; }
    double domain_hi() const override { return hi_; }
    std::string name() const override { return name_; }

  private:
    std::function<double(double)> f_, d1_, d2_;
    double lo_, hi_;
    std::string name_;
};

void positivity_scan(const RadialProfile& p, double lo, double hi) {
    for (int i = 0; i <= 10000; ++i) {
        double t = lo + (hi - lo) * i / 10000.0;
        if (t <= p.domain_lo()) continue;
        double v = p.value(t);
        if (!(v > 0) || !std::isfinite(p.dlog(t)))
            throw std::runtime_error("profile positivity scan failed at t=" + std::to_string(t));
    }
}

}  // namespace

ProfilePtr identity_profile() { return std::make_shared<IdentityProfile>(); }
ProfilePtr sinh_profile() { return std::make_shared<SinhProfile>(); }
ProfilePtr constant_profile(double c) { return std::make_shared<ConstantProfile>(c); }
ProfilePtr power_profile(double p) { return std::make_shared<PowerProfile>(p); }
ProfilePtr exp_profile(double r) { return std::make_shared<ExpProfile>(r); }
ProfilePtr cusp_j_profile(double e) {
    if (!(e > 0)) throw std::invalid_argument("cusp: epsilon must be positive");
    return std::make_shared<CuspJProfile>(e);
}
ProfilePtr superexp_tail_profile(double d) {
    if (!(d > 0)) throw std::invalid_argument("superexp: delta must be positive");
    return std::make_shared<SuperExpProfile>(d);
}
ProfilePtr quintic_log_blend(const RadialProfile& l, const RadialProfile& r, double a, double b) {
    auto blend = std::make_shared<QuinticLogBlend>(l, r, a, b);
    positivity_scan(*blend, a, b);
    return blend;
}
ProfilePtr piecewise_profile(std::vector<double> breaks, std::vector<ProfilePtr> pieces,
                             std::string name, TailInfo tail) {
    return std::make_shared<PiecewiseProfile>(std::move(breaks), std::move(pieces),
                                              std::move(name), tail);
}
ProfilePtr function_profile(std::function<double(double)> f, std::string name,
                            std::function<double(double)> d1, std::function<double(double)> d2,
                            double lo, double hi) {
    return std::make_shared<FunctionProfile>(std::move(f), std::move(name), std::move(d1),
                                             std::move(d2), lo, hi);
}

ModelManifold::ModelManifold(int n, ProfilePtr sigma, std::string nm)
    : dim(n), warping(std::move(sigma)), profile_name(std::move(nm)) {
    if (dim < 2) throw std::invalid_argument("ModelManifold: dim must be >= 2");
    if (!warping) throw std::invalid_argument("ModelManifold: missing warping profile");
    // pole smoothness: sigma(t)/t -> 1
    for (double t : {1e-6, 1e-5, 1e-4}) {
        double r = warping->value(t) / t;
        if (std::fabs(r - 1.0) > 1e-3)
            throw std::invalid_argument("ModelManifold: warping is not ~t near the pole");
    }
}

ModelManifold make_manifold(const std::string& profile, double epsilon, int dim) {
    if (profile == "euclidean") return {dim, identity_profile(), "euclidean"};
    if (profile == "hyperbolic") return {dim, sinh_profile(), "hyperbolic"};
    if (profile == "cusp") {
        if (!(epsilon > 0)) throw std::invalid_argument("cusp: epsilon must be positive");
        double t_eps = std::pow(2 * (1 + epsilon) * epsilon, -1 / (2 * epsilon));
        auto id = identity_profile();
        auto j = cusp_j_profile(epsilon);
        double blo = (t_eps > 0.25) ? 0.25 : t_eps / 2;
        double bhi = t_eps;
        auto blend = quintic_log_blend(*id, *j, blo, bhi);
        auto sigma = piecewise_profile({blo, bhi}, {id, blend, j},
                                       "cusp(" + std::to_string(epsilon) + ")",
                                       {TailInfo::SIGMA_DECREASING, std::max(1.0, bhi), 0, 0, 0});
        return {dim, sigma, "cusp"};
    }
    if (profile == "superexp") {
        if (!(epsilon > 0)) throw std::invalid_argument("superexp: delta must be positive");
        auto id = identity_profile();
        auto tail = superexp_tail_profile(epsilon);
        auto blend = quintic_log_blend(*id, *tail, 0.25, 1.0);
        auto sigma = piecewise_profile({0.25, 1.0}, {id, blend, tail},
                                       "superexp(" + std::to_string(epsilon) + ")",
                                       {TailInfo::DLOG_GROWING_POWER, 1.0, 0, 2 + epsilon,
                                        1 + epsilon});
        return {dim, sigma, "superexp"};
    }
    throw std::invalid_argument("unknown profile: " + profile);
}

double sphere_volume(int k) {
    // vol(S^k)
    if (k < 1) throw std::invalid_argument("sphere_volume: k >= 1");
    double n = k + 1;
    return 2.0 * std::pow(M_PI, n / 2.0) / std::tgamma(n / 2.0);
}

double gaussian_curvature(const ModelManifold& m, double t) {
    m.warping->require_inside(t);
    double k = -m.warping->d2_ratio(t);
    if (!std::isfinite(k)) throw std::domain_error("gaussian_curvature: undefined at t");
    return k;
}

double radial_laplacian(const ModelManifold& m, const RadialProfile& f, double t) {
    if (!(t > 0)) throw std::domain_error("radial_laplacian: t must be positive");
    m.warping->require_inside(t);
    f.require_inside(t);
    return f.deriv2(t) + (m.dim - 1) * m.warping->dlog(t) * f.deriv1(t);
}

double volume_ball(const ModelManifold& m, double t) {
    if (!(t > 0)) throw std::domain_error("volume_ball: t must be positive");
    const auto& s = *m.warping;
    int k = m.dim - 1;
    double scale = 1e-30;
    for (int i = 1; i <= 8; ++i)
        scale = std::max(scale, std::pow(s.value(t * i / 8.0), k));
    double val = integrate([&](double x) { return std::pow(s.value(x), k); }, 0.0, t,
                           1e-10 * scale, 1e-12);
    return sphere_volume(k) * val;
}

double boundary_area(const ModelManifold& m, double t) {
    int k = m.dim - 1;
    return sphere_volume(k) * std::pow(m.warping->value(t), k);
}

double volume_total(const ModelManifold& m) {
    TailInfo tail = m.warping->tail_info();
    if (tail.kind != TailInfo::SIGMA_DECREASING)
        return std::numeric_limits<double>::infinity();
    // sigma decreasing with dlog decreasing beyond T gives the tail bound
    // int_T^inf sigma <= sigma(T)/|dlog sigma(T)|
    int k = m.dim - 1;
    double T = std::max(tail.t_from, 2.0);
    double bound;
    while ((bound = std::pow(m.warping->value(T), k) /
                    std::fabs(k * m.warping->dlog(T))) > 1e-14 &&
           T < 1e6)
        T *= 1.5;
    return volume_ball(m, T) + sphere_volume(k) * bound;
}

}  // namespace mplab
