#include "mplab/interval_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mplab {

double LevelBall1D::sup_dist() const {
    if (degenerate) return 0.0;
    return std::max(center - lo, hi - center);
}

ExactInterval1D::ExactInterval1D(double a, double b, ProfilePtr weight, bool left_pole)
    : a_(a), b_(b), w_(std::move(weight)), left_pole_(left_pole) {
    if (!(b > a)) throw std::invalid_argument("ExactInterval1D: empty interval");
    double lo_eval = left_pole_ ? a + (b - a) * 1e-9 : a;
    hcum_ = CumulativeIntegral([this](double t) { return 1.0 / w_->value(t); }, lo_eval, b,
                               1e-15, 64);
    h_a_ = left_pole_ ? -std::numeric_limits<double>::infinity() : 0.0;
    h_b_ = hcum_.total();
}

double ExactInterval1D::h(double t) const {
    if (t <= a_) return h_a_;
    if (t >= b_) return h_b_;
    return hcum_(t);
}

double ExactInterval1D::green(double x, double y) const {
    if (x == y)
        throw std::domain_error("green: coincident points; use green_peak for the diagonal");
    double lo = std::min(x, y), hi = std::max(x, y);
    if (hi >= b_ || (!left_pole_ && lo <= a_)) return 0.0;  // boundary pole
    if (left_pole_) return h_b_ - h(hi);
    return (h(lo) - h_a_) * (h_b_ - h(hi)) / (h_b_ - h_a_);
}

double ExactInterval1D::green_peak(double x) const {
    if (left_pole_) return h_b_ - h(x);
    return (h(x) - h_a_) * (h_b_ - h(x)) / (h_b_ - h_a_);
}

double ExactInterval1D::solve_h(double target, double lo, double hi) const {
    // h is strictly increasing; bisection to ~1e-15 interval width
    for (int it = 0; it < 100 && hi - lo > 1e-15 * std::max(1.0, std::fabs(hi)); ++it) {
        double mid = 0.5 * (lo + hi);
        if (h(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

LevelBall1D ExactInterval1D::ball(double x, double r) const {
    if (!(r > 0)) throw std::invalid_argument("ball: r must be positive");
    if (!(x > a_) || !(x < b_)) throw std::domain_error("ball: center outside the interval");
    LevelBall1D b;
    b.center = x;
    b.r = r;
    double thr = 1.0 / r;
    if (thr >= green_peak(x)) return b;  // {x}
    b.degenerate = false;
    double D = h_b_ - h_a_;
    double hx = h(x);
    if (left_pole_) {
        // G constant in y below x: the ball reaches the pole end
        b.lo = a_;
        b.pole_side = true;
        b.hi = solve_h(h_b_ - thr, x, b_);
        b.w_lo = 0.0;
        b.w_hi = 1.0;
    } else {
        // left root: (h(y)-h(a))(h_b - h(x)) = D/r
        b.lo = solve_h(h_a_ + D * thr / (h_b_ - hx), a_, x);
        // right root: (h(x)-h(a))(h_b - h(y)) = D/r
        b.hi = solve_h(h_b_ - D * thr / (hx - h_a_), x, b_);
        b.w_lo = (h_b_ - hx) / D;
        b.w_hi = (hx - h_a_) / D;
    }
    return b;
}

double ExactInterval1D::mean_value(const Fn1D& v, const LevelBall1D& b) const {
    if (b.degenerate) return v(b.center);
    if (b.pole_side) return v(b.hi);
    return b.w_lo * v(b.lo) + b.w_hi * v(b.hi);
}

double ExactInterval1D::mean_value(const Fn1D& v, double x, double r) const {
    return mean_value(v, ball(x, r));
}

double ExactInterval1D::representation_residual(const RadialProfile& v, double x, double r) const {
    LevelBall1D b = ball(x, r);
    if (b.degenerate) return 0.0;  // the formula degenerates to the identity
    double m = mean_value([&](double t) { return v.value(t); }, b);
    auto integrand = [&](double y) {
        double dv = w_->value(y) * v.deriv2(y) + w_->deriv1(y) * v.deriv1(y);
        return (green(x, y) - 1.0 / r) * dv;
    };
    double lo = b.pole_side ? a_ : b.lo;
    // the kernel has a kink at y = x; split there
    double corr = integrate(integrand, lo, x, 1e-13, 1e-12) +
                  integrate(integrand, x, b.hi, 1e-13, 1e-12);
    return std::fabs(v.value(x) - m + corr);
}

double mollifier(double s) {
    if (s <= 0 || s >= 1) return 0.0;
    double u = s * (1 - s);
    return 30.0 * u * u;
}

double mollifier_cdf(double s) {
    if (s <= 0) return 0.0;
    if (s >= 1) return 1.0;
    double s3 = s * s * s;
    return s3 * (10 - 15 * s + 6 * s * s);
}

double ExactInterval1D::mollified_mean(const Fn1D& v, double x, double k,
                                       double radius_scale) const {
    if (!(k >= 1)) throw std::invalid_argument("mollified_mean: k must be >= 1");
    double peak = green_peak(x);
    // balls are {x} for radii below 1/peak, i.e. tau below tau_star
    double tau_star = std::min(1.0, k / (radius_scale * peak));
    double out = v(x) * mollifier_cdf(tau_star);
    if (tau_star >= 1.0) return out;
    auto integrand = [&](double tau) {
        return mollifier(tau) * mean_value(v, x, radius_scale * tau / k);
    };
    out += integrate(integrand, tau_star, 1.0, 1e-12, 1e-11);
    return out;
}

double ExactInterval1D::radius_bound(double x, double k, double radius_scale) const {
    return ball(x, radius_scale / k).sup_dist();
}

double ExactInterval1D::norm_l1(const Fn1D& f, int samples) const {
    double sum = 0;
    double dt = (b_ - a_) / samples;
    for (int i = 0; i <= samples; ++i) {
        double t = a_ + dt * i;
        double c = (i == 0 || i == samples) ? 0.5 : 1.0;
        double wv = (left_pole_ && i == 0) ? 0.0 : w_->value(std::max(t, a_ + 1e-12));
        sum += c * std::fabs(f(t)) * wv;
    }
    return sum * dt;
}

double piecewise_value(const std::vector<ProfilePiece>& pieces, double t) {
    for (const auto& p : pieces)
        if (t <= p.hi) return p.f->value(t);
    return pieces.back().f->value(t);
}

RieszDecomposition riesz_decompose(const ExactInterval1D& s,
                                   const std::vector<ProfilePiece>& pieces) {
    if (pieces.empty()) throw std::invalid_argument("riesz_decompose: no pieces");
    const auto& w = s.weight();

    RieszDecomposition out;
    // atoms: jump of w v' at interior junctions
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        double t = pieces[i].hi;
        double jump = w.value(t) * (pieces[i + 1].f->deriv1(t) - pieces[i].f->deriv1(t));
        if (jump < -1e-10)
            throw std::invalid_argument("riesz_decompose: downward kink, not subharmonic");
        if (std::fabs(jump) > 1e-14) out.measure.atoms.emplace_back(t, jump);
    }
    // density (w v')' = w v'' + w' v'
    auto density = [&, pieces](double t) {
        for (const auto& p : pieces)
            if (t <= p.hi) return w.value(t) * p.f->deriv2(t) + w.deriv1(t) * p.f->deriv1(t);
        return w.value(t) * pieces.back().f->deriv2(t) + w.deriv1(t) * pieces.back().f->deriv1(t);
    };
    const int nsamp = 512;
    for (int i = 1; i < nsamp; ++i) {
        double t = s.lower() + (s.upper() - s.lower()) * i / nsamp;
        double d = density(t);
        if (d < -1e-8)
            throw std::invalid_argument("riesz_decompose: negative density, not subharmonic");
        out.measure.grid.push_back(t);
        out.measure.density.push_back(d);
    }
    out.measure.density_fn = density;

    // potential G*nu
    auto atoms = out.measure.atoms;
    auto potential = [&s, density, atoms, pieces](double y) {
        double acc = 0;
        for (const auto& p : pieces) {
            auto f = [&](double t) { return s.green(t, y) * density(t); };
            double lo = std::max(p.lo, s.lower()), hi = std::min(p.hi, s.upper());
            if (y > lo && y < hi) {
                acc += integrate(f, lo, y, 1e-12, 1e-11);
                acc += integrate(f, y, hi, 1e-12, 1e-11);
            } else {
                acc += integrate(f, lo, hi, 1e-12, 1e-11);
            }
        }
        for (auto [t, mass] : atoms) acc += mass * (t == y ? s.green_peak(y) : s.green(t, y));
        return acc;
    };
    out.potential = potential;

    // v + G*nu must be affine in the h-coordinate: fit on two interior points,
    // then measure the worst deviation
    auto vplus = [&](double y) { return piecewise_value(pieces, y) + potential(y); };
    double y1 = s.lower() + (s.upper() - s.lower()) * 0.25;
    double y2 = s.lower() + (s.upper() - s.lower()) * 0.75;
    double h1 = s.h(y1), h2 = s.h(y2);
    double f1 = vplus(y1), f2 = vplus(y2);
    out.affine_b = (f2 - f1) / (h2 - h1);
    out.affine_a = f1 - out.affine_b * h1;

    double worst = 0, worst_re = 0;
    for (int i = 1; i < 40; ++i) {
        double y = s.lower() + (s.upper() - s.lower()) * i / 40.0;
        double hp = out.affine_a + out.affine_b * s.h(y);
        worst = std::max(worst, std::fabs(vplus(y) - hp));
        worst_re = std::max(worst_re,
                            std::fabs(piecewise_value(pieces, y) - (hp - potential(y))));
    }
    out.affinity_residual = worst;
    out.reassembly_residual = worst_re;
    return out;
}

}  // namespace mplab
