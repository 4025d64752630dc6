#include "mplab/completeness.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mplab/ode45.hpp"
#include "mplab/quadrature.hpp"

namespace mplab {

std::string to_string(ScVerdict v) {
    switch (v) {
        case ScVerdict::COMPLETE_EVIDENCE: return "COMPLETE_EVIDENCE";
        case ScVerdict::INCOMPLETE_EVIDENCE: return "INCOMPLETE_EVIDENCE";
        default: return "INCONCLUSIVE";
    }
}

std::string to_string(OracleVerdict v) {
    switch (v) {
        case OracleVerdict::SC: return "SC";
        case OracleVerdict::NOT_SC: return "NOT_SC";
        default: return "INCONCLUSIVE";
    }
}

namespace {

// quasi-static root of q' = lambda - q^2 - B q, stable form for large B > 0
double slow_manifold_q(double B, double lambda) {
    return 2 * lambda / (B + std::sqrt(B * B + 4 * lambda));
}

}  // namespace

CompletenessVerdict sc_ode_test(const ModelManifold& m, double lambda, double horizon,
                                double growth_threshold) {
    if (!(lambda > 0)) throw std::invalid_argument("sc_ode_test: lambda must be positive");
    if (!(horizon > 1)) throw std::invalid_argument("sc_ode_test: horizon must exceed 1");
    if (!(growth_threshold > 1)) throw std::invalid_argument("sc_ode_test: threshold must exceed 1");

    const auto& sigma = *m.warping;
    const double n = m.dim;
    const double log_cap = std::log(growth_threshold);

    // regular solution's Taylor jet at the pole: u ~ 1 + lambda t^2/(2n)
    const double t0 = 1e-6;
    std::vector<double> y0 = {std::log1p(lambda * t0 * t0 / (2 * n)),
                              lambda * t0 / n / (1 + lambda * t0 * t0 / (2 * n))};

    auto rhs = [&](double t, const std::vector<double>& y, std::vector<double>& dy) {
        double q = y[1];
        dy[0] = q;
        dy[1] = lambda - q * q - (n - 1) * sigma.dlog(t) * q;
    };

    CompletenessVerdict out;
    out.lambda = lambda;

    // geometric checkpoints let us read log u at t/10 without dense output
    std::vector<double> cp_t, cp_logu;
    cp_t.push_back(t0);
    cp_logu.push_back(y0[0]);
    auto log_u_at = [&](double t) {
        // cp grid has ratio <= 1.05, linear interpolation in log t
        std::size_t i = cp_t.size() - 1;
        while (i > 0 && cp_t[i] > t) --i;
        if (i + 1 >= cp_t.size()) return cp_logu.back();
        double w = (std::log(t) - std::log(cp_t[i])) /
                   (std::log(cp_t[i + 1]) - std::log(cp_t[i]));
        return cp_logu[i] + w * (cp_logu[i + 1] - cp_logu[i]);
    };

    bool converged = false, crossed = false, wall = false;
    auto observer = [&](double t, const std::vector<double>& y) {
        cp_t.push_back(t);
        cp_logu.push_back(y[0]);
        out.horizon = t;
        out.log_u = y[0];
        out.u_log_deriv = y[1];
        if (y[0] > log_cap) crossed = true;
        if (t > 100 * t0 && t > 1.0) {
            out.tail_increment = y[0] - log_u_at(t / 10);
            if (out.tail_increment < 1e-8) {
                converged = true;
                return false;  // bounded positive solution found; stop here
            }
        }
        // the explicit stepper's stability bound h ~ 1/|2q + B| makes the
        // remaining decades unreachable once the damping outruns t
        double damping = std::fabs(2 * y[1] + (n - 1) * sigma.dlog(t));
        if (t >= 1.0 && damping * t > 1e4) {
            wall = true;
            return false;
        }
        return true;
    };

    Ode45Options opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-12;
    opt.initial_step = t0 / 10;
    opt.max_step = [](double t) { return 0.05 * std::max(t, 1e-3); };
    ode45(rhs, t0, y0, horizon, opt, observer);

    if (wall && !converged && !crossed) {
        // continue on the slow manifold when the solution is slaved to it and
        // the warping certifies the damping keeps growing
        double t = out.horizon, q = out.u_log_deriv;
        double B = (n - 1) * sigma.dlog(t);
        TailInfo tail = sigma.tail_info();
        bool slaved = B > 0 && q > 0 && std::fabs(q - slow_manifold_q(B, lambda)) <=
                                            1e-3 * slow_manifold_q(B, lambda);
        if (slaved && tail.kind == TailInfo::DLOG_GROWING_POWER && t >= tail.t_from &&
            tail.power > 1) {
            // increment over (T/10, T] is below eps once
            //   int lambda/((n-1) c s^p) ds = C (10^{p-1}-1) T^{1-p}/(p-1) < eps
            double cpow = (n - 1) * tail.coeff, p = tail.power;
            double C = lambda / (cpow * (p - 1)) * (std::pow(10.0, p - 1) - 1);
            double t_star = std::pow(C / 0.5e-8, 1.0 / (p - 1));
            t_star = std::min(std::max(t_star, 10 * t), horizon);
            auto qs = [&](double s) {
                return slow_manifold_q((n - 1) * sigma.dlog(s), lambda);
            };
            out.log_u += integrate(qs, t, t_star, 1e-12, 1e-10);
            out.tail_increment = integrate(qs, t_star / 10, t_star, 1e-12, 1e-10);
            out.horizon = t_star;
            out.u_log_deriv = qs(t_star);
            out.analytic_tail = true;
            cp_t.push_back(t_star);
            cp_logu.push_back(out.log_u);
            if (out.tail_increment < 1e-8) converged = true;
        }
    }

    if (converged)
        out.verdict = ScVerdict::INCOMPLETE_EVIDENCE;
    else if (crossed)
        out.verdict = ScVerdict::COMPLETE_EVIDENCE;
    else
        out.verdict = ScVerdict::INCONCLUSIVE;
    out.u = std::exp(out.log_u);

    // downsampled trace for witnesses and reports
    std::size_t stride = std::max<std::size_t>(1, cp_t.size() / 64);
    for (std::size_t i = 0; i < cp_t.size(); i += stride)
        out.trace.emplace_back(cp_t[i], cp_logu[i]);
    if (out.trace.back().first != cp_t.back()) out.trace.emplace_back(cp_t.back(), cp_logu.back());
    return out;
}

bool hsu_test(const ModelManifold& m, double C, double r0, double T) {
    if (!(C > 0) || !(r0 > 0) || !(T > r0)) throw std::invalid_argument("hsu_test: bad window");
    const int N = 20000;
    for (int i = 0; i <= N; ++i) {
        double t = r0 + (T - r0) * i / N;
        if (gaussian_curvature(m, t) < -C * t * t) return false;
    }
    return true;
}

OracleVerdict volume_oracle(const ModelManifold& m, double T) {
    if (!(T > 1)) throw std::invalid_argument("volume_oracle: T must exceed 1");
    TailInfo tail = m.warping->tail_info();
    const int k = m.dim - 1;
    double t_from = std::max(T, tail.t_from);

    switch (tail.kind) {
        case TailInfo::SIGMA_DECREASING:
            // numerator grows, denominator falls: the quotient is bounded
            // below by its value at t_from, a divergent minorant
            return OracleVerdict::SC;
        case TailInfo::DLOG_BOUNDED: {
            // f' = 1 - f*(n-1)*dlog >= 1 - f*B, so f >= min(f(t_from), 1/(2B))
            double f_at = volume_ball(m, t_from) / boundary_area(m, t_from);
            double B = k * tail.bound;
            double m0 = std::min(f_at, 1.0 / (2 * B));
            return m0 > 0 ? OracleVerdict::SC : OracleVerdict::INCONCLUSIVE;
        }
        case TailInfo::DLOG_GROWING_POWER: {
            // g(t) = k*coeff*t^power dominates: once g^2 >= 2g' the region
            // {f <= 2/g} is forward invariant and f enters it in finite time,
            // giving the integrable majorant max(f(t_from), 2/g)
            double gamma = k * tail.coeff;
            double pw = tail.power;
            bool invariant = gamma * std::pow(t_from, pw + 2) >= 2 * (pw + 1);
            return invariant ? OracleVerdict::NOT_SC : OracleVerdict::INCONCLUSIVE;
        }
        default:
            return OracleVerdict::INCONCLUSIVE;
    }
}

bool tail_integral_finite(const std::function<double(double)>& vol,
                          const std::function<double(double)>& dvol, double decided_from) {
    // local exponent rho(t) = t*vol'/vol on the trailing window; require it to
    // be stable-or-growing and > 2, so vol >= vol(T)(t/T)^rho beyond T and
    // int t/vol <= int t^{1-rho} converges
    double T = decided_from;
    double rho_min = std::numeric_limits<double>::infinity();
    double prev = 0;
    bool nondecreasing = true;
    for (int i = 0; i <= 32; ++i) {
        double t = T / 2 + (T / 2) * i / 32.0;
        double v = vol(t);
        if (!(v > 0)) return false;
        double rho = t * dvol(t) / v;
        if (i > 0 && rho < prev - 1e-6 * std::fabs(prev)) nondecreasing = false;
        prev = rho;
        rho_min = std::min(rho_min, rho);
    }
    return nondecreasing && rho_min > 2.1;
}

bool alpha_volume_test(const ModelManifold& m, const RadialProfile& alpha, double T) {
    if (!(T > 1)) throw std::invalid_argument("alpha_volume_test: T must exceed 1");
    const auto& sigma = *m.warping;
    for (int i = 0; i <= 64; ++i) {
        double t = T * (i + 1) / 65.0;
        if (!(alpha.value(t) > 0))
            throw std::invalid_argument("alpha_volume_test: weight not positive on (0,T]");
    }
    auto dvol = [&](double t) {
        double a = alpha.value(t);
        return 2 * M_PI * sigma.value(t) * a * a;
    };
    CumulativeIntegral cum(dvol, 1e-9, T, 1e-13);
    auto vol = [&](double t) { return cum(t); };
    return tail_integral_finite(vol, dvol, T);
}

}  // namespace mplab
