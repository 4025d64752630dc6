#include "mplab/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mplab/counterexample.hpp"
#include "mplab/linalg.hpp"
#include "mplab/quadrature.hpp"

namespace mplab {

RadialDirichletOperator::RadialDirichletOperator(const ModelManifold& m, double radius, double c,
                                                 int min_nodes)
    : m_(m), radius_(radius), c_(c) {
    if (!(radius > 0) || !(c >= 1))
        throw std::invalid_argument("RadialDirichletOperator: need radius > 0 and c >= 1");
    // central differences stay an M-matrix when h <= 2/|b|; scan the drift
    int n = min_nodes;
    for (int pass = 0; pass < 40; ++pass) {
        double h = radius / n;
        double bmax = 0;
        for (int i = 1; i < n; ++i)
            bmax = std::max(bmax, std::fabs((m.dim - 1) * m.warping->dlog(i * h)));
        if (h * bmax <= 1.8) break;
        n = static_cast<int>(std::ceil(n * h * bmax / 1.8)) + 1;
    }
    n_ = n;
    h_ = radius / n;

    lo_.assign(n_, 0.0);
    di_.assign(n_, 0.0);
    up_.assign(n_, 0.0);
    // pole row: Laplace f(0) = dim * f''(0) ~ 2*dim*(f1 - f0)/h^2
    di_[0] = -2.0 * m.dim / (h_ * h_) - c_;
    up_[0] = 2.0 * m.dim / (h_ * h_);
    for (int i = 1; i < n_; ++i) {
        double b = (m.dim - 1) * m.warping->dlog(i * h_);
        lo_[i] = 1.0 / (h_ * h_) - b / (2 * h_);
        up_[i] = 1.0 / (h_ * h_) + b / (2 * h_);
        di_[i] = -2.0 / (h_ * h_) - c_;
    }
    offdiag_min_ = up_[0];
    row_sum_max_ = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_; ++i) {
        if (i > 0) offdiag_min_ = std::min(offdiag_min_, std::min(lo_[i], up_[i]));
        row_sum_max_ = std::max(row_sum_max_, (i > 0 ? lo_[i] : 0.0) + di_[i] + up_[i]);
    }
    if (offdiag_min_ < 0)
        throw std::runtime_error("RadialDirichletOperator: M-matrix structure lost");
}

double RadialDirichletOperator::apply(const std::vector<double>& u, int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("apply: interior index");
    double s = di_[i] * u[i] + up_[i] * u[i + 1];
    if (i > 0) s += lo_[i] * u[i - 1];
    return s;
}

std::vector<double> RadialDirichletOperator::solve_shifted(double shift,
                                                           const std::vector<double>& rhs,
                                                           double boundary) const {
    std::vector<double> d(di_);
    for (int i = 0; i < n_; ++i) d[i] -= shift;
    std::vector<double> b(rhs);
    b[n_ - 1] -= up_[n_ - 1] * boundary;
    TridiagFactor f(lo_, d, up_);
    f.solve(b);
    b.push_back(boundary);
    return b;
}

IterationReport monotone_iteration(const RadialDirichletOperator& op,
                                   const std::vector<double>& u1, const std::vector<double>& u2,
                                   double tol, int max_iter) {
    const int n = op.interior_nodes();
    if (static_cast<int>(u1.size()) != n + 1 || static_cast<int>(u2.size()) != n + 1)
        throw std::invalid_argument("monotone_iteration: samples must cover nodes 0..n");
    for (int i = 0; i <= n; ++i)
        if (u1[i] > u2[i] + 1e-12) throw std::invalid_argument("monotone_iteration: u1 > u2");
    for (int i = 0; i < n; ++i) {
        if (op.apply(u1, i) < -1e-7)
            throw std::invalid_argument("monotone_iteration: u1 is not a discrete subsolution");
        if (op.apply(u2, i) > 1e-7)
            throw std::invalid_argument("monotone_iteration: u2 is not a discrete supersolution");
    }

    IterationReport rep;
    std::vector<double> w(u1);
    std::vector<double> rhs(n);
    for (int it = 0; it < max_iter; ++it) {
        for (int i = 0; i < n; ++i) rhs[i] = -w[i];
        std::vector<double> wn = op.solve_shifted(1.0, rhs, u2[n]);
        double diff = 0;
        for (int i = 0; i <= n; ++i) {
            if (wn[i] < w[i] - 1e-9 || wn[i] > u2[i] + 1e-9) rep.ordered = false;
            diff = std::max(diff, std::fabs(wn[i] - w[i]));
        }
        w.swap(wn);
        rep.iterations = it + 1;
        rep.final_diff = diff;
        if (!rep.ordered)
            throw std::runtime_error("monotone_iteration: ordering lost (internal invariant)");
        if (diff <= tol) break;
    }
    rep.residual_inf = 0;
    for (int i = 0; i < n; ++i)
        rep.residual_inf = std::max(rep.residual_inf, std::fabs(op.apply(w, i)));
    rep.w = std::move(w);
    return rep;
}

EnvelopeReport bounded_envelope(const ModelManifold& m, const std::function<double(double)>& u,
                                const std::vector<double>& radii, double core_radius, double tol,
                                double decay_tol, int min_nodes) {
    if (radii.empty()) throw std::invalid_argument("bounded_envelope: no radii");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i] > radii[i - 1]))
            throw std::invalid_argument("bounded_envelope: radii must increase");

    EnvelopeReport rep;
    double c = 0;
    {
        // sup |u| sampled over the largest stage
        double R = radii.back();
        for (int i = 0; i <= 2000; ++i) c = std::max(c, std::fabs(u(R * i / 2000.0)));
    }
    if (c == 0) c = 1e-30;  // u == 0: every stage is exactly zero
    rep.bound_2c = 2 * c;

    // core samples on a fixed grid, interpolated from each stage's grid
    const int ncore = 33;
    std::vector<double> prev_core;
    for (double R : radii) {
        RadialDirichletOperator op(m, R, 1.0, min_nodes);
        const int n = op.interior_nodes();
        std::vector<double> u1(n + 1), u2(n + 1, 2 * c);
        for (int i = 0; i <= n; ++i) u1[i] = u(op.grid_point(i));
        IterationReport it = monotone_iteration(op, u1, u2, tol);

        EnvelopeStage st;
        st.radius = R;
        st.iterations = it.iterations;
        st.residual_inf = it.residual_inf;
        std::vector<double> core(ncore);
        for (int i = 0; i < ncore; ++i) {
            double t = core_radius * i / (ncore - 1);
            double x = t / op.spacing();
            int k = std::min(static_cast<int>(x), n - 1);
            double fr = x - k;
            core[i] = (1 - fr) * it.w[k] + fr * it.w[k + 1];
            st.core_sup = std::max(st.core_sup, std::fabs(core[i]));
        }
        if (!prev_core.empty())
            for (int i = 0; i < ncore; ++i)
                st.cauchy_diff = std::max(st.cauchy_diff, std::fabs(core[i] - prev_core[i]));
        prev_core = core;
        rep.stages.push_back(st);
    }
    double final_sup = rep.stages.back().core_sup;
    rep.decayed = final_sup <= decay_tol * rep.bound_2c + 1e-30;
    // stabilization: the core values stay away from zero while the stagewise
    // Cauchy differences shrink
    bool shrinking = true;
    for (std::size_t i = 2; i < rep.stages.size(); ++i)
        shrinking = shrinking && rep.stages[i].cauchy_diff < rep.stages[i - 1].cauchy_diff;
    rep.stabilized = !rep.decayed && shrinking && final_sup >= 0.05 * rep.bound_2c;
    return rep;
}

KatoReport kato_check(const DiscreteDisc2D& disc, const std::vector<double>& v,
                      const std::vector<int>& centers, const std::vector<double>& radii) {
    // precondition: v discrete subharmonic for the drifted operator
    for (int p = 0; p < disc.nodes(); ++p)
        if (!disc.rim_cell(p) && disc.apply_stiffness(v, p) > 1e-7)
            throw std::invalid_argument("kato_check: v is not certified subharmonic");
    std::vector<double> vplus(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) vplus[i] = std::max(v[i], 0.0);

    KatoReport rep;
    disc.ensure_columns(centers);
    for (int x : centers) {
        for (double r : radii) {
            double m = disc.mean_value(vplus, x, r);
            double gap = m - vplus[x];
            ++rep.pairs_checked;
            if (gap < -1e-9) ++rep.violations;
            rep.worst_gap = std::min(rep.worst_gap, gap);
        }
    }
    return rep;
}

std::string to_string(ExperimentVerdict v) {
    switch (v) {
        case ExperimentVerdict::CONSISTENT: return "CONSISTENT";
        case ExperimentVerdict::VIOLATED: return "VIOLATED";
        default: return "INCONCLUSIVE";
    }
}

ExperimentReport positivity_experiment_linfty(const ModelManifold& m, double lambda) {
    ExperimentReport rep;
    rep.mode = "linfty";
    rep.profile = m.profile_name;
    CompletenessVerdict sc = sc_ode_test(m, lambda, 1e18, 1e6);
    rep.sc = sc.verdict;
    if (sc.verdict == ScVerdict::INCONCLUSIVE) {
        rep.verdict = ExperimentVerdict::INCONCLUSIVE;
        return rep;
    }
    if (sc.verdict == ScVerdict::INCOMPLETE_EVIDENCE) {
        // the bounded positive solution phi of Laplace(phi) = lambda phi,
        // normalized by its limit; u = -phi is the explicit violation
        const double limit_log = sc.log_u;
        for (const auto& [t, lu] : sc.trace) {
            rep.witness_t.push_back(t);
            rep.witness_u.push_back(-std::exp(lu - limit_log));
        }
        rep.verdict = ExperimentVerdict::VIOLATED;
        return rep;
    }
    // stochastically complete side: envelopes over the candidate family must
    // decay on the core
    bool all_decay = true;
    for (double a : {1.0, 0.5}) {
        EnvelopeReport env = bounded_envelope(
            m, [a](double) { return -a; }, {2, 4, 8, 16}, 1.0);
        all_decay = all_decay && env.decayed;
        if (a == 1.0) rep.envelope = env;
    }
    rep.verdict = all_decay ? ExperimentVerdict::CONSISTENT : ExperimentVerdict::INCONCLUSIVE;
    return rep;
}

ExperimentReport positivity_experiment_l1(const std::string& profile, double epsilon) {
    ExperimentReport rep;
    rep.mode = "l1";
    rep.profile = profile;
    if (profile == "cusp") {
        CuspFamily f = build_cusp(epsilon);
        SupersolutionReport sup = verify_supersolution(f, 50.0, 10000);
        MassReport mass = l1_mass(f);
        if (sup.pass && mass.finite) {
            rep.verdict = ExperimentVerdict::VIOLATED;
            rep.witness_mass = mass.mass;
            rep.witness_mass_bound = mass.upper_bound;
            for (int i = 0; i <= 64; ++i) {
                double t = f.t_eps + (5.0 - f.t_eps) * i / 64.0;
                rep.witness_t.push_back(t);
                rep.witness_u.push_back(-f.growth->value(t));
            }
        }
        return rep;
    }
    // other profiles: the same construction has infinite mass; partial masses
    // of u*sigma must keep growing past any bound
    ModelManifold m = make_manifold(profile, epsilon);
    auto integrand = [&](double t) {
        return std::exp(std::min(t * t + m.warping->log_value(t), 700.0));
    };
    double prev = 0;
    bool growing = true;
    for (double T : {5.0, 10.0, 20.0, 40.0}) {
        double val = integrate(integrand, 1.0, T, 1e-8, 1e-8);
        if (val < 2 * prev) growing = false;
        prev = val;
    }
    rep.verdict = growing ? ExperimentVerdict::CONSISTENT : ExperimentVerdict::INCONCLUSIVE;
    return rep;
}

}  // namespace mplab
