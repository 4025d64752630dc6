#include "mplab/disc_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mplab/interval_space.hpp"
#include "mplab/parallel.hpp"

namespace mplab {

double model_distance(const ModelManifold& m, double t1, double th1, double t2, double th2) {
    double dth = std::fabs(th1 - th2);
    dth = std::fmod(dth, 2 * M_PI);
    if (dth > M_PI) dth = 2 * M_PI - dth;
    if (m.profile_name == "euclidean") {
        double d2 = t1 * t1 + t2 * t2 - 2 * t1 * t2 * std::cos(dth);
        return std::sqrt(std::max(d2, 0.0));
    }
    if (m.profile_name == "hyperbolic") {
        double c = std::cosh(t1) * std::cosh(t2) - std::sinh(t1) * std::sinh(t2) * std::cos(dth);
        return std::acosh(std::max(c, 1.0));
    }
    // path bound: radially in to rho, around, radially out
    double tmin = std::min(t1, t2);
    double best = std::fabs(t1 - t2) + m.warping->value(tmin) * dth;
    for (int i = 1; i <= 32; ++i) {
        double rho = tmin * i / 32.0;
        double cand = (t1 - rho) + (t2 - rho) + m.warping->value(rho) * dth;
        best = std::min(best, cand);
    }
    return best;
}

DiscreteDisc2D::DiscreteDisc2D(const ModelManifold& m, const AlphaSolution& alpha, double radius,
                               int nr, int ntheta)
    : m_(std::make_shared<ModelManifold>(m)), alpha_(alpha), radius_(radius),
      dt_(radius / nr), dth_(2 * M_PI / ntheta), nr_(nr), ntheta_(ntheta) {
    if (nr < 3 || ntheta < 4) throw std::invalid_argument("DiscreteDisc2D: grid too small");
    if (!(alpha.horizon() >= radius))
        throw std::invalid_argument("DiscreteDisc2D: alpha horizon below the disc radius");

    const int n = nodes();
    auto w = [&](double t) {
        double a = alpha_.value(t);
        return a * a * m_->warping->value(t);
    };
    auto winv = [&](double t) {
        double a = alpha_.value(t);
        return a * a / m_->warping->value(t);
    };

    mass_.assign(n, 0.0);
    diag_.assign(n, 0.0);
    adj_.assign(n, {});
    for (int i = 0; i < nr_; ++i) {
        double ti = (i + 0.5) * dt_;
        double m_cell = w(ti) * dt_ * dth_;
        // radial face at (i+1)*dt (inner face of cell 0 carries sigma(0)=0)
        double kr = (i + 1 < nr_) ? w((i + 1) * dt_) * dth_ / dt_ : 0.0;
        double kb = w(radius_) * dth_ / (0.5 * dt_);  // rim closure, Dirichlet
        double ka = winv(ti) * dt_ / dth_;            // angular face
        for (int j = 0; j < ntheta_; ++j) {
            int p = node(i, j);
            mass_[p] = m_cell;
            if (i + 1 < nr_) {
                int q = node(i + 1, j);
                adj_[p].push_back({q, kr});
                adj_[q].push_back({p, kr});
                diag_[p] += kr;
                diag_[q] += kr;
            } else {
                diag_[p] += kb;
            }
            int qa = node(i, j + 1);
            adj_[p].push_back({qa, ka});
            adj_[qa].push_back({p, ka});
            diag_[p] += ka;
            diag_[qa] += ka;
        }
    }

    // banded symmetric factorization; bandwidth = ntheta (angular wrap)
    factor_ = std::make_shared<BandedSpd>(static_cast<std::size_t>(n),
                                          static_cast<std::size_t>(ntheta_));
    for (int p = 0; p < n; ++p) {
        factor_->at(p, p) = diag_[p];
        for (const auto& e : adj_[p])
            if (e.to < p) factor_->at(p, e.to) = -e.coeff;
    }
    factor_->factor();
}

double DiscreteDisc2D::apply_stiffness(const std::vector<double>& v, int p) const {
    double s = diag_[p] * v[p];
    for (const auto& e : adj_[p]) s -= e.coeff * v[e.to];
    return s;
}

std::vector<double> DiscreteDisc2D::apply_stiffness(const std::vector<double>& v) const {
    std::vector<double> out(nodes());
    for (int p = 0; p < nodes(); ++p) out[p] = apply_stiffness(v, p);
    return out;
}

std::vector<double> DiscreteDisc2D::solve(std::vector<double> rhs) const {
    factor_->solve(rhs);
    return rhs;
}

std::vector<double> DiscreteDisc2D::harmonic_extension(
    const std::function<double(double)>& g) const {
    std::vector<double> rhs(nodes(), 0.0);
    double kb = 0;
    {
        double a = alpha_.value(radius_);
        kb = a * a * m_->warping->value(radius_) * dth_ / (0.5 * dt_);
    }
    for (int j = 0; j < ntheta_; ++j) rhs[node(nr_ - 1, j)] = kb * g(j * dth_);
    return solve(std::move(rhs));
}

const std::vector<double>& DiscreteDisc2D::green_column(int pole) const {
    auto it = columns_.find(pole);
    if (it != columns_.end()) return it->second;
    std::vector<double> rhs(nodes(), 0.0);
    rhs[pole] = 1.0;
    factor_->solve(rhs);
    return columns_.emplace(pole, std::move(rhs)).first->second;
}

double DiscreteDisc2D::green(int x, int y) const { return green_column(x)[y]; }

double DiscreteDisc2D::green_peak(int x) const {
    const auto& g = green_column(x);
    double peak = 0;
    for (int p = 0; p < nodes(); ++p)
        if (p != x) peak = std::max(peak, g[p]);
    return peak;
}

void DiscreteDisc2D::ensure_columns(const std::vector<int>& poles) const {
    std::vector<int> missing;
    for (int p : poles)
        if (!columns_.count(p)) missing.push_back(p);
    if (missing.empty()) return;
    std::vector<std::vector<double>> cols;
    green_columns_parallel(*this, missing, cols);
    for (std::size_t i = 0; i < missing.size(); ++i)
        columns_.emplace(missing[i], std::move(cols[i]));
}

DiscBall DiscreteDisc2D::ball(int x, double r) const {
    if (!(r > 0)) throw std::invalid_argument("ball: r must be positive");
    DiscBall b;
    b.center = x;
    b.r = r;
    b.inside.push_back(x);
    const double thr = 1.0 / r;
    const auto& g = green_column(x);
    std::vector<char> in(nodes(), 0);
    in[x] = 1;
    for (int p = 0; p < nodes(); ++p) {
        if (p != x && g[p] > thr) {
            if (rim_cell(p))
                throw std::domain_error("ball: superlevel set touches the rim ring");
            in[p] = 1;
            b.inside.push_back(p);
        }
    }
    b.degenerate = (b.inside.size() == 1);
    if (b.degenerate) return b;
    for (int p : b.inside)
        for (const auto& e : adj_[p])
            if (!in[e.to]) b.cut.push_back({p, e.to, e.coeff});
    return b;
}

double DiscreteDisc2D::mean_value(const std::vector<double>& v, const DiscBall& b) const {
    if (b.degenerate) return v[b.center];
    const auto& g = green_column(b.center);
    double s = 0;
    for (const auto& e : b.cut) s += e.coeff * (g[e.inside] * v[e.outside] - g[e.outside] * v[e.inside]);
    return s;
}

double DiscreteDisc2D::mean_value(const std::vector<double>& v, int x, double r) const {
    return mean_value(v, ball(x, r));
}

double DiscreteDisc2D::representation_residual(const std::vector<double>& v, int x,
                                               double r) const {
    DiscBall b = ball(x, r);
    if (b.degenerate) return 0.0;
    const auto& g = green_column(x);
    double acc = 0;
    for (int p : b.inside) acc += g[p] * apply_stiffness(v, p);
    return std::fabs(v[x] - mean_value(v, b) - acc);
}

double DiscreteDisc2D::mollified_mean(const std::vector<double>& v, int x, double k,
                                      double radius_scale) const {
    if (!(k >= 1)) throw std::invalid_argument("mollified_mean: k must be >= 1");
    const auto& g = green_column(x);
    // nodes sorted by kernel value; the ball at radius s is the prefix with
    // g > 1/s, so m(s) is piecewise constant and the tau-integral is exact
    std::vector<int> order;
    order.reserve(nodes() - 1);
    for (int p = 0; p < nodes(); ++p)
        if (p != x) order.push_back(p);
    std::sort(order.begin(), order.end(), [&](int a, int bb) {
        if (g[a] != g[bb]) return g[a] > g[bb];
        return a < bb;
    });

    std::vector<char> in(nodes(), 0);
    in[x] = 1;
    // running cut sum M = sum k_io (g_i v_o - g_o v_i)
    double M = 0;
    for (const auto& e : adj_[x]) M += e.coeff * (g[x] * v[e.to] - g[e.to] * v[x]);

    double acc = 0;
    // tau interval where the ball is exactly {x} + order[0..idx-1]:
    // tau in (k/(scale*g_prev), k/(scale*g_next)]
    double tau_prev = (g[order[0]] > 0) ? k / (radius_scale * g[order[0]]) : 2.0;
    acc += v[x] * mollifier_cdf(std::min(1.0, tau_prev));
    if (tau_prev >= 1.0) return acc;

    std::size_t idx = 0;
    while (idx < order.size() && tau_prev < 1.0) {
        // admit every node tied at this kernel level
        double level = g[order[idx]];
        while (idx < order.size() && g[order[idx]] == level) {
            int z = order[idx];
            if (rim_cell(z))
                throw std::domain_error("mollified_mean: ball range touches the rim ring");
            for (const auto& e : adj_[z]) {
                if (in[e.to])
                    M -= e.coeff * (g[e.to] * v[z] - g[z] * v[e.to]);
                else
                    M += e.coeff * (g[z] * v[e.to] - g[e.to] * v[z]);
            }
            in[z] = 1;
            ++idx;
        }
        double next_level = (idx < order.size()) ? g[order[idx]] : 0.0;
        double tau_next = (next_level > 0) ? k / (radius_scale * next_level) : 2.0;
        double hi = std::min(1.0, tau_next);
        if (hi > tau_prev) acc += M * (mollifier_cdf(hi) - mollifier_cdf(tau_prev));
        tau_prev = tau_next;
    }
    return acc;
}

double DiscreteDisc2D::radius_bound(int x, double k, double radius_scale) const {
    DiscBall b = ball(x, radius_scale / k);
    if (b.degenerate) return 0.0;
    double best = 0;
    for (int p : b.inside)
        best = std::max(best, model_distance(*m_, t_of(x), theta_of(x), t_of(p), theta_of(p)));
    return best;
}

double DiscreteDisc2D::norm_l1(const std::vector<double>& v) const {
    double s = 0;
    for (int p = 0; p < nodes(); ++p) s += mass_[p] * std::fabs(v[p]);
    return s;
}

double DiscreteDisc2D::suggest_radius_scale(double k_max) const {
    // The kernel truncates at the cell scale, so the radius unit is chosen
    // from the grid: large enough that tau=1 balls at k=k_max still capture
    // the strongest neighbour level, small enough that k=1 balls stay off the
    // rim ring for poles in the bulk.
    double level = 0, rim_level = 0;
    for (int i = 0; i < (3 * nr_) / 4; i += std::max(1, nr_ / 8)) {
        int p = node(i, 0);
        const auto& g = green_column(p);
        for (const auto& e : adj_[p]) level = std::max(level, g[e.to]);
        for (int j = 0; j < ntheta_; ++j) rim_level = std::max(rim_level, g[node(nr_ - 1, j)]);
    }
    if (!(level > 0)) throw std::runtime_error("suggest_radius_scale: flat kernel");
    double want = 2.0 * k_max / level;
    double cap = (rim_level > 0) ? 0.5 / rim_level : want;
    return std::min(want, cap);
}

TransferReport transfer_factor2(const DiscreteDisc2D& disc, const std::vector<double>& u,
                                const std::vector<int>& centers, const std::vector<double>& ks,
                                double radius_scale) {
    const AlphaSolution& a = disc.alpha();
    TransferReport rep;
    rep.radius_scale = radius_scale;
    rep.alpha_ratio_bound = a.inf_value() / a.sup_deriv1();
    rep.k_ladder = ks;

    std::vector<double> v(u.size());
    rep.esup_u = -std::numeric_limits<double>::infinity();
    for (int p = 0; p < disc.nodes(); ++p) {
        v[p] = u[p] / a.value(disc.t_of(p));
        rep.esup_u = std::max(rep.esup_u, u[p]);
    }
    if (!(rep.esup_u >= 0))
        throw std::invalid_argument("transfer_factor2: esup u must be nonnegative");
    for (int p = 0; p < disc.nodes(); ++p)
        if (!disc.rim_cell(p) && disc.apply_stiffness(v, p) > 1e-7)
            throw std::invalid_argument("transfer_factor2: u/alpha not certified subharmonic");

    disc.ensure_columns(centers);
    for (double k : ks) {
        double rk = 0;
        for (int x : centers) rk = std::max(rk, disc.radius_bound(x, k, radius_scale));
        rep.r_k.push_back(rk);
        if (rep.k0 < 0 && rk <= rep.alpha_ratio_bound) rep.k0 = static_cast<int>(k);
        std::vector<double> vk;
        mollified_mean_field_parallel(disc, v, centers, k, radius_scale, vk);
        double sup = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < centers.size(); ++i)
            sup = std::max(sup, a.value(disc.t_of(centers[i])) * vk[i]);
        rep.sup_uk.push_back(sup);
    }
    if (rep.k0 > 0) {
        rep.pass = true;
        for (std::size_t i = 0; i < ks.size(); ++i)
            if (ks[i] >= rep.k0 && rep.sup_uk[i] > 2 * rep.esup_u + 1e-7) rep.pass = false;
    }
    return rep;
}

void green_columns_serial(const DiscreteDisc2D& disc, const std::vector<int>& poles,
                          std::vector<std::vector<double>>& out) {
    out.assign(poles.size(), {});
    serial_for(static_cast<long>(poles.size()), [&](long i) {
        std::vector<double> rhs(disc.nodes(), 0.0);
        rhs[poles[i]] = 1.0;
        out[i] = disc.solve(std::move(rhs));
    });
}

void green_columns_parallel(const DiscreteDisc2D& disc, const std::vector<int>& poles,
                            std::vector<std::vector<double>>& out) {
    out.assign(poles.size(), {});
    parallel_for(static_cast<long>(poles.size()), [&](long i) {
        std::vector<double> rhs(disc.nodes(), 0.0);
        rhs[poles[i]] = 1.0;
        out[i] = disc.solve(std::move(rhs));
    });
}

void mollified_mean_field_serial(const DiscreteDisc2D& disc, const std::vector<double>& v,
                                 const std::vector<int>& centers, double k, double radius_scale,
                                 std::vector<double>& out) {
    disc.ensure_columns(centers);  // after this the parallel body only reads
    out.assign(centers.size(), 0.0);
    serial_for(static_cast<long>(centers.size()),
               [&](long i) { out[i] = disc.mollified_mean(v, centers[i], k, radius_scale); });
}

void mollified_mean_field_parallel(const DiscreteDisc2D& disc, const std::vector<double>& v,
                                   const std::vector<int>& centers, double k, double radius_scale,
                                   std::vector<double>& out) {
    disc.ensure_columns(centers);
    out.assign(centers.size(), 0.0);
    parallel_for(static_cast<long>(centers.size()),
                 [&](long i) { out[i] = disc.mollified_mean(v, centers[i], k, radius_scale); });
}

}  // namespace mplab
