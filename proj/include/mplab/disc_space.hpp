#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "mplab/drifted.hpp"
#include "mplab/linalg.hpp"
#include "mplab/profiles.hpp"

namespace mplab {

// Geodesic distance between (t1,th1) and (t2,th2) on the model; closed form
// for the euclidean/hyperbolic warpings, a path upper bound otherwise.
double model_distance(const ModelManifold& m, double t1, double th1, double t2, double th2);

struct DiscCutEdge {
    int inside, outside;
    double coeff;  // stiffness coefficient of the cut edge
};

struct DiscBall {
    int center = -1;
    double r = 0;
    bool degenerate = true;
    std::vector<int> inside;       // includes the center
    std::vector<DiscCutEdge> cut;  // empty when degenerate
};

// Finite-volume Dirichlet discretization of the drifted operator on the
// geodesic disc B_R: cell centers t_i = (i+1/2) dt, periodic angular index,
// weight w = alpha^2 sigma. The stiffness K is a symmetric M-matrix; Green
// columns are K^{-1} e_p via one banded factorization.
class DiscreteDisc2D {
  public:
    DiscreteDisc2D(const ModelManifold& m, const AlphaSolution& alpha, double radius, int nr,
                   int ntheta);

    int nodes() const { return nr_ * ntheta_; }
    int nr() const { return nr_; }
    int ntheta() const { return ntheta_; }
    double radius() const { return radius_; }
    int node(int i, int j) const { return i * ntheta_ + ((j % ntheta_) + ntheta_) % ntheta_; }
    double t_of(int p) const { return (p / ntheta_ + 0.5) * dt_; }
    double theta_of(int p) const { return (p % ntheta_) * dth_; }
    double measure(int p) const { return mass_[p]; }
    const ModelManifold& manifold() const { return *m_; }
    const AlphaSolution& alpha() const { return alpha_; }

    // (K v)_p with Dirichlet-zero closure at the rim
    double apply_stiffness(const std::vector<double>& v, int p) const;
    std::vector<double> apply_stiffness(const std::vector<double>& v) const;

    // solve K x = rhs
    std::vector<double> solve(std::vector<double> rhs) const;

    // discrete harmonic extension of rim data g(theta)
    std::vector<double> harmonic_extension(const std::function<double(double)>& g) const;

    // Green column for a pole (lazy, cached). green(x,y) = column_x[y].
    const std::vector<double>& green_column(int pole) const;
    double green(int x, int y) const;
    double green_peak(int x) const;  // largest off-pole value of the column

    // columns for many poles; filled by the parallel kernel
    void ensure_columns(const std::vector<int>& poles) const;

    // superlevel ball {G(x,.) > 1/r} U {x}; throws if it touches the rim ring
    DiscBall ball(int x, double r) const;

    // mean value via the cut-edge Green identity: exact flux normalization
    // and exact reproduction of discrete harmonic functions
    double mean_value(const std::vector<double>& v, const DiscBall& b) const;
    double mean_value(const std::vector<double>& v, int x, double r) const;

    // |v(x) - m_r(v)(x) - sum_{ball} G (Kv)|, the exact discrete identity
    double representation_residual(const std::vector<double>& v, int x, double r) const;

    // exact piecewise assembly of int phi(tau) m_{tau*scale/k}(v)(x) dtau
    double mollified_mean(const std::vector<double>& v, int x, double k,
                          double radius_scale) const;

    // sup model distance over ball(x, radius_scale/k)
    double radius_bound(int x, double k, double radius_scale) const;

    // weighted l1 norm over the cells
    double norm_l1(const std::vector<double>& v) const;

    // Green scale: a radius unit making k in 1..k_max span the nondegenerate
    // ball range of this grid (the kernel truncates at the cell scale)
    double suggest_radius_scale(double k_max) const;

    struct Edge {
        int to;
        double coeff;
    };
    const std::vector<Edge>& edges_of(int p) const { return adj_[p]; }
    bool rim_cell(int p) const { return p / ntheta_ == nr_ - 1; }

  private:
    std::shared_ptr<const ModelManifold> m_;
    AlphaSolution alpha_;
    double radius_, dt_, dth_;
    int nr_, ntheta_;
    std::vector<double> mass_;           // cell measures
    std::vector<double> diag_;           // stiffness diagonal
    std::vector<std::vector<Edge>> adj_; // off-diagonal stiffness, positive coeffs
    std::shared_ptr<BandedSpd> factor_;
    mutable std::unordered_map<int, std::vector<double>> columns_;
};

// Factor-2 transfer through the positive weight: v = u/alpha is smoothed by
// the mollified means, u_k = alpha v_k, and once the ball radii r_k fall
// below inf(alpha)/sup(alpha') the bound sup u_k <= 2 esup u must hold.
struct TransferReport {
    double radius_scale = 0;
    double alpha_ratio_bound = 0;  // inf alpha / sup alpha'
    double esup_u = 0;
    int k0 = -1;  // smallest ladder k with max_x r_k(x) <= bound; -1 = not reached
    std::vector<double> k_ladder, r_k, sup_uk;
    bool pass = false;
};

// Preconditions: esup u >= 0 and u/alpha discretely subharmonic (certified
// here; throws std::invalid_argument otherwise). k0 == -1 leaves pass false
// (inconclusive at this resolution).
TransferReport transfer_factor2(const DiscreteDisc2D& disc, const std::vector<double>& u,
                                const std::vector<int>& centers, const std::vector<double>& ks,
                                double radius_scale);

// serial reference and parallel kernel for batched Green columns
void green_columns_serial(const DiscreteDisc2D& disc, const std::vector<int>& poles,
                          std::vector<std::vector<double>>& out);
void green_columns_parallel(const DiscreteDisc2D& disc, const std::vector<int>& poles,
                            std::vector<std::vector<double>>& out);

// batched mollified means at many centers (columns must be present)
void mollified_mean_field_serial(const DiscreteDisc2D& disc, const std::vector<double>& v,
                                 const std::vector<int>& centers, double k, double radius_scale,
                                 std::vector<double>& out);
void mollified_mean_field_parallel(const DiscreteDisc2D& disc, const std::vector<double>& v,
                                   const std::vector<int>& centers, double k, double radius_scale,
                                   std::vector<double>& out);

}  // namespace mplab
