#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mplab/completeness.hpp"
#include "mplab/disc_space.hpp"
#include "mplab/profiles.hpp"

namespace mplab {

// Second-order radial discretization of (Laplace - c) on the geodesic disc
// B_R with a Dirichlet node at t = R. Vertex grid t_i = i*h, i = 0..N; the
// pole row uses Laplace f(0) = n f''(0). Interior rows form an M-matrix
// (off-diagonals >= 0, row sums = -c); the grid is refined automatically
// until the drift term satisfies h <= 2/|b|.
class RadialDirichletOperator {
  public:
    RadialDirichletOperator(const ModelManifold& m, double radius, double c, int min_nodes = 64);

    int interior_nodes() const { return n_; }  // unknowns 0..n-1; node n is the rim
    double spacing() const { return h_; }
    double radius() const { return radius_; }
    double constant() const { return c_; }
    double grid_point(int i) const { return i * h_; }

    // (Laplace - c) u at interior node i, u given on all nodes 0..n
    double apply(const std::vector<double>& u, int i) const;

    // solve (Laplace - c - shift) w = rhs with w(R) = boundary
    std::vector<double> solve_shifted(double shift, const std::vector<double>& rhs,
                                      double boundary) const;

    // M-matrix structure data for the invariants
    double offdiag_min() const { return offdiag_min_; }
    double row_sum_max() const { return row_sum_max_; }

  private:
    const ModelManifold m_;
    double radius_, c_, h_;
    int n_;
    std::vector<double> lo_, di_, up_;  // rows of (Laplace - c)
    double offdiag_min_ = 0, row_sum_max_ = 0;
};

struct IterationReport {
    std::vector<double> w;  // on nodes 0..n (boundary included)
    int iterations = 0;
    double final_diff = 0;      // sup |w^{m+1} - w^m|
    double residual_inf = 0;    // sup |(Laplace - c) w| over interior
    bool ordered = true;        // iterates increased monotonically below u2
};

// Monotone iteration between an ordered discrete sub/supersolution pair:
// w^{m+1} solves (Laplace - c - 1) w^{m+1} = -w^m with rim values from u2.
IterationReport monotone_iteration(const RadialDirichletOperator& op,
                                   const std::vector<double>& u1, const std::vector<double>& u2,
                                   double tol, int max_iter = 400);

struct EnvelopeStage {
    double radius = 0;
    double core_sup = 0;        // sup |w| over the core region
    double cauchy_diff = 0;     // sup over core of |w_h - w_{h-1}|
    double residual_inf = 0;
    int iterations = 0;
};

struct EnvelopeReport {
    std::vector<EnvelopeStage> stages;
    double bound_2c = 0;
    bool decayed = false;     // final core sup below the decay tolerance
    bool stabilized = false;  // sup stays away from zero, Cauchy diffs shrink
};

// Exhaustion envelope: for each radius, iterate the bounded subsolution
// against the constant supersolution 2c and track the core values.
EnvelopeReport bounded_envelope(const ModelManifold& m, const std::function<double(double)>& u,
                                const std::vector<double>& radii, double core_radius,
                                double tol = 1e-10, double decay_tol = 1e-3, int min_nodes = 256);

struct KatoReport {
    int pairs_checked = 0;
    int violations = 0;
    double worst_gap = 0;  // most negative of m_r(v+) - v+(x)
};

// Mean-value subharmonicity of the positive part: v discrete subharmonic on
// the disc implies v+ = max(v,0) is too; checked at sampled (x,r) pairs.
KatoReport kato_check(const DiscreteDisc2D& disc, const std::vector<double>& v,
                      const std::vector<int>& centers, const std::vector<double>& radii);

enum class ExperimentVerdict { CONSISTENT, VIOLATED, INCONCLUSIVE };
std::string to_string(ExperimentVerdict v);

struct ExperimentReport {
    ExperimentVerdict verdict = ExperimentVerdict::INCONCLUSIVE;
    std::string mode;
    std::string profile;
    ScVerdict sc = ScVerdict::INCONCLUSIVE;
    // witness: a bounded negative function with (-Laplace+1)u >= 0 (Linfty),
    // or the L1 family member with its finite mass (L1)
    std::vector<double> witness_t, witness_u;
    double witness_mass = 0, witness_mass_bound = 0;
    EnvelopeReport envelope;
};

ExperimentReport positivity_experiment_linfty(const ModelManifold& m, double lambda = 1.0);
ExperimentReport positivity_experiment_l1(const std::string& profile, double epsilon);

}  // namespace mplab
