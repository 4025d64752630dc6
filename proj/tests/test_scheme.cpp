#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mplab/counterexample.hpp"
#include "mplab/oracles.hpp"
#include "mplab/scheme.hpp"

using namespace mplab;

TEST_CASE("operator rows form an M-matrix") {
    for (auto name : {"euclidean", "hyperbolic", "cusp"}) {
        ModelManifold m = make_manifold(name, 1.0);
        RadialDirichletOperator op(m, 4.0, 1.0, 64);
        CHECK(op.offdiag_min() >= 0);
        CHECK(op.row_sum_max() <= -1.0 + 1e-9);
    }
}

TEST_CASE("discrete operator matches the radial laplacian on smooth data") {
    ModelManifold m = make_manifold("euclidean");
    RadialDirichletOperator op(m, 2.0, 1.0, 512);
    const int n = op.interior_nodes();
    std::vector<double> u(n + 1);
    for (int i = 0; i <= n; ++i) {
        double t = op.grid_point(i);
        u[i] = t * t;
    }
    // (Laplace - 1) t^2 = 4 - t^2 in the plane
    for (int i : {1, n / 4, n / 2, 3 * n / 4}) {
        double t = op.grid_point(i);
        CHECK(op.apply(u, i) == doctest::Approx(4 - t * t).epsilon(1e-5));
    }
    CHECK(op.apply(u, 0) == doctest::Approx(4.0).epsilon(1e-5));  // pole row
}

TEST_CASE("fixed point at zero") {
    ModelManifold m = make_manifold("euclidean");
    RadialDirichletOperator op(m, 2.0, 1.0, 64);
    std::vector<double> z(op.interior_nodes() + 1, 0.0);
    IterationReport rep = monotone_iteration(op, z, z, 1e-10);
    CHECK(rep.iterations == 1);
    for (double w : rep.w) CHECK(w == doctest::Approx(0.0));
}

TEST_CASE("flat case contracts onto the zero solution") {
    ModelManifold m = make_manifold("euclidean");
    RadialDirichletOperator op(m, 4.0, 1.0, 128);
    const int n = op.interior_nodes();
    std::vector<double> u1(n + 1, -1.0), u2(n + 1, 0.0);
    IterationReport rep = monotone_iteration(op, u1, u2, 1e-10);
    CHECK(rep.ordered);
    CHECK(rep.residual_inf <= 1e-9);
    for (double w : rep.w) {
        CHECK(w >= -1.0 - 1e-12);
        CHECK(w <= 1e-8);
    }
}

TEST_CASE("iterates are trapped between the pair on the cusp grid") {
    CuspFamily f = build_cusp(1.0);
    RadialDirichletOperator op(f.manifold, 2.0, 1.0, 512);
    const int n = op.interior_nodes();
    double cap = f.growth->value(2.0);
    std::vector<double> u1(n + 1), u2(n + 1, 2.0);
    for (int i = 0; i <= n; ++i)
        u1[i] = std::max(f.growth->value(op.grid_point(i)) / cap - 0.5, 0.0);
    IterationReport rep = monotone_iteration(op, u1, u2, 1e-10);
    CHECK(rep.ordered);
    CHECK(rep.residual_inf <= 1e-9);
    for (int i = 0; i <= n; ++i) {
        CHECK(rep.w[i] >= u1[i] - 1e-9);
        CHECK(rep.w[i] <= 2.0 + 1e-9);
    }
}

TEST_CASE("precondition violations are rejected") {
    ModelManifold m = make_manifold("euclidean");
    RadialDirichletOperator op(m, 2.0, 1.0, 64);
    const int n = op.interior_nodes();
    std::vector<double> u1(n + 1, 1.0), u2(n + 1, 0.0);
    CHECK_THROWS_AS(monotone_iteration(op, u1, u2, 1e-10), std::invalid_argument);
    std::vector<double> bad(n + 1);
    for (int i = 0; i <= n; ++i) bad[i] = -op.grid_point(i) * op.grid_point(i);
    // -t^2 is not a subsolution of (Laplace-1): (Laplace-1)(-t^2) = -4 + t^2 < 0 near 0
    CHECK_THROWS_AS(monotone_iteration(op, bad, u2, 1e-10), std::invalid_argument);
}

TEST_CASE("boundary-driven solve matches the Bessel quotient") {
    // limit of the envelope stage: w = 2c I0(t)/I0(R)
    ModelManifold m = make_manifold("euclidean");
    EnvelopeReport rep = bounded_envelope(m, [](double) { return -1.0; }, {4.0}, 1.0, 1e-12, 1e-3,
                                          2048);
    double expect = 2.0 * oracle::bessel_i0(1.0) / oracle::bessel_i0(4.0);
    CHECK(rep.stages[0].core_sup == doctest::Approx(expect).epsilon(1e-4));
}

TEST_CASE("envelope decays on complete profiles and stabilizes on incomplete ones") {
    EnvelopeReport flat = bounded_envelope(make_manifold("euclidean"),
                                           [](double) { return -1.0; }, {2, 4, 8, 16}, 1.0);
    CHECK(flat.decayed);
    double prev = 1e300;
    for (const auto& st : flat.stages) {
        CHECK(st.core_sup < prev + 1e-12);
        prev = st.core_sup;
    }

    EnvelopeReport sup = bounded_envelope(make_manifold("superexp", 1.0),
                                          [](double) { return -1.0; }, {2, 4, 8, 16}, 1.0);
    CHECK_FALSE(sup.decayed);
    CHECK(sup.stabilized);
    CHECK(sup.stages.back().core_sup > 0.1 * sup.bound_2c);
}

TEST_CASE("zero input gives zero envelopes") {
    EnvelopeReport z = bounded_envelope(make_manifold("euclidean"), [](double) { return 0.0; },
                                        {2, 4}, 1.0);
    for (const auto& st : z.stages) CHECK(st.core_sup <= 1e-12);
    CHECK(z.decayed);
}

TEST_CASE("envelope rejects non-nested radii") {
    CHECK_THROWS_AS(bounded_envelope(make_manifold("euclidean"), [](double) { return -1.0; },
                                     {4, 2}, 1.0),
                    std::invalid_argument);
}

TEST_CASE("positive-part subharmonicity on the disc") {
    ModelManifold m = make_manifold("euclidean");
    AlphaSolution a = solve_alpha(m, 2.5);
    DiscreteDisc2D disc(m, a, 2.0, 32, 32);
    // sign-changing certified subsolution of the drifted operator
    std::vector<double> v(disc.nodes());
    for (int p = 0; p < disc.nodes(); ++p)
        v[p] = std::max(1 - 1.3 / a.value(disc.t_of(p)), -0.25);
    std::vector<int> centers;
    for (int i = 2; i < disc.nr() / 2; i += 3) centers.push_back(disc.node(i, i));
    std::vector<double> radii;
    for (int x : centers) radii.push_back(1.5 / disc.green_peak(x));
    KatoReport rep = kato_check(disc, v, centers, {radii[0], 2 * radii[0]});
    CHECK(rep.violations == 0);
    CHECK(rep.worst_gap >= -1e-9);

    // all-nonnegative and all-nonpositive reductions
    std::vector<double> neg(disc.nodes(), -1.0);
    KatoReport rneg = kato_check(disc, neg, centers, {radii[0]});
    CHECK(rneg.violations == 0);
    CHECK(rneg.worst_gap == doctest::Approx(0.0));
}

TEST_CASE("positivity experiments across the suite") {
    ExperimentReport flat = positivity_experiment_linfty(make_manifold("euclidean"));
    CHECK(flat.verdict == ExperimentVerdict::CONSISTENT);
    CHECK(flat.envelope.decayed);

    ExperimentReport sup = positivity_experiment_linfty(make_manifold("superexp", 1.0));
    CHECK(sup.verdict == ExperimentVerdict::VIOLATED);
    REQUIRE_FALSE(sup.witness_u.empty());
    for (double u : sup.witness_u) {
        CHECK(u <= 0);
        CHECK(u >= -1.0 - 1e-9);
    }

    ExperimentReport l1c = positivity_experiment_l1("cusp", 1.0);
    CHECK(l1c.verdict == ExperimentVerdict::VIOLATED);
    CHECK(l1c.witness_mass > 0);
    CHECK(l1c.witness_mass < l1c.witness_mass_bound);
    for (double u : l1c.witness_u) CHECK(u <= 0);

    ExperimentReport l1e = positivity_experiment_l1("euclidean", 1.0);
    CHECK(l1e.verdict == ExperimentVerdict::CONSISTENT);
}
