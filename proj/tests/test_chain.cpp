#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mplab/disc_space.hpp"
#include "mplab/interval_space.hpp"

using namespace mplab;

TEST_CASE("mollifier is a unit-mass C1 bump") {
    CHECK(mollifier(0.0) == 0.0);
    CHECK(mollifier(1.0) == 0.0);
    CHECK(mollifier(0.5) == doctest::Approx(30.0 / 16));
    CHECK(mollifier_cdf(1.0) == doctest::Approx(1.0));
    CHECK(mollifier_cdf(0.0) == 0.0);
    // cdf differentiates back to the bump
    for (double s : {0.2, 0.5, 0.8}) {
        double h = 1e-6;
        CHECK((mollifier_cdf(s + h) - mollifier_cdf(s - h)) / (2 * h) ==
              doctest::Approx(mollifier(s)).epsilon(1e-8));
    }
}

TEST_CASE("constants are fixed points of the approximation") {
    ExactInterval1D s(0, 1, constant_profile(1.0));
    for (double k : {1.0, 3.0, 9.0})
        CHECK(s.mollified_mean([](double) { return 2.5; }, 0.35, k) == doctest::Approx(2.5));
}

TEST_CASE("harmonics are reproduced whether or not balls degenerate") {
    ExactInterval1D s(0.5 - 80, 0.5 + 80, constant_profile(1.0));
    auto harm = [](double t) { return 1 + 0.1 * t; };
    for (double x : {0.5, 20.0, -30.0})
        for (double k : {1.0, 4.0})
            CHECK(s.mollified_mean(harm, x, k) == doctest::Approx(harm(x)).epsilon(1e-10));
}

TEST_CASE("narrow kernel range collapses the chain to the identity") {
    // on the unit interval the peak is 1/4, so every ball with radius <= 1 is
    // degenerate and v_k == v for all k
    ExactInterval1D s(0, 1, constant_profile(1.0));
    auto v = [](double t) { return std::fabs(t - 0.5); };
    for (double k : {1.0, 2.0, 16.0})
        CHECK(s.mollified_mean(v, 0.5, k) == doctest::Approx(0.0));
}

TEST_CASE("kink value decreases strictly toward zero on a wide interval") {
    ExactInterval1D s(0.5 - 80, 0.5 + 80, constant_profile(1.0));
    auto v = [](double t) { return std::fabs(t - 0.5); };
    double prev = 1e300;
    for (double k : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        double vk = s.mollified_mean(v, 0.5, k);
        CHECK(vk > 0);
        CHECK(vk < prev);
        prev = vk;
    }
    CHECK(prev < s.mollified_mean(v, 0.5, 1.0) / 4);

    // closed-form cross-check at k=1: the ball at radius tau has boundary
    // offset delta = 40 - tau^{-1} * scale... derived via the kernel: on a
    // symmetric interval of half-width L, m_s(v)(center) = L - D/(4*(s...)).
    // Use the direct identity m_s = (hi - lo)/2 for this v instead.
    LevelBall1D b = s.ball(0.5, 1.0);
    double expect = b.degenerate ? 0.0 : 0.5 * (b.hi - b.lo) / 2 + 0;
    if (!b.degenerate)
        CHECK(s.mean_value(v, 0.5, 1.0) == doctest::Approx((b.hi - b.lo) / 2).epsilon(1e-10));
    (void)expect;
}

TEST_CASE("full 1d chain: ordering, strict L1 decrease, sup bound") {
    ExactInterval1D s(0.5 - 80, 0.5 + 80, constant_profile(1.0));
    auto v = [](double t) { return std::fabs(t - 0.5); };
    const double esup = 80.0;
    std::vector<double> xs;
    for (int i = 1; i < 60; ++i) xs.push_back(-75.0 + 151.0 * i / 60.0);
    double prev_l1 = 1e300;
    std::vector<double> prev_vals(xs.size(), 1e300);
    for (double k : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        double l1 = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double vk = s.mollified_mean(v, xs[i], k);
            CHECK(vk >= v(xs[i]) - 1e-9);
            CHECK(vk <= prev_vals[i] + 1e-9);
            CHECK(vk <= esup + 1e-9);
            l1 += vk - v(xs[i]);
            prev_vals[i] = vk;
        }
        CHECK(l1 < prev_l1 - 1e-9);
        prev_l1 = l1;
    }
}

TEST_CASE("2d transfer: k0 exists and the factor-2 bound holds beyond it") {
    ModelManifold m = make_manifold("euclidean");
    AlphaSolution a = solve_alpha(m, 2.5);
    DiscreteDisc2D disc(m, a, 2.0, 32, 32);
    double scale = disc.suggest_radius_scale(16.0);

    std::vector<double> u(disc.nodes()), v(disc.nodes());
    for (int p = 0; p < disc.nodes(); ++p) {
        double al = a.value(disc.t_of(p));
        u[p] = std::max(al - 1.5, -0.5);
        v[p] = u[p] / al;
    }
    // certificate for the conjugated operator
    for (int p = 0; p < disc.nodes(); ++p)
        if (!disc.rim_cell(p)) CHECK(disc.apply_stiffness(v, p) <= 1e-7);

    double esup_u = 0;
    for (double x : u) esup_u = std::max(esup_u, x);
    REQUIRE(esup_u > 0);

    std::vector<int> centers;
    for (int i = 0; i < (3 * disc.nr()) / 4; i += 2)
        for (int j = 0; j < disc.ntheta(); j += 4) centers.push_back(disc.node(i, j));
    disc.ensure_columns(centers);

    TransferReport rep = transfer_factor2(disc, u, centers, {1, 2, 4, 8, 16}, scale);
    REQUIRE(rep.k0 > 0);
    CHECK(rep.pass);
    CHECK(rep.esup_u == doctest::Approx(esup_u));
    for (std::size_t i = 0; i < rep.k_ladder.size(); ++i)
        if (rep.k_ladder[i] >= rep.k0) CHECK(rep.sup_uk[i] <= 2 * esup_u + 1e-7);
    // the trivial member u = alpha gives v == 1 and u_k == alpha
    std::vector<double> ua(disc.nodes());
    for (int p = 0; p < disc.nodes(); ++p) ua[p] = a.value(disc.t_of(p));
    TransferReport ra = transfer_factor2(disc, ua, centers, {2, 8}, scale);
    for (double s : ra.sup_uk) CHECK(s <= 2 * ra.esup_u + 1e-7);

    // esup u < 0 is outside the contract
    std::vector<double> neg(disc.nodes(), -1.0);
    CHECK_THROWS_AS(transfer_factor2(disc, neg, centers, {2.0}, scale), std::invalid_argument);
}

TEST_CASE("negative control: a superharmonic function violates the mean bound") {
    ModelManifold m = make_manifold("euclidean");
    AlphaSolution a = solve_alpha(m, 2.5);
    DiscreteDisc2D disc(m, a, 2.0, 32, 32);
    int pole = disc.node(8, 0);
    const auto& g = disc.green_column(pole);
    std::vector<double> sup_fn(disc.nodes());
    for (int p = 0; p < disc.nodes(); ++p) sup_fn[p] = g[p];  // +G is superharmonic
    double peak = disc.green_peak(pole);
    double mv = disc.mean_value(sup_fn, pole, 2.5 / peak);
    CHECK(mv < sup_fn[pole]);  // the subharmonic inequality must fail
}
