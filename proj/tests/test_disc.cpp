#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mplab/disc_space.hpp"
#include "mplab/quadrature.hpp"
#include "mplab/rng.hpp"

using namespace mplab;

namespace {

struct Fixture {
    ModelManifold m = make_manifold("euclidean");
    AlphaSolution a = solve_alpha(m, 2.5);
    DiscreteDisc2D disc{m, a, 2.0, 40, 40};
};

}  // namespace

TEST_CASE("model distances") {
    ModelManifold flat = make_manifold("euclidean");
    CHECK(model_distance(flat, 1.0, 0.0, 1.0, M_PI) == doctest::Approx(2.0));
    CHECK(model_distance(flat, 1.0, 0.0, 2.0, 0.0) == doctest::Approx(1.0));
    ModelManifold hyp = make_manifold("hyperbolic");
    CHECK(model_distance(hyp, 1.0, 0.0, 1.0, 0.0) == doctest::Approx(0.0));
    // path bound dominates the chord on a general warping
    ModelManifold cusp = make_manifold("cusp", 1.0);
    double d = model_distance(cusp, 1.0, 0.0, 1.0, M_PI);
    CHECK(d > 0);
    CHECK(d <= 2.0 + 1e-9);  // through the pole
}

TEST_CASE("green columns: identity, symmetry, positivity, boundary decay") {
    Fixture f;
    int x = f.disc.node(10, 7), y = f.disc.node(20, 30);
    const auto& gx = f.disc.green_column(x);
    // K G = e_x
    for (int p : {x, y, f.disc.node(5, 5)}) {
        double want = (p == x) ? 1.0 : 0.0;
        CHECK(f.disc.apply_stiffness(gx, p) == doctest::Approx(want).epsilon(1e-9));
    }
    CHECK(f.disc.green(x, y) == doctest::Approx(f.disc.green(y, x)).epsilon(1e-10));
    CHECK(f.disc.green(x, y) > 0);
    // kernel falls toward the Dirichlet rim
    CHECK(f.disc.green(x, f.disc.node(f.disc.nr() - 1, 7)) < f.disc.green(x, f.disc.node(12, 7)));
    // diagonal dominates the neighbours
    CHECK(gx[x] > f.disc.green_peak(x));
}

TEST_CASE("disc kernel against the radial quadrature formula") {
    // pole-centered kernel of the flat disc with weight alpha^2 sigma:
    // G(0,t) = int_t^R ds/(2 pi s alpha(s)^2), up to the cell scale
    Fixture f;
    int pole_ring = 0;
    std::vector<double> avg(f.disc.nr(), 0.0);
    // average the first-ring columns to emulate the pole
    for (int j = 0; j < f.disc.ntheta(); ++j) {
        const auto& g = f.disc.green_column(f.disc.node(pole_ring, j));
        for (int i = 0; i < f.disc.nr(); ++i) {
            double s = 0;
            for (int jj = 0; jj < f.disc.ntheta(); ++jj) s += g[f.disc.node(i, jj)];
            avg[i] += s / f.disc.ntheta();
        }
    }
    for (auto& v : avg) v /= f.disc.ntheta();
    for (int i = 8; i < f.disc.nr() - 4; i += 6) {
        double t = f.disc.t_of(f.disc.node(i, 0));
        double ref = integrate(
            [&](double s) {
                double al = f.a.value(s);
                return 1.0 / (2 * M_PI * s * al * al);
            },
            t, f.disc.radius(), 1e-12, 1e-10);
        CHECK(avg[i] == doctest::Approx(ref).epsilon(0.02));
    }
}

TEST_CASE("balls, flux normalization, harmonic reproduction") {
    Fixture f;
    Rng rng(5);
    std::vector<double> ones(f.disc.nodes(), 1.0);
    std::vector<double> harm =
        f.disc.harmonic_extension([](double th) { return 1 + 0.5 * std::sin(th); });
    int done = 0;
    while (done < 60) {
        int x = f.disc.node(1 + static_cast<int>(rng.next_below(f.disc.nr() / 2)),
                            static_cast<int>(rng.next_below(f.disc.ntheta())));
        const auto& g = f.disc.green_column(x);
        double lvl = 0;
        for (const auto& e : f.disc.edges_of(x)) lvl = std::max(lvl, g[e.to]);
        double rim = 0;
        for (int j = 0; j < f.disc.ntheta(); ++j)
            rim = std::max(rim, g[f.disc.node(f.disc.nr() - 1, j)]);
        if (!(lvl * 0.9 > rim * 4)) continue;
        double thr = std::exp(rng.uniform(std::log(rim * 4), std::log(lvl * 0.9)));
        DiscBall b = f.disc.ball(x, 1.0 / thr);
        if (b.degenerate) continue;
        CHECK(f.disc.mean_value(ones, b) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(f.disc.mean_value(harm, b) == doctest::Approx(harm[x]).epsilon(1e-8));
        ++done;
    }
}

TEST_CASE("ball monotonicity in r") {
    Fixture f;
    int x = f.disc.node(8, 3);
    double peak = f.disc.green_peak(x);
    DiscBall small = f.disc.ball(x, 1.3 / peak);
    DiscBall big = f.disc.ball(x, 4.0 / peak);
    CHECK(small.inside.size() <= big.inside.size());
    for (int p : small.inside) {
        bool found = false;
        for (int q : big.inside) found = found || (q == p);
        CHECK(found);
    }
}

TEST_CASE("representation identity for smooth node data") {
    Fixture f;
    std::vector<double> v(f.disc.nodes());
    for (int p = 0; p < f.disc.nodes(); ++p) {
        double t = f.disc.t_of(p), th = f.disc.theta_of(p);
        v[p] = t * t * (1 + 0.3 * std::cos(th));
    }
    for (int i : {6, 12, 18}) {
        int x = f.disc.node(i, 5);
        double peak = f.disc.green_peak(x);
        CHECK(f.disc.representation_residual(v, x, 2.0 / peak) <= 1e-8);
    }
}

TEST_CASE("rim guard") {
    Fixture f;
    int x = f.disc.node(f.disc.nr() - 3, 0);
    CHECK_THROWS_AS(f.disc.ball(x, 1e12), std::domain_error);
}

TEST_CASE("mollified mean: constants, harmonic data, subharmonic ordering") {
    Fixture f;
    double scale = f.disc.suggest_radius_scale(16.0);
    std::vector<double> ones(f.disc.nodes(), 1.0);
    std::vector<double> harm =
        f.disc.harmonic_extension([](double th) { return 1 + 0.25 * std::cos(2 * th); });
    int x = f.disc.node(9, 9);
    CHECK(f.disc.mollified_mean(ones, x, 2.0, scale) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(f.disc.mollified_mean(harm, x, 2.0, scale) == doctest::Approx(harm[x]).epsilon(1e-8));

    const auto& g0 = f.disc.green_column(f.disc.node(6, 0));
    std::vector<double> sub(f.disc.nodes());
    for (int p = 0; p < f.disc.nodes(); ++p) sub[p] = -g0[p];
    double prev = 1e300;
    for (double k : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        double vk = f.disc.mollified_mean(sub, x, k, scale);
        CHECK(vk >= sub[x] - 1e-9);
        CHECK(vk <= prev + 1e-12);
        prev = vk;
    }
}

TEST_CASE("radius bound is nonincreasing and vanishes for large k") {
    Fixture f;
    double scale = f.disc.suggest_radius_scale(16.0);
    int x = f.disc.node(10, 0);
    double prev = 1e300;
    for (double k : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        double rk = f.disc.radius_bound(x, k, scale);
        CHECK(rk <= prev + 1e-12);
        prev = rk;
    }
    CHECK(f.disc.radius_bound(x, 1e7, scale) == 0.0);
}

TEST_CASE("serial and parallel kernels agree bitwise") {
    Fixture f;
    std::vector<int> poles;
    for (int i = 2; i < f.disc.nr() - 2; i += 3) poles.push_back(f.disc.node(i, i % 7));
    std::vector<std::vector<double>> cs, cp;
    green_columns_serial(f.disc, poles, cs);
    green_columns_parallel(f.disc, poles, cp);
    REQUIRE(cs.size() == cp.size());
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t p = 0; p < cs[i].size(); ++p) CHECK(cs[i][p] == cp[i][p]);

    std::vector<double> v(f.disc.nodes());
    for (int p = 0; p < f.disc.nodes(); ++p) v[p] = std::sin(0.01 * p);
    // make v subharmonic-free: the kernels do not require a certificate
    double scale = f.disc.suggest_radius_scale(8.0);
    std::vector<double> ms, mp;
    mollified_mean_field_serial(f.disc, v, poles, 2.0, scale, ms);
    mollified_mean_field_parallel(f.disc, v, poles, 2.0, scale, mp);
    for (std::size_t i = 0; i < ms.size(); ++i) CHECK(ms[i] == mp[i]);
}
