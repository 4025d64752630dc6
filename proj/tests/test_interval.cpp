#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mplab/interval_space.hpp"
#include "mplab/rng.hpp"

using namespace mplab;

namespace {

ExactInterval1D unit_space() { return ExactInterval1D(0, 1, constant_profile(1.0)); }

}  // namespace

TEST_CASE("classical unit-interval kernel") {
    ExactInterval1D s = unit_space();
    CHECK(s.green(0.5, 0.25) == doctest::Approx(0.125).epsilon(1e-13));
    CHECK(s.green(0.3, 0.7) == doctest::Approx(0.09).epsilon(1e-13));
    CHECK(s.green(0.7, 0.3) == doctest::Approx(0.09).epsilon(1e-13));
    CHECK(s.green_peak(0.5) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(s.green(0.5, 1.0) == 0.0);
    CHECK_THROWS_AS(s.green(0.5, 0.5), std::domain_error);
}

TEST_CASE("kernel symmetry at random pairs") {
    ExactInterval1D s(0, 2, exp_profile(2.0));
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        double x = rng.uniform(0.05, 1.95), y = rng.uniform(0.05, 1.95);
        if (x == y) continue;
        CHECK(s.green(x, y) == doctest::Approx(s.green(y, x)).epsilon(1e-10));
        CHECK(s.green(x, y) > 0);
    }
}

TEST_CASE("level-set balls") {
    ExactInterval1D s = unit_space();
    LevelBall1D b = s.ball(0.5, 8.0);
    CHECK_FALSE(b.degenerate);
    CHECK(b.lo == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(b.hi == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(b.sup_dist() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(s.ball(0.5, 4.0).degenerate);
    // huge radius: ball approaches the whole interval
    LevelBall1D big = s.ball(0.5, 1e9);
    CHECK(big.lo == doctest::Approx(0.0).epsilon(1e-7));
    CHECK(big.hi == doctest::Approx(1.0).epsilon(1e-7));
    // monotone in r
    LevelBall1D b2 = s.ball(0.5, 16.0);
    CHECK(b2.lo < b.lo);
    CHECK(b2.hi > b.hi);
}

TEST_CASE("flux weights normalize and reproduce harmonics") {
    ExactInterval1D s = unit_space();
    CHECK(s.mean_value([](double) { return 1.0; }, 0.5, 8.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(s.mean_value([](double t) { return t; }, 0.5, 8.0) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(s.mean_value([](double t) { return std::fabs(t - 0.5); }, 0.5, 8.0) ==
          doctest::Approx(0.25).epsilon(1e-13));

    // weighted space: harmonics are a + b*h
    ExactInterval1D w(0, 2, exp_profile(2.0));
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        double x = rng.uniform(0.1, 1.9);
        double peak = w.green_peak(x);
        double r = std::exp(rng.uniform(std::log(1.05 / peak), std::log(1e4)));
        CHECK(w.mean_value([](double) { return 1.0; }, x, r) ==
              doctest::Approx(1.0).epsilon(1e-10));
        auto harm = [&](double t) { return 2.0 - 3.0 * w.h(t); };
        CHECK(w.mean_value(harm, x, r) == doctest::Approx(harm(x)).epsilon(1e-9));
    }
}

TEST_CASE("degenerate balls return the center value") {
    ExactInterval1D s = unit_space();
    CHECK(s.mean_value([](double t) { return t * t; }, 0.3, 1.0) == doctest::Approx(0.09));
}

TEST_CASE("representation formula closed case") {
    ExactInterval1D s = unit_space();
    // v = t^2 at (0.5, 8): mean 0.3125, correction 0.0625, residual 0
    double m = s.mean_value([](double t) { return t * t; }, 0.5, 8.0);
    CHECK(m == doctest::Approx(0.3125).epsilon(1e-13));
    CHECK(s.representation_residual(*power_profile(2.0), 0.5, 8.0) <= 1e-12);
    // harmonic: residual vanishes at any nondegenerate radius
    auto aff = function_profile([](double t) { return 1 + 2 * t; }, "aff",
                                [](double) { return 2.0; }, [](double) { return 0.0; }, -1, 2);
    CHECK(s.representation_residual(*aff, 0.4, 30.0) <= 1e-12);
}

TEST_CASE("representation formula on a weighted space") {
    ExactInterval1D w(0, 1, exp_profile(2.0));
    double peak = w.green_peak(0.5);
    CHECK(w.representation_residual(*power_profile(2.0), 0.5, 2.5 / peak) <= 1e-8);
}

TEST_CASE("riesz decomposition of the kink") {
    ExactInterval1D s = unit_space();
    std::vector<ProfilePiece> pieces;
    pieces.push_back({0.0, 0.5,
                      function_profile([](double t) { return 0.5 - t; }, "l",
                                       [](double) { return -1.0; }, [](double) { return 0.0; },
                                       -1, 2)});
    pieces.push_back({0.5, 1.0,
                      function_profile([](double t) { return t - 0.5; }, "r",
                                       [](double) { return 1.0; }, [](double) { return 0.0; },
                                       -1, 2)});
    RieszDecomposition d = riesz_decompose(s, pieces);
    REQUIRE(d.measure.atoms.size() == 1);
    CHECK(d.measure.atoms[0].first == doctest::Approx(0.5));
    CHECK(d.measure.atoms[0].second == doctest::Approx(2.0).epsilon(1e-12));
    // harmonic part is the constant 1/2
    CHECK(d.affine_b == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(d.affine_a == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(d.affinity_residual <= 1e-8);
    CHECK(d.reassembly_residual <= 1e-8);
}

TEST_CASE("riesz decomposition of smooth and harmonic inputs") {
    ExactInterval1D s = unit_space();
    RieszDecomposition d2 = riesz_decompose(s, {{0.0, 1.0, power_profile(2.0)}});
    CHECK(d2.measure.atoms.empty());
    for (double dens : d2.measure.density) CHECK(dens == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(d2.affinity_residual <= 1e-8);

    auto aff = function_profile([](double t) { return 0.2 + 0.7 * t; }, "aff",
                                [](double) { return 0.7; }, [](double) { return 0.0; }, -1, 2);
    RieszDecomposition d3 = riesz_decompose(s, {{0.0, 1.0, aff}});
    CHECK(d3.measure.atoms.empty());
    CHECK(d3.affine_a == doctest::Approx(0.2).epsilon(1e-9));
    CHECK(d3.affine_b == doctest::Approx(0.7).epsilon(1e-9));
}

TEST_CASE("riesz rejects non-subharmonic inputs") {
    ExactInterval1D s = unit_space();
    // downward kink
    std::vector<ProfilePiece> bad;
    bad.push_back({0.0, 0.5,
                   function_profile([](double t) { return t; }, "u", [](double) { return 1.0; },
                                    [](double) { return 0.0; }, -1, 2)});
    bad.push_back({0.5, 1.0,
                   function_profile([](double t) { return 1 - t; }, "d",
                                    [](double) { return -1.0; }, [](double) { return 0.0; }, -1,
                                    2)});
    CHECK_THROWS_AS(riesz_decompose(s, bad), std::invalid_argument);
    // negative density
    CHECK_THROWS_AS(riesz_decompose(s, {{0.0, 1.0,
                                         function_profile([](double t) { return -t * t; }, "n",
                                                          [](double t) { return -2 * t; },
                                                          [](double) { return -2.0; }, -1, 2)}}),
                    std::invalid_argument);
}

TEST_CASE("pole-type left end") {
    // weight t: the h-coordinate diverges at 0 and the kernel loses the left
    // boundary condition
    ExactInterval1D s(0, 1, identity_profile(), true);
    CHECK(s.green(0.5, 0.8) == doctest::Approx(std::log(1 / 0.8)).epsilon(1e-9));
    CHECK(s.green(0.5, 0.2) == doctest::Approx(std::log(1 / 0.5)).epsilon(1e-9));
    LevelBall1D b = s.ball(0.5, 1.0 / std::log(1 / 0.9));
    CHECK_FALSE(b.degenerate);
    CHECK(b.pole_side);
    CHECK(b.hi == doctest::Approx(0.9).epsilon(1e-9));
    CHECK(s.mean_value([](double) { return 1.0; }, b) == doctest::Approx(1.0));
    // representation formula holds across the pole end (no boundary there)
    CHECK(s.representation_residual(*power_profile(2.0), 0.5, b.r) <= 1e-8);
}

TEST_CASE("radius bound shrinks with k") {
    ExactInterval1D s(0.5 - 80, 0.5 + 80, constant_profile(1.0));
    double prev = 1e9;
    for (double k : {1.0, 2.0, 4.0, 8.0, 16.0, 64.0}) {
        double r = s.radius_bound(0.5, k);
        CHECK(r <= prev + 1e-12);
        prev = r;
    }
    // degenerate once 1/k falls below the reciprocal peak
    CHECK(s.radius_bound(0.5, 1e4) == 0.0);
}
