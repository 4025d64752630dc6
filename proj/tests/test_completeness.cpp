#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mplab/completeness.hpp"
#include "mplab/drifted.hpp"
#include "mplab/oracles.hpp"

using namespace mplab;

TEST_CASE("euclidean radial solution is the Bessel function") {
    ModelManifold m = make_manifold("euclidean");
    CompletenessVerdict v = sc_ode_test(m, 1.0, 10.0, 1e3);
    CHECK(v.verdict == ScVerdict::COMPLETE_EVIDENCE);
    CHECK(v.horizon == doctest::Approx(10.0));
    CHECK(v.u == doctest::Approx(oracle::bessel_i0(10.0)).epsilon(1e-7));
    CHECK(v.u == doctest::Approx(2815.7).epsilon(1e-4));
}

TEST_CASE("hyperbolic growth rate approaches the golden ratio root") {
    ModelManifold m = make_manifold("hyperbolic");
    CompletenessVerdict v = sc_ode_test(m, 1.0, 40.0, 1e6);
    CHECK(v.verdict == ScVerdict::COMPLETE_EVIDENCE);
    CHECK(v.u_log_deriv == doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(1e-4));
}

TEST_CASE("superexponential volume growth gives a bounded solution") {
    ModelManifold m = make_manifold("superexp", 1.0);
    CompletenessVerdict v = sc_ode_test(m, 1.0, 1e18, 1e6);
    CHECK(v.verdict == ScVerdict::INCOMPLETE_EVIDENCE);
    CHECK(v.tail_increment < 1e-8);
    CHECK(std::isfinite(v.u));
}

TEST_CASE("cusp warping grows the radial solution") {
    ModelManifold m = make_manifold("cusp", 1.0);
    CompletenessVerdict v = sc_ode_test(m, 1.0, 1e18, 1e6);
    CHECK(v.verdict == ScVerdict::COMPLETE_EVIDENCE);
}

TEST_CASE("verdicts are invariant across lambda") {
    for (auto name : {"euclidean", "hyperbolic", "cusp", "superexp"}) {
        ModelManifold m = make_manifold(name, 1.0);
        ScVerdict first = sc_ode_test(m, 0.5, 1e18, 1e6).verdict;
        for (double lam : {1.0, 2.0})
            CHECK(sc_ode_test(m, lam, 1e18, 1e6).verdict == first);
    }
}

TEST_CASE("preconditions") {
    ModelManifold m = make_manifold("euclidean");
    CHECK_THROWS_AS(sc_ode_test(m, -1.0, 10.0, 1e3), std::invalid_argument);
    CHECK_THROWS_AS(sc_ode_test(m, 1.0, 0.5, 1e3), std::invalid_argument);
}

TEST_CASE("curvature criterion") {
    CHECK(hsu_test(make_manifold("hyperbolic"), 1.0, 1.0, 20.0));
    CHECK(hsu_test(make_manifold("euclidean"), 0.1, 0.5, 20.0));
    CHECK_FALSE(hsu_test(make_manifold("cusp", 1.0), 10.0, 0.5, 10.0));
    CHECK_FALSE(hsu_test(make_manifold("superexp", 1.0), 10.0, 0.5, 10.0));
    // sufficient only: cusp fails the criterion yet the ODE test says complete
    CHECK(sc_ode_test(make_manifold("cusp", 1.0), 1.0, 1e18, 1e6).verdict ==
          ScVerdict::COMPLETE_EVIDENCE);
}

TEST_CASE("volume oracle classifies the suite") {
    CHECK(volume_oracle(make_manifold("euclidean"), 10.0) == OracleVerdict::SC);
    CHECK(volume_oracle(make_manifold("hyperbolic"), 10.0) == OracleVerdict::SC);
    CHECK(volume_oracle(make_manifold("cusp", 1.0), 10.0) == OracleVerdict::SC);
    CHECK(volume_oracle(make_manifold("cusp", 0.5), 10.0) == OracleVerdict::SC);
    CHECK(volume_oracle(make_manifold("superexp", 1.0), 10.0) == OracleVerdict::NOT_SC);
    CHECK(volume_oracle(make_manifold("superexp", 0.5), 10.0) == OracleVerdict::NOT_SC);
    // no tail data -> no verdict
    ModelManifold custom(2, function_profile([](double t) { return t; }, "custom"), "custom");
    CHECK(volume_oracle(custom, 10.0) == OracleVerdict::INCONCLUSIVE);
}

TEST_CASE("oracle agrees with the ode test over the suite") {
    struct Row {
        const char* name;
        double eps;
    } suite[] = {{"euclidean", 1}, {"hyperbolic", 1}, {"cusp", 1},
                 {"cusp", 0.5},    {"superexp", 1},   {"superexp", 0.5}};
    for (auto [name, eps] : suite) {
        ModelManifold m = make_manifold(name, eps);
        ScVerdict sc = sc_ode_test(m, 1.0, 1e18, 1e6).verdict;
        OracleVerdict vo = volume_oracle(m, 10.0);
        REQUIRE(sc != ScVerdict::INCONCLUSIVE);
        REQUIRE(vo != OracleVerdict::INCONCLUSIVE);
        CHECK((sc == ScVerdict::COMPLETE_EVIDENCE) == (vo == OracleVerdict::SC));
    }
}

TEST_CASE("tail integral certificate") {
    // vol = t^4: integrable quotient
    CHECK(tail_integral_finite([](double t) { return std::pow(t, 4); },
                               [](double t) { return 4 * std::pow(t, 3); }, 10.0));
    // vol = t^2: harmonic tail diverges
    CHECK_FALSE(tail_integral_finite([](double t) { return t * t; },
                                     [](double t) { return 2 * t; }, 10.0));
}

TEST_CASE("weighted volume test with the Bessel weight") {
    ModelManifold m = make_manifold("euclidean");
    AlphaSolution a = solve_alpha(m, 25.0);
    CHECK(alpha_volume_test(m, *a.as_profile(), 20.0));
    // weight 1: vol ~ t^2 and the test must refuse
    CHECK_FALSE(alpha_volume_test(m, *constant_profile(1.0), 20.0));
    CHECK_THROWS_AS(alpha_volume_test(m, *constant_profile(-1.0), 20.0),
                    std::invalid_argument);
}
