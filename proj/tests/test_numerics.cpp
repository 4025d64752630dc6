#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mplab/hermite.hpp"
#include "mplab/linalg.hpp"
#include "mplab/logdomain.hpp"
#include "mplab/ode45.hpp"
#include "mplab/oracles.hpp"
#include "mplab/quadrature.hpp"
#include "mplab/rng.hpp"

using namespace mplab;

TEST_CASE("adaptive quadrature on closed forms") {
    CHECK(integrate([](double x) { return x * x; }, 0, 1) == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::sin(x); }, 0, M_PI) ==
          doctest::Approx(2.0).epsilon(1e-13));
    // integrable endpoint behaviour
    CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 1e-12, 1, 1e-10, 1e-10) ==
          doctest::Approx(2.0).epsilon(1e-5));
    // long-range decay
    CHECK(integrate([](double x) { return 1.0 / (x * x); }, 1, 1e8, 1e-10, 1e-12) ==
          doctest::Approx(1.0 - 1e-8).epsilon(1e-9));
}

TEST_CASE("cumulative integral matches direct quadrature") {
    CumulativeIntegral c([](double x) { return std::exp(2 * x); }, 0, 3, 1e-15);
    for (double x : {0.1, 0.5, 1.7, 2.9})
        CHECK(c(x) == doctest::Approx((std::exp(2 * x) - 1) / 2).epsilon(1e-13));
    CHECK(c.total() == doctest::Approx((std::exp(6.0) - 1) / 2).epsilon(1e-13));
}

TEST_CASE("ode45 reproduces exp and the Bessel equation") {
    // y' = y
    auto r1 = ode45([](double, const std::vector<double>& y,
                       std::vector<double>& d) { d[0] = y[0]; },
                    0, {1.0}, 3.0, {});
    CHECK(r1.y_end[0] == doctest::Approx(std::exp(3.0)).epsilon(1e-9));

    // u'' + u'/t = u as (log u, u'/u); regular solution is I0
    Ode45Options opt;
    opt.max_step = [](double t) { return 0.05 * std::max(t, 1e-3); };
    double t0 = 1e-6;
    auto r2 = ode45(
        [](double t, const std::vector<double>& y, std::vector<double>& d) {
            d[0] = y[1];
            d[1] = 1 - y[1] * y[1] - y[1] / t;
        },
        t0, {std::log1p(t0 * t0 / 4), t0 / 2}, 10.0, opt, nullptr, {10.0});
    CHECK(std::exp(r2.y_end[0]) == doctest::Approx(oracle::bessel_i0(10.0)).epsilon(1e-8));
}

TEST_CASE("log-domain arithmetic") {
    LogValue a = LogValue::from_double(3.0);
    LogValue b = LogValue::from_double(-2.0);
    CHECK((a * b).to_double() == doctest::Approx(-6.0));
    CHECK((a + b).to_double() == doctest::Approx(1.0));
    CHECK((b + a).to_double() == doctest::Approx(1.0));
    CHECK((a - a).is_zero());

    // sums far outside double range keep their sign
    LogValue big = LogValue::from_log(5000.0, +1);
    LogValue small = LogValue::from_log(4990.0, -1);
    CHECK((big + small).sign == 1);
    CHECK((big + small).log_abs == doctest::Approx(5000.0 + std::log1p(-std::exp(-10.0))));
    CHECK(sign_of_sum(small, big) == 1);
}

TEST_CASE("Hermite spline interpolates cubics exactly") {
    std::vector<double> t, v, d;
    for (int i = 0; i <= 10; ++i) {
        double x = i / 10.0;
        t.push_back(x);
        v.push_back(x * x * x - x);
        d.push_back(3 * x * x - 1);
    }
    HermiteSpline s(t, v, d);
    for (double x : {0.05, 0.333, 0.77})
        CHECK(s.value(x) == doctest::Approx(x * x * x - x).epsilon(1e-14));
    CHECK(s.deriv(0.46) == doctest::Approx(3 * 0.46 * 0.46 - 1).epsilon(1e-12));
}

TEST_CASE("tridiagonal and banded solvers agree with direct checks") {
    // -u'' = 1 on (0,1), Dirichlet: u = x(1-x)/2
    const int n = 64;
    double h = 1.0 / (n + 1);
    std::vector<double> lo(n, -1 / (h * h)), di(n, 2 / (h * h)), up(n, -1 / (h * h));
    std::vector<double> b(n, 1.0);
    TridiagFactor f(lo, di, up);
    f.solve(b);
    for (int i = 0; i < n; ++i) {
        double x = (i + 1) * h;
        CHECK(b[i] == doctest::Approx(x * (1 - x) / 2).epsilon(1e-10));
    }

    BandedSpd bd(n, 1);
    for (int i = 0; i < n; ++i) {
        bd.at(i, i) = 2 / (h * h);
        if (i > 0) bd.at(i, i - 1) = -1 / (h * h);
    }
    bd.factor();
    std::vector<double> c(n, 1.0);
    bd.solve(c);
    for (int i = 0; i < n; ++i) CHECK(c[i] == doctest::Approx(b[i]).epsilon(1e-12));
}

TEST_CASE("banded solver beyond bandwidth one") {
    // SPD pentadiagonal, compare K * solve(rhs) = rhs
    const int n = 40;
    BandedSpd bd(n, 2);
    for (int i = 0; i < n; ++i) {
        bd.at(i, i) = 5.0;
        if (i >= 1) bd.at(i, i - 1) = -1.5;
        if (i >= 2) bd.at(i, i - 2) = -0.5;
    }
    bd.factor();
    Rng rng(7);
    std::vector<double> rhs(n);
    for (auto& x : rhs) x = rng.uniform(-1, 1);
    std::vector<double> x(rhs);
    bd.solve(x);
    for (int i = 0; i < n; ++i) {
        double acc = 5.0 * x[i];
        if (i >= 1) acc += -1.5 * x[i - 1];
        if (i + 1 < n) acc += -1.5 * x[i + 1];
        if (i >= 2) acc += -0.5 * x[i - 2];
        if (i + 2 < n) acc += -0.5 * x[i + 2];
        CHECK(acc == doctest::Approx(rhs[i]).epsilon(1e-11));
    }
}

TEST_CASE("splitmix stream is stable") {
    Rng r(42);
    auto a = r.next_u64();
    Rng r2(42);
    CHECK(a == r2.next_u64());
    CHECK(r.next_double() >= 0.0);
    CHECK(r.next_double() < 1.0);
}
