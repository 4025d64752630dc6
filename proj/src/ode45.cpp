#include "mplab/ode45.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mplab {

namespace {
// Dormand-Prince coefficients
const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
const double a21 = 1.0 / 5;
const double a31 = 3.0 / 40, a32 = 9.0 / 40;
const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
             a54 = -212.0 / 729;
const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
             a65 = -5103.0 / 18656;
const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
             b6 = 11.0 / 84;
// error = y5 - y4
const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
             e6 = 22.0 / 525, e7 = -1.0 / 40;
}  // namespace

Ode45Result ode45(const std::function<void(double, const std::vector<double>&, std::vector<double>&)>& rhs,
                  double t0, std::vector<double> y0, double t1, const Ode45Options& opt,
                  const std::function<bool(double, const std::vector<double>&)>& observer,
                  const std::vector<double>& mandatory_nodes) {
    const std::size_t n = y0.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n);
    double t = t0;
    double h = opt.initial_step;
    rhs(t, y0, k1);
    Ode45Result res;
    std::size_t next_node = 0;
    auto node_target = [&]() {
        while (next_node < mandatory_nodes.size() && mandatory_nodes[next_node] <= t + 1e-300)
            ++next_node;
        return next_node < mandatory_nodes.size() ? mandatory_nodes[next_node] : t1;
    };
    long iter = 0;
    while (t < t1) {
        if (++iter > opt.max_steps) throw std::runtime_error("ode45: step limit exceeded");
        if (opt.max_step) h = std::min(h, opt.max_step(t));
        double target = std::min(node_target(), t1);
        bool landing = false;
        if (t + h >= target) {
            h = target - t;
            landing = true;
        }
        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y0[i] + h * a21 * k1[i];
        rhs(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y0[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y0[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y0[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y0[i] +
                      h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y0[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                             e7 * k7[i]);
            double sc = opt.abs_tol + opt.rel_tol * std::max(std::fabs(y0[i]), std::fabs(ynew[i]));
            err = std::max(err, std::fabs(ei) / sc);
        }
        if (err <= 1.0) {
            t = landing ? target : t + h;
            y0 = ynew;
            k1 = k7;  // FSAL
            ++res.steps_accepted;
            if (observer && !observer(t, y0)) break;
        } else {
            ++res.steps_rejected;
        }
        double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        h *= std::clamp(fac, 0.2, 5.0);
        if (!(h > 0) || t + h == t) throw std::runtime_error("ode45: step underflow");
    }
    res.t_end = t;
    res.y_end = y0;
    return res;
}

}  // namespace mplab
