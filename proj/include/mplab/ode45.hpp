#pragma once

#include <functional>
#include <vector>

namespace mplab {

// Dormand-Prince 5(4) embedded Runge-Kutta with proportional step control.
// State is a small vector; rhs(t, y, dydt).
struct Ode45Options {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double initial_step = 1e-8;
    // cap on the step as a function of t; keeps accepted nodes geometrically
    // dense so observers can interpolate
    std::function<double(double)> max_step = nullptr;
    long max_steps = 2000000;
};

struct Ode45Result {
    double t_end;
    std::vector<double> y_end;
    long steps_accepted = 0;
    long steps_rejected = 0;
};

// Integrates from (t0, y0) toward t1 (t1 > t0). After every accepted step the
// observer is called with (t, y); returning false stops the run early.
// mandatory_nodes (sorted, within (t0,t1]) are landed on exactly.
Ode45Result ode45(const std::function<void(double, const std::vector<double>&, std::vector<double>&)>& rhs,
                  double t0, std::vector<double> y0, double t1, const Ode45Options& opt,
                  const std::function<bool(double, const std::vector<double>&)>& observer = nullptr,
                  const std::vector<double>& mandatory_nodes = {});

}  // namespace mplab
