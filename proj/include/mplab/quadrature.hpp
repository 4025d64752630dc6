#pragma once

#include <functional>
#include <vector>

namespace mplab {

// One Gauss7/Kronrod15 panel on [a,b]: returns the K15 value, *err gets the
// |K15-G7| estimate.
double gk15_panel(const std::function<double(double)>& f, double a, double b, double* err);

// Adaptive bisection on gk15 panels until the summed error estimate is below
// abs_tol + rel_tol*|integral|. Splits the worst panel first.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-12, int max_panels = 4000);

// Prefix-sum table for F(x) = integral of f over [a,x]. The partition is
// refined at construction until every panel's K15 error is below panel_tol,
// so later point queries cost a single panel evaluation.
class CumulativeIntegral {
  public:
    CumulativeIntegral() = default;
    CumulativeIntegral(std::function<double(double)> f, double a, double b,
                       double panel_tol = 1e-15, int min_panels = 16);

    double operator()(double x) const;
    double total() const { return prefix_.back(); }
    double lower() const { return a_; }
    double upper() const { return b_; }

  private:
    std::function<double(double)> f_;
    double a_ = 0, b_ = 1;
    std::vector<double> edges_;   // panel boundaries, edges_[0]=a
    std::vector<double> prefix_;  // prefix_[i] = integral over [a, edges_[i]]
};

}  // namespace mplab
