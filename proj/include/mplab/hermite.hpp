#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mplab {

// Piecewise cubic Hermite interpolant from (t, value, derivative) samples.
// C1 by construction; the derivative data comes from the ODE integrator, so
// no secondary slope estimation is involved.
class HermiteSpline {
  public:
    HermiteSpline() = default;
    HermiteSpline(std::vector<double> t, std::vector<double> v, std::vector<double> d)
        : t_(std::move(t)), v_(std::move(v)), d_(std::move(d)) {
        if (t_.size() < 2 || t_.size() != v_.size() || t_.size() != d_.size())
            throw std::invalid_argument("HermiteSpline: bad sample arrays");
    }

    double front_t() const { return t_.front(); }
    double back_t() const { return t_.back(); }

    double value(double x) const {
        std::size_t i = locate(x);
        double h = t_[i + 1] - t_[i], s = (x - t_[i]) / h;
        double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
        double h10 = s * (1 - s) * (1 - s);
        double h01 = s * s * (3 - 2 * s);
        double h11 = s * s * (s - 1);
        return h00 * v_[i] + h10 * h * d_[i] + h01 * v_[i + 1] + h11 * h * d_[i + 1];
    }

    double deriv(double x) const {
        std::size_t i = locate(x);
        double h = t_[i + 1] - t_[i], s = (x - t_[i]) / h;
        double g00 = 6 * s * (s - 1) / h;
        double g10 = (1 - s) * (1 - 3 * s);
        double g01 = -g00;
        double g11 = s * (3 * s - 2);
        return g00 * v_[i] + g10 * d_[i] + g01 * v_[i + 1] + g11 * d_[i + 1];
    }

  private:
    std::size_t locate(double x) const {
        if (x <= t_.front()) return 0;
        if (x >= t_.back()) return t_.size() - 2;
        auto it = std::upper_bound(t_.begin(), t_.end(), x);
        return static_cast<std::size_t>(it - t_.begin()) - 1;
    }

    std::vector<double> t_, v_, d_;
};

}  // namespace mplab
