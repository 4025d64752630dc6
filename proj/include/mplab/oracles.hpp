#pragma once

#include <cmath>

namespace mplab::oracle {

// Power-series modified Bessel I0/I1; independent of every ODE/spline path in
// the library, used purely as reference values.
inline double bessel_i0(double x) {
    double term = 1.0, sum = 1.0;
    double q = x * x / 4.0;
    for (int m = 1; m < 500; ++m) {
        term *= q / (static_cast<double>(m) * m);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

inline double bessel_i1(double x) {
    double term = x / 2.0, sum = term;
    double q = x * x / 4.0;
    for (int m = 1; m < 500; ++m) {
        term *= q / (static_cast<double>(m) * (m + 1));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

}  // namespace mplab::oracle
