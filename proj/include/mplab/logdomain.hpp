#pragma once

#include <cmath>
#include <limits>

namespace mplab {

// Signed number carried as (log|x|, sign). Survives magnitudes far beyond
// double range; exp(t^4)-sized factors stay exact in the log coordinate.
struct LogValue {
    double log_abs = -std::numeric_limits<double>::infinity();
    int sign = 0;  // -1, 0, +1

    static LogValue zero() { return {}; }

    static LogValue from_double(double x) {
        if (x == 0.0) return {};
        return {std::log(std::fabs(x)), x > 0 ? 1 : -1};
    }

    // x = s * exp(l), s in {-1,+1}
    static LogValue from_log(double l, int s) {
        if (s == 0) return {};
        return {l, s > 0 ? 1 : -1};
    }

    bool is_zero() const { return sign == 0; }

    double to_double() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_abs);  // may overflow to +-inf; caller's problem
    }

    LogValue operator-() const { return {log_abs, -sign}; }

    friend LogValue operator*(const LogValue& a, const LogValue& b) {
        if (a.sign == 0 || b.sign == 0) return {};
        return {a.log_abs + b.log_abs, a.sign * b.sign};
    }

    friend LogValue operator+(const LogValue& a, const LogValue& b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        const LogValue& big = (a.log_abs >= b.log_abs) ? a : b;
        const LogValue& sml = (a.log_abs >= b.log_abs) ? b : a;
        double d = sml.log_abs - big.log_abs;  // <= 0
        if (big.sign == sml.sign)
            return {big.log_abs + std::log1p(std::exp(d)), big.sign};
        double m = -std::expm1(d);  // 1 - exp(d) in (0,1]
        if (m == 0.0) return {};    // exact cancellation
        return {big.log_abs + std::log(m), big.sign};
    }

    friend LogValue operator-(const LogValue& a, const LogValue& b) { return a + (-b); }

    // sign of a + b without forming either exponential
    friend int sign_of_sum(const LogValue& a, const LogValue& b) {
        LogValue s = a + b;
        return s.sign;
    }

    friend bool operator<(const LogValue& a, const LogValue& b) {
        if (a.sign != b.sign) return a.sign < b.sign;
        if (a.sign == 0) return false;
        if (a.sign > 0) return a.log_abs < b.log_abs;
        return a.log_abs > b.log_abs;
    }
};

}  // namespace mplab
