#pragma once

#include <cmath>
#include <limits>

namespace stieltjes {

// Signed real stored as sign * exp(log_abs). Moments of the log-normal weight
// grow like exp((n+1)^2 / 4k^2) and overflow a double near n = 37 at k = 1.
struct LogReal {
    int sign = 0;  // -1, 0, +1
    double log_abs = -std::numeric_limits<double>::infinity();

    static LogReal from_log(double log_abs, int sign = 1) {
        if (sign == 0) return {};
        return {sign > 0 ? 1 : -1, log_abs};
    }

    static LogReal from_double(double v) {
        if (v == 0.0) return {};
        return {v > 0.0 ? 1 : -1, std::log(std::abs(v))};
    }

    // May overflow to +-inf.
    double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

    bool is_zero() const { return sign == 0; }

    LogReal operator*(const LogReal& o) const {
        if (sign == 0 || o.sign == 0) return {};
        return {sign * o.sign, log_abs + o.log_abs};
    }

    LogReal operator/(const LogReal& o) const {
        if (sign == 0) return {};
        return {sign * o.sign, log_abs - o.log_abs};
    }

    // this / o as a plain double; finite whenever the ratio is representable.
    double ratio(const LogReal& o) const {
        if (sign == 0) return 0.0;
        return sign * o.sign * std::exp(log_abs - o.log_abs);
    }
};

}  // namespace stieltjes
