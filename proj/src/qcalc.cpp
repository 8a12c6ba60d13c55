#include "stieltjes/qcalc.hpp"

#include <sstream>

namespace stieltjes {

namespace detail {

void check_q_derivative_args(double x, double q) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream msg;
        msg << "q_derivative: x must be a finite positive real, got " << x;
        throw DomainError(msg.str());
    }
    if (!(q > 0.0 && q < 1.0)) {
        std::ostringstream msg;
        msg << "q_derivative: q must lie in (0, 1), got " << q;
        throw DomainError(msg.str());
    }
}

}  // namespace detail

namespace {

template <typename Density>
double pearson(const Density& d, double q, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream msg;
        msg << "q_pearson_residual: x must be a finite positive real, got " << x;
        throw DomainError(msg.str());
    }
    const long double qx = static_cast<long double>(q) * x;
    const long double lhs = d(qx);
    const long double rhs = std::sqrt(static_cast<long double>(q)) * x * d(static_cast<long double>(x));
    return static_cast<double>(lhs - rhs);
}

}  // namespace

double q_pearson_residual(const LogNormalWeight& w, double x) { return pearson(w, w.q(), x); }

double q_pearson_residual(const PerturbedDensity& d, double x) {
    return pearson(d, d.weight().q(), x);
}

}  // namespace stieltjes
