#pragma once

// q-difference operators.
//
// Sign convention: D_q g(x) = (g(x) - g(qx)) / ((q - 1) x). With this
// convention D_q applied to the identity is -1, the opposite sign of the more
// common (g(qx) - g(x)) / ((q - 1) x). Every q-periodic g is annihilated
// under either convention.

#include "stieltjes/errors.hpp"
#include "stieltjes/measures.hpp"

#include <cmath>
#include <concepts>

namespace stieltjes {

struct QDerivativeSample {
    double x = 1.0;
    double q = 0.5;
    double value = 0.0;
};

// Anything evaluable at a positive real. Taking long double lets q*x be
// formed without the double rounding that rough functions amplify.
template <typename F>
concept Evaluable = std::invocable<const F&, long double> &&
                    std::convertible_to<std::invoke_result_t<const F&, long double>, double>;

namespace detail {
void check_q_derivative_args(double x, double q);
}

template <Evaluable F>
double q_derivative(const F& g, double x, double q) {
    detail::check_q_derivative_args(x, q);
    const long double qx = static_cast<long double>(q) * x;
    const double gx = static_cast<double>(g(static_cast<long double>(x)));
    const double gqx = static_cast<double>(g(qx));
    return static_cast<double>((static_cast<long double>(gx) - gqx) /
                               ((static_cast<long double>(q) - 1.0L) * x));
}

template <Evaluable F>
QDerivativeSample q_derivative_sample(const F& g, double x, double q) {
    return {x, q, q_derivative(g, x, q)};
}

// f(qx) - sqrt(q) x f(x); identically zero for the log-normal weight.
// Throws DomainError for x <= 0.
double q_pearson_residual(const LogNormalWeight& w, double x);

// Same residual for f (1 + lambda g): also zero, since g(qx) = g(x) lets
// every perturbed density inherit the functional equation.
double q_pearson_residual(const PerturbedDensity& d, double x);

}  // namespace stieltjes
