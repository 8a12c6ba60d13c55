#pragma once

// Moments of perturbed log-normal densities.
//
// With t = ln x the moment integral becomes
//
//   int x^n f(x) (1 + lambda g(x)) dx
//     = (k/sqrt(pi)) int exp((n+1) t - k^2 t^2) (1 + lambda g(t)) dt,
//
// a Gaussian centred at mu = (n+1)/(2k^2) with peak exp(k^2 mu^2) = M_n.
// The integrator works with s = t - mu, factors M_n out exactly in log space,
// truncates to |s| <= T where the Gaussian tail is below tol/10 and applies
// 20-point Gauss-Legendre panels, doubling the panel count until two levels
// agree. Panels always carry at least 10 nodes per period of the highest
// harmonic in the term being integrated.
//
// Modulators are integrated term by term. A Weierstrass term whose harmonic
// would need more nodes than the budget is taken from its closed-form factor
// (0 for sine, exp(-4 pi^2 b^2 k^2) for cosine) and counted in
// QuadratureResult::analytic_terms. Explicit mode lists never fall back:
// they raise BudgetExceeded instead.

#include "stieltjes/log_real.hpp"
#include "stieltjes/measures.hpp"

#include <optional>

namespace stieltjes {

struct QuadratureSpec {
    double rel_tol = 1e-12;
    // Explicit truncation half-width T in the centred log coordinate; when
    // empty T is chosen so that erfc(k T) <= rel_tol / 10.
    std::optional<double> half_width;
    // Cap on integrand evaluations for a single oscillatory term.
    long node_budget = 1L << 20;

    // Throws InvalidArgument unless rel_tol > 0 and node_budget >= 64.
    void validate() const;
};

// Error components, all in units of exp(QuadratureResult::log_scale).
struct ErrorBudget {
    double quadrature = 0.0;     // panel refinement difference plus roundoff floor
    double gaussian_tail = 0.0;  // mass of the integrand beyond |s| > T
    double series_tail = 0.0;    // omitted Weierstrass terms, a^N / (1 - a) scaled by |lambda|

    double total() const { return quadrature + gaussian_tail + series_tail; }
};

struct QuadratureResult {
    LogReal value;
    // ln of the scale that `normalized` and `error` are expressed in
    // (ln M_n for integrate_moment).
    double log_scale = 0.0;
    double normalized = 0.0;  // value / exp(log_scale)
    ErrorBudget error;
    long nodes_used = 0;
    double truncation_T = 0.0;
    int analytic_terms = 0;

    // Absolute value and error; these overflow for very large moments.
    double value_double() const { return value.to_double(); }
    double error_estimate() const;
    double series_tail_budget() const;
};

// ln M_n = (n+1)^2 / (4k^2), i.e. M_n = q^{-(n+1)^2/2}.
double log_base_moment(const LogNormalWeight& w, int n);
LogReal base_moment_closed_form(const LogNormalWeight& w, int n);

// C with moment_n(f (1 + lambda g)) = C M_n for every integer n:
// 1 + lambda * sum over cosine terms of a exp(-4 pi^2 b^2 k^2) = a exp(2 pi^2 b^2 / ln q).
double modulator_moment_factor(const LogNormalWeight& w, const Modulator& m);

// Truncation half-width T used for weight w.
double truncation_half_width(const LogNormalWeight& w, const QuadratureSpec& spec);

// int_0^inf x^n d(x) dx. n may be negative.
QuadratureResult integrate_moment(const PerturbedDensity& d, int n, const QuadratureSpec& spec = {});

// int_0^inf x^n exp(-k^2 ln^2 x) sin(2 pi j ln x / ln q) dx (no k/sqrt(pi)
// factor). Analytically zero for every integer n and j. Throws
// InvalidArgument for j < 1.
QuadratureResult vanishing_integral(const LogNormalWeight& w, int n, int j,
                                    const QuadratureSpec& spec = {});

}  // namespace stieltjes
