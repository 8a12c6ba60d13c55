#pragma once

// Independent reference integrator for cross-checking the production
// quadrature. Shares nothing with it beyond the density evaluation at x:
// a different rule (Gauss-Kronrod 7/15), no centring or log scaling, a fixed
// wide window in t = ln x and global adaptive bisection.

#include "stieltjes/measures.hpp"

#include <functional>

namespace stieltjes::verify {

struct OracleResult {
    double value = 0.0;
    double error = 0.0;  // sum of |K15 - G7| over the final partition
    int intervals = 0;
    bool converged = false;
};

// int_a^b f by global adaptive bisection of the interval with the largest
// Kronrod-Gauss discrepancy. Stops when the total discrepancy is below
// max(abs_tol, rel_tol * |value|) or after max_intervals.
OracleResult adaptive_kronrod(const std::function<double(double)>& f, double a, double b, double rel_tol,
                              double abs_tol = 0.0, int max_intervals = 200000);

// int_0^inf x^n d(x) dx evaluated as int exp((n+1) t) d(e^t) dt over a wide
// window; uses only eval_density.
OracleResult oracle_moment(const PerturbedDensity& d, int n, double rel_tol = 1e-13);

}  // namespace stieltjes::verify
