#pragma once

// Numerical evidence (not proof) that limit modulators are continuous but
// nowhere differentiable: local oscillation, Hoelder-exponent regression and
// growing difference quotients.
//
// Oscillation is measured in the log coordinate: probes sit at x * e^delta
// for delta in [-h, h]. A modulator is a classical Weierstrass function of
// u = ln x / ln q, so this removes the smooth 1/x chain-rule factor.

#include "stieltjes/measures.hpp"
#include "stieltjes/qcalc.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace stieltjes {

struct HolderEstimate {
    double alpha = 0.0;      // fitted slope of ln(median oscillation) against ln h
    double intercept = 0.0;
    std::vector<double> scales;        // strictly decreasing
    std::vector<double> oscillations;  // median oscillation per scale
    double r_squared = 0.0;
    int samples_per_scale = 0;
};

// h = 2^-4, 2^-5, ..., 2^-20.
std::vector<double> default_scales();

// Oscillation of a Weierstrass modulator expected at log-scale h: (h / |ln q|)^alpha.
double expected_oscillation(const WeierstrassSpec& w, long double log_q, double h);

// Smallest N (at least w.terms) with a^N / (1 - a) < 0.01 * expected_oscillation(smallest_scale).
WeierstrassSpec with_truncation_for(WeierstrassSpec w, long double log_q, double smallest_scale);

namespace detail {
void check_point(double x, const char* what);
void check_oscillation_args(double x, double h, int probes);
void check_scales(std::span<const double> scales, bool require_span);
HolderEstimate fit_holder(std::span<const double> scales, std::vector<double> medians, int samples);
double median(std::vector<double> v);
}  // namespace detail

// max over probes delta in [-h, h] of |g(x e^delta) - g(x)|. probes >= 8 points,
// endpoints included.
template <Evaluable F>
double local_oscillation(const F& g, double x, double h, int probes) {
    detail::check_oscillation_args(x, h, probes);
    const long double x0 = x;
    const double g0 = g(x0);
    double worst = 0.0;
    for (int i = 0; i < probes; ++i) {
        const long double delta = -h + 2.0L * h * i / (probes - 1);
        const double v = g(x0 * std::exp(delta));
        worst = std::max(worst, std::abs(v - g0));
    }
    return worst;
}

// Slope of ln(median over x_samples of local_oscillation) against ln h.
// Needs >= 5 strictly decreasing scales spanning >= 4 decades.
template <Evaluable F>
HolderEstimate holder_estimate(const F& g, std::span<const double> x_samples, std::span<const double> scales,
                               int probes) {
    detail::check_scales(scales, true);
    if (x_samples.empty()) throw PreconditionError("holder_estimate: need at least one x sample");
    std::vector<double> medians;
    medians.reserve(scales.size());
    for (double h : scales) {
        std::vector<double> osc;
        osc.reserve(x_samples.size());
        for (double x : x_samples) osc.push_back(local_oscillation(g, x, h, probes));
        medians.push_back(detail::median(std::move(osc)));
    }
    return detail::fit_holder(scales, std::move(medians), static_cast<int>(x_samples.size()));
}

// Modulator overload. For Weierstrass content the truncation must satisfy
// a^N / (1 - a) < expected_oscillation(smallest scale); otherwise throws
// PreconditionError.
HolderEstimate holder_estimate(const Modulator& m, std::span<const double> x_samples,
                               std::span<const double> scales, int probes);

// |g(x e^h) - g(x)| / h for each scale.
template <Evaluable F>
std::vector<double> divergence_witness(const F& g, double x, std::span<const double> scales) {
    detail::check_point(x, "divergence_witness");
    detail::check_scales(scales, false);
    const long double x0 = x;
    const double g0 = g(x0);
    std::vector<double> out;
    out.reserve(scales.size());
    for (double h : scales) out.push_back(std::abs(g(x0 * std::exp(static_cast<long double>(h))) - g0) / h);
    return out;
}

std::vector<double> divergence_witness(const Modulator& m, double x, std::span<const double> scales);

}  // namespace stieltjes
