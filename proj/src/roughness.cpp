#include "stieltjes/roughness.hpp"

#include "stieltjes/errors.hpp"

#include <numeric>
#include <sstream>

namespace stieltjes {

namespace detail {

void check_point(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream msg;
        msg << what << ": x must be a finite positive real, got " << x;
        throw DomainError(msg.str());
    }
}

void check_oscillation_args(double x, double h, int probes) {
    check_point(x, "local_oscillation");
    if (!(h > 0.0) || !std::isfinite(h)) throw PreconditionError("local_oscillation: h must be positive");
    if (probes < 8) throw PreconditionError("local_oscillation: probes must be >= 8");
}

void check_scales(std::span<const double> scales, bool require_span) {
    if (scales.empty()) throw PreconditionError("scales must not be empty");
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (!(scales[i] > 0.0) || !std::isfinite(scales[i])) {
            throw PreconditionError("scales must be finite and positive");
        }
        if (i > 0 && !(scales[i] < scales[i - 1])) throw PreconditionError("scales must be strictly decreasing");
    }
    if (!require_span) return;
    if (scales.size() < 5) throw PreconditionError("holder_estimate: need at least 5 scales");
    if (scales.front() / scales.back() < 1e4) {
        throw PreconditionError("holder_estimate: scales must span at least 4 decades");
    }
}

double median(std::vector<double> v) {
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    if (v.size() % 2 == 1) return v[mid];
    const double upper = v[mid];
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

HolderEstimate fit_holder(std::span<const double> scales, std::vector<double> medians, int samples) {
    const std::size_t n = scales.size();
    std::vector<double> lx(n);
    std::vector<double> ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(medians[i] > 0.0)) {
            std::ostringstream msg;
            msg << "holder_estimate: oscillation vanished at h = " << scales[i];
            throw PreconditionError(msg.str());
        }
        lx[i] = std::log(scales[i]);
        ly[i] = std::log(medians[i]);
    }
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    HolderEstimate est;
    est.alpha = sxy / sxx;
    est.intercept = my - est.alpha * mx;
    est.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    est.scales.assign(scales.begin(), scales.end());
    est.oscillations = std::move(medians);
    est.samples_per_scale = samples;
    return est;
}

}  // namespace detail

std::vector<double> default_scales() {
    std::vector<double> out;
    for (int m = 4; m <= 20; ++m) out.push_back(std::ldexp(1.0, -m));
    return out;
}

double expected_oscillation(const WeierstrassSpec& w, long double log_q, double h) {
    return std::pow(h / std::fabs(static_cast<double>(log_q)), w.holder_exponent());
}

WeierstrassSpec with_truncation_for(WeierstrassSpec w, long double log_q, double smallest_scale) {
    w.validate();
    const double goal = 0.01 * expected_oscillation(w, log_q, smallest_scale);
    while (w.tail_bound() >= goal) ++w.terms;
    return w;
}

HolderEstimate holder_estimate(const Modulator& m, std::span<const double> x_samples,
                               std::span<const double> scales, int probes) {
    detail::check_scales(scales, true);
    if (const auto* w = m.weierstrass()) {
        const double smallest = scales.back();
        const double expected = expected_oscillation(*w, m.log_q(), smallest);
        if (!(w->tail_bound() < expected)) {
            std::ostringstream msg;
            msg << "holder_estimate: truncation tail a^N/(1-a) = " << w->tail_bound()
                << " is not below the expected oscillation " << expected << " at h = " << smallest
                << "; raise N (see with_truncation_for)";
            throw PreconditionError(msg.str());
        }
    }
    return holder_estimate([&m](long double x) { return m(x); }, x_samples, scales, probes);
}

std::vector<double> divergence_witness(const Modulator& m, double x, std::span<const double> scales) {
    return divergence_witness([&m](long double v) { return m(v); }, x, scales);
}

}  // namespace stieltjes
