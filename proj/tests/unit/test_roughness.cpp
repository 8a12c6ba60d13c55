#include "stieltjes/errors.hpp"
#include "stieltjes/roughness.hpp"

#include <doctest.h>

#include <cmath>

using namespace stieltjes;

namespace {

std::vector<double> sample_points() {
    std::vector<double> xs;
    for (int i = 0; i < 16; ++i) xs.push_back(std::exp(0.1 + 0.37 * i));
    return xs;
}

double log_fn(long double x) { return static_cast<double>(std::log(x)); }

}  // namespace

TEST_CASE("local oscillation in the log coordinate") {
    // |ln(x e^d) - ln x| = |d|, maximal at the endpoints d = +-h.
    for (double h : {0.1, 1e-4}) CHECK(local_oscillation(log_fn, 3.0, h, 9) == doctest::Approx(h).epsilon(1e-9));
    CHECK_THROWS_AS(local_oscillation(log_fn, 3.0, 0.1, 7), PreconditionError);
    CHECK_THROWS_AS(local_oscillation(log_fn, -3.0, 0.1, 9), DomainError);
    CHECK_THROWS_AS(local_oscillation(log_fn, 3.0, 0.0, 9), PreconditionError);
}

TEST_CASE("scales") {
    const std::vector<double> s = default_scales();
    CHECK(s.size() == 17);
    CHECK(s.front() == 1.0 / 16.0);
    CHECK(s.back() == std::ldexp(1.0, -20));

    const std::vector<double> xs = sample_points();
    const std::vector<double> few = {1e-1, 1e-2, 1e-3, 1e-4};
    const std::vector<double> narrow = {1e-1, 8e-2, 6e-2, 4e-2, 2e-2};
    const std::vector<double> unordered = {1e-1, 1e-3, 1e-2, 1e-4, 1e-5, 1e-6};
    CHECK_THROWS_AS(holder_estimate(log_fn, xs, few, 16), PreconditionError);
    CHECK_THROWS_AS(holder_estimate(log_fn, xs, narrow, 16), PreconditionError);
    CHECK_THROWS_AS(holder_estimate(log_fn, xs, unordered, 16), PreconditionError);
}

TEST_CASE("Hoelder exponent of a smooth control and a rough modulator") {
    const std::vector<double> xs = sample_points();
    const std::vector<double> scales = default_scales();

    const HolderEstimate smooth = holder_estimate(log_fn, xs, scales, 32);
    CHECK(smooth.alpha == doctest::Approx(1.0).epsilon(0.02));
    CHECK(smooth.r_squared > 0.999);

    const LogNormalWeight w(1.0);
    const WeierstrassSpec spec = with_truncation_for(WeierstrassSpec{0.5, 3}, w.log_q(), scales.back());
    CHECK(spec.tail_bound() < 0.01 * expected_oscillation(spec, w.log_q(), scales.back()));
    const HolderEstimate rough = holder_estimate(Modulator(w, 1.0, spec), xs, scales, 32);
    CHECK(std::abs(rough.alpha - spec.holder_exponent()) <= 0.05);
    CHECK(rough.r_squared >= 0.98);
    CHECK(rough.oscillations.size() == scales.size());
}

TEST_CASE("short truncations are rejected by the modulator overload") {
    const LogNormalWeight w(1.0);
    WeierstrassSpec spec;
    spec.terms = 10;
    CHECK_THROWS_AS(holder_estimate(Modulator(w, 1.0, spec), sample_points(), default_scales(), 16), PreconditionError);
}

TEST_CASE("divergence witness") {
    const LogNormalWeight w(1.0);
    const WeierstrassSpec spec = with_truncation_for(WeierstrassSpec{0.5, 3}, w.log_q(), 1e-6);
    const std::vector<double> hs = {1e-3, 1e-4, 1e-5, 1e-6};
    const std::vector<double> rough = divergence_witness(Modulator(w, 1.0, spec), 1.0, hs);
    for (std::size_t i = 1; i < rough.size(); ++i) CHECK(rough[i] > rough[i - 1]);

    const std::vector<double> smooth = divergence_witness(log_fn, 2.0, hs);
    for (double v : smooth) CHECK(v == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("roughness is uniform in the log coordinate") {
    const LogNormalWeight w(1.0);
    const std::vector<double> scales = default_scales();
    const Modulator m(w, 1.0, with_truncation_for(WeierstrassSpec{0.5, 3}, w.log_q(), scales.back()));
    const std::vector<double> at_one = {1.0};
    const std::vector<double> at_e = {std::exp(1.0)};
    const double a1 = holder_estimate(m, at_one, scales, 32).alpha;
    const double ae = holder_estimate(m, at_e, scales, 32).alpha;
    CHECK(std::abs(a1 - ae) <= 0.05);

    // quotient growth per decade ~ 10^(1 - alpha) = 2.34, within 50%
    const std::vector<double> hs = {1e-4, 1e-5};
    const std::vector<double> dq = divergence_witness(m, 1.0, hs);
    const double expected = std::pow(10.0, 1.0 - std::log(2.0) / std::log(3.0));
    CHECK(dq[1] / dq[0] == doctest::Approx(expected).epsilon(0.5));
}
