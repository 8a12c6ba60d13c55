#include "stieltjes/errors.hpp"
#include "stieltjes/quadrature.hpp"
#include "stieltjes/verify/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace stieltjes;

TEST_CASE("base moments at k = 1 (values frozen from the adaptive oracle)") {
    const LogNormalWeight w(1.0);
    const PerturbedDensity base = PerturbedDensity::base(w);
    const struct {
        int n;
        double expected;
    } rows[] = {{0, std::exp(0.25)}, {1, std::exp(1.0)}, {2, std::exp(2.25)}, {4, 518.012824668342}};
    for (const auto& row : rows) {
        CAPTURE(row.n);
        CHECK(integrate_moment(base, row.n).value_double() == doctest::Approx(row.expected).epsilon(1e-11));
        CHECK(base_moment_closed_form(w, row.n).to_double() == doctest::Approx(row.expected).epsilon(1e-14));
    }
    CHECK(log_base_moment(w, -1) == 0.0);
    CHECK(integrate_moment(base, -1).value_double() == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("production quadrature agrees with the independent oracle") {
    const LogNormalWeight w(0.7);
    const PerturbedDensity d(
        w, Modulator(w, -0.6, std::vector<TrigMode>{{0.8, 1, TrigKind::sine}, {0.4, 2, TrigKind::cosine}}, true));
    for (int n : {0, 3, 7}) {
        const QuadratureResult r = integrate_moment(d, n);
        const verify::OracleResult o = verify::oracle_moment(d, n);
        REQUIRE(o.converged);
        CHECK(std::abs(r.value_double() - o.value) <= 1e-11 * std::abs(o.value));
        CHECK(r.error_estimate() >= std::abs(r.value_double() - o.value));
    }
}

TEST_CASE("cosine moment factor") {
    const LogNormalWeight w(0.5);
    const Modulator m(w, 0.1, std::vector<TrigMode>{{1.0, 1, TrigKind::cosine}});
    const double expected = 1.0 + 0.1 * std::exp(-std::numbers::pi * std::numbers::pi);
    CHECK(modulator_moment_factor(w, m) == doctest::Approx(expected).epsilon(1e-15));
    const PerturbedDensity d(w, m);
    for (int n = 0; n <= 5; ++n) CHECK(integrate_moment(d, n).normalized == doctest::Approx(expected).epsilon(1e-12));

    const Modulator sine(w, 0.9, std::vector<TrigMode>{{1.0, 1, TrigKind::sine}});
    CHECK(modulator_moment_factor(w, sine) == 1.0);
    CHECK(modulator_moment_factor(w, Modulator(w, 0.0, m.content())) == 1.0);
}

TEST_CASE("vanishing integrals") {
    const LogNormalWeight w(1.0);
    for (int n : {-2, 0, 5}) {
        for (int j : {1, 4}) {
            const QuadratureResult r = vanishing_integral(w, n, j);
            CHECK(std::abs(r.normalized) <= 1e-12);
            CHECK(r.log_scale == doctest::Approx(log_base_moment(w, n) + std::log(std::sqrt(std::numbers::pi))));
        }
    }
    CHECK_THROWS_AS(vanishing_integral(w, 0, 0), InvalidArgument);
}

TEST_CASE("large moments stay finite in log space") {
    const LogNormalWeight w(0.25);
    const QuadratureResult r = integrate_moment(PerturbedDensity::base(w), 40);
    CHECK(std::isinf(r.value_double()));
    CHECK(r.value.log_abs == doctest::Approx(41.0 * 41.0 * 4.0).epsilon(1e-12));
    CHECK(r.normalized == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("node budget") {
    const LogNormalWeight w(1.0);
    QuadratureSpec spec;
    spec.node_budget = 2000;
    const PerturbedDensity explicit_modes(w, Modulator(w, 0.5, std::vector<TrigMode>{{1.0, 1000, TrigKind::sine}}));
    CHECK_THROWS_AS(integrate_moment(explicit_modes, 0, spec), BudgetExceeded);
    try {
        integrate_moment(explicit_modes, 0, spec);
    } catch (const BudgetExceeded& e) {
        CHECK(e.cap() == 2000);
        CHECK(e.required() > 2000);
    }

    const PerturbedDensity weier(w, Modulator(w, 0.5, WeierstrassSpec{}));
    const QuadratureResult r = integrate_moment(weier, 2, spec);
    CHECK(r.analytic_terms > 0);
    CHECK(r.normalized == doctest::Approx(1.0).epsilon(1e-8));

    spec.node_budget = 10;
    CHECK_THROWS_AS(spec.validate(), InvalidArgument);
    QuadratureSpec bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate_moment(weier, 0, bad), InvalidArgument);
}

TEST_CASE("error budget carries the series tail") {
    const LogNormalWeight w(1.0);
    WeierstrassSpec s;
    s.terms = 8;
    const QuadratureResult r = integrate_moment(PerturbedDensity(w, Modulator(w, 0.5, s)), 1);
    CHECK(r.error.series_tail == doctest::Approx(0.5 * s.tail_bound()));
    CHECK(r.error.total() >= r.error.series_tail);
    CHECK(r.truncation_T == doctest::Approx(truncation_half_width(w, {})));
}
