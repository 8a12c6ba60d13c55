#include "stieltjes/errors.hpp"
#include "stieltjes/qcalc.hpp"

#include <doctest.h>

#include <cmath>

using namespace stieltjes;

TEST_CASE("q-derivative of monomials under the (g(x) - g(qx)) / ((q-1) x) convention") {
    const double q = 0.6;
    const auto id = [](long double x) { return static_cast<double>(x); };
    const auto sq = [](long double x) { return static_cast<double>(x * x); };
    for (double x : {0.2, 1.0, 3.5}) {
        CHECK(q_derivative(id, x, q) == doctest::Approx(-1.0));
        CHECK(q_derivative(sq, x, q) == doctest::Approx(-(1.0 + q) * x));
    }
    const QDerivativeSample s = q_derivative_sample(sq, 2.0, q);
    CHECK(s.x == 2.0);
    CHECK(s.q == q);
    CHECK(s.value == doctest::Approx(-3.2));
}

TEST_CASE("q-derivative annihilates modulators") {
    const LogNormalWeight w(1.0);
    WeierstrassSpec s;
    s.terms = 10;
    const Modulator m(w, 1.0, s);
    for (double x : {0.003, 0.5, 1.9, 40.0}) {
        CHECK(std::abs(q_derivative(m, x, w.q())) <= 1e-12 * (1.0 + std::abs(m(x)) / x));
    }
}

TEST_CASE("q-derivative argument checks") {
    const auto id = [](long double x) { return static_cast<double>(x); };
    CHECK_THROWS_AS(q_derivative(id, 0.0, 0.5), DomainError);
    CHECK_THROWS_AS(q_derivative(id, -1.0, 0.5), DomainError);
    CHECK_THROWS_AS(q_derivative(id, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(q_derivative(id, 1.0, 0.0), DomainError);
}

TEST_CASE("q-Pearson residual") {
    for (double k : {0.5, 1.0, 2.0}) {
        const LogNormalWeight w(k);
        for (double x : {0.01, 0.3, 1.0, 4.0, 60.0}) {
            const double scale = w(x) * std::max(1.0, std::sqrt(w.q()) * x);
            CHECK(std::abs(q_pearson_residual(w, x)) <= 1e-13 * scale);
        }
    }
    CHECK_THROWS_AS(q_pearson_residual(LogNormalWeight(1.0), 0.0), DomainError);

    // g(qx) = g(x), so f (1 + lambda g) satisfies the same functional equation,
    // while a weight with a different q does not.
    const LogNormalWeight w(1.0);
    const PerturbedDensity d(w, Modulator(w, 0.5, std::vector<TrigMode>{{1.0, 1, TrigKind::sine}}, true));
    for (double x : {0.2, 0.7, 3.0}) {
        const double scale = d(x) * std::max(1.0, std::sqrt(w.q()) * x);
        CHECK(std::abs(q_pearson_residual(d, x)) <= 1e-13 * scale);
    }
    const LogNormalWeight other(1.1);
    const long double qx = static_cast<long double>(w.q()) * 0.7;
    CHECK(std::abs(other(qx) - std::sqrt(w.q()) * 0.7 * other(0.7L)) > 1e-3 * other(0.7L));
}
