#include "stieltjes/errors.hpp"
#include "stieltjes/measures.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace stieltjes;

namespace {

// Direct evaluation of a * sin(2 pi b ln x / ln q) without the phase machinery.
double naive_mode(double a, int b, double x, double q) {
    return a * std::sin(2.0 * std::numbers::pi * b * std::log(x) / std::log(q));
}

}  // namespace

TEST_CASE("log-normal weight parameters") {
    const LogNormalWeight w(1.0);
    CHECK(w.q() == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
    CHECK(w.normalization() == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)));
    CHECK(w(1.0L) == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)));
    CHECK(w(std::exp(1.0L)) == doctest::Approx(std::exp(-1.0) / std::sqrt(std::numbers::pi)));

    CHECK_THROWS_AS(LogNormalWeight(0.0), InvalidArgument);
    CHECK_THROWS_AS(LogNormalWeight(-1.0), InvalidArgument);
    CHECK_THROWS_AS(LogNormalWeight(std::nan("")), InvalidArgument);
    CHECK_THROWS_AS(eval_weight(w, 0.0L), DomainError);
    CHECK_THROWS_AS(eval_weight(w, -2.0L), DomainError);
}

TEST_CASE("positivity bound") {
    const LogNormalWeight w(1.0);
    const Modulator pair(w, 0.0, std::vector<TrigMode>{{0.5, 1, TrigKind::sine}, {0.25, 2, TrigKind::cosine}});
    CHECK(positivity_bound(pair) == doctest::Approx(4.0 / 3.0));

    const Modulator weier(w, 0.0, WeierstrassSpec{});
    CHECK(positivity_bound(weier) == doctest::Approx(1.0));
    CHECK(std::isinf(positivity_bound(Modulator(w, 0.0, std::vector<TrigMode>{}))));

    CHECK_NOTHROW(Modulator(w, 4.0 / 3.0, pair.content(), true));
    CHECK_THROWS_AS(Modulator(w, 1.4, pair.content(), true), InvalidArgument);
    CHECK_NOTHROW(Modulator(w, 1.4, pair.content(), false));
}

TEST_CASE("Weierstrass spec validation and flags") {
    WeierstrassSpec s;
    CHECK(s.nowhere_differentiable());
    CHECK(s.holder_exponent() == doctest::Approx(std::log(2.0) / std::log(3.0)));
    CHECK(s.tail_bound() == doctest::Approx(std::pow(0.5, 30) / 0.5));

    WeierstrassSpec smooth{0.3, 2};
    CHECK_FALSE(smooth.nowhere_differentiable());

    CHECK_THROWS_AS((WeierstrassSpec{1.0, 3}.validate()), InvalidArgument);
    CHECK_THROWS_AS((WeierstrassSpec{0.0, 3}.validate()), InvalidArgument);
    CHECK_THROWS_AS((WeierstrassSpec{0.5, 1}.validate()), InvalidArgument);
    CHECK_THROWS_AS((TrigMode{1.0, 0, TrigKind::sine}.validate()), InvalidArgument);
}

TEST_CASE("modulator matches direct evaluation for low harmonics") {
    const LogNormalWeight w(0.8);
    const Modulator m(w, 1.0, std::vector<TrigMode>{{0.7, 1, TrigKind::sine}, {-0.2, 3, TrigKind::sine}});
    for (double x : {0.013, 0.4, 1.0, 2.5, 77.0}) {
        const double expected = naive_mode(0.7, 1, x, w.q()) + naive_mode(-0.2, 3, x, w.q());
        CHECK(m(x) == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(m(1.0L) == 0.0);
}

TEST_CASE("q-periodicity g(qx) = g(x)") {
    const LogNormalWeight w(1.0);
    const long double q = w.q();

    SUBCASE("mode lists") {
        const Modulator m(w, 1.0,
                          std::vector<TrigMode>{{0.5, 1, TrigKind::sine}, {0.3, 7, TrigKind::cosine}, {0.2, 40, TrigKind::sine}});
        for (long double x : {0.001L, 0.3L, 1.7L, 12.0L, 900.0L}) CHECK(std::abs(m(q * x) - m(x)) <= 1e-12);
    }
    SUBCASE("Weierstrass N = 10") {
        WeierstrassSpec s;
        s.terms = 10;
        const Modulator m(w, 1.0, s);
        for (long double x : {0.001L, 0.3L, 1.7L, 12.0L, 900.0L}) CHECK(std::abs(m(q * x) - m(x)) <= 1e-12);
    }
    SUBCASE("Weierstrass N = 30 is exactly periodic in the log coordinate") {
        const Modulator m(w, 1.0, WeierstrassSpec{});
        for (long double u : {0.125L, -3.375L, 0.0078125L, 5.5L}) CHECK(m.at_log_coordinate(u + 1.0L) == m.at_log_coordinate(u));
    }
}

TEST_CASE("perturbed density") {
    const LogNormalWeight w(1.0);
    const Modulator m(w, 0.5, std::vector<TrigMode>{{1.0, 1, TrigKind::sine}}, true);
    const PerturbedDensity d(w, m);
    const double x = 2.2;
    CHECK(d(x) == doctest::Approx(w(x) * (1.0 + 0.5 * naive_mode(1.0, 1, x, w.q()))));
    CHECK(d(x) >= 0.0);
    CHECK_THROWS_AS(eval_density(d, 0.0L), DomainError);

    const LogNormalWeight other(2.0);
    CHECK_THROWS_AS(PerturbedDensity(other, m), InvalidArgument);

    const PerturbedDensity base = PerturbedDensity::base(w);
    CHECK(base(x) == doctest::Approx(w(x)));
    CHECK(base.modulator().is_zero());
}

TEST_CASE("q-periodicity at random points") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> log10x(-3.0, 3.0);
    for (double k : {0.5, 1.0, 2.0}) {
        const LogNormalWeight w(k);
        WeierstrassSpec s;
        s.terms = 10;
        const std::vector<Modulator> mods = {
            Modulator(w, 1.0, std::vector<TrigMode>{{1.0, 1, TrigKind::sine}}),
            Modulator(w, 1.0, std::vector<TrigMode>{{0.5, 1, TrigKind::sine}, {0.3, 2, TrigKind::cosine}, {0.2, 5, TrigKind::sine}}),
            Modulator(w, 1.0, s),
        };
        for (const Modulator& m : mods) {
            for (int i = 0; i < 100; ++i) {
                const long double x = std::pow(10.0L, static_cast<long double>(log10x(rng)));
                const double g = m(x);
                CHECK(std::abs(m(static_cast<long double>(w.q()) * x) - g) <= 1e-12 * (1.0 + std::abs(g)));
            }
        }
    }
}
