#include "stieltjes/phase.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <initializer_list>

using namespace stieltjes;

namespace {

std::uint64_t pow3(int e) {
    std::uint64_t v = 1;
    for (int i = 0; i < e; ++i) v *= 3;
    return v;
}

}  // namespace

TEST_CASE("small harmonics agree with floating products") {
    for (long double u : {0.1L, -0.37L, 2.718281828L, 1e-5L, -123.456L}) {
        for (std::uint64_t h : {1ULL, 2ULL, 3ULL, 17ULL, 1000ULL}) {
            long double ref = std::fmod(u * static_cast<long double>(h), 1.0L);
            if (ref > 0.5L) ref -= 1.0L;
            if (ref < -0.5L) ref += 1.0L;
            CHECK(std::abs(harmonic_turns(u, h) - ref) <= 1e-12L);
        }
    }
}

TEST_CASE("reduction range and simple residues") {
    CHECK(Phase(0.25L).turns() == doctest::Approx(0.25));
    CHECK(Phase(0.25L).scaled(3).turns() == doctest::Approx(-0.25));
    CHECK(std::abs(Phase(7.0L).turns()) == 0.0L);
    CHECK(std::abs(harmonic_turns(std::ldexp(1.0L, -39), 1ULL << 38)) == doctest::Approx(0.5));
    CHECK(harmonic_turns(std::ldexp(3.0L, -40), 1ULL << 40) == 0.0L);
    CHECK(Phase(0.3L).exact());
}

TEST_CASE("high harmonics keep the low-order bits") {
    // u = 1 + 2^-60, h = 3^37: h u = 3^37 + 3^37 / 2^60; the fractional part
    // is 3^37 / 2^60 exactly, while a long double product rounds it away.
    const long double u = 1.0L + std::ldexp(1.0L, -60);
    const std::uint64_t h = pow3(37);
    const long double expected = std::ldexp(static_cast<long double>(h), -60);
    REQUIRE(expected < 0.5L);
    CHECK(harmonic_turns(u, h) == expected);

    // Repeated scaling composes: frac(3 * frac(3^36 u)) = frac(3^37 u).
    CHECK(Phase(u).scaled(pow3(36)).scaled(3).turns() == expected);
}
