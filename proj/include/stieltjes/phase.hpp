#pragma once

#include <cstdint>

namespace stieltjes {

namespace detail {
__extension__ typedef unsigned __int128 uint128;
}

// Fractional part of harmonic * u, reduced exactly.
//
// A long double u is an integer mantissa times a power of two, so
// frac(h * u) for integer h is a residue modulo 2^E and can be carried in
// 128-bit integer arithmetic with no rounding. Repeated scaling by b gives
// frac(b^n * u) for every n without losing the low-order bits that a
// floating-point product would discard. This is what keeps high harmonics
// (Weierstrass terms with b^n ~ 1e14) faithful to the true function.
//
// Arguments with |u| below 2^-63 fall back to long double products.
class Phase {
public:
    explicit Phase(long double u);

    // frac(harmonic * u) as a new phase.
    Phase scaled(std::uint64_t harmonic) const;

    // Representative of the phase in [-1/2, 1/2].
    long double turns() const;

    bool exact() const { return exact_; }

private:
    Phase() = default;

    bool negative_ = false;
    bool exact_ = true;
    int bits_ = 0;                  // denominator exponent E, 0 <= E <= 127
    detail::uint128 residue_ = 0; // fraction = residue_ / 2^E
    long double approx_ = 0.0L;     // used when !exact_
};

// frac(harmonic * u) in [-1/2, 1/2].
long double harmonic_turns(long double u, std::uint64_t harmonic);

}  // namespace stieltjes
