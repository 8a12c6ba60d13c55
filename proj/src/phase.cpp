#include "stieltjes/phase.hpp"

#include <cmath>
#include <limits>

namespace stieltjes {

namespace {

using u128 = detail::uint128;

constexpr int kMantissaBits = std::numeric_limits<long double>::digits;
static_assert(kMantissaBits <= 64, "long double mantissa must fit in 64 bits");

constexpr int kMaxExactBits = 127;

u128 low_mask(int bits) { return (u128{1} << bits) - 1; }

// (r * h) mod 2^bits without overflow, for r < 2^bits <= 2^127, h < 2^64.
u128 mul_mod_pow2(u128 r, std::uint64_t h, int bits) {
    const u128 mask = low_mask(bits);
    const u128 lo = static_cast<std::uint64_t>(r);
    const u128 hi = r >> 64;
    u128 out = lo * h;  // < 2^128
    if (hi != 0) {
        const u128 hi_part = (hi * h) & low_mask(bits - 64);
        out = (out & mask) + (hi_part << 64);
    }
    return out & mask;
}

long double fold(long double f) {
    // f in (-1, 1) -> [-1/2, 1/2]
    if (f > 0.5L) f -= 1.0L;
    if (f < -0.5L) f += 1.0L;
    return f;
}

}  // namespace

Phase::Phase(long double u) {
    if (u == 0.0L || !std::isfinite(u)) {
        bits_ = 0;
        residue_ = 0;
        return;
    }
    negative_ = u < 0.0L;
    int e = 0;
    const long double f = std::frexp(std::fabs(u), &e);  // |u| = f * 2^e, f in [0.5, 1)
    const auto mantissa = static_cast<std::uint64_t>(std::ldexp(f, kMantissaBits));
    const int bits = kMantissaBits - e;  // |u| = mantissa / 2^bits
    if (bits <= 0) {
        bits_ = 0;
        residue_ = 0;
        return;
    }
    if (bits > kMaxExactBits) {
        exact_ = false;
        approx_ = std::fabs(u);
        return;
    }
    bits_ = bits;
    residue_ = u128{mantissa} & low_mask(bits);
}

Phase Phase::scaled(std::uint64_t harmonic) const {
    Phase out = *this;
    if (!exact_) {
        out.approx_ = approx_ * static_cast<long double>(harmonic);
        if (out.approx_ >= 1.0L) out.approx_ -= std::floor(out.approx_);
        return out;
    }
    if (bits_ == 0) return out;
    out.residue_ = mul_mod_pow2(residue_, harmonic, bits_);
    return out;
}

long double Phase::turns() const {
    long double f = 0.0L;
    if (!exact_) {
        f = approx_;
    } else if (bits_ > 0) {
        f = std::ldexp(static_cast<long double>(residue_), -bits_);
    }
    f = fold(f);
    return negative_ ? -f : f;
}

long double harmonic_turns(long double u, std::uint64_t harmonic) {
    return Phase(u).scaled(harmonic).turns();
}

}  // namespace stieltjes
