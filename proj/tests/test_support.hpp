#pragma once

#include <cstdint>
#include <string>

#include "eudoxus/core.hpp"
#include "eudoxus/numeric.hpp"

namespace testsupport {

using eudoxus::BigInt;
using eudoxus::Rat;
using eudoxus::Real;

// Deterministic cross-platform generator for test sampling.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [lo, hi] (inclusive); spans must fit in 63 bits.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(
                        next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    BigInt big(long long lo, long long hi) {
        return BigInt(static_cast<long>(range(lo, hi)));
    }

    Rat rat(long long num_lo, long long num_hi, long long den_hi) {
        return eudoxus::make_rat(big(num_lo, num_hi), big(1, den_hi));
    }
};

// Exact check that lo <= sqrt(n) <= hi for a nonnegative integer n, using
// only rational arithmetic (sign-aware squaring).
inline bool interval_contains_sqrt(const eudoxus::Interval& i,
                                   const BigInt& n) {
    const Rat target(n);
    bool lo_ok = i.lo <= 0 || i.lo * i.lo <= target;
    bool hi_ok = i.hi >= 0 && i.hi * i.hi >= target;
    return lo_ok && hi_ok;
}

// |c - p*sqrt(n)| <= bound for integers c, p, n >= 0, via squaring.
inline bool near_floor_multiple_of_sqrt(const BigInt& c, const BigInt& p,
                                        const BigInt& n, const BigInt& bound) {
    // c - bound <= p*sqrt(n)  and  p*sqrt(n) <= c + bound
    const BigInt target = p * p * n;
    const BigInt lo = c - bound;
    const BigInt hi = c + bound;
    bool lo_ok = lo <= 0 || lo * lo <= target;
    bool hi_ok = hi >= 0 && hi * hi >= target;
    return lo_ok && hi_ok;
}

// Reference behaviour for recip evaluation: least n >= 0 with f(n) >= p,
// found by a plain scan from zero.
inline BigInt least_arg_linear(const Real& x, const BigInt& p) {
    for (BigInt n = 0;; ++n)
        if (x.eval(n) >= p) return n;
}

// Parse the decimal rendering produced by digits(), ignoring a trailing
// " ±1ulp" marker.
inline Rat parse_decimal(const std::string& text) {
    std::string s = text.substr(0, text.find(' '));
    bool negative = !s.empty() && s[0] == '-';
    if (negative) s = s.substr(1);
    auto dot = s.find('.');
    std::string digits_only = s.substr(0, dot);
    unsigned frac = 0;
    if (dot != std::string::npos) {
        digits_only += s.substr(dot + 1);
        frac = static_cast<unsigned>(s.size() - dot - 1);
    }
    BigInt scaled;
    scaled.set_str(digits_only, 10);  // base 10: leading zeros are not octal
    Rat v = eudoxus::make_rat(scaled, eudoxus::pow10(frac));
    return negative ? Rat(-v) : v;
}

}  // namespace testsupport
