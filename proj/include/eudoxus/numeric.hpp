#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "eudoxus/errors.hpp"

namespace eudoxus {

// Exact arbitrary-precision integers and rationals. Rat values are always in
// canonical form: positive denominator, gcd(num, den) = 1, so equality is
// structural.
using BigInt = mpz_class;
using Rat = mpq_class;

// Canonical rational from a numerator/denominator pair. den == 0 raises
// DivisionByZero; a negative den is normalised away.
Rat make_rat(const BigInt& num, const BigInt& den);

// Checked division; b == 0 raises DivisionByZero instead of the undefined
// behaviour of raw mpq division.
Rat rat_div(const Rat& a, const Rat& b);

// Floor quotient: the unique q with q*b <= a < (q+1)*b. Requires b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);

// Integer square root: the unique r >= 0 with r*r <= n < (r+1)*(r+1).
// Requires n >= 0. Newton iteration from a power-of-two seed.
BigInt isqrt(const BigInt& n);

BigInt floor_rat(const Rat& v);
BigInt ceil_rat(const Rat& v);

// Nearest integer with ties to even.
BigInt round_half_even(const Rat& v);

BigInt pow10(unsigned n);

// Closed rational interval. The width-0 case (lo == hi) is a point.
struct Interval {
    Rat lo;
    Rat hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rat l, Rat h);

    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }

    std::string str() const;
};

Interval add(const Interval& a, const Interval& b);
Interval neg(const Interval& a);
Interval mul(const Interval& a, const Interval& b);

// Disjoint intervals yield an empty optional, never a malformed interval.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

std::string rat_str(const Rat& v);

}  // namespace eudoxus
