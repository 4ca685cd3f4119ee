#include "eudoxus/numeric.hpp"

#include <algorithm>

namespace eudoxus {

Rat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_div(const Rat& a, const Rat& b) {
    if (b == 0) throw DivisionByZero("rational division by zero");
    return a / b;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b <= 0) throw DomainError("floor_div: divisor must be positive");
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw DomainError("isqrt: negative operand");
    if (n == 0) return 0;
    // Seed with 2^ceil(bits/2) >= sqrt(n); the iteration decreases strictly
    // until it lands on floor(sqrt(n)).
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    BigInt x = BigInt(1) << static_cast<unsigned long>((bits + 1) / 2);
    for (;;) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = y;
    }
}

BigInt floor_rat(const Rat& v) {
    return floor_div(BigInt(v.get_num()), BigInt(v.get_den()));
}

BigInt ceil_rat(const Rat& v) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return q;
}

BigInt round_half_even(const Rat& v) {
    BigInt n = floor_rat(v);
    Rat frac = v - Rat(n);
    int c = cmp(frac, Rat(1, 2));
    if (c > 0) return n + 1;
    if (c < 0) return n;
    return mpz_even_p(n.get_mpz_t()) ? n : n + 1;
}

BigInt pow10(unsigned n) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
    return r;
}

Interval::Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw DomainError("interval with lo > hi");
}

std::string Interval::str() const {
    return "[" + rat_str(lo) + "," + rat_str(hi) + "]";
}

Interval add(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval neg(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval mul(const Interval& a, const Interval& b) {
    const Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo,
              p4 = a.hi * b.hi;
    return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    Rat lo = std::max(a.lo, b.lo);
    Rat hi = std::min(a.hi, b.hi);
    if (lo > hi) return std::nullopt;
    return Interval(std::move(lo), std::move(hi));
}

std::string rat_str(const Rat& v) { return v.get_str(); }

}  // namespace eudoxus
