#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eudoxus/numeric.hpp"

namespace eudoxus {

// Cap on evaluation arguments used by the semi-decidable queries (sign,
// floor, compare, refine): arguments q may grow up to 2^max_arg_exponent
// before the query gives up and reports its best enclosure. Turning those
// queries into total tri-state procedures is the whole point; exponent 64 is
// far beyond anything desk-scale work needs.
struct Budget {
    int max_arg_exponent = 64;
};

BigInt budget_limit(const Budget& b);  // 2^max_arg_exponent; exponent >= 1

// Raised by refine() and friends when the required evaluation argument
// exceeds the budget; carries the best enclosure computed before giving up.
struct BudgetExceeded : Error {
    std::optional<Interval> best;
    explicit BudgetExceeded(const std::string& what,
                            std::optional<Interval> b = std::nullopt)
        : Error(what), best(std::move(b)) {}
};

// One real number, represented by an integer sequence f: Z -> Z whose
// additivity defect d_f(p,q) = f(p+q) - f(p) - f(q) is globally bounded,
// together with an explicit inclusive certificate C >= 0, |d_f| <= C.
//
// The magnitude represented is the limit of f(q)/q; any f' within a bounded
// distance of f represents the same real, so equality of reals is not an
// operation here (no finite number of evaluations can decide it). All
// queries go through certified enclosures instead.
//
// Values are immutable; eval results are memoized behind a mutex (idempotent
// inserts, capped), so instances may be shared freely across threads.
class Real {
  public:
    // Evaluate the underlying sequence. Deterministic and total.
    BigInt eval(const BigInt& p) const;
    BigInt operator()(const BigInt& p) const { return eval(p); }

    const BigInt& cert() const;
    const std::string& label() const;

    // True for reals built by eu_embed / from_rational / sqrt_int (and
    // finite suprema of those): eval(p) is exactly floor(p * x) for p >= 0,
    // which sup_finite requires of its inputs.
    bool floor_exact() const;

    // d_f(p, q) = eval(p+q) - eval(p) - eval(q).
    BigInt defect(const BigInt& p, const BigInt& q) const;

    struct Node;

  private:
    explicit Real(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
    friend Real make_raw(std::function<BigInt(const BigInt&)> fn, BigInt cert,
                         std::string label, bool floor_exact);
};

// Wrap an arbitrary sequence with a caller-asserted certificate. The claim
// |d_f| <= cert is the caller's responsibility; certificate_audit() in the
// lemmas module is the tool for checking it by sampling.
Real make_raw(std::function<BigInt(const BigInt&)> fn, BigInt cert,
              std::string label, bool floor_exact = false);

// The integer A as a real: eval(p) = A*p, certificate 0.
Real eu_embed(const BigInt& a);

// An exact rational: eval(p) = floor(p*num / den), certificate 1 (the floor
// defect set is {0, 1}).
Real from_rational(const Rat& r);

// sqrt(n) for integer n >= 0: eval(p) = isqrt(p^2 * n) for p >= 0, extended
// oddly; certificate 1.
Real sqrt_int(const BigInt& n);

// Build a real from a rational approximation procedure with contract
// |approx(eps) - x| <= eps. For p != 0, eval(p) is the nearest integer
// (ties to even) to p * approx(1/(2|p|)); eval(0) = 0. Then
// |eval(p) - p*x| <= |p| * 1/(2|p|) + 1/2 = 1 for every p, so each defect
// is a sum of three such terms and |d_f| <= 3: certificate 3.
Real from_oracle(std::function<Rat(const Rat&)> approx, std::string label);

Real add(const Real& x, const Real& y);  // pointwise; cert = cx + cy
Real sub(const Real& x, const Real& y);  // add(x, neg(y))
Real neg(const Real& x);                 // pointwise; cert unchanged

// Product = composition: eval(p) = x.eval(y.eval(p)). Writing e = d_y(p,q),
//   d_{x o y}(p,q) = x(e) + d_x(y(p)+y(q), e) + d_x(y(p), y(q)),
// so cert = max{|x.eval(e)| : |e| <= cert(y)} + 2*cert(x), the maximum taken
// by direct enumeration of the finitely many e.
Real mul(const Real& x, const Real& y);

// Certified enclosure of the represented value from one evaluation:
//
//   [(f(q) - C) / q, (f(q) + C) / q],   width exactly 2C/q.
//
// Why this contains the real x: by induction on p,
// |f(pq) - p f(q)| <= (|p|+1) C, hence |f(pq)/(pq) - f(q)/q| <= (|p|+1)C/(pq).
// As p grows, f(pq)/(pq) tends to x and the right side tends to C/q, giving
// |x - f(q)/q| <= C/q. Requires q >= 1.
Interval enclose(const Real& x, const BigInt& q);

// Enclosure of width <= eps: calls enclose with q = max(1, ceil(2C/eps)).
// Throws BudgetExceeded (carrying the best interval at the budget's limit)
// if that q exceeds 2^budget.max_arg_exponent.
Interval refine(const Real& x, const Rat& eps, const Budget& b = {});

struct SignResult {
    enum class Kind { Positive, Negative, Inconclusive };
    Kind kind;
    // The deciding enclosure, or for Inconclusive the tightest one computed
    // within budget. Inconclusive([0,0]) means provably zero (certificate 0
    // and eval(1) = 0).
    Interval enclosure;

    bool positive() const { return kind == Kind::Positive; }
    bool negative() const { return kind == Kind::Negative; }
    bool inconclusive() const { return kind == Kind::Inconclusive; }
};

// Doubles q and encloses until an enclosure excludes 0 or the budget is
// exhausted. Never returns "zero": with cert > 0 no finite computation can
// certify it.
SignResult sign(const Real& x, const Budget& b = {});

struct CompareResult {
    enum class Kind { Less, Greater, Inconclusive };
    Kind kind;
    Interval enclosure;  // enclosure of y - x from the deciding step

    bool less() const { return kind == Kind::Less; }
    bool greater() const { return kind == Kind::Greater; }
    bool inconclusive() const { return kind == Kind::Inconclusive; }
};

// compare(x, y) = sign(y - x) mapped to verdicts.
CompareResult compare(const Real& x, const Real& y, const Budget& b = {});

// Multiplicative inverse. Requires sign(x) to be decidable within budget,
// else SignUndecided. For positive x, eval(p) for p >= 0 is the least n >= 0
// with x.eval(n) >= p, located by a galloping search seeded at ceil(p/lambda)
// where 0 < lambda <= x is the lower endpoint of a positive enclosure (any
// seed gives the same result; the seed only affects speed). Odd extension
// for p < 0; negative x goes through -recip(-x).
//
// Certificate: ceil((K + C)/lambda) + 2 with K = 2|x.eval(1)| + 4C. K bounds
// |f(r - p - q)| for the involved search results, |t| <= (|f(t)| + C)/lambda
// converts that to a bound on the defect itself, and the +2 is slack for the
// finitely many small arguments outside the main estimate.
Real recip(const Real& x, const Budget& b = {});

struct FloorResult {
    // Engaged iff the floor was certified; then the final enclosure lies
    // inside [n, n+1): enclosure.lo >= n and enclosure.hi < n+1.
    std::optional<BigInt> value;
    Interval enclosure;

    bool decided() const { return value.has_value(); }
};

// Refines until the enclosure fits inside some [n, n+1). An exact-integer
// boundary with cert > 0 is inherently undecidable and comes back
// Inconclusive; point enclosures decide immediately.
FloorResult floor_of(const Real& x, const Budget& b = {});

// Rebuild x as a near-normal-form representative: from_oracle over
// refine(x, .), so the result has certificate 3 regardless of x's and its
// evaluations track p*x within 1.
Real canonicalize(const Real& x, const Budget& b = {});

// Supremum of a nonempty finite family of floor-exact reals:
// eval(p) = max of the members' eval(p) for p >= 0 (max and floor commute
// over a finite family, so this is again exactly floor(p * max)), odd
// extension for p < 0. cert = 1 + max member cert (slack; audited).
Real sup_finite(const std::vector<Real>& xs);

// Decimal approximation with |x - printed| <= 10^-n: refine to width
// 10^-n / 2, round the midpoint to n fraction digits (half-even), append
// " ±1ulp" when the enclosure does not pin the final digit.
std::string digits(const Real& x, int n, const Budget& b = {});

}  // namespace eudoxus
