#include "eudoxus/core.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace eudoxus {

namespace {
// Memo caches are bounded: hot paths (certificate enumeration, search
// restarts, colonnades) reuse a small working set, while audits stream
// through hundreds of thousands of distinct points that are not worth
// keeping.
constexpr std::size_t kMemoCap = std::size_t(1) << 16;
}  // namespace

struct Real::Node {
    std::function<BigInt(const BigInt&)> fn;
    BigInt cert;
    std::string label;
    bool floor_exact = false;

    mutable std::mutex memo_mutex;
    mutable std::map<BigInt, BigInt> memo;
};

BigInt Real::eval(const BigInt& p) const {
    {
        std::lock_guard<std::mutex> lock(node_->memo_mutex);
        auto it = node_->memo.find(p);
        if (it != node_->memo.end()) return it->second;
    }
    BigInt v = node_->fn(p);  // outside the lock: fn may evaluate operands
    {
        std::lock_guard<std::mutex> lock(node_->memo_mutex);
        if (node_->memo.size() < kMemoCap) node_->memo.emplace(p, v);
    }
    return v;
}

const BigInt& Real::cert() const { return node_->cert; }
const std::string& Real::label() const { return node_->label; }
bool Real::floor_exact() const { return node_->floor_exact; }

BigInt Real::defect(const BigInt& p, const BigInt& q) const {
    return eval(p + q) - eval(p) - eval(q);
}

Real make_raw(std::function<BigInt(const BigInt&)> fn, BigInt cert,
              std::string label, bool floor_exact) {
    if (cert < 0) throw DomainError("certificate must be nonnegative");
    auto node = std::make_shared<Real::Node>();
    node->fn = std::move(fn);
    node->cert = std::move(cert);
    node->label = std::move(label);
    node->floor_exact = floor_exact;
    return Real(std::move(node));
}

BigInt budget_limit(const Budget& b) {
    // The upper cap keeps 2^exponent a materializable integer.
    if (b.max_arg_exponent < 1 || b.max_arg_exponent > (1 << 20))
        throw DomainError("budget exponent out of range [1, 2^20]");
    return BigInt(1) << static_cast<unsigned long>(b.max_arg_exponent);
}

Real eu_embed(const BigInt& a) {
    // Explicit BigInt returns everywhere a closure is stored: gmpxx
    // operators yield expression templates referencing their operands, which
    // must not outlive the lambda body.
    return make_raw([a](const BigInt& p) -> BigInt { return a * p; }, 0,
                    a.get_str(),
                    /*floor_exact=*/true);
}

Real from_rational(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    BigInt num(c.get_num()), den(c.get_den());
    return make_raw(
        [num, den](const BigInt& p) -> BigInt { return floor_div(p * num, den); }, 1,
        rat_str(c), /*floor_exact=*/true);
}

Real sqrt_int(const BigInt& n) {
    if (n < 0) throw DomainError("sqrt_int: negative operand");
    // isqrt(p^2 n) = floor(p sqrt(n)) for p >= 0; the same expression negated
    // is the odd extension.
    return make_raw(
        [n](const BigInt& p) -> BigInt {
            return p >= 0 ? isqrt(p * p * n) : BigInt(-isqrt(p * p * n));
        },
        1, "sqrt(" + n.get_str() + ")", /*floor_exact=*/true);
}

Real from_oracle(std::function<Rat(const Rat&)> approx, std::string label) {
    // |eval(p) - p*x| <= |p| * (1/(2|p|)) + 1/2 = 1 for all p (trivially at
    // p = 0), so any defect is the sum of three such deviations: |d_f| <= 3.
    auto fn = [approx = std::move(approx)](const BigInt& p) -> BigInt {
        if (p == 0) return 0;
        Rat eps(1, 2 * abs(p));
        eps.canonicalize();
        return round_half_even(Rat(p) * approx(eps));
    };
    return make_raw(std::move(fn), 3, std::move(label));
}

Real add(const Real& x, const Real& y) {
    return make_raw(
        [x, y](const BigInt& p) -> BigInt { return x.eval(p) + y.eval(p); },
        x.cert() + y.cert(), "(" + x.label() + "+" + y.label() + ")");
}

Real neg(const Real& x) {
    return make_raw([x](const BigInt& p) -> BigInt { return -x.eval(p); },
                    x.cert(), "-(" + x.label() + ")");
}

Real sub(const Real& x, const Real& y) { return add(x, neg(y)); }

Real mul(const Real& x, const Real& y) {
    // d_{x o y}(p,q) = x(e) + d_x(y(p)+y(q), e) + d_x(y(p), y(q)) with
    // e = d_y(p,q), |e| <= cert(y).
    BigInt max_xe = 0;
    const BigInt cy = y.cert();
    for (BigInt e = -cy; e <= cy; ++e) {
        BigInt v = abs(x.eval(e));
        if (v > max_xe) max_xe = v;
    }
    BigInt cert = max_xe + 2 * x.cert();
    return make_raw([x, y](const BigInt& p) -> BigInt { return x.eval(y.eval(p)); },
                    std::move(cert), "(" + x.label() + "*" + y.label() + ")");
}

Interval enclose(const Real& x, const BigInt& q) {
    if (q < 1) throw DomainError("enclose: q must be >= 1");
    BigInt f = x.eval(q);
    return Interval(make_rat(f - x.cert(), q), make_rat(f + x.cert(), q));
}

Interval refine(const Real& x, const Rat& eps, const Budget& b) {
    if (eps <= 0) throw DomainError("refine: eps must be positive");
    BigInt q = ceil_rat(rat_div(Rat(2 * x.cert()), eps));
    if (q < 1) q = 1;
    const BigInt limit = budget_limit(b);
    if (q > limit) {
        throw BudgetExceeded(
            "refine: required argument " + q.get_str() +
                " exceeds budget 2^" + std::to_string(b.max_arg_exponent),
            enclose(x, limit));
    }
    return enclose(x, q);
}

SignResult sign(const Real& x, const Budget& b) {
    const BigInt limit = budget_limit(b);
    Interval last;
    for (BigInt q = 1; q <= limit; q *= 2) {
        Interval i = enclose(x, q);
        if (i.lo > 0) return {SignResult::Kind::Positive, std::move(i)};
        if (i.hi < 0) return {SignResult::Kind::Negative, std::move(i)};
        if (i.lo == 0 && i.hi == 0)  // provably zero (cert 0, eval(1) = 0)
            return {SignResult::Kind::Inconclusive, std::move(i)};
        last = std::move(i);
    }
    return {SignResult::Kind::Inconclusive, std::move(last)};
}

CompareResult compare(const Real& x, const Real& y, const Budget& b) {
    SignResult s = sign(add(y, neg(x)), b);
    switch (s.kind) {
        case SignResult::Kind::Positive:
            return {CompareResult::Kind::Less, std::move(s.enclosure)};
        case SignResult::Kind::Negative:
            return {CompareResult::Kind::Greater, std::move(s.enclosure)};
        default:
            return {CompareResult::Kind::Inconclusive, std::move(s.enclosure)};
    }
}

namespace {

// Positive rational lower bound: the lower endpoint of a positive enclosure,
// tightened until width <= lo (then lambda >= x/2) so the certificates and
// seeds derived from it stay near-minimal. Empty when the budget runs out
// before any enclosure clears zero.
std::optional<Rat> positive_lower_bound(const Real& x, const Budget& b) {
    const BigInt limit = budget_limit(b);
    std::optional<Rat> best;
    for (BigInt q = 1; q <= limit; q *= 2) {
        Interval i = enclose(x, q);
        if (i.lo > 0) {
            best = i.lo;
            if (i.width() <= i.lo) break;
        }
    }
    return best;
}

// Least n >= 0 with f(n) >= p, for positive x = [f] with |d_f| <= c and
// p >= 1. Uses |f(m) - m*x| <= c:
//   f(n) >= p            certifies n is a member;
//   f(n) + 2c < p        certifies every m <= n is a non-member
//                        (f(m) <= m*x + c <= n*x + c <= f(n) + 2c < p);
//   fuzzy n (neither)    certifies every m <= n - gap is a non-member,
//                        gap = ceil(4c/lambda) + 1: from f(n) >= p - 2c we
//                        get n*x >= p - 3c and n*x <= f(n) + c < p + c, so
//                        dropping gap steps loses gap*x >= 4c of slope.
// The search gallops out from the seed, contracts with those certificates,
// and finishes with a linear scan over the remaining window, so the result
// is the exact minimum for any seed.
BigInt least_arg_reaching(const Real& x, const BigInt& p, const Rat& lambda,
                          const BigInt& gap) {
    const BigInt c = x.cert();
    const BigInt two_c = 2 * c;

    BigInt seed = ceil_rat(rat_div(Rat(p), lambda));
    if (seed < 1) seed = 1;

    // Gallop up to a certified member u.
    BigInt u = seed;
    for (BigInt step = 1; x.eval(u) < p; step *= 2) u += step;

    // Gallop down to a certified lower bound l (all m <= l are out);
    // l = -1 means scan from zero (harmless: f(0) = 0 < p).
    BigInt l = std::min(seed, u);
    {
        BigInt step = 1;
        while (l > 0 && x.eval(l) + two_c >= p) {
            l -= step;
            if (l < 0) l = 0;
            step *= 2;
        }
        if (l == 0 && x.eval(0) + two_c >= p) l = -1;
    }

    // Contract [l, u] around the membership boundary.
    while (u - l > 2 * gap + 2) {
        BigInt m = l + (u - l) / 2;
        BigInt fm = x.eval(m);
        if (fm >= p) {
            u = m;
        } else if (fm + two_c < p) {
            l = m;
        } else {
            BigInt jump = m - gap;
            if (jump > l) l = jump;
        }
    }

    for (BigInt n = l + 1;; ++n) {
        if (x.eval(n) >= p) return n;
    }
}

Real recip_positive(const Real& x, const Budget& b) {
    std::optional<Rat> lb = positive_lower_bound(x, b);
    if (!lb) {
        throw SignUndecided(
            "cannot invert: sign not established within budget");
    }
    const Rat lambda = *lb;
    const BigInt c = x.cert();
    const BigInt k = 2 * abs(x.eval(1)) + 4 * c;
    const BigInt cert = ceil_rat(rat_div(Rat(k + c), lambda)) + 2;
    const BigInt gap = ceil_rat(rat_div(Rat(4 * c), lambda)) + 1;

    auto nonneg = [x, lambda, gap](const BigInt& p) -> BigInt {
        if (p == 0) return 0;
        return least_arg_reaching(x, p, lambda, gap);
    };
    return make_raw(
        [nonneg](const BigInt& p) -> BigInt {
            return p >= 0 ? nonneg(p) : BigInt(-nonneg(-p));
        },
        cert, "recip(" + x.label() + ")");
}

}  // namespace

Real recip(const Real& x, const Budget& b) {
    SignResult s = sign(x, b);
    switch (s.kind) {
        case SignResult::Kind::Positive:
            return recip_positive(x, b);
        case SignResult::Kind::Negative:
            return neg(recip_positive(neg(x), b));
        default:
            throw SignUndecided(
                "cannot invert: sign not established within budget "
                "(enclosure " +
                s.enclosure.str() + ")");
    }
}

FloorResult floor_of(const Real& x, const Budget& b) {
    const BigInt limit = budget_limit(b);
    Interval last;
    for (BigInt q = 1; q <= limit; q *= 2) {
        Interval i = enclose(x, q);
        BigInt n = floor_rat(i.lo);
        if (i.hi < Rat(n + 1)) return {std::move(n), std::move(i)};
        last = std::move(i);
    }
    return {std::nullopt, std::move(last)};
}

Real canonicalize(const Real& x, const Budget& b) {
    auto approx = [x, b](const Rat& eps) -> Rat {
        return refine(x, eps, b).midpoint();
    };
    return from_oracle(std::move(approx), "canon(" + x.label() + ")");
}

Real sup_finite(const std::vector<Real>& xs) {
    if (xs.empty()) throw DomainError("sup_finite: empty family");
    BigInt max_cert = 0;
    std::string label = "sup(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!xs[i].floor_exact())
            throw DomainError("sup_finite: inputs must be floor-exact");
        if (xs[i].cert() > max_cert) max_cert = xs[i].cert();
        if (i > 0) label += ",";
        label += xs[i].label();
    }
    label += ")";

    // For p >= 0 each member evaluates to floor(p * x_i) exactly and max
    // commutes with floor over a finite family, so the result is again the
    // exact normal form of the largest member.
    auto members = xs;
    auto nonneg = [members](const BigInt& p) -> BigInt {
        BigInt best = members.front().eval(p);
        for (std::size_t i = 1; i < members.size(); ++i) {
            BigInt v = members[i].eval(p);
            if (v > best) best = v;
        }
        return best;
    };
    return make_raw(
        [nonneg](const BigInt& p) -> BigInt {
            return p >= 0 ? nonneg(p) : BigInt(-nonneg(-p));
        },
        1 + max_cert, std::move(label), /*floor_exact=*/true);
}

std::string digits(const Real& x, int n, const Budget& b) {
    if (n < 1) throw DomainError("digits: n must be >= 1");
    const BigInt scale = pow10(static_cast<unsigned>(n));
    Rat eps = make_rat(1, 2 * scale);
    Interval i = refine(x, eps, b);

    BigInt d = round_half_even(i.midpoint() * Rat(scale));
    bool pinned = round_half_even(i.lo * Rat(scale)) ==
                  round_half_even(i.hi * Rat(scale));

    BigInt a = abs(d);
    BigInt ip = a / scale;
    BigInt fp = a % scale;
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<std::size_t>(n) - frac.size(), '0');

    std::string out;
    if (d < 0) out += "-";
    out += ip.get_str() + "." + frac;
    if (!pinned) out += " ±1ulp";
    return out;
}

}  // namespace eudoxus
