#include "eudoxus/lemmas.hpp"

#include <gmpxx.h>

#include <sstream>

namespace eudoxus {

std::string AuditReport::line() const {
    std::ostringstream os;
    os << label << " " << cert_claimed.get_str() << " "
       << max_defect_observed.get_str() << " " << samples << " "
       << (violated ? "violated" : "ok");
    return os.str();
}

Real odd_extend(std::function<BigInt(const BigInt&)> h, const BigInt& cert_n,
                std::string label) {
    if (cert_n < 0) throw DomainError("odd_extend: negative certificate");
    if (h(0) != 0) throw DomainError("odd_extend: h(0) must be 0");
    // With f(-p) = -f(p): negative pairs give d(p,q) = -d(-p,-q), and for
    // mixed signs |d(p,q)| = |d(a,b)| with a = q, b = -(p+q) when p+q <= 0,
    // a = p+q, b = -p otherwise -- all nonnegative pairs. So the
    // nonnegative-quadrant bound is already the global one.
    return make_raw(
        [h = std::move(h)](const BigInt& p) -> BigInt {
            return p >= 0 ? h(p) : BigInt(-h(-p));
        },
        cert_n, std::move(label));
}

BigInt lower_bound_scale(const Real& x, const BigInt& d, const Budget& b) {
    if (d <= 0) throw DomainError("lower_bound_scale: D must be positive");
    if (!sign(x, b).positive())
        throw SignUndecided("lower_bound_scale: x not certified positive");

    const BigInt threshold = 2 * (x.cert() + d);  // the proof's 2E = 2(C+D)
    const BigInt limit = budget_limit(b);
    BigInt m = 1;
    while (x.eval(m) <= threshold) {
        if (++m > limit)
            throw BudgetExceeded("lower_bound_scale: no M within budget");
    }
    // Induction consequence f(kM) > (k+1)D, spot-checked.
    for (BigInt k = 1; k <= 100; ++k) {
        if (x.eval(k * m) <= (k + 1) * d)
            throw Error("lower_bound_scale: induction consequence failed");
    }
    return m;
}

std::pair<BigInt, BigInt> upper_bound_coeffs(const Real& x) {
    return {x.cert() + abs(x.eval(1)), 3 * x.cert()};
}

bool check_mult_lemma(const Real& x, const BigInt& p, const BigInt& q) {
    BigInt lhs = abs(p * x.eval(q) - q * x.eval(p));
    return lhs <= (abs(p) + abs(q) + 2) * x.cert();
}

AuditReport certificate_audit(const Real& x, const BigInt& range,
                              long long samples, unsigned long seed) {
    if (range < 1) throw DomainError("certificate_audit: range must be >= 1");
    if (samples < 0) throw DomainError("certificate_audit: negative samples");

    AuditReport report;
    report.label = x.label();
    report.cert_claimed = x.cert();
    report.max_defect_observed = 0;

    auto probe = [&](const BigInt& p, const BigInt& q) {
        BigInt d = abs(x.defect(p, q));
        if (d > report.max_defect_observed) report.max_defect_observed = d;
        ++report.samples;
    };

    // Deterministic small grid first: the corner cases live here.
    for (BigInt p = -8; p <= 8; ++p)
        for (BigInt q = -8; q <= 8; ++q) probe(p, q);

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);
    const BigInt span = 2 * range + 1;
    for (long long i = 0; i < samples; ++i) {
        BigInt p = rng.get_z_range(span) - range;
        BigInt q = rng.get_z_range(span) - range;
        probe(p, q);
    }

    report.violated = report.max_defect_observed > report.cert_claimed;
    return report;
}

Real street_family(const BigInt& m) {
    if (m < 1) throw DomainError("street_family: m must be >= 1");
    auto g = [m](const BigInt& p) -> BigInt {
        return abs(p) <= m ? BigInt(0) : BigInt(m * p);
    };
    // Once |p|, |q| and |p+q| all exceed m the defect vanishes, so the scan
    // window below sees every defect value; the max is 2m^2 at p = q = m.
    BigInt cert = 0;
    const BigInt w = 2 * m + 2;
    for (BigInt p = -w; p <= w; ++p) {
        for (BigInt q = -w; q <= w; ++q) {
            BigInt d = abs(g(p + q) - g(p) - g(q));
            if (d > cert) cert = d;
        }
    }
    return make_raw(g, cert, "street(" + m.get_str() + ")");
}

}  // namespace eudoxus
