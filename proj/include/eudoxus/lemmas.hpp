#pragma once

#include <functional>
#include <string>
#include <utility>

#include "eudoxus/core.hpp"

namespace eudoxus {

// Result of a sampling audit of one real's certificate claim.
struct AuditReport {
    std::string label;
    BigInt cert_claimed;
    BigInt max_defect_observed;
    long long samples = 0;
    bool violated = false;  // max_defect_observed > cert_claimed

    // Line format: `label cert max_observed samples verdict`.
    std::string line() const;
};

// Build a full real from a sequence defined on the nonnegative integers:
// eval(p) = h(p) for p >= 0 and -h(-p) otherwise. Requires h(0) = 0 and the
// caller's claim |h(m+n) - h(m) - h(n)| <= cert_n for m, n >= 0. A case
// split shows mixed-sign and negative pairs reproduce nonnegative-pair
// defect values (up to sign), so the certificate carries over unchanged.
Real odd_extend(std::function<BigInt(const BigInt&)> h, const BigInt& cert_n,
                std::string label);

// For positive x and D > 0, the least M > 0 with x.eval(M) > 2*(cert + D);
// by induction x.eval(mM) then exceeds (m+1)*(cert+D) > (m+1)*D for every
// m >= 1, which the function spot-checks for m = 1..100 before returning.
// Scan threshold is the proof's constant 2(C+D), not anything smaller.
BigInt lower_bound_scale(const Real& x, const BigInt& d, const Budget& b = {});

// Linear growth coefficients (A, B) = (cert + |eval(1)|, 3*cert) with
// |eval(p)| <= A|p| + B for all p.
std::pair<BigInt, BigInt> upper_bound_coeffs(const Real& x);

// Whether |p*eval(q) - q*eval(p)| <= (|p| + |q| + 2) * cert.
bool check_mult_lemma(const Real& x, const BigInt& p, const BigInt& q);

// Evaluate the defect on `samples` seeded pseudorandom pairs in
// [-range, range]^2 plus a deterministic small grid; report the max and
// whether the certificate claim was violated. Deterministic per seed.
AuditReport certificate_audit(const Real& x, const BigInt& range,
                              long long samples, unsigned long seed = 0);

// The classic counterexample family: g_m(p) = 0 for |p| <= m, m*p for
// |p| > m. Each g_m represents the real m, yet g_m(m) = 0 -- no finite
// window of values reveals the represented real, which is why suprema must
// be built from exact floor values rather than pointwise extremes of raw
// representatives. Certificate found by a construction-time defect scan
// over p, q in [-2m-2, 2m+2]^2; a case split on which of |p|, |q|, |p+q|
// exceed m shows the global max (2m^2, at p = q = m) lies in that window.
Real street_family(const BigInt& m);

}  // namespace eudoxus
