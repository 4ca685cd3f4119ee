#include <doctest.h>

#include <sstream>

#include "eudoxus/lemmas.hpp"
#include "test_support.hpp"

using namespace eudoxus;
using testsupport::Rng;

TEST_SUITE_BEGIN("lemmas");

TEST_CASE("odd_extend mirrors the nonnegative half") {
    Real dbl = odd_extend([](const BigInt& m) -> BigInt { return 2 * m; }, 0,
                          "2m");
    CHECK(dbl.eval(-3) == -6);
    Rng rng(31);
    for (int i = 0; i < 80; ++i) {
        BigInt p = rng.big(-2000, 2000);
        CHECK(dbl.eval(p) == -dbl.eval(-p));
    }

    Real viaext = odd_extend(
        [](const BigInt& m) -> BigInt { return isqrt(2 * m * m); }, 1, "s2");
    Real direct = sqrt_int(2);
    for (int i = 0; i < 80; ++i) {
        BigInt p = rng.big(-500, 500);
        CHECK(viaext.eval(p) == direct.eval(p));
    }

    CHECK_THROWS_AS(
        odd_extend([](const BigInt&) -> BigInt { return 1; }, 0, "bad"),
        DomainError);
}

TEST_CASE("odd_extend keeps the nonnegative defect bound on mixed signs") {
    Real r = odd_extend(
        [](const BigInt& m) -> BigInt { return floor_div(3 * m, 7); }, 1,
        "3m/7");
    BigInt max_d = 0;
    for (long p = -120; p <= 120; ++p)
        for (long q = -120; q <= 120; ++q) {
            BigInt d = abs(r.defect(p, q));
            if (d > max_d) max_d = d;
        }
    CHECK(max_d <= 1);
}

TEST_CASE("lower_bound_scale finds the growth multiplier") {
    CHECK(lower_bound_scale(eu_embed(5), 1) == 1);  // 5 > 2*(0+1)

    // Oracle scan: first M with isqrt(2 M^2) > 2*(1+3) = 8.
    BigInt expected = 0;
    for (BigInt m = 1;; ++m) {
        if (isqrt(2 * m * m) > 8) {
            expected = m;
            break;
        }
    }
    CHECK(isqrt(50) == 7);  // M = 5 is not enough
    CHECK(isqrt(72) == 8);  // M = 6 reaches the threshold but not beyond it
    CHECK(isqrt(98) == 9);  // M = 7 exceeds it
    CHECK(expected == 7);
    CHECK(lower_bound_scale(sqrt_int(2), 3) == expected);

    CHECK_THROWS_AS(lower_bound_scale(eu_embed(0), 1), SignUndecided);
    CHECK_THROWS_AS(lower_bound_scale(eu_embed(-2), 1), SignUndecided);
    CHECK_THROWS_AS(lower_bound_scale(eu_embed(5), 0), DomainError);
}

TEST_CASE("lower_bound_scale consequence holds well past the spot checks") {
    Real xs[] = {sqrt_int(2), from_rational(make_rat(7, 5)),
                 add(sqrt_int(3), from_rational(make_rat(1, 7)))};
    BigInt ds[] = {3, 1, 10};
    for (int i = 0; i < 3; ++i) {
        BigInt m = lower_bound_scale(xs[i], ds[i]);
        CHECK(m >= 1);
        CHECK(xs[i].eval(m) > 2 * (xs[i].cert() + ds[i]));
        for (BigInt k = 1; k <= 100; ++k)
            CHECK(xs[i].eval(k * m) > (k + 1) * ds[i]);
    }
}

TEST_CASE("upper_bound_coeffs gives linear growth bounds") {
    CHECK(upper_bound_coeffs(eu_embed(7)) == std::pair<BigInt, BigInt>{7, 0});
    CHECK(upper_bound_coeffs(sqrt_int(2)) == std::pair<BigInt, BigInt>{2, 3});

    Rng rng(32);
    Real zoo[] = {eu_embed(-4),
                  from_rational(make_rat(22, 7)),
                  sqrt_int(3),
                  add(sqrt_int(2), from_rational(make_rat(-5, 3))),
                  mul(sqrt_int(2), from_rational(make_rat(3, 7))),
                  recip(from_rational(make_rat(7, 5))),
                  canonicalize(sqrt_int(5)),
                  sup_finite({eu_embed(2), sqrt_int(5)}),
                  neg(sqrt_int(7)),
                  from_oracle([](const Rat&) { return make_rat(-9, 4); },
                              "-9/4")};
    for (const Real& x : zoo) {
        auto [a, b] = upper_bound_coeffs(x);
        for (int i = 0; i < 60; ++i) {
            BigInt p = rng.big(-10000, 10000);
            CHECK(abs(x.eval(p)) <= a * abs(p) + b);
        }
    }
}

TEST_CASE("check_mult_lemma holds for constructed reals") {
    Rng rng(33);
    Real x = mul(sqrt_int(2), from_rational(make_rat(3, 7)));
    for (int i = 0; i < 50; ++i) {
        BigInt p = rng.big(-5000, 5000);
        CHECK(check_mult_lemma(x, p, p));  // p = q: left side vanishes
        CHECK(check_mult_lemma(eu_embed(9), p, rng.big(-5000, 5000)));
    }
    Real s2 = sqrt_int(2);
    for (long p = -300; p <= 300; ++p)
        for (long q = -300; q <= 300; ++q)
            CHECK(check_mult_lemma(s2, p, q));
}

TEST_CASE("certificate_audit reports honest and dishonest claims") {
    AuditReport clean = certificate_audit(eu_embed(9), 500, 2000, 0);
    CHECK(clean.max_defect_observed == 0);
    CHECK_FALSE(clean.violated);
    CHECK(clean.samples > 2000);  // grid included

    // A deliberately wrong certificate: floor(p/2) claimed defect-free.
    Real lying = make_raw(
        [](const BigInt& p) -> BigInt { return floor_div(p, 2); }, 0,
        "floor(p/2)-cert0");
    AuditReport bad = certificate_audit(lying, 100, 500, 0);
    CHECK(bad.violated);
    CHECK(bad.max_defect_observed == 1);

    AuditReport big =
        certificate_audit(mul(sqrt_int(2), sqrt_int(3)), 1000, 20000, 0);
    CHECK_FALSE(big.violated);

    CHECK_THROWS_AS(certificate_audit(eu_embed(1), 0, 10, 0), DomainError);
}

TEST_CASE("certificate_audit is deterministic per seed") {
    Real x = add(sqrt_int(2), from_rational(make_rat(-3, 7)));
    AuditReport a = certificate_audit(x, 800, 3000, 42);
    AuditReport b = certificate_audit(x, 800, 3000, 42);
    CHECK(a.max_defect_observed == b.max_defect_observed);
    CHECK(a.samples == b.samples);
    CHECK(a.line() == b.line());
}

TEST_CASE("audit report line format") {
    AuditReport r = certificate_audit(sqrt_int(2), 100, 100, 7);
    std::istringstream is(r.line());
    std::string label_f, cert_f, max_f, verdict;
    long long samples_f = 0;
    is >> label_f >> cert_f >> max_f >> samples_f >> verdict;
    CHECK(label_f == "sqrt(2)");
    CHECK(cert_f == "1");
    CHECK(samples_f == r.samples);
    CHECK(verdict == "ok");
}

TEST_CASE("street family hides its value inside the window") {
    Real g3 = street_family(3);
    CHECK(g3.eval(3) == 0);
    CHECK(g3.eval(4) == 12);
    CHECK(g3.eval(-4) == -12);
    CHECK(g3.eval(-3) == 0);

    // The pointwise diagonal collapses to zero even though g_m represents m:
    // the pitfall behind naive pointwise infima of raw representatives.
    for (long m = 1; m <= 100; ++m) {
        Real gm = street_family(m);
        CHECK(gm.eval(m) == 0);
    }
    for (long m : {1L, 2L, 5L, 17L, 60L}) {
        Real gm = street_family(m);
        CHECK(enclose(gm, 10 * m).contains(Rat(m)));
        CHECK(gm.cert() == BigInt(2) * m * m);  // scan finds the exact max
    }
    CHECK_THROWS_AS(street_family(0), DomainError);
}

TEST_SUITE_END();
