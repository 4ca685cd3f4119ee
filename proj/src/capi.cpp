#include "eudoxus/eudoxus.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "eudoxus/core.hpp"
#include "eudoxus/expr.hpp"
#include "eudoxus/lemmas.hpp"
#include "eudoxus/multidim.hpp"

using namespace eudoxus;

struct eud_real {
    Real value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

eud_status fail(eud_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

eud_status invalid(const char* message) {
    return fail(EUD_INVALID_ARGUMENT, message);
}

// Runs the body, translating exceptions to status codes.
template <typename Fn>
eud_status guarded(Fn&& body) {
    try {
        body();
        return EUD_OK;
    } catch (const ParseError& e) {
        return fail(EUD_PARSE_ERROR, e.what());
    } catch (const BudgetExceeded& e) {
        return fail(EUD_BUDGET_EXCEEDED, e.what());
    } catch (const DivisionByZero& e) {
        return fail(EUD_EVAL_ERROR, e.what());
    } catch (const SignUndecided& e) {
        return fail(EUD_EVAL_ERROR, e.what());
    } catch (const DomainError& e) {
        return fail(EUD_EVAL_ERROR, e.what());
    } catch (const Error& e) {
        return fail(EUD_INTERNAL_ERROR, e.what());
    } catch (const std::exception& e) {
        return fail(EUD_INTERNAL_ERROR, e.what());
    }
}

BigInt parse_bigint(const char* text) {
    BigInt v;
    if (!text || v.set_str(text, 10) != 0)
        throw DomainError(std::string("malformed integer '") +
                          (text ? text : "(null)") + "'");
    return v;
}

// Accepts "num/den", plain integers, and decimal notation like "0.01".
Rat parse_rat(const char* text) {
    if (!text) throw DomainError("malformed rational '(null)'");
    std::string s(text);
    auto dot = s.find('.');
    if (dot != std::string::npos && s.find('/') == std::string::npos) {
        std::string digits_part = s.substr(0, dot) + s.substr(dot + 1);
        unsigned frac = static_cast<unsigned>(s.size() - dot - 1);
        BigInt num;
        if (frac == 0 || num.set_str(digits_part, 10) != 0)
            throw DomainError("malformed rational '" + s + "'");
        return make_rat(num, pow10(frac));
    }
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw DomainError("malformed rational '" + s + "'");
    if (q.get_den() == 0)
        throw DivisionByZero("rational with zero denominator '" + s + "'");
    q.canonicalize();
    return q;
}

Budget make_budget(int exponent) {
    if (exponent < 1) throw DomainError("budget exponent must be >= 1");
    return Budget{exponent};
}

eud_status wrap_real(Real r, eud_real** out) {
    *out = new eud_real{std::move(r)};
    return EUD_OK;
}

}  // namespace

extern "C" {

const char* eud_version(void) { return "0.1.0"; }

const char* eud_last_error(void) { return g_last_error.c_str(); }

void eud_string_free(char* s) { std::free(s); }

void eud_real_release(eud_real* x) { delete x; }

eud_status eud_real_from_expr(const char* text, int budget_exponent,
                              eud_real** out) {
    if (!text || !out) return invalid("null argument");
    return guarded([&] {
        Budget b = make_budget(budget_exponent);
        *out = new eud_real{evaluate(*parse(text), b)};
    });
}

eud_status eud_real_from_int(const char* decimal, eud_real** out) {
    if (!out) return invalid("null argument");
    return guarded([&] { wrap_real(eu_embed(parse_bigint(decimal)), out); });
}

eud_status eud_real_from_ratio(const char* num_decimal,
                               const char* den_decimal, eud_real** out) {
    if (!out) return invalid("null argument");
    return guarded([&] {
        wrap_real(from_rational(make_rat(parse_bigint(num_decimal),
                                         parse_bigint(den_decimal))),
                  out);
    });
}

eud_status eud_real_sqrt_int(const char* n_decimal, eud_real** out) {
    if (!out) return invalid("null argument");
    return guarded([&] { wrap_real(sqrt_int(parse_bigint(n_decimal)), out); });
}

eud_status eud_real_add(const eud_real* x, const eud_real* y, eud_real** out) {
    if (!x || !y || !out) return invalid("null argument");
    return guarded([&] { wrap_real(add(x->value, y->value), out); });
}

eud_status eud_real_neg(const eud_real* x, eud_real** out) {
    if (!x || !out) return invalid("null argument");
    return guarded([&] { wrap_real(neg(x->value), out); });
}

eud_status eud_real_mul(const eud_real* x, const eud_real* y, eud_real** out) {
    if (!x || !y || !out) return invalid("null argument");
    return guarded([&] { wrap_real(mul(x->value, y->value), out); });
}

eud_status eud_real_recip(const eud_real* x, int budget_exponent,
                          eud_real** out) {
    if (!x || !out) return invalid("null argument");
    return guarded([&] {
        wrap_real(recip(x->value, make_budget(budget_exponent)), out);
    });
}

eud_status eud_real_eval(const eud_real* x, const char* p_decimal,
                         char** out_decimal) {
    if (!x || !out_decimal) return invalid("null argument");
    return guarded([&] {
        *out_decimal = dup_string(x->value.eval(parse_bigint(p_decimal)).get_str());
    });
}

eud_status eud_real_cert(const eud_real* x, char** out_decimal) {
    if (!x || !out_decimal) return invalid("null argument");
    *out_decimal = dup_string(x->value.cert().get_str());
    return EUD_OK;
}

eud_status eud_real_label(const eud_real* x, char** out) {
    if (!x || !out) return invalid("null argument");
    *out = dup_string(x->value.label());
    return EUD_OK;
}

int eud_real_floor_exact(const eud_real* x) {
    if (!x) return -1;
    return x->value.floor_exact() ? 1 : 0;
}

eud_status eud_real_enclose(const eud_real* x, const char* q_decimal,
                            char** out_lo, char** out_hi) {
    if (!x || !out_lo || !out_hi) return invalid("null argument");
    return guarded([&] {
        Interval i = enclose(x->value, parse_bigint(q_decimal));
        *out_lo = dup_string(rat_str(i.lo));
        *out_hi = dup_string(rat_str(i.hi));
    });
}

eud_status eud_real_refine(const eud_real* x, const char* eps,
                           int budget_exponent, char** out_lo, char** out_hi) {
    if (!x || !out_lo || !out_hi) return invalid("null argument");
    return guarded([&] {
        Interval i =
            refine(x->value, parse_rat(eps), make_budget(budget_exponent));
        *out_lo = dup_string(rat_str(i.lo));
        *out_hi = dup_string(rat_str(i.hi));
    });
}

eud_status eud_real_digits(const eud_real* x, int ndigits, int budget_exponent,
                           char** out) {
    if (!x || !out) return invalid("null argument");
    if (ndigits < 1) return invalid("ndigits must be >= 1");
    return guarded([&] {
        *out = dup_string(digits(x->value, ndigits, make_budget(budget_exponent)));
    });
}

eud_status eud_real_sign(const eud_real* x, int budget_exponent, int* out_sign,
                         char** out_lo, char** out_hi) {
    if (!x || !out_sign) return invalid("null argument");
    return guarded([&] {
        SignResult s = sign(x->value, make_budget(budget_exponent));
        *out_sign = s.positive() ? 1 : s.negative() ? -1 : 0;
        if (out_lo) *out_lo = dup_string(rat_str(s.enclosure.lo));
        if (out_hi) *out_hi = dup_string(rat_str(s.enclosure.hi));
    });
}

eud_status eud_real_floor(const eud_real* x, int budget_exponent,
                          int* out_decided, char** out_floor) {
    if (!x || !out_decided) return invalid("null argument");
    return guarded([&] {
        FloorResult f = floor_of(x->value, make_budget(budget_exponent));
        *out_decided = f.decided() ? 1 : 0;
        if (out_floor)
            *out_floor =
                dup_string(f.decided() ? f.value->get_str() : std::string());
    });
}

eud_status eud_real_colonnade(const eud_real* x, int count,
                              int budget_exponent, char** out_lines) {
    if (!x || !out_lines) return invalid("null argument");
    if (count < 1) return invalid("count must be >= 1");
    return guarded([&] {
        Budget b = make_budget(budget_exponent);
        Real r = x->value.floor_exact() ? x->value : canonicalize(x->value, b);
        std::string text;
        for (int p = 1; p <= count; ++p) {
            text += r.eval(p).get_str();
            text += "\n";
        }
        *out_lines = dup_string(text);
    });
}

eud_status eud_real_certify(const eud_real* x, const char* label, long range,
                            long samples, unsigned long seed,
                            int* out_violated, char** out_report_line) {
    if (!x || !out_violated || !out_report_line)
        return invalid("null argument");
    if (range < 1 || samples < 1) return invalid("range/samples must be >= 1");
    return guarded([&] {
        AuditReport r =
            certificate_audit(x->value, BigInt(range), samples, seed);
        if (label && *label) r.label = label;
        *out_violated = r.violated ? 1 : 0;
        *out_report_line = dup_string(r.line());
    });
}

eud_status eud_matrix_recover_report(const char* path, long noise,
                                     const char* eps, unsigned long seed,
                                     int budget_exponent, int json_lines,
                                     int* out_all_contained, char** out_text) {
    if (!path || !out_all_contained || !out_text)
        return invalid("null argument");
    if (noise < 0) return invalid("noise must be >= 0");
    bool budget_hit = false;
    eud_status st = guarded([&] {
        std::ifstream in(path);
        if (!in) throw ParseError(0, std::string("cannot open '") + path + "'");
        RatMatrix m = read_matrix_grid(in);
        Rat e = parse_rat(eps);
        Budget b = make_budget(budget_exponent);
        MultiHom lifted = from_matrix_noisy(m, BigInt(noise), seed);
        IntervalMatrix rec = recover_matrix(lifted, e, b);
        budget_hit = !rec.all_converged();

        bool all = true;
        std::ostringstream os;
        if (!json_lines) write_interval_matrix(os, rec);
        for (int i = 0; i < rec.rows; ++i) {
            for (int j = 0; j < rec.cols; ++j) {
                const Interval& iv =
                    rec.entries[static_cast<std::size_t>(i)]
                               [static_cast<std::size_t>(j)];
                const Rat& truth = m[static_cast<std::size_t>(i)]
                                    [static_cast<std::size_t>(j)];
                bool contained = iv.contains(truth);
                bool conv = rec.converged[static_cast<std::size_t>(i)]
                                         [static_cast<std::size_t>(j)];
                all = all && contained;
                if (json_lines) {
                    os << "{\"row\":" << i << ",\"col\":" << j << ",\"lo\":\""
                       << rat_str(iv.lo) << "\",\"hi\":\"" << rat_str(iv.hi)
                       << "\",\"contained\":" << (contained ? "true" : "false")
                       << ",\"converged\":" << (conv ? "true" : "false")
                       << "}\n";
                } else {
                    os << "entry " << i << " " << j << " "
                       << (contained ? "contained" : "missed")
                       << (conv ? "" : " (budget)") << "\n";
                }
            }
        }
        if (!json_lines)
            os << (all ? "all entries contained" : "containment failed")
               << "\n";
        *out_all_contained = all ? 1 : 0;
        *out_text = dup_string(os.str());
    });
    if (st == EUD_OK && budget_hit)
        return fail(EUD_BUDGET_EXCEEDED,
                    "matrix recovery exceeded budget on some entries");
    return st;
}

}  // extern "C"
