/* C API for the eudoxus exact real arithmetic library.
 *
 * Reals are opaque handles; integers and rationals cross the boundary as
 * decimal / "num/den" strings so arbitrary precision survives the trip.
 * Every function returns a status code; on failure eud_last_error() gives a
 * thread-local human-readable message (valid until the next failing call on
 * the same thread). Strings returned through out-parameters are heap
 * allocations to be released with eud_string_free().
 */
#ifndef EUDOXUS_H
#define EUDOXUS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct eud_real eud_real;

typedef enum eud_status {
    EUD_OK = 0,
    EUD_PARSE_ERROR = 1,
    EUD_EVAL_ERROR = 2,     /* domain errors, undecidable sign, div by zero */
    EUD_BUDGET_EXCEEDED = 3,
    EUD_INVALID_ARGUMENT = 4,
    EUD_INTERNAL_ERROR = 5
} eud_status;

const char* eud_version(void);
const char* eud_last_error(void);
void eud_string_free(char* s);
void eud_real_release(eud_real* x);

/* --- construction ------------------------------------------------------ */

/* Parse and evaluate an arithmetic expression (grammar: + - * /, integer
 * and num/den literals, sqrt(...), parentheses). */
eud_status eud_real_from_expr(const char* text, int budget_exponent,
                              eud_real** out);
eud_status eud_real_from_int(const char* decimal, eud_real** out);
eud_status eud_real_from_ratio(const char* num_decimal,
                               const char* den_decimal, eud_real** out);
eud_status eud_real_sqrt_int(const char* n_decimal, eud_real** out);
eud_status eud_real_add(const eud_real* x, const eud_real* y, eud_real** out);
eud_status eud_real_neg(const eud_real* x, eud_real** out);
eud_status eud_real_mul(const eud_real* x, const eud_real* y, eud_real** out);
eud_status eud_real_recip(const eud_real* x, int budget_exponent,
                          eud_real** out);

/* --- queries ------------------------------------------------------------ */

eud_status eud_real_eval(const eud_real* x, const char* p_decimal,
                         char** out_decimal);
eud_status eud_real_cert(const eud_real* x, char** out_decimal);
eud_status eud_real_label(const eud_real* x, char** out);
/* 1 if eval(p) is exactly floor(p * x) for p >= 0, else 0; -1 on null. */
int eud_real_floor_exact(const eud_real* x);

/* Certified enclosure [(f(q)-C)/q, (f(q)+C)/q]; endpoints as "num/den". */
eud_status eud_real_enclose(const eud_real* x, const char* q_decimal,
                            char** out_lo, char** out_hi);
/* Enclosure of width <= eps (eps as "num/den" or decimal text). */
eud_status eud_real_refine(const eud_real* x, const char* eps,
                           int budget_exponent, char** out_lo, char** out_hi);

/* Decimal string within 10^-ndigits of the value; a trailing " ±1ulp"
 * marks an unpinned final digit. */
eud_status eud_real_digits(const eud_real* x, int ndigits,
                           int budget_exponent, char** out);

/* *out_sign: +1 / -1 when certified, 0 when inconclusive within budget
 * (then *out_lo / *out_hi give the tightest enclosure computed). */
eud_status eud_real_sign(const eud_real* x, int budget_exponent,
                         int* out_sign, char** out_lo, char** out_hi);

/* *out_decided: 1 when floor(x) was certified (value in *out_floor). */
eud_status eud_real_floor(const eud_real* x, int budget_exponent,
                          int* out_decided, char** out_floor);

/* Values f(1)..f(count) of the normal-form representative, one per line.
 * Exact for integer / rational / sqrt-of-integer reals; anything else is
 * canonicalized first. */
eud_status eud_real_colonnade(const eud_real* x, int count,
                              int budget_exponent, char** out_lines);

/* Sampling audit of the certificate claim; report line format is
 * `label cert max_observed samples verdict`. *out_violated is 1 when the
 * observed defect exceeded the certificate. */
eud_status eud_real_certify(const eud_real* x, const char* label, long range,
                            long samples, unsigned long seed,
                            int* out_violated, char** out_report_line);

/* --- matrix recovery (Z^n -> Z^m layer) --------------------------------- */

/* Read a rational matrix from a grid file (first line `m n`, then m rows of
 * n rationals), lift it with seeded noise of amplitude `noise`, recover every
 * entry to an interval of width <= eps, and render a report (plain grid or
 * json-lines). *out_all_contained is 1 when every recovered interval
 * contains the source entry; unconverged entries yield EUD_BUDGET_EXCEEDED
 * with the partial report still written. */
eud_status eud_matrix_recover_report(const char* path, long noise,
                                     const char* eps, unsigned long seed,
                                     int budget_exponent, int json_lines,
                                     int* out_all_contained, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* EUDOXUS_H */
