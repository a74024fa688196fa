/*
 * bnineq — numerical verification of sharp B_n-operator inequalities for
 * complex polynomials.
 *
 * C interface of the shared library. All functions returning bnq_status
 * report BNQ_OK on success; on failure a thread-local message is available
 * through bnq_last_error(). Handles are opaque and must be released with
 * the matching *_free function; strings returned as char* are owned by the
 * caller and released with bnq_string_free().
 *
 * Complex numbers cross the boundary as re/im double pairs. Structured
 * payloads (cases, suite configs, reports) cross as JSON text; the schemas
 * are documented in the project README.
 */

#ifndef BNINEQ_H
#define BNINEQ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef BNQ_API
#define BNQ_API __attribute__((visibility("default")))
#endif

typedef enum bnq_status {
    BNQ_OK = 0,
    BNQ_ERR_INVALID_ARGUMENT = 1, /* bad value, unknown id, config conflict */
    BNQ_ERR_HYPOTHESIS = 2,       /* statement precondition not satisfied */
    BNQ_ERR_PARSE = 3,            /* malformed JSON payload */
    BNQ_ERR_NO_CONVERGENCE = 4,   /* iteration cap reached */
    BNQ_ERR_INTERNAL = 5
} bnq_status;

typedef struct bnq_poly bnq_poly;
typedef struct bnq_operator bnq_operator;

BNQ_API const char* bnq_version(void);
BNQ_API const char* bnq_status_name(bnq_status status);

/* Message describing the most recent failure on the calling thread. */
BNQ_API const char* bnq_last_error(void);

BNQ_API void bnq_string_free(char* text);

/* ---- polynomials ------------------------------------------------------- */

/* coeffs holds n_coeffs (re, im) pairs in ascending degree. */
BNQ_API bnq_status bnq_poly_create(const double* coeffs, size_t n_coeffs, bnq_poly** out);
BNQ_API bnq_status bnq_poly_from_roots(double leading_re, double leading_im,
                                       const double* roots, size_t n_roots, bnq_poly** out);
/* {"n": degree, "coeffs": [[re, im], ...]} */
BNQ_API bnq_status bnq_poly_from_json(const char* json_text, bnq_poly** out);
BNQ_API char* bnq_poly_to_json(const bnq_poly* p);
BNQ_API int bnq_poly_degree(const bnq_poly* p);
/* writes degree+1 (re, im) pairs; capacity is in pairs */
BNQ_API bnq_status bnq_poly_coeffs(const bnq_poly* p, double* out, size_t capacity);
BNQ_API bnq_status bnq_poly_eval(const bnq_poly* p, double z_re, double z_im, double out[2]);
BNQ_API bnq_status bnq_poly_derivative(const bnq_poly* p, bnq_poly** out);
BNQ_API bnq_status bnq_poly_conj_reciprocal(const bnq_poly* p, int ambient_degree, bnq_poly** out);
BNQ_API bnq_status bnq_poly_scale_compose(const bnq_poly* p, double c_re, double c_im,
                                          bnq_poly** out);
BNQ_API void bnq_poly_free(bnq_poly* p);

/* ---- B_n operators ------------------------------------------------------ */

/*
 * lambdas holds three (re, im) pairs for lambda0, lambda1, lambda2.
 * Fails with BNQ_ERR_INVALID_ARGUMENT when a zero of
 * U(z) = lambda0 + n lambda1 z + (n(n-1)/2) lambda2 z^2 leaves the half
 * plane |z| <= |z - n/2|; the message carries the offending zero.
 */
BNQ_API bnq_status bnq_operator_validate(int n, const double lambdas[6], bnq_operator** out);
/* {"n": n, "lambda": [[re, im], [re, im], [re, im]]} */
BNQ_API bnq_status bnq_operator_from_json(const char* json_text, bnq_operator** out);
BNQ_API char* bnq_operator_to_json(const bnq_operator* b);
BNQ_API int bnq_operator_n(const bnq_operator* b);
BNQ_API bnq_status bnq_operator_apply(const bnq_operator* b, const bnq_poly* p, bnq_poly** out);
/* m with B[z^n] = m z^n */
BNQ_API bnq_status bnq_operator_monomial_image(const bnq_operator* b, double out[2]);
BNQ_API void bnq_operator_free(bnq_operator* b);

/* ---- circle extrema and roots ------------------------------------------ */

BNQ_API bnq_status bnq_max_modulus(const bnq_poly* p, double k, double tol, double* value,
                                   double* theta);
BNQ_API bnq_status bnq_min_modulus(const bnq_poly* p, double k, double tol, double* value,
                                   double* theta);
/* writes degree (re, im) pairs (roots with multiplicity) */
BNQ_API bnq_status bnq_find_roots(const bnq_poly* p, double* roots, size_t capacity);
BNQ_API bnq_status bnq_all_zeros_in_closed_disk(const bnq_poly* p, double k, int* out);
BNQ_API bnq_status bnq_no_zeros_in_open_disk(const bnq_poly* p, double k, int* out);

/* ---- statements --------------------------------------------------------- */

/* JSON array describing every statement id the evaluators understand. */
BNQ_API char* bnq_statements_json(void);

/*
 * Evaluates a single case payload ("bnineq/case/v1") and returns a
 * "bnineq/case-result/v1" document with one slack record per evaluation
 * point. Hypotheses are checked; for t1/c1 the |P| <= |F| certificate runs.
 */
BNQ_API bnq_status bnq_eval_case(const char* case_json, char** result_json);

/*
 * Runs the random verification suite described by a config document and
 * returns a "bnineq/report/v1" document. The report depends only on the
 * config (seed included), never on the clock.
 */
BNQ_API bnq_status bnq_run_suite(const char* config_json, char** report_json);

/* Extremal-family scan; same config and report schemas. */
BNQ_API bnq_status bnq_sharpness_scan(const char* config_json, char** report_json);

/* CSV rows ("statement,case_index,z_re,z_im,lhs,rhs,slack,rel_slack") for a
 * report produced with "emit_rows": true. */
BNQ_API bnq_status bnq_report_csv(const char* report_json, char** csv_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BNINEQ_H */
