/*
 * C API for the unicircle library: construction, testing and certification
 * of self-inversive polynomials with unimodular zeros.
 *
 * Conventions:
 *   - All functions return uc_status (UC_OK on success). On failure,
 *     uc_last_error() returns a thread-local message.
 *   - Polynomials are opaque handles created from / serialized to the JSON
 *     document {"precision_bits": N, "coeffs": [["re","im"], ...]} with
 *     coefficients ascending by power and decimal strings that round-trip
 *     the binary values exactly.
 *   - Report-producing calls hand back a heap-allocated JSON (or CSV)
 *     string through `out`; release it with uc_string_free().
 *   - Passing 0 for precision_bits, samples, max_iter, grid sizes or
 *     verify_cap selects the library default.
 */

#ifndef UNICIRCLE_UNICIRCLE_H
#define UNICIRCLE_UNICIRCLE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct uc_poly uc_poly;

typedef enum uc_status {
  UC_OK = 0,
  UC_ERR_INVALID_ARGUMENT = 1,
  UC_ERR_PARSE = 2,
  UC_ERR_DOMAIN = 3,
  UC_ERR_NO_CONVERGENCE = 4,
  UC_ERR_INTERNAL = 5
} uc_status;

const char* uc_version(void);
/* Thread-local message for the most recent failure in this thread. */
const char* uc_last_error(void);
void uc_string_free(char* s);

/* ---- polynomial handles ---- */
uc_status uc_poly_from_json(const char* json, uc_poly** out);
uc_status uc_poly_to_json(const uc_poly* p, char** out);
uc_status uc_poly_degree(const uc_poly* p, int* out);
void uc_poly_free(uc_poly* p);

/* ---- poly_core operations ---- */
uc_status uc_poly_detect_self_inversive(const uc_poly* p, char** json_out);
uc_status uc_poly_construct_theorem1(const uc_poly* h, long d, const char* lambda_re,
                                     const char* lambda_im, uc_poly** out);

/* ---- root finding ---- */
uc_status uc_roots(const uc_poly* p, long precision_bits, long max_iter, char** json_out);

/* ---- criteria ----
 * ids: comma-separated subset of
 *   cohn,lakatos,lakatos_losonczi_half,lakatos_losonczi_alpha,smyth_inf_mu,schinzel
 * or NULL/"all" for every criterion. Returns a JSON array of verdicts. */
uc_status uc_criteria(const uc_poly* p, const char* ids, long grid_size, long precision_bits,
                      char** json_out);
uc_status uc_observation_scan(const uc_poly* h, const char* lambda_re, const char* lambda_im,
                              long d_max, long precision_bits, char** json_out);

/* ---- certificates ---- */
uc_status uc_certify(const uc_poly* h, const uc_poly* e /* may be NULL */,
                     const char* lambda_re, const char* lambda_im, long k, const char* c,
                     long samples, long verify_cap_degree, int* valid_out, char** json_out);
/* family is "P", "Q" or "W"; r <= 0 and c == NULL select the family
 * defaults (P: r=4 c=0.020, Q: r=2 c=0.15, W: r=3 c=0.52). */
uc_status uc_certify_family(const char* family, long k, long r, const char* c, long samples,
                            long precision_bits, long verify_cap_degree, int* valid_out,
                            char** json_out);

/* ---- families ---- */
uc_status uc_family_build(const char* family, long k, long precision_bits, uc_poly** out);
uc_status uc_family_monic_base(const char* family, long k, long precision_bits, uc_poly** out);
uc_status uc_family_decompose(const char* family, long k, long r, long precision_bits,
                              char** json_out);
uc_status uc_family_sequences(const char* family, long k, long precision_bits, char** json_out);
/* format: "json" or "csv" (columns part,k,j,lhs,rhs,margin). */
uc_status uc_scan_lemma3(long k_min, long k_max, long precision_bits, const char* format,
                         int* violations_out, char** out);
uc_status uc_scan_lemma5(long k_min, long k_max, long precision_bits, const char* format,
                         int* violations_out, char** out);
uc_status uc_scan_lemma6(long k_min, long k_max, long samples, long precision_bits,
                         const char* format, int* violations_out, char** out);
uc_status uc_ramanujan_residual(long k, const char* z_re, const char* z_im, long terms,
                                long precision_bits, char** json_out);
uc_status uc_counterexample(long k, long precision_bits, uc_poly** out);

/* One k of the verify-family driver: build, direct root check, certificate
 * where the family has one. pass_out is 1 iff every available path passed. */
uc_status uc_verify_family_k(const char* family, long k, long precision_bits,
                             long tol_exponent /* tolerance 2^-tol_exponent; 0 = default */,
                             long samples, long verify_cap_degree, int* pass_out,
                             char** json_out);

/* ---- special values ----
 * name: bernoulli | euler | zeta | zeta-even | eta | eta0 | l-chi4.
 * arg is an integer index for bernoulli/euler/zeta-even/l-chi4 and a decimal
 * s > 1 for zeta/eta/eta0. */
uc_status uc_special(const char* name, const char* arg, long precision_bits, char** json_out);

#ifdef __cplusplus
}
#endif

#endif
