/* nefcert — exact-arithmetic nefness certificates for symmetric divisors
 * on the moduli space of stable n-pointed rational curves.
 *
 * All functions are thread-safe. Results are returned as malloc'd JSON
 * documents (free with nefcert_string_free); rationals appear as exact
 * "p/q" strings and all object keys are sorted, so equal inputs produce
 * byte-identical output. On NEFCERT_INPUT_ERROR and
 * NEFCERT_INTERNAL_ERROR, nefcert_last_error() describes the problem for
 * the calling thread.
 */
#ifndef NEFCERT_H
#define NEFCERT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nefcert_status {
    NEFCERT_OK = 0,
    /* well-formed input, negative mathematical verdict (not F-nef,
     * infeasible strict base, verification discrepancy) */
    NEFCERT_MATH_FAIL = 1,
    NEFCERT_INPUT_ERROR = 2,
    NEFCERT_INTERNAL_ERROR = 3
} nefcert_status;

/* Parsed symmetric divisor {"n": int, "coeffs": {"2": "p/q", ...}}. */
typedef struct nefcert_divisor nefcert_divisor;

nefcert_status nefcert_divisor_parse(const char* json, size_t len, nefcert_divisor** out);
void nefcert_divisor_free(nefcert_divisor* divisor);
int nefcert_divisor_n(const nefcert_divisor* divisor);
/* Canonical serialization of the divisor. */
nefcert_status nefcert_divisor_emit(const nefcert_divisor* divisor, char** json_out);

/* F-nefness: OK with {"fnef":true,...}, or MATH_FAIL with the first
 * violating F-curve {"fnef":false,"witness":[a,b,c,d],"value":"p/q"}. */
nefcert_status nefcert_check_fnef(const nefcert_divisor* divisor, char** report_out);

/* Full pipeline. mode is "strict" or "all"; exhaustive != 0 lists every
 * failure instead of the first. OK yields the certificate document,
 * MATH_FAIL a {"status":"failure","failures":[...]} report. */
nefcert_status nefcert_certify(const nefcert_divisor* divisor, const char* mode,
                               int exhaustive, char** document_out);

/* Audit a certificate document against its embedded divisor. OK yields
 * {"status":"ok",...}; MATH_FAIL {"status":"discrepancy",...};
 * INPUT_ERROR for structurally invalid certificates. */
nefcert_status nefcert_verify(const char* cert_json, size_t len, char** report_out);

/* Facets and extremal rays of the symmetric F-nef cone:
 * {"n":int,"facets":[[int,...],...],"rays":[[int,...],...]}. */
nefcert_status nefcert_rays(int n, char** json_out);

/* Stratum pullback b-map for the partition lambda (decreasing positive
 * parts summing to n), or a degenerate-stratum marker for length <= 2. */
nefcert_status nefcert_pullback(const nefcert_divisor* divisor, const int* lambda,
                                size_t lambda_len, char** json_out);

/* {"k":k,"bound":(k+1)(k+2)/2-1}; k >= 3. */
nefcert_status nefcert_bound(int k, char** json_out);

/* Largest possible length of a strict partition of n; -1 for n < 1. */
int nefcert_max_strict_length(long long n);

/* Thread-local description of the last INPUT/INTERNAL error. */
const char* nefcert_last_error(void);

const char* nefcert_version(void);

void nefcert_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* NEFCERT_H */
