#ifndef QTSQ_H
#define QTSQ_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/*
 * C interface to the root-of-unity representation engine. All structured
 * input and output travels as UTF-8 JSON strings; complex numbers are
 * [re, im] pairs and matrices are {"rows", "cols", "data"} with row-major
 * data. Output strings are allocated by the library and must be released
 * with qtsq_string_free.
 */

typedef struct qtsq_ctx qtsq_ctx;

typedef enum qtsq_status {
  QTSQ_OK = 0,
  QTSQ_ERR_INVALID = 1,   /* bad arguments or precondition violation */
  QTSQ_ERR_PARSE = 2,     /* malformed JSON or literal */
  QTSQ_ERR_NUMERIC = 3,   /* a numerical invariant failed to hold */
  QTSQ_VERIFY_FAILED = 4, /* run completed, verification did not pass */
  QTSQ_ERR_INTERNAL = 5
} qtsq_status;

const char* qtsq_version(void);

/* Thread-local message for the most recent failing call in this thread. */
const char* qtsq_last_error(void);

void qtsq_string_free(char* s);

/*
 * Parses comma-separated complex literals ("1,2.5,-1+0.5j,2j") into a JSON
 * array of [re, im] pairs.
 */
qtsq_status qtsq_parse_complex_list(const char* literal, char** out_json);

/*
 * Root context at the primitive 2n-th root q = exp(i pi (n+1) k / n);
 * requires n >= 2, gcd(k, n) = 1 and tol in (0, 1e-2]. Pass tol <= 0 for
 * the default 1e-8.
 */
qtsq_status qtsq_ctx_new(int n, int k, double tol, qtsq_ctx** out);
void qtsq_ctx_free(qtsq_ctx* ctx);

/* {"n", "k", "q", "q_squared", "tol_rank", "tol_residual"} */
qtsq_status qtsq_root_context(const qtsq_ctx* ctx, char** out_json);

/*
 * in: {"x": c, "y": c} -> {"params", "X", "Y"}; the n-dimensional model
 * with X^n = x, Y^n = y.
 */
qtsq_status qtsq_standard_rep(const qtsq_ctx* ctx, const char* in_json,
                              char** out_json);

/*
 * in: {"mu": params, "nu": params} for a regular pair -> the equivariant
 * solution space: {"mu", "nu", "params", "product", "basis", "induced_x",
 * "induced_y", "omega"} in the pinned canonical basis.
 */
qtsq_status qtsq_cg(const qtsq_ctx* ctx, const char* in_json,
                    char** out_json);

/*
 * in: {"mu", "nu", "sigma"} for a regular triple -> {"mu", "nu", "sigma",
 * "r", "factor_residual"}; r is the n^2 x n^2 recoupling operator.
 */
qtsq_status qtsq_sixj(const qtsq_ctx* ctx, const char* in_json,
                      char** out_json);

/*
 * in: {"mu", "nu", "sigma", "tau", "tol"?} -> {"residual", "scalar",
 * "pass"}; composes the five recoupling operators around the pentagon and
 * reports the proportionality scalar. QTSQ_VERIFY_FAILED when the two
 * composites are not proportional within tol (default 1e-7).
 */
qtsq_status qtsq_pentagon(const qtsq_ctx* ctx, const char* in_json,
                          char** out_json);

/*
 * Pentagon composites on seeded regular quadruples -> {"n", "seed",
 * "pass", "cases": [{"residual", "scalar", "pass"}, ...]}.
 * QTSQ_VERIFY_FAILED (report still written) when any case fails.
 */
qtsq_status qtsq_pentagon_suite(const qtsq_ctx* ctx, uint64_t seed,
                                int cases, char** out_json);

/*
 * in: {"params": [c, c, c, c], "h": c, "inverse"?: bool} -> {"params",
 * "h", "x5"}; transports a square classification datum across the diagonal
 * flip (or back).
 */
qtsq_status qtsq_flip(const qtsq_ctx* ctx, const char* in_json,
                      char** out_json);

/*
 * in: {"params": [c, c, c, c], "h"?: c (default 1)} -> {"l", "params",
 * "flipped", "h"}; realizes the datum on both triangulations and solves for
 * the unique unit-norm intertwiner between them.
 */
qtsq_status qtsq_intertwiner(const qtsq_ctx* ctx, const char* in_json,
                             char** out_json);

/*
 * in: {"direction": "1to3"|"3to1"|"2to3"|"3to2"|"all", "seed": u64,
 * "cases": int>=0} -> suite report {"n", "seed", "pass", "reports"}.
 * QTSQ_VERIFY_FAILED (with the report still written) when any case fails.
 */
qtsq_status qtsq_verify(const qtsq_ctx* ctx, const char* in_json,
                        char** out_json);

/*
 * Full seeded invariant run: the four-direction suite plus pentagon
 * composites. out: {"n", "seed", "pass", "suite", "pentagon"}.
 */
qtsq_status qtsq_selftest(const qtsq_ctx* ctx, uint64_t seed, int cases,
                          char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* QTSQ_H */
