/* C interface for the exact Hurwitz-number library (hurwitz-ffi).
 *
 * Usage pattern:
 *   HurwitzContext *ctx = hurwitz_context_new();
 *   uint32_t mu[] = {1, 1};
 *   char *value = hurwitz_one_part(ctx, 1, mu, 2);   // "1/6"
 *   if (!value) { fputs(hurwitz_last_error(ctx), stderr); }
 *   hurwitz_string_free(value);
 *   hurwitz_context_free(ctx);
 *
 * All returned strings are exact rationals rendered as "p/q" (or "n" for
 * integers) and must be released with hurwitz_string_free. A context is not
 * thread-safe; create one per thread.
 */

#ifndef HURWITZ_H
#define HURWITZ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes reported by hurwitz_last_status. */
#define HURWITZ_OK 0
#define HURWITZ_ERR_ARGUMENT 1
#define HURWITZ_ERR_BUDGET 2
#define HURWITZ_ERR_PANIC 3

/* Opaque handle owning the enumeration budget and the last error. */
typedef struct HurwitzContext HurwitzContext;

/* Lifecycle. */
HurwitzContext *hurwitz_context_new(void);
void hurwitz_context_free(HurwitzContext *ctx);
void hurwitz_context_set_budget(HurwitzContext *ctx, uint64_t budget);

/* Error reporting: status and message of the most recent call. The message
 * pointer is owned by the context and valid until the next call through it;
 * it is NULL when the previous call succeeded. */
int hurwitz_last_status(const HurwitzContext *ctx);
const char *hurwitz_last_error(const HurwitzContext *ctx);

/* Releases a string returned by any query function below. */
void hurwitz_string_free(char *s);

/* One-part double Hurwitz number: profile mu[0..mu_len] over infinity,
 * single part (|mu|) over zero. NULL on error. */
char *hurwitz_one_part(HurwitzContext *ctx, uint32_t genus, const uint32_t *mu,
                       size_t mu_len);

/* Connected double Hurwitz number via the cut-and-join class algebra. */
char *hurwitz_double(HurwitzContext *ctx, uint32_t genus, const uint32_t *mu,
                     size_t mu_len, const uint32_t *nu, size_t nu_len);

/* Double Hurwitz number by direct enumeration of transitive transposition
 * factorizations; refuses queries whose tuple estimate exceeds the budget. */
char *hurwitz_oracle(HurwitzContext *ctx, uint32_t genus, const uint32_t *mu,
                     size_t mu_len, const uint32_t *nu, size_t nu_len);

/* One-part spin Hurwitz number of spin order r (exactly zero when the
 * branch-point count (2g - 1 + n)/r is not integral). */
char *hurwitz_spin_one_part(HurwitzContext *ctx, uint32_t genus,
                            const uint32_t *mu, size_t mu_len, uint32_t r);

/* Symbolic one-part polynomial for (genus, n) as a JSON document with the
 * monomial-symmetric exponent keys and exact rational coefficients. */
char *hurwitz_polynomial_json(HurwitzContext *ctx, uint32_t genus, size_t n);

/* Runs a verification suite ("comparison", "exchange", "appendix", "chiodo",
 * "spin" or "section6") on its default grid; returns the JSON report whose
 * "failed" field is 0 exactly when every checked identity held. */
char *hurwitz_verify_json(HurwitzContext *ctx, const char *suite);

/* Library version (static storage; do not free). */
const char *hurwitz_version(void);

#ifdef __cplusplus
}
#endif

#endif /* HURWITZ_H */
