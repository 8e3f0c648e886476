/* C interface to the reciprocity library.
 *
 * Every call takes a context and returns a status (RECIP_OK or one of the
 * error codes below). Numbers cross the boundary as decimal strings ("n" or
 * "n/d"); places as a prime or "inf". The textual result of the last
 * successful call (JSON, or JSON lines for campaigns) stays readable through
 * recip_result until the next call on the same context; the message of the
 * last failure through recip_last_error. A context must not be shared
 * between threads without external locking.
 */
#ifndef RECIP_H
#define RECIP_H

#include <stdint.h>

#if defined(__GNUC__)
#define RECIP_API __attribute__((visibility("default")))
#else
#define RECIP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum recip_status {
  RECIP_OK = 0,
  RECIP_ZERO_INPUT = 1,
  RECIP_BAD_MODULUS = 2,
  RECIP_BAD_PRIME = 3,
  RECIP_UNFACTORED = 4,
  RECIP_NOT_TWO_ADIC_SQUARE = 5,
  RECIP_UNDEFINED_SYMBOL = 6,
  RECIP_NOT_QUADRATIC_RESIDUE = 7,
  RECIP_DOMAIN = 8,
  RECIP_NOT_SOLVABLE = 9,
  RECIP_SEARCH_EXHAUSTED = 10,
  RECIP_NOT_IN_DOMAIN = 11,
  RECIP_NO_ALPHA2_CASE = 12,
  RECIP_F1_F2_MISMATCH = 13,
  RECIP_NOT_IN_KERNEL = 14,
  RECIP_UNKNOWN_LAW = 15,
  RECIP_BAD_SOLUTION = 16,
  RECIP_BAD_ARGUMENT = 17,
  RECIP_INTERNAL = 18
};

typedef struct recip_context recip_context;

RECIP_API recip_context* recip_context_new(void);
RECIP_API void recip_context_free(recip_context* ctx);

RECIP_API const char* recip_last_error(const recip_context* ctx);
RECIP_API const char* recip_result(const recip_context* ctx);
RECIP_API const char* recip_status_name(int status);

/* Symbols; *out is +1, -1 (or 0 for a Legendre symbol with p | a). */
RECIP_API int recip_legendre(recip_context* ctx, const char* a, const char* p, int* out);
RECIP_API int recip_hilbert(recip_context* ctx, const char* a, const char* b, const char* place, int* out);
/* ((a + b sqrt m)/p) */
RECIP_API int recip_legendre_ext(recip_context* ctx, const char* a, const char* b, const char* m, const char* p, int* out);
/* (m/p)_4; p = 2 gives <m/2>_4. */
RECIP_API int recip_quartic(recip_context* ctx, const char* m, const char* p, int* out);

/* Point on x^2 - a y^2 = b z^2; recip_result holds {"x","y","z"}. */
RECIP_API int recip_conic_solve(recip_context* ctx, const char* a, const char* b);

/* f(B, A, C); recip_result holds f1, f2 and, with trace != 0, the factors. */
RECIP_API int recip_f_eval(recip_context* ctx, const char* b, const char* a, const char* c, int trace, int* out);

/* Campaigns: *pass is 1 when every record passed; recip_result holds the
 * JSON-lines report. */
RECIP_API int recip_verify_d(recip_context* ctx, long bound, int count, uint64_t seed, int* pass);
RECIP_API int recip_verify_law(recip_context* ctx, const char* name, long max_prime, int* pass);
RECIP_API int recip_verify_example28(recip_context* ctx, long bound, uint64_t seed, int* pass);
RECIP_API int recip_verify_thm210(recip_context* ctx, long bound, int count, uint64_t seed, int* pass);

#ifdef __cplusplus
}
#endif

#endif
