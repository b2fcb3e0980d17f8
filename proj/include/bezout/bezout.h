#ifndef BEZOUT_BEZOUT_H
#define BEZOUT_BEZOUT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BZ_API __declspec(dllexport)
#else
#define BZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bz_status {
  BZ_OK = 0,
  BZ_E_INVALID_ARGUMENT = 1,
  BZ_E_MISMATCH = 2,
  BZ_E_OUT_OF_RANGE = 3,
  BZ_E_INVALID_SPEC = 4,
  BZ_E_SIZE_CAP = 5,
  BZ_E_OUT_OF_DOMAIN = 6,
  BZ_E_MATH_FAILURE = 7,
  BZ_E_PARSE = 8,
  BZ_E_INTERNAL = 9,
  BZ_E_NULL = 10
} bz_status;

typedef struct bz_context bz_context;
typedef struct bz_report bz_report;
typedef struct bz_spec bz_spec;
typedef struct bz_poly bz_poly;

BZ_API const char* bz_version(void);
BZ_API const char* bz_status_name(bz_status s);

/* Context: run settings and the last error message. */
BZ_API bz_context* bz_context_new(void);
BZ_API void bz_context_free(bz_context* ctx);
BZ_API bz_status bz_context_set_seed(bz_context* ctx, uint64_t seed);
BZ_API bz_status bz_context_set_prime(bz_context* ctx, uint64_t p);
BZ_API bz_status bz_context_set_margin_cap(bz_context* ctx, int cap);
BZ_API bz_status bz_context_set_seeds(bz_context* ctx, int seeds);
/* "json" or "text". */
BZ_API bz_status bz_context_set_format(bz_context* ctx, const char* format);
BZ_API const char* bz_last_error(const bz_context* ctx);

/* Runs a subcommand. keys/values are option names without dashes (spec, sys, base, target, var,
   method, mm, samples); positional holds e.g. the demo name. */
BZ_API bz_status bz_run(bz_context* ctx, const char* subcommand, const char* const* positional, size_t npositional,
                        const char* const* keys, const char* const* values, size_t noptions, bz_report** out);
BZ_API int bz_report_exit_code(const bz_report* r);
BZ_API const char* bz_report_text(const bz_report* r);
BZ_API void bz_report_free(bz_report* r);

/* Species specs in their JSON form. */
BZ_API bz_status bz_spec_parse(bz_context* ctx, const char* json, bz_spec** out);
BZ_API void bz_spec_free(bz_spec* s);
BZ_API bz_status bz_spec_validate(bz_context* ctx, const bz_spec* s, int* valid);
BZ_API bz_status bz_spec_count(bz_context* ctx, const bz_spec* s, int64_t* closed, int64_t* enumerated);
/* Closed-form degree bound of a square system given as a JSON list of specs. */
BZ_API bz_status bz_degree(bz_context* ctx, const char* system_json, int64_t* degree);

/* Polynomials over Q (p = 0) or F_p; names is a comma-separated variable list. */
BZ_API bz_status bz_poly_parse(bz_context* ctx, const char* text, const char* names, uint64_t p, bz_poly** out);
BZ_API void bz_poly_free(bz_poly* f);
BZ_API bz_status bz_poly_add(bz_context* ctx, const bz_poly* f, const bz_poly* g, bz_poly** out);
BZ_API bz_status bz_poly_sub(bz_context* ctx, const bz_poly* f, const bz_poly* g, bz_poly** out);
BZ_API bz_status bz_poly_mul(bz_context* ctx, const bz_poly* f, const bz_poly* g, bz_poly** out);
BZ_API bz_status bz_poly_substitute(bz_context* ctx, const bz_poly* f, size_t var, const bz_poly* g, bz_poly** out);
BZ_API bz_status bz_poly_random(bz_context* ctx, const bz_spec* s, uint64_t seed, bz_poly** out);
/* Text form; the string stays valid until the polynomial is freed or printed again. */
BZ_API bz_status bz_poly_to_string(bz_context* ctx, const bz_poly* f, const char** out);

#ifdef __cplusplus
}
#endif

#endif
