#ifndef WDSAW_WDSAW_H
#define WDSAW_WDSAW_H

/*
 * C interface to the wdsaw library.
 *
 * Every function returns a wds_status. On failure a message is available
 * from wds_last_error() until the next call on the same thread. Strings
 * returned through char** must be released with wds_string_free; handles
 * with their matching *_free function. Passing NULL to a free function is
 * allowed.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WDS_API __declspec(dllexport)
#else
#define WDS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wds_status {
  WDS_OK = 0,
  WDS_INVALID_ARGUMENT = 1,
  WDS_ZERO_CONSTANT_TERM = 2,
  WDS_BAD_CONSTANT_TERM = 3,
  WDS_EMPTY_SERIES = 4,
  WDS_UNSUPPORTED_FAMILY = 5,
  WDS_LIMIT_EXCEEDED = 6,
  WDS_NO_ROOT_IN_RANGE = 7,
  WDS_NON_CONVERGENCE = 8,
  WDS_TARGET_UNREACHABLE = 9,
  WDS_INTERNAL = 10,
  WDS_OUT_OF_MEMORY = 11
} wds_status;

WDS_API const char* wds_version(void);
WDS_API const char* wds_status_name(wds_status status);
/* Message of the last failure on this thread, "" if none. */
WDS_API const char* wds_last_error(void);
WDS_API void wds_string_free(char* s);

/* ---- walk classes and series ---------------------------------------- */

WDS_API size_t wds_class_count(void);
/* Name, model ("horizontal"/"diagonal"), whether a series exists, and a
   one-line description of class i. Strings are static. */
WDS_API wds_status wds_class_info(size_t i, const char** name, const char** model, int* has_series,
                                  const char** description);

typedef struct wds_series wds_series;

/* Generating function of a named class (see wds_class_info) to the given
   order. */
WDS_API wds_status wds_series_create(const char* name, int order, wds_series** out);
WDS_API void wds_series_free(wds_series* s);
WDS_API wds_status wds_series_order(const wds_series* s, int* out);
/* Coefficient of t^i in decimal, "p/q" if not an integer. */
WDS_API wds_status wds_series_coefficient(const wds_series* s, int i, char** out);

/* Brute-force counts for lengths 0..nmax into out[0..nmax]; len must be
   at least nmax + 1. nmax is limited to 16. */
WDS_API wds_status wds_oracle_counts(const char* name, int nmax, uint64_t* out, size_t len);
/* Whether a step word (over NESW) belongs to the class; 0 or 1. */
WDS_API wds_status wds_class_member(const char* name, const char* steps, int* out);

/* ---- certified constants --------------------------------------------- */

typedef struct wds_constants wds_constants;

typedef enum wds_quantity { WDS_RHO = 0, WDS_MU = 1, WDS_MEAN = 2, WDS_VARIANCE = 3 } wds_quantity;

/* Pole bracket, growth constant and factor moments from truncation order
   n. model is "horizontal" or "diagonal". */
WDS_API wds_status wds_constants_compute(const char* model, int n, wds_constants** out);
WDS_API void wds_constants_free(wds_constants* c);
/* Interval endpoints in decimal rounded outward to digits places. */
WDS_API wds_status wds_constants_decimal(const wds_constants* c, wds_quantity q, int digits, char** lo, char** hi);
/* Exact endpoints as "p/q". */
WDS_API wds_status wds_constants_exact(const wds_constants* c, wds_quantity q, char** lo, char** hi);

/* ---- zeros of G_k ---------------------------------------------------- */

typedef struct wds_roots wds_roots;

/* family: "horizontal", "diagonal-esw", "diagonal-nes" or "diagonal-es".
   On WDS_NON_CONVERGENCE the message carries the worst residual. */
WDS_API wds_status wds_roots_compute(int k, const char* family, double tolerance, wds_roots** out);
WDS_API void wds_roots_free(wds_roots* r);
WDS_API size_t wds_roots_count(const wds_roots* r);
WDS_API wds_status wds_roots_get(const wds_roots* r, size_t i, double* re, double* im, double* residual);
WDS_API wds_status wds_roots_max_residual(const wds_roots* r, double* out);
/* Distances of the non-real roots of the horizontal G_k to the boundary set. */
WDS_API wds_status wds_root_distance(int k, int* nonreal, double* max_distance, double* mean_distance,
                                     double* max_residual);
/* Boundary set with the given root sets overlaid. */
WDS_API wds_status wds_zeros_svg(const wds_roots* const* sets, size_t count, char** out);

/* ---- sampler --------------------------------------------------------- */

typedef struct wds_sampler wds_sampler;

/* Tunes x so that the mean length is target_n, using the pole bracket at
   the given truncation order. */
WDS_API wds_status wds_sampler_tune(int target_n, double epsilon, uint64_t seed, int truncation,
                                    wds_sampler** out);
/* Explicit Boltzmann parameter. */
WDS_API wds_status wds_sampler_create(double x, int target_n, double epsilon, uint64_t seed, wds_sampler** out);
WDS_API void wds_sampler_free(wds_sampler* s);
WDS_API wds_status wds_sampler_x(const wds_sampler* s, double* out);
WDS_API const char* wds_sampler_rng_name(const wds_sampler* s);
/* One weakly directed bridge with no length window. */
WDS_API wds_status wds_sampler_bridge(wds_sampler* s, char** steps);
/* One bridge in the length window; trials may be NULL. */
WDS_API wds_status wds_sampler_window(wds_sampler* s, char** steps, uint64_t* trials);
WDS_API wds_status wds_sampler_stats(const wds_sampler* s, uint64_t* trials, uint64_t* redraws, uint64_t* steps);

/* ---- walks ----------------------------------------------------------- */

WDS_API wds_status wds_walk_svg(const char* steps, char** out);

#ifdef __cplusplus
}
#endif

#endif
