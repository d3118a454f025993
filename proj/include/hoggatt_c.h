/*
 * C interface to the hoggatt library.
 *
 * Every function returns an hh_status.  On failure a human-readable message
 * for the calling thread is available from hh_last_error().  Strings handed
 * out through char** parameters are owned by the caller and released with
 * hh_free().  Big integers always cross the boundary as decimal strings.
 */
#ifndef HOGGATT_C_H
#define HOGGATT_C_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(HOGGATT_BUILDING_LIBRARY)
#    define HH_API __declspec(dllexport)
#  else
#    define HH_API __declspec(dllimport)
#  endif
#else
#  define HH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hh_status {
    HH_OK = 0,
    HH_ERR_INVALID_ARGUMENT = 1,
    HH_ERR_DOMAIN = 2,
    HH_ERR_ZERO_DENOMINATOR = 3,
    HH_ERR_TOO_LARGE = 4,
    HH_ERR_TRUNCATION = 5,
    HH_ERR_NOT_PALINDROMIC = 6,
    HH_ERR_PARSE = 7,
    HH_ERR_INTERNAL = 8
} hh_status;

typedef enum hh_format { HH_FORMAT_JSON = 0, HH_FORMAT_CSV = 1 } hh_format;

typedef enum hh_axis { HH_AXIS_S = 0, HH_AXIS_M = 1, HH_AXIS_R = 2, HH_AXIS_K = 3 } hh_axis;

typedef struct hh_sweep_config hh_sweep_config;
typedef struct hh_sweep_result hh_sweep_result;

HH_API const char* hh_version(void);
HH_API const char* hh_last_error(void);
HH_API void hh_free(char* s);

HH_API hh_status hh_parse_format(const char* name, hh_format* out);

/* <n over k>_r */
HH_API hh_status hh_hoggatt_binomial(long n, long k, long r, char** out);
/* d_k(s, m, r) */
HH_API hh_status hh_hankel_determinant(long s, long m, long r, long k, char** out);
/* C_{r,n} */
HH_API hh_status hh_catalan(long r, long n, char** out);
/* N(r, s, .) as "c0,c1,..." */
HH_API hh_status hh_narayana(long r, long s, char** out);

HH_API hh_status hh_triangle(long r, long rows, hh_format format, char** out);
HH_API hh_status hh_hankel_sequence(long s, long m, long r, long k_lo, long k_hi, hh_format format,
                                    char** out);

/*
 * Gamma vector of the polynomial with comma-separated rational coefficients
 * (constant term first) about center n; n < 0 means "use the degree".
 * *palindromic and *positive receive 0/1.  For a non-palindromic input the
 * call still succeeds with *palindromic = 0 and *out describing it.
 */
HH_API hh_status hh_gamma(const char* coeffs, long n, char** out, int* palindromic, int* positive);

HH_API hh_status hh_sweep_config_create(hh_sweep_config** out);
HH_API void hh_sweep_config_destroy(hh_sweep_config* cfg);
HH_API hh_status hh_sweep_config_set_range(hh_sweep_config* cfg, hh_axis axis, long lo, long hi);
/* "lo..hi" or a single value */
HH_API hh_status hh_sweep_config_parse_range(hh_sweep_config* cfg, hh_axis axis, const char* text);
/* comma-separated registry names, or "all"; "" or "none" enables nothing */
HH_API hh_status hh_sweep_config_set_checks(hh_sweep_config* cfg, const char* checks);
HH_API hh_status hh_sweep_config_set_margin(hh_sweep_config* cfg, long margin);
HH_API hh_status hh_sweep_config_set_budget(hh_sweep_config* cfg, long budget);
/* 0 selects HOGGATT_HANKEL_THREADS or the hardware concurrency */
HH_API hh_status hh_sweep_config_set_threads(hh_sweep_config* cfg, unsigned threads);
/* Comma-separated names of every known check. */
HH_API const char* hh_known_checks(void);

HH_API hh_status hh_sweep_run(const hh_sweep_config* cfg, hh_sweep_result** out);
HH_API void hh_sweep_result_destroy(hh_sweep_result* res);
HH_API hh_status hh_sweep_result_counts(const hh_sweep_result* res, size_t* total, size_t* passed,
                                        size_t* failed, size_t* skipped, size_t* mismatched);
HH_API hh_status hh_sweep_result_render(const hh_sweep_result* res, hh_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
