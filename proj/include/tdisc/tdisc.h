/* C interface to the T-optimal discrimination design library.
 *
 * Every fallible call returns a tdisc_status; on failure a message is
 * available from tdisc_last_error() until the next call on the same thread.
 * Objects are opaque handles released with their matching *_free function.
 * Strings returned through char** are heap-allocated and released with
 * tdisc_string_free().
 */
#ifndef TDISC_TDISC_H
#define TDISC_TDISC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TDISC_BUILDING)
#    define TDISC_API __declspec(dllexport)
#  else
#    define TDISC_API __declspec(dllimport)
#  endif
#else
#  define TDISC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum tdisc_status {
    TDISC_OK = 0,
    TDISC_ERR_ARGUMENT = 2,
    TDISC_ERR_REGIME = 3,
    TDISC_ERR_SOLVER = 4,
    TDISC_ERR_IO = 5,
    TDISC_ERR_INTERNAL = 6
} tdisc_status;

typedef enum tdisc_interval_kind {
    TDISC_INTERVAL_ALL = 0, /* b anywhere on the real line */
    TDISC_INTERVAL_GEQ = 1, /* b >= b0 */
    TDISC_INTERVAL_LEQ = 2  /* b <= -b0 */
} tdisc_interval_kind;

typedef struct tdisc_design tdisc_design;
typedef struct tdisc_approx tdisc_approx;

TDISC_API const char* tdisc_version(void);
TDISC_API const char* tdisc_last_error(void);
TDISC_API void tdisc_string_free(char* s);

/* ---- designs ---- */
TDISC_API tdisc_status tdisc_design_create(const double* points, const double* weights, size_t size,
                                           tdisc_design** out);
TDISC_API tdisc_status tdisc_design_from_json(const char* text, tdisc_design** out);
TDISC_API tdisc_status tdisc_design_from_csv(const char* text, tdisc_design** out);
TDISC_API void tdisc_design_free(tdisc_design* d);
TDISC_API size_t tdisc_design_size(const tdisc_design* d);
/* Copy up to cap values; TDISC_ERR_ARGUMENT if cap < size. */
TDISC_API tdisc_status tdisc_design_points(const tdisc_design* d, double* out, size_t cap);
TDISC_API tdisc_status tdisc_design_weights(const tdisc_design* d, double* out, size_t cap);
TDISC_API tdisc_status tdisc_design_to_json(const tdisc_design* d, char** out);
TDISC_API tdisc_status tdisc_design_to_csv(const tdisc_design* d, char** out);

/* ---- criterion ---- */
TDISC_API tdisc_status tdisc_critical_b(int n, double* out);
/* T-criterion for scale * (x^n + b x^(n-1)) versus degree n-2. */
TDISC_API tdisc_status tdisc_t_criterion(const tdisc_design* d, int n, double b, double scale,
                                         double* out);

/* ---- explicit designs ----
 * For b == 0 alpha in [0, 1] selects the family member; otherwise alpha is
 * ignored. |b| above the critical ratio returns TDISC_ERR_REGIME. */
TDISC_API tdisc_status tdisc_closed_form_design(int n, double b, double alpha, tdisc_design** out);

/* ---- continuation in bbar = 1/b ---- */
TDISC_API tdisc_status tdisc_bbar_limit(int n, double* out);
TDISC_API tdisc_status tdisc_solve_at(int n, double bbar, double tol, tdisc_design** out,
                                      double* criterion);
/* steps evenly spaced values from bbar_min to bbar_max (inclusive). */
TDISC_API tdisc_status tdisc_trajectory_csv(int n, double bbar_min, double bbar_max, int steps,
                                            char** out);

/* ---- maximin ---- */
TDISC_API tdisc_status tdisc_maximin_design(int n, tdisc_interval_kind kind, double b0,
                                            tdisc_design** out);
TDISC_API tdisc_status tdisc_r_value(int n, double b, double* out);

/* ---- best uniform approximation ---- */
TDISC_API tdisc_status tdisc_remez(int n, double b, double tol, tdisc_approx** out);
TDISC_API void tdisc_approx_free(tdisc_approx* a);
TDISC_API double tdisc_approx_deviation(const tdisc_approx* a);
TDISC_API int tdisc_approx_iterations(const tdisc_approx* a);
TDISC_API size_t tdisc_approx_extremal_count(const tdisc_approx* a);
TDISC_API tdisc_status tdisc_approx_extremal_points(const tdisc_approx* a, double* out, size_t cap);
/* n-1 monomial coefficients of the approximant. */
TDISC_API tdisc_status tdisc_approx_coefficients(const tdisc_approx* a, double* out, size_t cap);
TDISC_API tdisc_status tdisc_approx_to_json(const tdisc_approx* a, char** out);

/* ---- verification ---- */
/* JSON report; all_pass (optional) receives 1 when every check passes. */
TDISC_API tdisc_status tdisc_verify_design(const tdisc_design* d, int n, double b, char** report,
                                           int* all_pass);

/* ---- power study ---- */
TDISC_API tdisc_status tdisc_power_table_csv(int reps, uint64_t seed, int workers, char** out);
TDISC_API tdisc_status tdisc_power_analytic(const double* points, const int* counts, size_t size,
                                            double theta3, double level, double* out);
TDISC_API tdisc_status tdisc_power_mc(const double* points, const int* counts, size_t size,
                                      double theta3, int reps, uint64_t seed, double level,
                                      double* estimate, double* std_error);
TDISC_API const char* tdisc_rng_description(void);

#ifdef __cplusplus
}
#endif

#endif /* TDISC_TDISC_H */
