/*
 * wpnsim -- Monte Carlo rate bounds for the discrete-time Wiener phase noise
 * channel with oversampled output.
 *
 * C binding of the simulator core. All handles are opaque; every fallible
 * call returns a wpn_status, and wpn_last_error() carries the detail message
 * of the most recent failure on the calling thread. Rates inside wpn_point
 * are always in nats; the units option only affects file emission.
 */

#ifndef WPNSIM_H
#define WPNSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WPN_API __declspec(dllexport)
#else
#define WPN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wpn_status {
    WPN_OK = 0,
    WPN_ERR_INVALID_ARGUMENT = 1, /* bad pointer, range or enum value */
    WPN_ERR_DOMAIN = 2,           /* outside a bound's validity region */
    WPN_ERR_STATE = 3,            /* operation not available on this object */
    WPN_ERR_IO = 4,               /* file could not be written */
    WPN_ERR_INTERNAL = 5
} wpn_status;

typedef enum wpn_alpha_mode {
    WPN_ALPHA_PAPER = 0, /* alpha = SNR * delta */
    WPN_ALPHA_AUTO = 1,  /* alpha maximizing the bound at the estimated ecos */
    WPN_ALPHA_FIXED = 2  /* user-supplied alpha > 0 */
} wpn_alpha_mode;

typedef enum wpn_units { WPN_UNITS_NATS = 0, WPN_UNITS_BITS = 1 } wpn_units;
typedef enum wpn_format { WPN_FORMAT_CSV = 0, WPN_FORMAT_JSON = 1 } wpn_format;
typedef enum wpn_fit_field {
    WPN_FIT_AMP = 0,
    WPN_FIT_PHASE = 1,
    WPN_FIT_TOTAL = 2
} wpn_fit_field;

typedef struct wpn_config wpn_config;
typedef struct wpn_result wpn_result;

/* One evaluated SNR point. ecos_bound and phase_analytic are NaN when
 * SNR * delta <= 2 (the analytic chain is not applicable there). */
typedef struct wpn_point {
    double snr_db;
    double snr;
    int32_t oversampling; /* L */
    double delta;         /* 1 / L */
    double alpha;         /* concentration actually used */
    double amp_rate;      /* nats/symbol */
    double amp_stderr;
    double phase_rate;
    double phase_stderr;
    double total_rate;
    double ecos;
    double ecos_stderr;
    double ecos_bound;
    double amp_analytic;
    double phase_analytic;
    double amp_asymptote;
    double phase_asymptote;
    int32_t replicates;
    int32_t n_symbols;
} wpn_point;

typedef struct wpn_fit {
    double slope; /* nats per unit ln SNR */
    double intercept;
    double stderr_slope;
    int32_t points_used;
} wpn_fit;

WPN_API const char* wpn_version(void);
WPN_API const char* wpn_status_name(wpn_status status);
/* Message of the most recent failure on this thread ("" if none). */
WPN_API const char* wpn_last_error(void);

/* Configuration. A fresh config carries the default sweep: beta = 1,
 * snr_db = {40,50,60,70,80}, 2000 symbols, 8 replicates, seed 1, auto alpha,
 * schedule oversampling, nats, CSV. */
WPN_API wpn_config* wpn_config_new(void);
WPN_API void wpn_config_free(wpn_config* config);
WPN_API wpn_status wpn_config_set_beta(wpn_config* config, double beta);
WPN_API wpn_status wpn_config_set_snr_db(wpn_config* config, const double* snr_db,
                                         size_t count);
WPN_API wpn_status wpn_config_set_symbols(wpn_config* config, int32_t n_symbols);
WPN_API wpn_status wpn_config_set_replicates(wpn_config* config, int32_t replicates);
WPN_API wpn_status wpn_config_set_seed(wpn_config* config, uint64_t seed);
WPN_API wpn_status wpn_config_set_alpha(wpn_config* config, wpn_alpha_mode mode,
                                        double fixed_value);
/* oversampling = 0 selects the schedule L = ceil(beta sqrt(snr)). */
WPN_API wpn_status wpn_config_set_oversampling(wpn_config* config, int32_t oversampling);
WPN_API wpn_status wpn_config_set_units(wpn_config* config, wpn_units units);
WPN_API wpn_status wpn_config_set_format(wpn_config* config, wpn_format format);
WPN_API wpn_status wpn_config_set_output(wpn_config* config, const char* path);
/* Worker threads (0 = hardware). Never changes results or emitted bytes. */
WPN_API wpn_status wpn_config_set_threads(wpn_config* config, int32_t threads);
/* Resolved config as JSON text. Call with buf = NULL to query the required
 * size (including the terminating NUL) via *needed. */
WPN_API wpn_status wpn_config_to_json(const wpn_config* config, char* buf,
                                      size_t cap, size_t* needed);

/* Runs every configured SNR point; per-point seeds derive from the master
 * seed and the point's position in the ascending grid. */
WPN_API wpn_status wpn_run_sweep(const wpn_config* config, wpn_result** out);
/* Runs a single SNR point (ignoring the configured grid). */
WPN_API wpn_status wpn_run_point(const wpn_config* config, double snr_db,
                                 wpn_result** out);
WPN_API void wpn_result_free(wpn_result* result);

WPN_API size_t wpn_result_point_count(const wpn_result* result);
WPN_API wpn_status wpn_result_point(const wpn_result* result, size_t index,
                                    wpn_point* out);
/* WPN_ERR_STATE when the sweep has fewer than 3 points. */
WPN_API wpn_status wpn_result_fit(const wpn_result* result, wpn_fit_field field,
                                  wpn_fit* out);
WPN_API wpn_status wpn_result_write_csv(const wpn_result* result, const char* path);
WPN_API wpn_status wpn_result_write_json(const wpn_result* result, const char* path);
/* Sidecar with fits and resolved config only (pairs with the CSV table). */
WPN_API wpn_status wpn_result_write_summary_json(const wpn_result* result,
                                                 const char* path);

/* Scalar reference functions (nats). */
WPN_API double wpn_log_bessel_i0(double alpha);
WPN_API double wpn_tikhonov_logpdf(double phi_y, double phi_x, double alpha);
WPN_API double wpn_amp_asymptote(double snr);
WPN_API double wpn_phase_asymptote(double snr, double beta);
/* WPN_ERR_DOMAIN when SNR * delta <= 2. oversampling = 0 uses the schedule. */
WPN_API wpn_status wpn_analytic_phase_bound(double beta, double snr_db,
                                            int32_t oversampling, double alpha,
                                            double* out);
WPN_API wpn_status wpn_ecos_lower_bound(double beta, double snr_db,
                                        int32_t oversampling, double* out);

/* Validation battery; emits one PASS/FAIL line per check through the
 * callback and returns the number of failures. */
typedef void (*wpn_report_fn)(const char* line, void* user);
WPN_API int32_t wpn_selfcheck(wpn_report_fn report, void* user);

#ifdef __cplusplus
}
#endif

#endif /* WPNSIM_H */
