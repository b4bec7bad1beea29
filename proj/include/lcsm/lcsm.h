/*
 * lcsm - sparsity-aware set-membership adaptive filtering.
 *
 * C interface to the shared library. Handles are opaque; every function
 * that can fail returns an lcsm_status. Out-parameters are written only
 * on LCSM_OK unless noted otherwise.
 *
 * Algorithms (by name): "sm-nlms", "lcsm-nlms1", "lcsm-nlms2",
 * "sm-pnlms", "sm-l0-nlms".
 */

#ifndef LCSM_LCSM_H
#define LCSM_LCSM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    LCSM_OK = 0,
    LCSM_ERR_INVALID_ARGUMENT = 1, /* bad parameter or precondition violation */
    LCSM_ERR_DIMENSION = 2,        /* input length does not match filter order */
    LCSM_ERR_UNKNOWN_ALGORITHM = 3,
    LCSM_ERR_PARSE = 4,            /* malformed config text */
    LCSM_ERR_IO = 5,               /* file not readable/writable */
    LCSM_ERR_RANGE = 6,            /* index or buffer out of range */
    LCSM_ERR_INTERNAL = 7
} lcsm_status;

const char* lcsm_status_message(lcsm_status status);
const char* lcsm_version(void);

/* ------------------------------------------------------------------ */
/* Filters                                                             */

typedef struct lcsm_filter lcsm_filter;

typedef struct {
    double gamma_bar;     /* SMF error bound, > 0 */
    double epsilon;       /* discard threshold, >= 0 */
    double delta;         /* denominator regularizer, >= 0 */
    double kappa;         /* sm-pnlms proportionate floor */
    double alpha;         /* sm-l0-nlms attractor strength */
    double beta;          /* sm-l0-nlms attractor sharpness */
    double epsilon_scale; /* sm-l0-nlms literature scaling constant */
} lcsm_algo_params;

/* Paper defaults: gamma_bar = sqrt(0.05), epsilon = 1e-4, delta = 1e-12,
 * kappa = 0.01, alpha = 0.005, beta = 5, epsilon_scale = 100. */
void lcsm_algo_params_init(lcsm_algo_params* params);

/* Creates a filter of order `order` (order+1 coefficients). `initial`
 * may be NULL for w(0) = 0.1 * [1,...,1]; otherwise it must hold
 * order+1 values. LCSM variants reject initializations with any
 * |w_i(0)| <= epsilon. */
lcsm_status lcsm_filter_create(const char* algorithm, int order,
                               const lcsm_algo_params* params,
                               const double* initial, lcsm_filter** out);
void lcsm_filter_destroy(lcsm_filter* filter);

typedef struct {
    int updated;            /* 1 if |e(k)| > gamma_bar fired */
    double error;           /* a priori error e(k) */
    double mu;              /* step size in [0, 1) */
    double posterior_error; /* d(k) - w^T(k+1) x(k) */
    int active_count;       /* coefficients with |w_i(k)| >= epsilon */
} lcsm_update_outcome;

typedef struct {
    uint64_t add_sub;
    uint64_t mul;
    uint64_t divs;
} lcsm_op_count;

/* One adaptation step; `input` holds order+1 values. `outcome` and `ops`
 * may be NULL. When `ops` is given it accumulates the real arithmetic
 * executed (the state transition is identical either way). */
lcsm_status lcsm_filter_update(lcsm_filter* filter, const double* input,
                               int input_len, double desired,
                               lcsm_update_outcome* outcome,
                               lcsm_op_count* ops);

int lcsm_filter_order(const lcsm_filter* filter);
lcsm_status lcsm_filter_weights(const lcsm_filter* filter, double* buffer,
                                int buffer_len);

/* ------------------------------------------------------------------ */
/* Complexity accounting                                               */

/* Published closed-form per-update cost at order n. */
lcsm_status lcsm_predicted_count(const char* algorithm, int order,
                                 lcsm_op_count* out);

/* Measured cost of one fired, all-active (epsilon = 0) probe update. */
lcsm_status lcsm_probe_count(const char* algorithm, int order,
                             lcsm_op_count* out);

/* ------------------------------------------------------------------ */
/* Experiments                                                         */

typedef struct lcsm_experiment_config lcsm_experiment_config;
typedef struct lcsm_result_set lcsm_result_set;

int lcsm_preset_count(void);
const char* lcsm_preset_name(int index); /* NULL if out of range */

lcsm_status lcsm_config_from_preset(const char* name,
                                    lcsm_experiment_config** out);
lcsm_status lcsm_config_from_file(const char* path,
                                  lcsm_experiment_config** out);
/* Parses config text (same format as config files). */
lcsm_status lcsm_config_from_text(const char* text,
                                  lcsm_experiment_config** out);
void lcsm_config_destroy(lcsm_experiment_config* config);

lcsm_status lcsm_config_set_seed(lcsm_experiment_config* config, uint64_t seed);
lcsm_status lcsm_config_set_runs(lcsm_experiment_config* config, int runs);
lcsm_status lcsm_config_set_iterations(lcsm_experiment_config* config, int iterations);
/* Comma-separated algorithm names; replaces the configured list and
 * resets their parameters to the paper defaults. */
lcsm_status lcsm_config_set_algorithms(lcsm_experiment_config* config,
                                       const char* names);

/* Config echo as flat key=value lines. Writes up to `cap` bytes
 * (NUL-terminated when cap > 0) and stores the full length (excluding
 * the NUL) in `*needed`; returns LCSM_ERR_RANGE when truncated. */
lcsm_status lcsm_config_serialize(const lcsm_experiment_config* config,
                                  char* buffer, size_t cap, size_t* needed);

lcsm_status lcsm_experiment_run(const lcsm_experiment_config* config,
                                lcsm_result_set** out);
void lcsm_result_destroy(lcsm_result_set* results);

int lcsm_result_algorithm_count(const lcsm_result_set* results);
const char* lcsm_result_algorithm_name(const lcsm_result_set* results, int index);
int lcsm_result_iterations(const lcsm_result_set* results);
/* Per-iteration ensemble-mean squared a priori error; valid until the
 * result set is destroyed. */
const double* lcsm_result_mse_curve(const lcsm_result_set* results, int index);
double lcsm_result_update_rate(const lcsm_result_set* results, int index);
double lcsm_result_steady_state_mse(const lcsm_result_set* results, int index,
                                    double window_fraction);
/* Mode / mean of the discard-mask popcount at fired updates inside the
 * trailing steady-state window. */
int lcsm_result_active_mode(const lcsm_result_set* results, int index);
double lcsm_result_mean_active(const lcsm_result_set* results, int index);
lcsm_status lcsm_result_op_totals(const lcsm_result_set* results, int index,
                                  lcsm_op_count* out);

#ifdef __cplusplus
}
#endif

#endif /* LCSM_LCSM_H */
