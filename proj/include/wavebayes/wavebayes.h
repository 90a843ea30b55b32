// Copyright 2026 The wavebayes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/*
 * C interface to the wavebayes library.
 *
 * Every fallible call returns a wb_status; on failure a description of the
 * most recent error on the calling thread is available from wb_last_error().
 * Objects are opaque handles created by wb_*_create / producing calls and
 * released with the matching wb_*_free function (NULL is accepted).
 */
#ifndef WAVEBAYES_WAVEBAYES_H
#define WAVEBAYES_WAVEBAYES_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WAVEBAYES_BUILDING_LIBRARY)
#    define WB_API __declspec(dllexport)
#  else
#    define WB_API __declspec(dllimport)
#  endif
#else
#  define WB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wb_status {
  WB_OK = 0,
  WB_ERROR_INVALID_ARGUMENT = 1,
  WB_ERROR_DOMAIN = 2,
  WB_ERROR_IO = 3,
  WB_ERROR_OUT_OF_RANGE = 4,
  WB_ERROR_RUNTIME = 5
} wb_status;

WB_API const char* wb_last_error(void);
WB_API const char* wb_version(void);
WB_API const char* wb_status_name(wb_status status);

/* ---- wavelet ------------------------------------------------------------ */

typedef struct wb_decomposition wb_decomposition;

/* Writes 2 * moments lowpass taps. */
WB_API wb_status wb_filter_lowpass(int moments, double* taps, size_t len);

WB_API wb_status wb_dwt(const double* signal, size_t n, int moments,
                        int primary_level, wb_decomposition** out);
/* out must hold the signal length (2^top_level) values. */
WB_API wb_status wb_idwt(const wb_decomposition* decomposition, int moments,
                         double* out, size_t n);
WB_API int wb_decomposition_primary_level(const wb_decomposition* decomposition);
WB_API int wb_decomposition_top_level(const wb_decomposition* decomposition);
/* Borrowed views, valid until the decomposition is freed. */
WB_API wb_status wb_decomposition_approx(const wb_decomposition* decomposition,
                                         const double** data, size_t* len);
WB_API wb_status wb_decomposition_detail(const wb_decomposition* decomposition,
                                         int level, const double** data,
                                         size_t* len);
WB_API void wb_decomposition_free(wb_decomposition* decomposition);

/* ---- test functions ----------------------------------------------------- */

typedef enum wb_function {
  WB_FUNCTION_BUMPS = 0,
  WB_FUNCTION_BLOCKS = 1,
  WB_FUNCTION_DOPPLER = 2,
  WB_FUNCTION_HEAVISINE = 3
} wb_function;

WB_API wb_status wb_function_parse(const char* name, wb_function* out);
WB_API const char* wb_function_name(wb_function function);
WB_API wb_status wb_function_evaluate(wb_function function, double x, double* out);
/* out[i - 1] = f(i / n), n a power of two. */
WB_API wb_status wb_function_sample(wb_function function, size_t n, double* out);
WB_API wb_status wb_noise_sd_for_snr(const double* signal, size_t n, double snr,
                                     double* out);
WB_API wb_status wb_rescale_to_sd(double* values, size_t n, double target_sd);

/* ---- noise -------------------------------------------------------------- */

typedef enum wb_noise_kind {
  WB_NOISE_IID = 0,
  WB_NOISE_AR1 = 1,
  WB_NOISE_ARFIMA = 2
} wb_noise_kind;

typedef struct wb_noise_spec {
  wb_noise_kind kind;
  double parameter; /* phi for AR1, d for ARFIMA, ignored for IID */
  double sigma_e;   /* marginal standard deviation */
} wb_noise_spec;

/* "iid", "ar1:0.5", "arfima:0.4"; sigma_e is set to 1. */
WB_API wb_status wb_noise_parse(const char* text, wb_noise_spec* out);
/* Writes a NUL-terminated label such as "ar1(0.5)". */
WB_API wb_status wb_noise_describe(const wb_noise_spec* spec, char* buffer,
                                   size_t size);
WB_API wb_status wb_noise_innovation_sd(const wb_noise_spec* spec, double* out);
WB_API wb_status wb_noise_generate(const wb_noise_spec* spec, size_t n,
                                   uint64_t base_seed, uint64_t stream,
                                   double* out);
/* Writes max_lag + 1 autocovariances. */
WB_API wb_status wb_arfima_acvf(double d, double sigma_e, size_t max_lag,
                                double* out);

/* ---- shrinkage ---------------------------------------------------------- */

typedef enum wb_rule {
  WB_RULE_LOGISTIC = 0,
  WB_RULE_SOFT = 1
} wb_rule;

WB_API wb_status wb_rule_parse(const char* text, wb_rule* out);
WB_API double wb_logistic_density(double theta, double tau);
WB_API wb_status wb_alpha_level(int level, int primary_level, double gamma,
                                double* out);
WB_API wb_status wb_mad_sigma(const double* values, size_t n, double* out);
WB_API wb_status wb_bayes_shrink(double z, double sigma, double alpha,
                                 double tau, int nodes, double* out);
WB_API double wb_soft_threshold(double z, double lambda);
WB_API wb_status wb_universal_lambda(double sigma, size_t n, double* out);

typedef struct wb_denoise_options {
  int moments;
  int primary_level;
  double gamma;
  double tau;
  double tau_limit;
  wb_rule rule;
  int quadrature_nodes;
} wb_denoise_options;

WB_API void wb_denoise_options_init(wb_denoise_options* options);

typedef struct wb_denoise_result wb_denoise_result;

WB_API wb_status wb_denoise(const double* y, size_t n,
                            const wb_denoise_options* options,
                            wb_denoise_result** out);
WB_API wb_status wb_denoise_result_estimate(const wb_denoise_result* result,
                                            const double** data, size_t* len);
WB_API wb_status wb_denoise_result_sigma(const wb_denoise_result* result,
                                         int level, double* out);
/* Empirical (before shrinkage) and shrunk coefficients; borrowed. */
WB_API const wb_decomposition* wb_denoise_result_empirical(const wb_denoise_result* result);
WB_API const wb_decomposition* wb_denoise_result_shrunk(const wb_denoise_result* result);
/* Number of levels left unshrunk because their sigma estimate was zero. */
WB_API size_t wb_denoise_result_unshrunk_count(const wb_denoise_result* result);
WB_API int wb_denoise_result_unshrunk_level(const wb_denoise_result* result, size_t i);
WB_API void wb_denoise_result_free(wb_denoise_result* result);

/* ---- preprocessing ------------------------------------------------------ */

/* Collapses equal timestamps to the median value. out_* must hold n values;
 * the collapsed length is written to out_len. */
WB_API wb_status wb_collapse_median(const double* timestamps,
                                    const double* values, size_t n,
                                    double* out_timestamps, double* out_values,
                                    size_t* out_len);
/* out must hold the next power of two >= n values. */
WB_API wb_status wb_pad_symmetric(const double* values, size_t n, double* out,
                                  size_t* out_len);
WB_API size_t wb_next_power_of_two(size_t n);
WB_API size_t wb_previous_power_of_two(size_t n);
WB_API int wb_is_power_of_two(size_t n);

/* ---- diagnostics -------------------------------------------------------- */

WB_API wb_status wb_mse(const double* estimate, const double* truth, size_t n,
                        double* out);
/* out holds max_lag + 1 values. */
WB_API wb_status wb_acf(const double* x, size_t n, size_t max_lag, double* out);
/* out holds 2 * max_lag + 1 values; out[i] is lag i - max_lag. */
WB_API wb_status wb_ccf(const double* x, const double* y, size_t n,
                        size_t max_lag, double* out);
WB_API wb_status wb_ljung_box(const double* x, size_t n, int lags,
                              double* statistic, double* p_value);
WB_API wb_status wb_chi_square_upper_tail(double x, double dof, double* out);

typedef struct wb_summary {
  double mean;
  double sd;
  double median;
  double iqr;
  size_t count;
  int degenerate;
} wb_summary;

WB_API wb_status wb_summarize(const double* values, size_t n, wb_summary* out);

/* ---- Monte Carlo -------------------------------------------------------- */

typedef struct wb_scenario {
  wb_function function;
  wb_noise_spec noise; /* sigma_e is derived from snr at run time */
  size_t n;
  double snr;
  int replications;
  wb_rule rule;
  int quadrature_nodes;
  int primary_level;
  double gamma;
  double tau;
  int moments;
  double signal_sd; /* 0 keeps the raw function values */
  uint64_t base_seed;
} wb_scenario;

/* Library defaults (J0 = 4, tau = 5, gamma = 2, db10, 200 replications). */
WB_API void wb_scenario_init(wb_scenario* scenario);
/* Settings used for the published-table comparisons. */
WB_API void wb_scenario_init_paper(wb_scenario* scenario);
WB_API wb_status wb_run_replication(const wb_scenario* scenario, int m,
                                    double* mse);

typedef struct wb_grid wb_grid;

WB_API wb_status wb_grid_create(wb_grid** out);
WB_API wb_status wb_grid_add(wb_grid* grid, const wb_scenario* scenario);
/* Adds the 216-cell study grid using every other field of the template. */
WB_API wb_status wb_grid_add_paper(wb_grid* grid, const wb_scenario* knobs);
WB_API size_t wb_grid_size(const wb_grid* grid);
WB_API void wb_grid_free(wb_grid* grid);

typedef struct wb_report wb_report;

/* threads = 0 uses the hardware concurrency. */
WB_API wb_status wb_grid_run(const wb_grid* grid, int threads, wb_report** out);
WB_API size_t wb_report_cell_count(const wb_report* report);
WB_API wb_status wb_report_cell_scenario(const wb_report* report, size_t i,
                                         wb_scenario* out);
WB_API wb_status wb_report_cell_summary(const wb_report* report, size_t i,
                                        wb_summary* out);
WB_API wb_status wb_report_cell_mses(const wb_report* report, size_t i,
                                     const double** data, size_t* len);
WB_API wb_status wb_report_write_csv(const wb_report* report, const char* path);
WB_API wb_status wb_report_write_json(const wb_report* report, const char* path);
WB_API wb_status wb_report_write_ratio_csv(const wb_report* report,
                                           const char* path);
/* Ratio of cell i's AMSE over its IID baseline. */
WB_API wb_status wb_report_cell_ratio(const wb_report* report, size_t i,
                                      double* out);
WB_API void wb_report_free(wb_report* report);

/* Paired per-replication MSEs under both rules on identical noise.
 * Each output array holds scenario->replications values. */
WB_API wb_status wb_compare_rules(const wb_scenario* scenario, int threads,
                                  double* logistic, double* soft);
WB_API wb_status wb_write_pairs_csv(const double* logistic, const double* soft,
                                    size_t n, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* WAVEBAYES_WAVEBAYES_H */
