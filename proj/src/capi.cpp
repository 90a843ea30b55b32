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
#include "wavebayes/wavebayes.h"

#include <algorithm>
#include <bit>
#include <memory>
#include <cstring>
#include <fstream>
#include <new>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wavebayes/diagnostics.hpp"
#include "wavebayes/montecarlo.hpp"
#include "wavebayes/noise.hpp"
#include "wavebayes/pipeline.hpp"
#include "wavebayes/report.hpp"
#include "wavebayes/shrink.hpp"
#include "wavebayes/testfuncs.hpp"
#include "wavebayes/wavelet.hpp"

namespace wb = wavebayes;

struct wb_decomposition {
  wb::WaveletDecomposition value;
};

struct wb_denoise_result {
  wb::DenoiseResult value;
  wb_decomposition empirical;
  wb_decomposition shrunk;
};

struct wb_grid {
  std::vector<wb::Scenario> scenarios;
};

struct wb_report {
  wb::GridReport value;
  std::vector<wb::RatioEntry> ratios;
};

namespace {

thread_local std::string last_error;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

wb_status fail(wb_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
wb_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return WB_OK;
  } catch (const IoError& e) {
    return fail(WB_ERROR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(WB_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(WB_ERROR_DOMAIN, e.what());
  } catch (const std::out_of_range& e) {
    return fail(WB_ERROR_OUT_OF_RANGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(WB_ERROR_RUNTIME, "out of memory");
  } catch (const std::exception& e) {
    return fail(WB_ERROR_RUNTIME, e.what());
  } catch (...) {
    return fail(WB_ERROR_RUNTIME, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

template <typename T>
void require_ptr(const T* p, const char* name) {
  if (p == nullptr) throw std::invalid_argument(std::string(name) + " is null");
}

std::span<const double> view(const double* data, std::size_t n, const char* name) {
  if (n > 0) require_ptr(data, name);
  return {data, n};
}

wb::TestFunction to_cpp(wb_function f) {
  switch (f) {
    case WB_FUNCTION_BUMPS: return wb::TestFunction::Bumps;
    case WB_FUNCTION_BLOCKS: return wb::TestFunction::Blocks;
    case WB_FUNCTION_DOPPLER: return wb::TestFunction::Doppler;
    case WB_FUNCTION_HEAVISINE: return wb::TestFunction::Heavisine;
  }
  throw std::invalid_argument("unknown test function");
}

wb_function to_c(wb::TestFunction f) {
  switch (f) {
    case wb::TestFunction::Bumps: return WB_FUNCTION_BUMPS;
    case wb::TestFunction::Blocks: return WB_FUNCTION_BLOCKS;
    case wb::TestFunction::Doppler: return WB_FUNCTION_DOPPLER;
    case wb::TestFunction::Heavisine: return WB_FUNCTION_HEAVISINE;
  }
  return WB_FUNCTION_BUMPS;
}

wb::NoiseKind to_cpp(const wb_noise_spec& spec) {
  switch (spec.kind) {
    case WB_NOISE_IID: return wb::IidNoise{};
    case WB_NOISE_AR1: return wb::Ar1Noise{spec.parameter};
    case WB_NOISE_ARFIMA: return wb::ArfimaNoise{spec.parameter};
  }
  throw std::invalid_argument("unknown noise kind");
}

wb_noise_spec to_c(const wb::NoiseKind& kind, double sigma_e) {
  wb_noise_spec out{WB_NOISE_IID, 0.0, sigma_e};
  if (const auto* ar = std::get_if<wb::Ar1Noise>(&kind)) {
    out.kind = WB_NOISE_AR1;
    out.parameter = ar->phi;
  } else if (const auto* fi = std::get_if<wb::ArfimaNoise>(&kind)) {
    out.kind = WB_NOISE_ARFIMA;
    out.parameter = fi->d;
  }
  return out;
}

wb::NoiseSpec to_spec(const wb_noise_spec& spec) {
  wb::NoiseSpec out{to_cpp(spec), spec.sigma_e};
  out.validate();
  return out;
}

wb::RuleKind to_cpp(wb_rule rule) {
  switch (rule) {
    case WB_RULE_LOGISTIC: return wb::RuleKind::LogisticBayes;
    case WB_RULE_SOFT: return wb::RuleKind::SoftUniversal;
  }
  throw std::invalid_argument("unknown rule");
}

wb_rule to_c(wb::RuleKind rule) {
  return rule == wb::RuleKind::SoftUniversal ? WB_RULE_SOFT : WB_RULE_LOGISTIC;
}

wb::Scenario to_cpp(const wb_scenario& s) {
  wb::Scenario out;
  out.function = to_cpp(s.function);
  out.noise = to_cpp(s.noise);
  out.n = s.n;
  out.snr = s.snr;
  out.replications = s.replications;
  out.rule.kind = to_cpp(s.rule);
  out.rule.quadrature_nodes = s.quadrature_nodes;
  out.primary_level = s.primary_level;
  out.gamma = s.gamma;
  out.tau = s.tau;
  out.vanishing_moments = s.moments;
  out.signal_sd = s.signal_sd;
  out.base_seed = s.base_seed;
  return out;
}

wb_scenario to_c(const wb::Scenario& s) {
  wb_scenario out{};
  out.function = to_c(s.function);
  out.noise = to_c(s.noise, 1.0);
  out.n = s.n;
  out.snr = s.snr;
  out.replications = s.replications;
  out.rule = to_c(s.rule.kind);
  out.quadrature_nodes = s.rule.quadrature_nodes;
  out.primary_level = s.primary_level;
  out.gamma = s.gamma;
  out.tau = s.tau;
  out.moments = s.vanishing_moments;
  out.signal_sd = s.signal_sd;
  out.base_seed = s.base_seed;
  return out;
}

wb_summary to_c(const wb::MseSummary& s) {
  return {s.mean, s.sd, s.median, s.iqr, s.count, s.degenerate ? 1 : 0};
}

template <typename Writer>
void write_file(const char* path, Writer&& writer) {
  require_ptr(path, "path");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(std::string("cannot open ") + path + " for writing");
  writer(out);
  out.flush();
  if (!out) throw IoError(std::string("write failed: ") + path);
}

const wb::CellResult& cell_at(const wb_report* report, std::size_t i) {
  require_ptr(report, "report");
  if (i >= report->value.cells.size()) throw std::out_of_range("cell index out of range");
  return report->value.cells[i];
}

}  // namespace

extern "C" {

const char* wb_last_error(void) { return last_error.c_str(); }

const char* wb_version(void) { return WAVEBAYES_VERSION; }

const char* wb_status_name(wb_status status) {
  switch (status) {
    case WB_OK: return "ok";
    case WB_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case WB_ERROR_DOMAIN: return "domain error";
    case WB_ERROR_IO: return "i/o error";
    case WB_ERROR_OUT_OF_RANGE: return "out of range";
    case WB_ERROR_RUNTIME: return "runtime error";
  }
  return "unknown status";
}

// ---- wavelet

wb_status wb_filter_lowpass(int moments, double* taps, size_t len) {
  return guarded([&] {
    const auto& filter = wb::cached_filter(moments);
    require_ptr(taps, "taps");
    require(len >= filter.length(), "tap buffer too small");
    std::copy(filter.lowpass.begin(), filter.lowpass.end(), taps);
  });
}

wb_status wb_dwt(const double* signal, size_t n, int moments, int primary_level,
                 wb_decomposition** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = nullptr;
    auto d = wb::dwt(view(signal, n, "signal"), wb::cached_filter(moments),
                     primary_level);
    *out = new wb_decomposition{std::move(d)};
  });
}

wb_status wb_idwt(const wb_decomposition* decomposition, int moments,
                  double* out, size_t n) {
  return guarded([&] {
    require_ptr(decomposition, "decomposition");
    require_ptr(out, "out");
    require(n == decomposition->value.signal_length(),
            "output length does not match the decomposition");
    auto x = wb::idwt(decomposition->value, wb::cached_filter(moments));
    std::copy(x.begin(), x.end(), out);
  });
}

int wb_decomposition_primary_level(const wb_decomposition* d) {
  return d ? d->value.primary_level() : -1;
}

int wb_decomposition_top_level(const wb_decomposition* d) {
  return d ? d->value.top_level() : -1;
}

wb_status wb_decomposition_approx(const wb_decomposition* d,
                                  const double** data, size_t* len) {
  return guarded([&] {
    require_ptr(d, "decomposition");
    require_ptr(data, "data");
    require_ptr(len, "len");
    auto a = d->value.approx();
    *data = a.data();
    *len = a.size();
  });
}

wb_status wb_decomposition_detail(const wb_decomposition* d, int level,
                                  const double** data, size_t* len) {
  return guarded([&] {
    require_ptr(d, "decomposition");
    require_ptr(data, "data");
    require_ptr(len, "len");
    auto a = d->value.detail(level);
    *data = a.data();
    *len = a.size();
  });
}

void wb_decomposition_free(wb_decomposition* d) { delete d; }

// ---- test functions

wb_status wb_function_parse(const char* name, wb_function* out) {
  return guarded([&] {
    require_ptr(name, "name");
    require_ptr(out, "out");
    *out = to_c(wb::parse_test_function(name));
  });
}

const char* wb_function_name(wb_function function) {
  switch (function) {
    case WB_FUNCTION_BUMPS: return "bumps";
    case WB_FUNCTION_BLOCKS: return "blocks";
    case WB_FUNCTION_DOPPLER: return "doppler";
    case WB_FUNCTION_HEAVISINE: return "heavisine";
  }
  return "unknown";
}

wb_status wb_function_evaluate(wb_function function, double x, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = wb::evaluate(to_cpp(function), x);
  });
}

wb_status wb_function_sample(wb_function function, size_t n, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    auto v = wb::sample(to_cpp(function), n);
    std::copy(v.begin(), v.end(), out);
  });
}

wb_status wb_noise_sd_for_snr(const double* signal, size_t n, double snr,
                              double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = wb::noise_sd_for_snr(view(signal, n, "signal"), snr);
  });
}

wb_status wb_rescale_to_sd(double* values, size_t n, double target_sd) {
  return guarded([&] {
    if (n > 0) require_ptr(values, "values");
    wb::rescale_to_sd({values, n}, target_sd);
  });
}

// ---- noise

wb_status wb_noise_parse(const char* text, wb_noise_spec* out) {
  return guarded([&] {
    require_ptr(text, "text");
    require_ptr(out, "out");
    *out = to_c(wb::parse_noise(text), 1.0);
  });
}

wb_status wb_noise_describe(const wb_noise_spec* spec, char* buffer, size_t size) {
  return guarded([&] {
    require_ptr(spec, "spec");
    require_ptr(buffer, "buffer");
    const std::string text = wb::describe(to_cpp(*spec));
    require(size > text.size(), "buffer too small");
    std::memcpy(buffer, text.c_str(), text.size() + 1);
  });
}

wb_status wb_noise_innovation_sd(const wb_noise_spec* spec, double* out) {
  return guarded([&] {
    require_ptr(spec, "spec");
    require_ptr(out, "out");
    *out = wb::innovation_sd(to_spec(*spec));
  });
}

wb_status wb_noise_generate(const wb_noise_spec* spec, size_t n,
                            uint64_t base_seed, uint64_t stream, double* out) {
  return guarded([&] {
    require_ptr(spec, "spec");
    if (n > 0) require_ptr(out, "out");
    auto e = wb::generate(to_spec(*spec), n, wb::Seed{base_seed, stream});
    std::copy(e.begin(), e.end(), out);
  });
}

wb_status wb_arfima_acvf(double d, double sigma_e, size_t max_lag, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    auto g = wb::arfima_acvf(d, sigma_e, max_lag);
    std::copy(g.begin(), g.end(), out);
  });
}

// ---- shrinkage

wb_status wb_rule_parse(const char* text, wb_rule* out) {
  return guarded([&] {
    require_ptr(text, "text");
    require_ptr(out, "out");
    *out = to_c(wb::parse_rule_kind(text));
  });
}

double wb_logistic_density(double theta, double tau) {
  return wb::logistic_density(theta, tau);
}

wb_status wb_alpha_level(int level, int primary_level, double gamma, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = wb::alpha_level(level, primary_level, gamma);
  });
}

wb_status wb_mad_sigma(const double* values, size_t n, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = wb::mad_sigma(view(values, n, "values"));
  });
}

wb_status wb_bayes_shrink(double z, double sigma, double alpha, double tau,
                          int nodes, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = wb::bayes_shrink(z, sigma, wb::LogisticMixturePrior{alpha, tau}, nodes);
  });
}

double wb_soft_threshold(double z, double lambda) {
  try {
    return wb::soft_threshold(z, lambda);
  } catch (const std::exception& e) {
    last_error = e.what();
    return z;
  }
}

wb_status wb_universal_lambda(double sigma, size_t n, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = wb::universal_lambda(sigma, n);
  });
}

void wb_denoise_options_init(wb_denoise_options* options) {
  if (options == nullptr) return;
  const wb::DenoiseOptions d;
  options->moments = d.vanishing_moments;
  options->primary_level = d.primary_level;
  options->gamma = d.gamma;
  options->tau = d.tau;
  options->tau_limit = d.tau_limit;
  options->rule = to_c(d.rule.kind);
  options->quadrature_nodes = d.rule.quadrature_nodes;
}

wb_status wb_denoise(const double* y, size_t n, const wb_denoise_options* options,
                     wb_denoise_result** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = nullptr;
    wb::DenoiseOptions o;
    if (options != nullptr) {
      o.vanishing_moments = options->moments;
      o.primary_level = options->primary_level;
      o.gamma = options->gamma;
      o.tau = options->tau;
      o.tau_limit = options->tau_limit;
      o.rule.kind = to_cpp(options->rule);
      o.rule.quadrature_nodes = options->quadrature_nodes;
    }
    auto r = wb::denoise(view(y, n, "y"), o);
    auto* result = new wb_denoise_result;
    result->empirical.value = r.empirical;
    result->shrunk.value = r.shrunk;
    result->value = std::move(r);
    *out = result;
  });
}

wb_status wb_denoise_result_estimate(const wb_denoise_result* result,
                                     const double** data, size_t* len) {
  return guarded([&] {
    require_ptr(result, "result");
    require_ptr(data, "data");
    require_ptr(len, "len");
    *data = result->value.estimate.data();
    *len = result->value.estimate.size();
  });
}

wb_status wb_denoise_result_sigma(const wb_denoise_result* result, int level,
                                  double* out) {
  return guarded([&] {
    require_ptr(result, "result");
    require_ptr(out, "out");
    auto it = result->value.sigmas.find(level);
    if (it == result->value.sigmas.end())
      throw std::out_of_range("no sigma estimate for level " + std::to_string(level));
    *out = it->second;
  });
}

const wb_decomposition* wb_denoise_result_empirical(const wb_denoise_result* r) {
  return r ? &r->empirical : nullptr;
}

const wb_decomposition* wb_denoise_result_shrunk(const wb_denoise_result* r) {
  return r ? &r->shrunk : nullptr;
}

size_t wb_denoise_result_unshrunk_count(const wb_denoise_result* r) {
  return r ? r->value.unshrunk_levels.size() : 0;
}

int wb_denoise_result_unshrunk_level(const wb_denoise_result* r, size_t i) {
  if (r == nullptr || i >= r->value.unshrunk_levels.size()) return -1;
  return r->value.unshrunk_levels[i];
}

void wb_denoise_result_free(wb_denoise_result* r) { delete r; }

// ---- preprocessing

wb_status wb_collapse_median(const double* timestamps, const double* values,
                             size_t n, double* out_timestamps, double* out_values,
                             size_t* out_len) {
  return guarded([&] {
    require_ptr(out_len, "out_len");
    auto [t, v] = wb::collapse_median(view(timestamps, n, "timestamps"),
                                      view(values, n, "values"));
    if (!t.empty()) {
      require_ptr(out_timestamps, "out_timestamps");
      require_ptr(out_values, "out_values");
    }
    std::copy(t.begin(), t.end(), out_timestamps);
    std::copy(v.begin(), v.end(), out_values);
    *out_len = t.size();
  });
}

wb_status wb_pad_symmetric(const double* values, size_t n, double* out,
                           size_t* out_len) {
  return guarded([&] {
    require_ptr(out, "out");
    require_ptr(out_len, "out_len");
    auto p = wb::pad_symmetric(view(values, n, "values"));
    std::copy(p.begin(), p.end(), out);
    *out_len = p.size();
  });
}

size_t wb_next_power_of_two(size_t n) { return n <= 1 ? 1 : std::bit_ceil(n); }

size_t wb_previous_power_of_two(size_t n) { return n == 0 ? 0 : std::bit_floor(n); }

int wb_is_power_of_two(size_t n) { return wb::is_power_of_two(n) ? 1 : 0; }

// ---- diagnostics

wb_status wb_mse(const double* estimate, const double* truth, size_t n, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = wb::mse(view(estimate, n, "estimate"), view(truth, n, "truth"));
  });
}

wb_status wb_acf(const double* x, size_t n, size_t max_lag, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    auto r = wb::acf(view(x, n, "x"), max_lag);
    std::copy(r.begin(), r.end(), out);
  });
}

wb_status wb_ccf(const double* x, const double* y, size_t n, size_t max_lag,
                 double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    auto r = wb::ccf(view(x, n, "x"), view(y, n, "y"), max_lag);
    std::copy(r.begin(), r.end(), out);
  });
}

wb_status wb_ljung_box(const double* x, size_t n, int lags, double* statistic,
                       double* p_value) {
  return guarded([&] {
    require_ptr(statistic, "statistic");
    require_ptr(p_value, "p_value");
    auto r = wb::ljung_box(view(x, n, "x"), lags);
    *statistic = r.statistic;
    *p_value = r.p_value;
  });
}

wb_status wb_chi_square_upper_tail(double x, double dof, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = wb::chi_square_upper_tail(x, dof);
  });
}

wb_status wb_summarize(const double* values, size_t n, wb_summary* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = to_c(wb::summarize(view(values, n, "values")));
  });
}

// ---- Monte Carlo

void wb_scenario_init(wb_scenario* scenario) {
  if (scenario != nullptr) *scenario = to_c(wb::Scenario{});
}

void wb_scenario_init_paper(wb_scenario* scenario) {
  if (scenario != nullptr) *scenario = to_c(wb::paper_profile());
}

wb_status wb_run_replication(const wb_scenario* scenario, int m, double* mse) {
  return guarded([&] {
    require_ptr(scenario, "scenario");
    require_ptr(mse, "mse");
    *mse = wb::run_replication(to_cpp(*scenario), m);
  });
}

wb_status wb_grid_create(wb_grid** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = new wb_grid;
  });
}

wb_status wb_grid_add(wb_grid* grid, const wb_scenario* scenario) {
  return guarded([&] {
    require_ptr(grid, "grid");
    require_ptr(scenario, "scenario");
    auto s = to_cpp(*scenario);
    s.validate();
    grid->scenarios.push_back(std::move(s));
  });
}

wb_status wb_grid_add_paper(wb_grid* grid, const wb_scenario* knobs) {
  return guarded([&] {
    require_ptr(grid, "grid");
    require_ptr(knobs, "knobs");
    auto cells = wb::paper_grid(to_cpp(*knobs));
    for (const auto& c : cells) c.validate();
    grid->scenarios.insert(grid->scenarios.end(), cells.begin(), cells.end());
  });
}

size_t wb_grid_size(const wb_grid* grid) { return grid ? grid->scenarios.size() : 0; }

void wb_grid_free(wb_grid* grid) { delete grid; }

wb_status wb_grid_run(const wb_grid* grid, int threads, wb_report** out) {
  return guarded([&] {
    require_ptr(grid, "grid");
    require_ptr(out, "out");
    require(threads >= 0, "threads must be non-negative");
    *out = nullptr;
    auto report = std::make_unique<wb_report>();
    report->value = wb::run_grid(grid->scenarios, wb::RunOptions{threads});
    report->ratios = wb::ratio_table(report->value);
    *out = report.release();
  });
}

size_t wb_report_cell_count(const wb_report* report) {
  return report ? report->value.cells.size() : 0;
}

wb_status wb_report_cell_scenario(const wb_report* report, size_t i, wb_scenario* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = to_c(cell_at(report, i).scenario);
  });
}

wb_status wb_report_cell_summary(const wb_report* report, size_t i, wb_summary* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = to_c(cell_at(report, i).summary);
  });
}

wb_status wb_report_cell_mses(const wb_report* report, size_t i,
                              const double** data, size_t* len) {
  return guarded([&] {
    require_ptr(data, "data");
    require_ptr(len, "len");
    const auto& cell = cell_at(report, i);
    *data = cell.mses.data();
    *len = cell.mses.size();
  });
}

wb_status wb_report_cell_ratio(const wb_report* report, size_t i, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    const auto& s = cell_at(report, i).scenario;
    for (const auto& r : report->ratios) {
      if (r.function == s.function && r.n == s.n && r.snr == s.snr &&
          r.rule == s.rule.kind && r.noise == s.noise) {
        *out = r.ratio;
        return;
      }
    }
    throw std::out_of_range("cell has no IID baseline in this report");
  });
}

wb_status wb_report_write_csv(const wb_report* report, const char* path) {
  return guarded([&] {
    require_ptr(report, "report");
    write_file(path, [&](std::ostream& o) { wb::write_grid_csv(report->value, o); });
  });
}

wb_status wb_report_write_json(const wb_report* report, const char* path) {
  return guarded([&] {
    require_ptr(report, "report");
    write_file(path, [&](std::ostream& o) { wb::write_grid_json(report->value, o); });
  });
}

wb_status wb_report_write_ratio_csv(const wb_report* report, const char* path) {
  return guarded([&] {
    require_ptr(report, "report");
    write_file(path, [&](std::ostream& o) { wb::write_ratio_csv(report->ratios, o); });
  });
}

void wb_report_free(wb_report* report) { delete report; }

wb_status wb_compare_rules(const wb_scenario* scenario, int threads,
                           double* logistic, double* soft) {
  return guarded([&] {
    require_ptr(scenario, "scenario");
    require_ptr(logistic, "logistic");
    require_ptr(soft, "soft");
    require(threads >= 0, "threads must be non-negative");
    auto pairs = wb::compare_rules(to_cpp(*scenario), wb::RunOptions{threads});
    std::copy(pairs.logistic.begin(), pairs.logistic.end(), logistic);
    std::copy(pairs.soft.begin(), pairs.soft.end(), soft);
  });
}

wb_status wb_write_pairs_csv(const double* logistic, const double* soft, size_t n,
                             const char* path) {
  return guarded([&] {
    wb::PairedMses pairs;
    auto l = view(logistic, n, "logistic");
    auto s = view(soft, n, "soft");
    pairs.logistic.assign(l.begin(), l.end());
    pairs.soft.assign(s.begin(), s.end());
    write_file(path, [&](std::ostream& o) { wb::write_pairs_csv(pairs, o); });
  });
}

}  // extern "C"
