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
// wavebayes command-line front end. Talks to the library only through the
// C interface in wavebayes.h.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "wavebayes/wavebayes.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RuntimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument-type failures reported by the library count as usage errors while
// validating input and as runtime failures afterwards.
enum class Phase { Validate, Run };

void check(wb_status status, Phase phase, const std::string& context) {
  if (status == WB_OK) return;
  std::string msg = context + ": " + wb_last_error();
  const bool bad_input = status == WB_ERROR_INVALID_ARGUMENT ||
                         status == WB_ERROR_DOMAIN ||
                         status == WB_ERROR_OUT_OF_RANGE;
  if (phase == Phase::Validate && bad_input) throw UsageError(msg);
  throw RuntimeError(msg);
}

std::string num(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw RuntimeError("number formatting failed");
  return std::string(buf, end);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    auto b = item.find_first_not_of(" \t\r");
    auto e = item.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

// Accepts both repeated flags and comma-separated values.
std::vector<std::string> flatten(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& r : raw)
    for (auto& s : split(r, ',')) if (!s.empty()) out.push_back(s);
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw UsageError("invalid " + what + ": '" + s + "'");
  return v;
}

std::optional<double> try_parse_double(const std::string& s) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::size_t parse_size(const std::string& s, const std::string& what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || v == 0)
    throw UsageError("invalid " + what + ": '" + s + "'");
  return v;
}

// Output files are staged so nothing is written when a later step fails
// validation.
class OutputDir {
 public:
  explicit OutputDir(fs::path dir) : dir_(std::move(dir)) {}

  fs::path path(const std::string& name) const { return dir_ / name; }

  void ensure() const {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw RuntimeError("cannot create output directory " + dir_.string() +
                               ": " + ec.message());
  }

  std::ofstream open(const std::string& name) const {
    ensure();
    std::ofstream out(path(name), std::ios::binary);
    if (!out) throw RuntimeError("cannot open " + path(name).string());
    return out;
  }

 private:
  fs::path dir_;
};

void finish(std::ofstream& out, const std::string& name) {
  out.flush();
  if (!out) throw RuntimeError("write failed: " + name);
}

// Options shared by every subcommand.
struct Common {
  std::uint64_t seed = 42;
  std::optional<int> reps;
  std::optional<int> j0;
  std::optional<double> tau;
  std::optional<double> gamma;
  std::optional<int> moments;
  std::string out = ".";
};

void add_common(CLI::App* app, Common& c, bool with_reps) {
  app->add_option("--seed", c.seed, "Base random seed")->capture_default_str();
  if (with_reps) app->add_option("--reps", c.reps, "Monte Carlo replications")
                     ->check(CLI::PositiveNumber);
  app->add_option("--j0", c.j0, "Primary resolution level")->check(CLI::NonNegativeNumber);
  app->add_option("--tau", c.tau, "Logistic prior scale");
  app->add_option("--gamma", c.gamma, "Decay exponent of alpha across levels");
  app->add_option("--moments", c.moments, "Daubechies vanishing moments (1-10)");
  app->add_option("--out", c.out, "Output directory")
      ->envname("WAVEBAYES_OUT_DIR")
      ->capture_default_str();
  // Expanded into flags before parsing; see expand_config.
  app->add_option("--config", "Read options from a key=value file");
}

std::string safe_name(std::string s) {
  for (char& ch : s) {
    if (ch == '(' || ch == ':') ch = '-';
    else if (ch == ')') ch = '\0';
  }
  s.erase(std::remove(s.begin(), s.end(), '\0'), s.end());
  return s;
}

std::string noise_label(const wb_noise_spec& spec) {
  char buf[64];
  check(wb_noise_describe(&spec, buf, sizeof buf), Phase::Validate, "noise");
  return buf;
}

// ---- simulate -------------------------------------------------------------

struct SimulateArgs {
  Common common;
  std::vector<std::string> functions{"bumps"};
  std::vector<std::string> noises{"iid"};
  std::vector<std::string> sizes{"512"};
  std::vector<std::string> snrs{"3"};
  std::string rule = "logistic";
  std::string grid;
  std::string profile;
  std::optional<double> signal_sd;
  int nodes = 64;
  int threads = 0;
  bool json = false;
  bool ratios = false;
  bool pairs = false;
  std::string name = "simulate";
};

std::vector<wb_rule> parse_rules(const std::string& text) {
  if (text == "both") return {WB_RULE_LOGISTIC, WB_RULE_SOFT};
  wb_rule r{};
  check(wb_rule_parse(text.c_str(), &r), Phase::Validate, "--rule");
  return {r};
}

void apply_knobs(wb_scenario& s, const SimulateArgs& a) {
  const auto& c = a.common;
  s.base_seed = c.seed;
  if (c.reps) s.replications = *c.reps;
  if (c.j0) s.primary_level = *c.j0;
  if (c.tau) s.tau = *c.tau;
  if (c.gamma) s.gamma = *c.gamma;
  if (c.moments) s.moments = *c.moments;
  if (a.signal_sd) s.signal_sd = *a.signal_sd;
  s.quadrature_nodes = a.nodes;
}

int cmd_simulate(const SimulateArgs& a) {
  // Build and validate the whole grid before touching the filesystem.
  const bool paper = a.grid == "paper";
  if (!a.grid.empty() && !paper) throw UsageError("unknown grid '" + a.grid + "'");
  std::string profile = a.profile.empty() ? (paper ? "paper" : "default") : a.profile;
  if (profile != "paper" && profile != "default")
    throw UsageError("unknown profile '" + profile + "'");
  if (a.threads < 0) throw UsageError("--threads must be non-negative");

  wb_scenario base{};
  if (profile == "paper") wb_scenario_init_paper(&base);
  else wb_scenario_init(&base);
  apply_knobs(base, a);

  const auto rules = parse_rules(a.rule);
  if (a.pairs && rules.size() != 2)
    throw UsageError("--pairs needs --rule both");

  struct GridHandle {
    wb_grid* g = nullptr;
    ~GridHandle() { wb_grid_free(g); }
  } grid;
  check(wb_grid_create(&grid.g), Phase::Run, "grid");

  std::vector<wb_scenario> cells;
  if (paper) {
    for (wb_rule r : rules) {
      wb_scenario knobs = base;
      knobs.rule = r;
      check(wb_grid_add_paper(grid.g, &knobs), Phase::Validate, "paper grid");
    }
  } else {
    auto functions = flatten(a.functions);
    auto noises = flatten(a.noises);
    auto sizes = flatten(a.sizes);
    auto snrs = flatten(a.snrs);
    if (functions.empty() || noises.empty() || sizes.empty() || snrs.empty())
      throw UsageError("empty function, noise, n or snr list");
    for (const auto& fn : functions) {
      wb_function f{};
      check(wb_function_parse(fn.c_str(), &f), Phase::Validate, "--functions");
      for (const auto& nz : noises) {
        wb_noise_spec spec{};
        check(wb_noise_parse(nz.c_str(), &spec), Phase::Validate, "--noise");
        for (const auto& ns : sizes) {
          const std::size_t n = parse_size(ns, "--n");
          for (const auto& sn : snrs) {
            const double snr = parse_double(sn, "--snr");
            for (wb_rule r : rules) {
              wb_scenario s = base;
              s.function = f;
              s.noise = spec;
              s.n = n;
              s.snr = snr;
              s.rule = r;
              check(wb_grid_add(grid.g, &s), Phase::Validate, "scenario");
              cells.push_back(s);
            }
          }
        }
      }
    }
  }

  struct ReportHandle {
    wb_report* r = nullptr;
    ~ReportHandle() { wb_report_free(r); }
  } report;
  // Duplicate cells surface here as invalid arguments before any work.
  const wb_status st = wb_grid_run(grid.g, a.threads, &report.r);
  check(st, st == WB_ERROR_INVALID_ARGUMENT ? Phase::Validate : Phase::Run, "simulate");

  OutputDir out(a.common.out);
  out.ensure();
  const std::string csv = out.path(a.name + ".csv").string();
  check(wb_report_write_csv(report.r, csv.c_str()), Phase::Run, "csv");
  std::cerr << "wrote " << csv << " (" << wb_report_cell_count(report.r) << " cells)\n";
  if (a.json) {
    const std::string path = out.path(a.name + ".json").string();
    check(wb_report_write_json(report.r, path.c_str()), Phase::Run, "json");
    std::cerr << "wrote " << path << "\n";
  }
  if (a.ratios) {
    const std::string path = out.path(a.name + "_ratios.csv").string();
    check(wb_report_write_ratio_csv(report.r, path.c_str()), Phase::Run, "ratios");
    std::cerr << "wrote " << path << "\n";
  }
  if (a.pairs) {
    // One paired file per (function, noise, n, snr); the logistic arm of each
    // pair identifies the cell.
    const std::size_t count = wb_report_cell_count(report.r);
    for (std::size_t i = 0; i < count; ++i) {
      wb_scenario s{};
      check(wb_report_cell_scenario(report.r, i, &s), Phase::Run, "pairs");
      if (s.rule != WB_RULE_LOGISTIC) continue;
      std::vector<double> logistic(static_cast<std::size_t>(s.replications));
      std::vector<double> soft(logistic.size());
      check(wb_compare_rules(&s, a.threads, logistic.data(), soft.data()),
            Phase::Run, "pairs");
      const std::string file = "pairs_" + std::string(wb_function_name(s.function)) +
                               "_" + safe_name(noise_label(s.noise)) + "_n" +
                               std::to_string(s.n) + "_snr" + num(s.snr) + ".csv";
      const std::string path = out.path(file).string();
      check(wb_write_pairs_csv(logistic.data(), soft.data(), logistic.size(),
                               path.c_str()),
            Phase::Run, "pairs");
    }
    std::cerr << "wrote paired replication files to " << out.path("").string() << "\n";
  }
  return kExitOk;
}

// ---- denoise --------------------------------------------------------------

struct Series {
  std::vector<double> time;  // empty when the input has one column
  std::vector<double> value;
};

Series read_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file " + path);
  Series s;
  std::string line;
  std::size_t lineno = 0;
  std::size_t columns = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto fields = split(line, ',');
    if (fields.size() < 1 || fields.size() > 2)
      throw UsageError(path + ":" + std::to_string(lineno) +
                       ": expected one or two columns");
    std::vector<std::optional<double>> parsed;
    for (const auto& f : fields) parsed.push_back(try_parse_double(f));
    const bool numeric = std::all_of(parsed.begin(), parsed.end(),
                                     [](const auto& p) { return p.has_value(); });
    if (!numeric) {
      if (columns == 0 && s.value.empty()) {  // header row
        columns = fields.size();
        continue;
      }
      throw UsageError(path + ":" + std::to_string(lineno) + ": non-numeric value");
    }
    if (columns == 0) columns = fields.size();
    if (fields.size() != columns)
      throw UsageError(path + ":" + std::to_string(lineno) + ": inconsistent column count");
    if (columns == 2) {
      s.time.push_back(*parsed[0]);
      s.value.push_back(*parsed[1]);
    } else {
      s.value.push_back(*parsed[0]);
    }
  }
  if (s.value.empty()) throw UsageError("input file " + path + " has no data");
  for (double v : s.value)
    if (!std::isfinite(v)) throw UsageError("input contains non-finite values");
  return s;
}

struct DenoiseArgs {
  Common common;
  std::string input;
  std::string collapse;
  std::string pad;
  bool truncate = false;
  std::string rule = "logistic";
  int lags = 10;
  int nodes = 64;
  double tau_limit = 10.0;
};

void write_sigma_table(std::ofstream& o, const wb_denoise_result* r,
                       const wb_denoise_options& opt) {
  const wb_decomposition* d = wb_denoise_result_empirical(r);
  o << "level,n_coefficients,sigma,alpha,unshrunk\n";
  std::vector<int> unshrunk;
  for (std::size_t i = 0; i < wb_denoise_result_unshrunk_count(r); ++i)
    unshrunk.push_back(wb_denoise_result_unshrunk_level(r, i));
  for (int j = wb_decomposition_primary_level(d); j < wb_decomposition_top_level(d); ++j) {
    double sigma = 0, alpha = 0;
    check(wb_denoise_result_sigma(r, j, &sigma), Phase::Run, "sigma");
    check(wb_alpha_level(j, opt.primary_level, opt.gamma, &alpha), Phase::Run, "alpha");
    const bool flag = std::find(unshrunk.begin(), unshrunk.end(), j) != unshrunk.end();
    o << j << ',' << (std::size_t{1} << j) << ',' << num(sigma) << ',' << num(alpha)
      << ',' << (flag ? 1 : 0) << '\n';
  }
}

void write_coefficients(std::ofstream& o, const wb_denoise_result* r) {
  const wb_decomposition* e = wb_denoise_result_empirical(r);
  const wb_decomposition* s = wb_denoise_result_shrunk(r);
  o << "level,k,empirical,shrunk\n";
  for (int j = wb_decomposition_primary_level(e); j < wb_decomposition_top_level(e); ++j) {
    const double *pe = nullptr, *ps = nullptr;
    std::size_t ne = 0, ns = 0;
    check(wb_decomposition_detail(e, j, &pe, &ne), Phase::Run, "coefficients");
    check(wb_decomposition_detail(s, j, &ps, &ns), Phase::Run, "coefficients");
    for (std::size_t k = 0; k < ne; ++k)
      o << j << ',' << k << ',' << num(pe[k]) << ',' << num(ps[k]) << '\n';
  }
}

int cmd_denoise(const DenoiseArgs& a) {
  if (!a.collapse.empty() && a.collapse != "median")
    throw UsageError("unknown --collapse mode '" + a.collapse + "'");
  if (!a.pad.empty() && a.pad != "symmetric")
    throw UsageError("unknown --pad mode '" + a.pad + "'");
  if (!a.pad.empty() && a.truncate)
    throw UsageError("--pad and --truncate are mutually exclusive");
  if (a.lags < 1) throw UsageError("--lags must be positive");

  wb_denoise_options opt{};
  wb_denoise_options_init(&opt);
  const auto& c = a.common;
  if (c.j0) opt.primary_level = *c.j0;
  if (c.tau) opt.tau = *c.tau;
  if (c.gamma) opt.gamma = *c.gamma;
  if (c.moments) opt.moments = *c.moments;
  opt.tau_limit = a.tau_limit;
  opt.quadrature_nodes = a.nodes;
  check(wb_rule_parse(a.rule.c_str(), &opt.rule), Phase::Validate, "--rule");

  Series s = read_series(a.input);
  if (!a.collapse.empty()) {
    if (s.time.empty()) throw UsageError("--collapse needs a timestamp column");
    std::vector<double> t(s.value.size()), v(s.value.size());
    std::size_t len = 0;
    check(wb_collapse_median(s.time.data(), s.value.data(), s.value.size(), t.data(),
                             v.data(), &len),
          Phase::Validate, "collapse");
    t.resize(len);
    v.resize(len);
    s.time = std::move(t);
    s.value = std::move(v);
  }

  const std::size_t original = s.value.size();
  std::vector<double> y = s.value;
  if (!wb_is_power_of_two(y.size())) {
    if (a.truncate) {
      y.resize(wb_previous_power_of_two(y.size()));
      s.value.resize(y.size());
      if (!s.time.empty()) s.time.resize(y.size());
    } else if (a.pad == "symmetric") {
      std::vector<double> padded(wb_next_power_of_two(y.size()));
      std::size_t len = 0;
      check(wb_pad_symmetric(y.data(), y.size(), padded.data(), &len),
            Phase::Validate, "pad");
      padded.resize(len);
      y = std::move(padded);
    } else {
      throw UsageError("series length " + std::to_string(y.size()) +
                       " is not a power of two; use --pad symmetric or --truncate");
    }
  }
  const std::size_t kept = s.value.size();

  struct ResultHandle {
    wb_denoise_result* r = nullptr;
    ~ResultHandle() { wb_denoise_result_free(r); }
  } result;
  const wb_status st = wb_denoise(y.data(), y.size(), &opt, &result.r);
  check(st, st == WB_ERROR_RUNTIME ? Phase::Run : Phase::Validate, "denoise");

  const double* est = nullptr;
  std::size_t est_len = 0;
  check(wb_denoise_result_estimate(result.r, &est, &est_len), Phase::Run, "denoise");

  // Residuals are taken in the time domain over the observed points only.
  std::vector<double> residual(kept);
  for (std::size_t i = 0; i < kept; ++i) residual[i] = s.value[i] - est[i];
  const std::size_t max_lag = std::min<std::size_t>(static_cast<std::size_t>(a.lags),
                                                    kept - 1);
  std::vector<double> racf(max_lag + 1);
  check(wb_acf(residual.data(), kept, max_lag, racf.data()), Phase::Run, "acf");
  double q = 0, p = 0;
  check(wb_ljung_box(residual.data(), kept, a.lags, &q, &p), Phase::Validate, "ljung-box");

  OutputDir out(c.out);
  {
    auto o = out.open("denoised.csv");
    o << (s.time.empty() ? "index" : "time") << ",observed,denoised,residual\n";
    for (std::size_t i = 0; i < kept; ++i)
      o << (s.time.empty() ? std::to_string(i) : num(s.time[i])) << ','
        << num(s.value[i]) << ',' << num(est[i]) << ',' << num(residual[i]) << '\n';
    finish(o, "denoised.csv");
  }
  {
    auto o = out.open("sigma.csv");
    write_sigma_table(o, result.r, opt);
    finish(o, "sigma.csv");
  }
  {
    auto o = out.open("coefficients.csv");
    write_coefficients(o, result.r);
    finish(o, "coefficients.csv");
  }
  {
    auto o = out.open("residual_acf.csv");
    o << "lag,acf\n";
    for (std::size_t k = 0; k < racf.size(); ++k) o << k << ',' << num(racf[k]) << '\n';
    finish(o, "residual_acf.csv");
  }
  {
    auto o = out.open("ljung_box.csv");
    o << "lags,statistic,p_value\n" << a.lags << ',' << num(q) << ',' << num(p) << '\n';
    finish(o, "ljung_box.csv");
  }

  for (std::size_t i = 0; i < wb_denoise_result_unshrunk_count(result.r); ++i)
    std::cerr << "warning: level " << wb_denoise_result_unshrunk_level(result.r, i)
              << " has zero estimated noise and was left unshrunk\n";
  std::cerr << "denoised " << kept << " points";
  if (original != kept) std::cerr << " (truncated from " << original << ")";
  if (y.size() != kept) std::cerr << " (padded to " << y.size() << ")";
  std::cerr << "; Ljung-Box Q(" << a.lags << ") = " << num(q) << ", p = " << num(p)
            << "\nwrote results to " << out.path("").string() << "\n";
  return kExitOk;
}

// ---- diagnose -------------------------------------------------------------

struct DiagnoseArgs {
  Common common;
  std::string input;
  std::string function = "doppler";
  std::string noise = "arfima:0.4";
  double snr = 5.0;
  std::size_t n = 1024;
  std::optional<double> signal_sd;
  std::size_t max_lag = 20;
  int lags = 10;
  std::uint64_t stream = 1;
};

int cmd_diagnose(const DiagnoseArgs& a) {
  const auto& c = a.common;
  const int moments = c.moments.value_or(10);
  const int j0 = c.j0.value_or(4);
  if (a.snr <= 0) throw UsageError("--snr must be positive");
  if (a.max_lag < 1) throw UsageError("--max-lag must be positive");
  if (a.lags < 1) throw UsageError("--lags must be positive");

  std::vector<double> truth, noise, y;
  if (!a.input.empty()) {
    y = read_series(a.input).value;
    if (!wb_is_power_of_two(y.size()))
      throw UsageError("diagnose input length must be a power of two");
  } else {
    wb_function f{};
    check(wb_function_parse(a.function.c_str(), &f), Phase::Validate, "--function");
    wb_noise_spec spec{};
    check(wb_noise_parse(a.noise.c_str(), &spec), Phase::Validate, "--noise");
    truth.resize(a.n);
    check(wb_function_sample(f, a.n, truth.data()), Phase::Validate, "--n");
    wb_scenario defaults{};
    wb_scenario_init_paper(&defaults);
    const double sd = a.signal_sd.value_or(defaults.signal_sd);
    if (sd > 0) check(wb_rescale_to_sd(truth.data(), a.n, sd), Phase::Validate, "--signal-sd");
    check(wb_noise_sd_for_snr(truth.data(), a.n, a.snr, &spec.sigma_e), Phase::Validate,
          "--snr");
    noise.resize(a.n);
    check(wb_noise_generate(&spec, a.n, c.seed, a.stream, noise.data()), Phase::Validate,
          "noise");
    y.resize(a.n);
    for (std::size_t i = 0; i < a.n; ++i) y[i] = truth[i] + noise[i];
  }
  const std::size_t n = y.size();

  struct DecompHandle {
    wb_decomposition* d = nullptr;
    ~DecompHandle() { wb_decomposition_free(d); }
  } dy;
  check(wb_dwt(y.data(), n, moments, j0, &dy.d), Phase::Validate, "dwt");
  const int top = wb_decomposition_top_level(dy.d);

  // Wavelet-domain view: noise coefficients when the noise is known, else data.
  DecompHandle dn;
  const std::vector<double>& source = noise.empty() ? y : noise;
  check(wb_dwt(source.data(), n, moments, j0, &dn.d), Phase::Run, "dwt");

  OutputDir out(c.out);
  {
    auto o = out.open("series.csv");
    o << "x,truth,noise,y\n";
    for (std::size_t i = 0; i < n; ++i) {
      o << num(static_cast<double>(i + 1) / static_cast<double>(n)) << ','
        << (truth.empty() ? "" : num(truth[i])) << ','
        << (noise.empty() ? "" : num(noise[i])) << ',' << num(y[i]) << '\n';
    }
    finish(o, "series.csv");
  }
  {
    auto o = out.open("series_acf.csv");
    const std::size_t lag = std::min(a.max_lag, n - 1);
    std::vector<double> r(lag + 1);
    check(wb_acf(source.data(), n, lag, r.data()), Phase::Run, "acf");
    o << "lag,acf\n";
    for (std::size_t k = 0; k <= lag; ++k) o << k << ',' << num(r[k]) << '\n';
    finish(o, "series_acf.csv");
  }
  {
    auto o = out.open("level_acf.csv");
    o << "level,lag,acf\n";
    for (int j = j0; j < top; ++j) {
      const double* p = nullptr;
      std::size_t len = 0;
      check(wb_decomposition_detail(dn.d, j, &p, &len), Phase::Run, "level");
      if (len < 2) continue;
      const std::size_t lag = std::min(a.max_lag, len - 1);
      std::vector<double> r(lag + 1);
      check(wb_acf(p, len, lag, r.data()), Phase::Run, "acf");
      for (std::size_t k = 0; k <= lag; ++k) o << j << ',' << k << ',' << num(r[k]) << '\n';
    }
    finish(o, "level_acf.csv");
  }
  {
    // Adjacent levels differ in length by two; the finer level is
    // subsampled at even positions so both series share a time grid.
    auto o = out.open("level_ccf.csv");
    o << "level,finer_level,lag,ccf\n";
    for (int j = j0; j + 1 < top; ++j) {
      const double *pc = nullptr, *pf = nullptr;
      std::size_t lc = 0, lf = 0;
      check(wb_decomposition_detail(dn.d, j, &pc, &lc), Phase::Run, "level");
      check(wb_decomposition_detail(dn.d, j + 1, &pf, &lf), Phase::Run, "level");
      if (lc < 2) continue;
      std::vector<double> fine(lc);
      for (std::size_t k = 0; k < lc; ++k) fine[k] = pf[2 * k];
      const std::size_t lag = std::min(a.max_lag, lc - 1);
      std::vector<double> r(2 * lag + 1);
      check(wb_ccf(pc, fine.data(), lc, lag, r.data()), Phase::Run, "ccf");
      for (std::size_t k = 0; k < r.size(); ++k)
        o << j << ',' << j + 1 << ','
          << static_cast<long long>(k) - static_cast<long long>(lag) << ','
          << num(r[k]) << '\n';
    }
    finish(o, "level_ccf.csv");
  }
  {
    auto o = out.open("sigma.csv");
    o << "level,n_coefficients,sigma,ljung_box_statistic,ljung_box_p_value\n";
    for (int j = j0; j < top; ++j) {
      const double* p = nullptr;
      std::size_t len = 0;
      check(wb_decomposition_detail(dy.d, j, &p, &len), Phase::Run, "level");
      double sigma = 0;
      check(wb_mad_sigma(p, len, &sigma), Phase::Run, "mad");
      o << j << ',' << len << ',' << num(sigma) << ',';
      const double* q = nullptr;
      std::size_t ql = 0;
      check(wb_decomposition_detail(dn.d, j, &q, &ql), Phase::Run, "level");
      double stat = 0, pv = 0;
      if (ql > static_cast<std::size_t>(a.lags) &&
          wb_ljung_box(q, ql, a.lags, &stat, &pv) == WB_OK)
        o << num(stat) << ',' << num(pv) << '\n';
      else
        o << ",\n";
    }
    finish(o, "sigma.csv");
  }
  std::cerr << "wrote diagnostics for " << n << " points to " << out.path("").string()
            << "\n";
  return kExitOk;
}

// ---- rulecurve ------------------------------------------------------------

struct RulecurveArgs {
  Common common;
  std::vector<std::string> alphas{"0.6", "0.7", "0.8", "0.9"};
  double sigma = 1.0;
  double zmax = 10.0;
  int points = 401;
  int nodes = 64;
};

int cmd_rulecurve(const RulecurveArgs& a) {
  const double tau = a.common.tau.value_or(5.0);
  std::vector<double> alphas;
  for (const auto& s : flatten(a.alphas)) {
    const double v = parse_double(s, "--alpha");
    if (!(v > 0.0 && v < 1.0)) throw UsageError("--alpha values must lie in (0, 1)");
    alphas.push_back(v);
  }
  if (alphas.empty()) throw UsageError("--alpha list is empty");
  if (!(a.sigma > 0) || !(tau > 0)) throw UsageError("--sigma and --tau must be positive");
  if (!(a.zmax > 0) || !std::isfinite(a.zmax)) throw UsageError("--zmax must be positive");
  if (a.points < 2) throw UsageError("--points must be at least 2");

  // Symmetric grid on [-zmax, zmax]; an odd point count includes z = 0.
  std::vector<std::string> rows;
  for (double alpha : alphas) {
    for (int i = 0; i < a.points; ++i) {
      const double z = -a.zmax + 2.0 * a.zmax * i / (a.points - 1);
      double d = 0;
      check(wb_bayes_shrink(z, a.sigma, alpha, tau, a.nodes, &d), Phase::Validate,
            "rule");
      rows.push_back(num(alpha) + ',' + num(z) + ',' + num(d) + '\n');
    }
  }
  OutputDir out(a.common.out);
  auto o = out.open("rulecurve.csv");
  o << "alpha,z,delta\n";
  for (const auto& r : rows) o << r;
  finish(o, "rulecurve.csv");
  std::cerr << "wrote " << out.path("rulecurve.csv").string() << "\n";
  return kExitOk;
}

// Splices "key = value" lines from the subcommand's --config file into the
// argument list. Options given on the command line win; unknown keys and
// malformed lines are usage errors.
std::vector<std::string> expand_config(const CLI::App& app,
                                       std::vector<std::string> args) {
  std::size_t sub_pos = args.size();
  const CLI::App* sub = nullptr;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i].rfind("-", 0) == 0) continue;
    sub = app.get_subcommand_no_throw(args[i]);
    if (sub != nullptr) sub_pos = i;
    break;
  }
  if (sub == nullptr) return args;

  std::string file;
  std::size_t cfg_pos = args.size();
  for (std::size_t i = sub_pos + 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      file = args[i + 1];
      cfg_pos = i;
    } else if (args[i].rfind("--config=", 0) == 0) {
      file = args[i].substr(9);
      cfg_pos = i;
    }
  }
  if (cfg_pos == args.size()) return args;

  auto given = [&](const std::string& flag) {
    return std::any_of(args.begin() + static_cast<std::ptrdiff_t>(sub_pos) + 1, args.end(),
                       [&](const std::string& a) {
                         return a == flag || a.rfind(flag + "=", 0) == 0;
                       });
  };

  std::ifstream in(file);
  if (!in) throw UsageError("cannot open config file " + file);
  std::vector<std::string> extra;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    auto parts = split(line, '=');
    if (parts.empty() || (parts.size() == 1 && parts[0].empty())) continue;
    if (parts.size() == 1 && parts[0].front() == '[' && parts[0].back() == ']') {
      if (parts[0] != "[" + sub->get_name() + "]")
        throw UsageError(file + ":" + std::to_string(lineno) + ": unexpected section " +
                         parts[0]);
      continue;
    }
    if (parts.size() != 2 || parts[0].empty())
      throw UsageError(file + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = parts[0];
    std::string value = parts[1];
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string flag = "--" + key;
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr || key == "config")
      throw UsageError(file + ":" + std::to_string(lineno) + ": unknown key '" +
                       parts[0] + "'");
    if (given(flag)) continue;
    if (opt->get_expected_max() == 0) {
      if (value == "true" || value == "1") extra.push_back(flag);
      else if (value != "false" && value != "0")
        throw UsageError(file + ":" + std::to_string(lineno) + ": '" + parts[0] +
                         "' expects true or false");
    } else {
      extra.push_back(flag + "=" + value);
    }
  }
  args.erase(args.begin() + static_cast<std::ptrdiff_t>(cfg_pos),
             args.begin() + static_cast<std::ptrdiff_t>(
                                args[cfg_pos] == "--config" ? cfg_pos + 2 : cfg_pos + 1));
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub_pos) + 1, extra.begin(),
              extra.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wavelet denoising with level-dependent Bayesian shrinkage", "wavebayes"};
  app.set_version_flag("--version", std::string(wb_version()));
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run a Monte Carlo scenario grid");
  add_common(simulate, sim.common, true);
  simulate->add_option("--functions", sim.functions,
                       "Test functions: bumps, blocks, doppler, heavisine")
      ->delimiter(',');
  simulate->add_option("--noise", sim.noises, "Noise models: iid, ar1:PHI, arfima:D")
      ->delimiter(',');
  simulate->add_option("--n", sim.sizes, "Sample sizes (powers of two)")->delimiter(',');
  simulate->add_option("--snr", sim.snrs, "Signal-to-noise ratios")->delimiter(',');
  simulate->add_option("--rule", sim.rule, "logistic, soft or both")->capture_default_str();
  simulate->add_option("--grid", sim.grid, "Named grid (paper)");
  simulate->add_option("--profile", sim.profile,
                       "Default knob set: default or paper (paper when --grid paper)");
  simulate->add_option("--signal-sd", sim.signal_sd,
                       "Rescale test functions to this sd (0 keeps raw values)");
  simulate->add_option("--quadrature-nodes", sim.nodes, "Gauss-Hermite nodes")
      ->capture_default_str();
  simulate->add_option("--threads", sim.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  simulate->add_option("--name", sim.name, "Base name of output files")
      ->capture_default_str();
  simulate->add_flag("--json", sim.json, "Also write per-replication JSON");
  simulate->add_flag("--ratios", sim.ratios, "Also write ratios to the IID baseline");
  simulate->add_flag("--pairs", sim.pairs, "Also write paired rule comparisons");

  DenoiseArgs den;
  auto* denoise = app.add_subcommand("denoise", "Denoise a series read from CSV");
  add_common(denoise, den.common, false);
  denoise->add_option("--input", den.input, "CSV with a value column and optional time column")
      ->required();
  denoise->add_option("--collapse", den.collapse, "Collapse duplicate timestamps (median)");
  denoise->add_option("--pad", den.pad, "Pad to a power of two (symmetric)");
  denoise->add_flag("--truncate", den.truncate, "Truncate to a power of two");
  denoise->add_option("--rule", den.rule, "logistic or soft")->capture_default_str();
  denoise->add_option("--lags", den.lags, "Ljung-Box lags")->capture_default_str();
  denoise->add_option("--quadrature-nodes", den.nodes, "Gauss-Hermite nodes")
      ->capture_default_str();
  denoise->add_option("--tau-limit", den.tau_limit, "Upper bound for tau")
      ->capture_default_str();

  DiagnoseArgs dia;
  auto* diagnose = app.add_subcommand(
      "diagnose", "Per-level noise scale and decorrelation diagnostics");
  add_common(diagnose, dia.common, false);
  diagnose->add_option("--input", dia.input, "CSV series instead of a synthetic one");
  diagnose->add_option("--function", dia.function, "Synthetic test function")
      ->capture_default_str();
  diagnose->add_option("--noise", dia.noise, "Synthetic noise model")->capture_default_str();
  diagnose->add_option("--snr", dia.snr, "Synthetic SNR")->capture_default_str();
  diagnose->add_option("--n", dia.n, "Synthetic sample size")->capture_default_str();
  diagnose->add_option("--signal-sd", dia.signal_sd, "Rescale the test function to this sd");
  diagnose->add_option("--stream", dia.stream, "Noise stream index")->capture_default_str();
  diagnose->add_option("--max-lag", dia.max_lag, "Largest ACF/CCF lag")->capture_default_str();
  diagnose->add_option("--lags", dia.lags, "Ljung-Box lags")->capture_default_str();

  RulecurveArgs rc;
  auto* rulecurve = app.add_subcommand("rulecurve", "Tabulate the shrinkage rule");
  add_common(rulecurve, rc.common, false);
  rulecurve->add_option("--alpha", rc.alphas, "Point-mass weights in (0, 1)")
      ->delimiter(',');
  rulecurve->add_option("--sigma", rc.sigma, "Noise sd")->capture_default_str();
  rulecurve->add_option("--zmax", rc.zmax, "Half-width of the z grid")->capture_default_str();
  rulecurve->add_option("--points", rc.points, "Grid points per curve")->capture_default_str();
  rulecurve->add_option("--quadrature-nodes", rc.nodes, "Gauss-Hermite nodes")
      ->capture_default_str();

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = expand_config(app, std::move(args));
    // CLI11 consumes a reversed vector without the program name.
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(sim);
    if (denoise->parsed()) return cmd_denoise(den);
    if (diagnose->parsed()) return cmd_diagnose(dia);
    if (rulecurve->parsed()) return cmd_rulecurve(rc);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
