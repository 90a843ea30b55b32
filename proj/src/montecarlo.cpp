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
#include "wavebayes/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <cmath>
#include <ctime>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

#include "wavebayes/wavelet.hpp"

namespace wavebayes {
namespace {

std::string shortest(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

// Everything a replication needs that does not depend on m.
struct CellContext {
  explicit CellContext(const Scenario& s)
      : scenario(s),
        truth(sample(s.function, s.n)),
        filter(&cached_filter(s.vanishing_moments)) {
    if (s.signal_sd > 0.0) rescale_to_sd(truth, s.signal_sd);
    noise = NoiseSpec{s.noise, noise_sd_for_snr(truth, s.snr)};
  }

  double run(int m, RuleKind kind) const {
    std::vector<double> y = generate(noise, scenario.n,
                                     Seed{scenario.base_seed, static_cast<std::uint64_t>(m)});
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += truth[i];

    const WaveletDecomposition empirical = dwt(y, *filter, scenario.primary_level);
    LevelPolicy policy;
    policy.primary_level = scenario.primary_level;
    policy.gamma = scenario.gamma;
    policy.tau = scenario.tau;
    policy.tau_limit = std::max(policy.tau_limit, scenario.tau);
    policy.sigma_estimates = estimate_level_sigmas(empirical);

    ShrinkageRule rule = scenario.rule;
    rule.kind = kind;
    const ShrinkResult shrunk = apply_rule(empirical, rule, policy, scenario.n);
    return mse(idwt(shrunk.coefficients, *filter), truth);
  }

  Scenario scenario;
  std::vector<double> truth;
  const WaveletFilter* filter;
  NoiseSpec noise;
};

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs task(i) for i in [0, count) on a small pool; rethrows the first error.
template <typename Task>
void parallel_for(std::size_t count, int threads, Task&& task) {
  const int workers = std::max(1, std::min<int>(resolve_threads(threads),
                                                static_cast<int>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

void Scenario::validate() const {
  dyadic_level(n);
  if (n < 4) throw std::invalid_argument("sample size must be at least 4");
  if (!(snr > 0.0) || !std::isfinite(snr)) {
    throw std::invalid_argument("SNR must be positive and finite");
  }
  if (replications < 1) throw std::invalid_argument("replications must be >= 1");
  if (primary_level < 0 || primary_level >= dyadic_level(n)) {
    throw std::invalid_argument("primary level must satisfy 0 <= J0 < log2(n)");
  }
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  if (vanishing_moments < 1 || vanishing_moments > kMaxVanishingMoments) {
    throw std::invalid_argument("vanishing moments must lie in 1..10");
  }
  if (!(signal_sd >= 0.0) || !std::isfinite(signal_sd)) {
    throw std::invalid_argument("signal sd must be >= 0");
  }
  wavebayes::validate(noise);
  rule.validate();
}

std::string cell_label(const Scenario& s) {
  return std::string(name(s.function)) + "/" + describe(s.noise) +
         "/n=" + std::to_string(s.n) + "/snr=" + shortest(s.snr) + "/" +
         std::string(name(s.rule.kind));
}

double run_replication(const Scenario& scenario, int m) {
  scenario.validate();
  if (m < 1 || m > scenario.replications) {
    throw std::invalid_argument("replication index out of range");
  }
  return CellContext(scenario).run(m, scenario.rule.kind);
}

std::string config_hash(std::span<const Scenario> scenarios) {
  std::ostringstream canonical;
  for (const Scenario& s : scenarios) {
    canonical << cell_label(s) << ';' << s.replications << ';' << s.primary_level << ';'
              << shortest(s.gamma) << ';' << shortest(s.tau) << ';' << s.vanishing_moments
              << ';' << shortest(s.signal_sd) << ';' << s.base_seed << ';'
              << s.rule.quadrature_nodes << '\n';
  }
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical.str()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << hash;
  return hex.str();
}

GridReport run_grid(std::span<const Scenario> scenarios, RunOptions options) {
  if (scenarios.empty()) throw std::invalid_argument("empty scenario grid");
  std::set<std::string> seen;
  for (const Scenario& s : scenarios) {
    s.validate();
    if (!seen.insert(cell_label(s)).second) {
      throw std::invalid_argument("duplicate grid cell " + cell_label(s));
    }
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<CellContext> contexts;
  contexts.reserve(scenarios.size());
  for (const Scenario& s : scenarios) contexts.emplace_back(s);

  GridReport report;
  report.cells.resize(scenarios.size());
  std::vector<std::pair<std::size_t, int>> tasks;
  for (std::size_t c = 0; c < scenarios.size(); ++c) {
    report.cells[c].scenario = scenarios[c];
    report.cells[c].mses.assign(scenarios[c].replications, 0.0);
    for (int m = 1; m <= scenarios[c].replications; ++m) tasks.emplace_back(c, m);
  }
  parallel_for(tasks.size(), options.threads, [&](std::size_t i) {
    const auto [c, m] = tasks[i];
    report.cells[c].mses[m - 1] = contexts[c].run(m, scenarios[c].rule.kind);
  });
  for (auto& cell : report.cells) cell.summary = summarize(cell.mses);

  std::set<std::uint64_t> seeds;
  for (const Scenario& s : scenarios) seeds.insert(s.base_seed);
  report.metadata.base_seeds.assign(seeds.begin(), seeds.end());
  report.metadata.config_hash = config_hash(scenarios);
  report.metadata.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.metadata.generated_at = utc_timestamp();
  return report;
}

std::vector<RatioEntry> ratio_table(const GridReport& report) {
  using Stratum = std::tuple<int, std::size_t, double, int>;
  auto stratum = [](const Scenario& s) {
    return Stratum{static_cast<int>(s.function), s.n, s.snr, static_cast<int>(s.rule.kind)};
  };
  std::map<Stratum, double> baseline;
  for (const auto& cell : report.cells) {
    if (std::holds_alternative<IidNoise>(cell.scenario.noise)) {
      baseline[stratum(cell.scenario)] = cell.summary.mean;
    }
  }
  std::vector<RatioEntry> table;
  for (const auto& cell : report.cells) {
    const auto found = baseline.find(stratum(cell.scenario));
    if (found == baseline.end()) continue;
    if (!(found->second > 0.0)) {
      throw std::domain_error("IID baseline AMSE is zero for " + cell_label(cell.scenario));
    }
    const Scenario& s = cell.scenario;
    table.push_back({s.function, s.n, s.snr, s.rule.kind, s.noise,
                     cell.summary.mean / found->second});
  }
  return table;
}

PairedMses compare_rules(const Scenario& scenario, RunOptions options) {
  scenario.validate();
  const CellContext context(scenario);
  PairedMses pairs;
  pairs.logistic.assign(scenario.replications, 0.0);
  pairs.soft.assign(scenario.replications, 0.0);
  parallel_for(static_cast<std::size_t>(scenario.replications), options.threads,
               [&](std::size_t i) {
                 const int m = static_cast<int>(i) + 1;
                 pairs.logistic[i] = context.run(m, RuleKind::LogisticBayes);
                 pairs.soft[i] = context.run(m, RuleKind::SoftUniversal);
               });
  return pairs;
}

std::vector<NoiseKind> paper_noises() {
  return {IidNoise{},        Ar1Noise{0.25},    Ar1Noise{0.5},
          Ar1Noise{0.9},     ArfimaNoise{0.2},  ArfimaNoise{0.4}};
}

std::vector<Scenario> paper_grid(const Scenario& knobs) {
  std::vector<Scenario> grid;
  for (TestFunction f : kAllTestFunctions) {
    for (std::size_t n : {512u, 1024u, 2048u}) {
      for (const NoiseKind& noise : paper_noises()) {
        for (double snr : {3.0, 5.0, 7.0}) {
          Scenario s = knobs;
          s.function = f;
          s.noise = noise;
          s.n = n;
          s.snr = snr;
          grid.push_back(s);
        }
      }
    }
  }
  return grid;
}

Scenario paper_profile() {
  Scenario s;
  s.signal_sd = 7.0;
  s.primary_level = 6;
  s.tau = 5.0;
  s.gamma = 2.0;
  s.vanishing_moments = 10;
  s.replications = 200;
  return s;
}

}  // namespace wavebayes
