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
#include "wavebayes/testfuncs.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wavebayes/wavelet.hpp"

namespace wavebayes {

const BumpParameters& bumps_parameters() {
  static const BumpParameters params{
      {0.1, 0.13, 0.15, 0.23, 0.25, 0.40, 0.44, 0.65, 0.76, 0.78, 0.81},
      {4, 5, 3, 4, 5, 4.2, 2.1, 4.3, 3.1, 5.1, 4.2},
      {0.005, 0.005, 0.006, 0.01, 0.01, 0.03, 0.01, 0.01, 0.005, 0.008, 0.005}};
  return params;
}

const BumpParameters& blocks_parameters() {
  static const BumpParameters params{
      {0.1, 0.13, 0.15, 0.23, 0.25, 0.40, 0.44, 0.65, 0.76, 0.78, 0.81},
      {4, -5, 3, -4, 5, -4.2, 2.1, 4.3, -3.1, 2.1, -4.2},
      {}};
  return params;
}

std::string_view name(TestFunction f) {
  switch (f) {
    case TestFunction::Bumps: return "bumps";
    case TestFunction::Blocks: return "blocks";
    case TestFunction::Doppler: return "doppler";
    case TestFunction::Heavisine: return "heavisine";
  }
  return "unknown";
}

TestFunction parse_test_function(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (TestFunction f : kAllTestFunctions) {
    if (name(f) == lower) return f;
  }
  throw std::invalid_argument("unknown test function '" + std::string(text) + "'");
}

double sign(double x) { return (x > 0) - (x < 0); }

double evaluate(TestFunction f, double x) {
  switch (f) {
    case TestFunction::Bumps: {
      const auto& p = bumps_parameters();
      double total = 0.0;
      for (std::size_t l = 0; l < p.location.size(); ++l) {
        const double u = std::abs((x - p.location[l]) / p.width[l]);
        const double k = 1.0 / (1.0 + u);
        total += p.height[l] * (k * k) * (k * k);
      }
      return total;
    }
    case TestFunction::Blocks: {
      const auto& p = blocks_parameters();
      double total = 0.0;
      for (std::size_t l = 0; l < p.location.size(); ++l) {
        total += p.height[l] * (1.0 + sign(x - p.location[l])) / 2.0;
      }
      return total;
    }
    case TestFunction::Doppler:
      return std::sqrt(x * (1.0 - x)) *
             std::sin(2.1 * std::numbers::pi / (x + 0.05));
    case TestFunction::Heavisine:
      return 4.0 * std::sin(4.0 * std::numbers::pi * x) - sign(x - 0.3) -
             sign(0.72 - x);
  }
  throw std::invalid_argument("unknown test function");
}

std::vector<double> sample(TestFunction f, std::size_t n) {
  dyadic_level(n);
  std::vector<double> values(n);
  for (std::size_t i = 1; i <= n; ++i) {
    values[i - 1] = evaluate(f, static_cast<double>(i) / static_cast<double>(n));
  }
  return values;
}

double population_sd(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("empty signal");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size()));
}

double noise_sd_for_snr(std::span<const double> signal, double snr) {
  if (!(snr > 0.0) || !std::isfinite(snr)) {
    throw std::invalid_argument("SNR must be a positive finite number");
  }
  const double sd = population_sd(signal);
  if (!(sd > 0.0)) {
    throw std::invalid_argument("SNR is undefined for a constant signal");
  }
  return sd / snr;
}

void rescale_to_sd(std::span<double> values, double target_sd) {
  if (!(target_sd > 0.0)) throw std::invalid_argument("target sd must be positive");
  const double sd = population_sd(values);
  if (!(sd > 0.0)) throw std::invalid_argument("cannot rescale a constant signal");
  const double factor = target_sd / sd;
  for (double& v : values) v *= factor;
}

}  // namespace wavebayes
