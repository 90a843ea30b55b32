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
#include "wavebayes/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace wavebayes {

double mse(std::span<const double> estimate, std::span<const double> truth) {
  if (estimate.size() != truth.size()) {
    throw std::invalid_argument("mse: estimate and truth differ in length");
  }
  if (estimate.empty()) throw std::invalid_argument("mse: empty input");
  double total = 0.0;
  for (std::size_t i = 0; i < estimate.size(); ++i) {
    const double diff = estimate[i] - truth[i];
    total += diff * diff;
  }
  return total / static_cast<double>(estimate.size());
}

namespace {

struct Centered {
  std::vector<double> values;
  double sum_squares = 0.0;
};

Centered center(std::span<const double> x) {
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  Centered c{std::vector<double>(x.size()), 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) {
    c.values[i] = x[i] - mean;
    c.sum_squares += c.values[i] * c.values[i];
  }
  if (!(c.sum_squares > 0.0)) {
    throw std::invalid_argument("series has zero variance");
  }
  return c;
}

}  // namespace

std::vector<double> acf(std::span<const double> x, std::size_t max_lag) {
  if (max_lag >= x.size()) {
    throw std::invalid_argument("acf: max_lag must be smaller than the series length");
  }
  const Centered c = center(x);
  std::vector<double> rho(max_lag + 1);
  for (std::size_t k = 0; k <= max_lag; ++k) {
    double acc = 0.0;
    for (std::size_t t = 0; t + k < x.size(); ++t) acc += c.values[t] * c.values[t + k];
    rho[k] = acc / c.sum_squares;
  }
  return rho;
}

std::vector<double> ccf(std::span<const double> x, std::span<const double> y,
                        std::size_t max_lag) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("ccf: series must have equal length");
  }
  if (max_lag >= x.size()) {
    throw std::invalid_argument("ccf: max_lag must be smaller than the series length");
  }
  const Centered cx = center(x);
  const Centered cy = center(y);
  const double norm = std::sqrt(cx.sum_squares * cy.sum_squares);
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  const auto L = static_cast<std::ptrdiff_t>(max_lag);
  std::vector<double> r(2 * max_lag + 1);
  for (std::ptrdiff_t k = -L; k <= L; ++k) {
    double acc = 0.0;
    for (std::ptrdiff_t t = std::max<std::ptrdiff_t>(0, -k); t < n && t + k < n; ++t) {
      acc += cx.values[t + k] * cy.values[t];
    }
    r[k + L] = acc / norm;
  }
  return r;
}

double chi_square_upper_tail(double x, double dof) {
  if (!(dof > 0.0)) throw std::invalid_argument("chi-square dof must be positive");
  if (x <= 0.0) return 1.0;
  return boost::math::gamma_q(dof / 2.0, x / 2.0);
}

LjungBoxResult ljung_box(std::span<const double> x, int lags) {
  if (lags < 1) throw std::invalid_argument("Ljung-Box needs at least one lag");
  if (static_cast<std::size_t>(lags) >= x.size()) {
    throw std::invalid_argument("Ljung-Box lags must be smaller than the series length");
  }
  const auto rho = acf(x, static_cast<std::size_t>(lags));
  const double n = static_cast<double>(x.size());
  double acc = 0.0;
  for (int k = 1; k <= lags; ++k) acc += rho[k] * rho[k] / (n - k);
  LjungBoxResult result;
  result.statistic = n * (n + 2.0) * acc;
  result.p_value = chi_square_upper_tail(result.statistic, lags);
  return result;
}

double quantile_type7(std::span<const double> values, double prob) {
  if (values.empty()) throw std::invalid_argument("quantile of an empty vector");
  if (!(prob >= 0.0 && prob <= 1.0)) throw std::invalid_argument("probability outside [0, 1]");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double h = (static_cast<double>(sorted.size()) - 1.0) * prob;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

MseSummary summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("summarize: no values");
  // Sorting first makes the result independent of the input order.
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  MseSummary s;
  s.count = sorted.size();
  double total = 0.0;
  for (double v : sorted) total += v;
  s.mean = total / static_cast<double>(s.count);
  if (s.count == 1) {
    s.degenerate = true;
    s.sd = 0.0;
  } else {
    double ss = 0.0;
    for (double v : sorted) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(s.count - 1));
  }
  s.median = quantile_type7(sorted, 0.5);
  s.iqr = quantile_type7(sorted, 0.75) - quantile_type7(sorted, 0.25);
  return s;
}

}  // namespace wavebayes
