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
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wavebayes {

/// (1/n) sum (estimate_i - truth_i)^2.
double mse(std::span<const double> estimate, std::span<const double> truth);

/// Sample autocorrelations rho_0..rho_max_lag with the biased (1/n)
/// autocovariance, so |rho_k| <= 1.
std::vector<double> acf(std::span<const double> x, std::size_t max_lag);

/// Sample cross-correlation r_xy(k) = c_xy(k) / (s_x s_y) for
/// k = -max_lag..max_lag, where c_xy(k) = (1/n) sum_t (x_{t+k} - xbar)(y_t - ybar)
/// over the overlapping t. Element i holds lag i - max_lag. Unequal lengths
/// are rejected.
std::vector<double> ccf(std::span<const double> x, std::span<const double> y,
                        std::size_t max_lag);

struct LjungBoxResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Q = n (n + 2) sum_{k=1}^{h} rho_k^2 / (n - k), p-value from chi^2_h.
LjungBoxResult ljung_box(std::span<const double> x, int lags);

/// P(X > x) for X ~ chi^2 with dof degrees of freedom.
double chi_square_upper_tail(double x, double dof);

struct MseSummary {
  double mean = 0.0;    // AMSE
  double sd = 0.0;      // n - 1 denominator
  double median = 0.0;
  double iqr = 0.0;     // type-7 quartiles
  std::size_t count = 0;
  /// Set for a single value, where sd is reported as 0.
  bool degenerate = false;
};

/// Linear-interpolation (type 7) sample quantile, 0 <= prob <= 1.
double quantile_type7(std::span<const double> values, double prob);

MseSummary summarize(std::span<const double> values);

}  // namespace wavebayes
