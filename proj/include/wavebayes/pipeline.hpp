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
#include <map>
#include <span>
#include <vector>

#include "wavebayes/shrink.hpp"
#include "wavebayes/wavelet.hpp"

namespace wavebayes {

struct DenoiseOptions {
  int vanishing_moments = 10;
  int primary_level = 4;
  double gamma = 2.0;
  double tau = 5.0;
  double tau_limit = 10.0;
  ShrinkageRule rule;
};

struct DenoiseResult {
  std::vector<double> estimate;
  WaveletDecomposition empirical;
  WaveletDecomposition shrunk;
  std::map<int, double> sigmas;
  std::vector<int> unshrunk_levels;
};

/// DWT -> per-level MAD -> shrinkage -> IDWT for a dyadic series.
DenoiseResult denoise(std::span<const double> y, const DenoiseOptions& options);

/// Groups equal timestamps (in first-appearance order) and keeps the median
/// of each group's values. Returns the collapsed (timestamps, values).
std::pair<std::vector<double>, std::vector<double>> collapse_median(
    std::span<const double> timestamps, std::span<const double> values);

/// Extends to the next power of two by mirroring the tail:
/// x[n + k] = x[n - 1 - k].
std::vector<double> pad_symmetric(std::span<const double> values);

/// Keeps the first 2^floor(log2 n) values.
std::vector<double> truncate_dyadic(std::span<const double> values);

}  // namespace wavebayes
