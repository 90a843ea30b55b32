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
#include "wavebayes/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace wavebayes {

DenoiseResult denoise(std::span<const double> y, const DenoiseOptions& options) {
  const WaveletFilter& filter = cached_filter(options.vanishing_moments);
  DenoiseResult result;
  result.empirical = dwt(y, filter, options.primary_level);
  result.sigmas = estimate_level_sigmas(result.empirical);

  LevelPolicy policy;
  policy.primary_level = options.primary_level;
  policy.gamma = options.gamma;
  policy.tau = options.tau;
  policy.tau_limit = options.tau_limit;
  policy.sigma_estimates = result.sigmas;

  ShrinkResult shrunk = apply_rule(result.empirical, options.rule, policy, y.size());
  result.shrunk = std::move(shrunk.coefficients);
  result.unshrunk_levels = std::move(shrunk.unshrunk_levels);
  result.estimate = idwt(result.shrunk, filter);
  return result;
}

std::pair<std::vector<double>, std::vector<double>> collapse_median(
    std::span<const double> timestamps, std::span<const double> values) {
  if (timestamps.size() != values.size()) {
    throw std::invalid_argument("timestamps and values differ in length");
  }
  std::vector<double> order;
  std::map<double, std::vector<double>> groups;
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto [it, inserted] = groups.try_emplace(timestamps[i]);
    if (inserted) order.push_back(timestamps[i]);
    it->second.push_back(values[i]);
  }
  std::vector<double> collapsed;
  collapsed.reserve(order.size());
  for (double t : order) {
    auto& group = groups[t];
    std::sort(group.begin(), group.end());
    const std::size_t k = group.size();
    collapsed.push_back(k % 2 == 1 ? group[k / 2] : 0.5 * (group[k / 2 - 1] + group[k / 2]));
  }
  return {order, collapsed};
}

std::vector<double> pad_symmetric(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("cannot pad an empty series");
  const std::size_t target = std::bit_ceil(values.size());
  std::vector<double> out(values.begin(), values.end());
  out.reserve(target);
  // Reflect the growing buffer so repeated passes stay symmetric.
  while (out.size() < target) {
    const std::size_t n = out.size();
    for (std::size_t k = 0; k < n && out.size() < target; ++k) {
      out.push_back(out[n - 1 - k]);
    }
  }
  return out;
}

std::vector<double> truncate_dyadic(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("cannot truncate an empty series");
  const std::size_t target = std::bit_floor(values.size());
  return std::vector<double>(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(target));
}

}  // namespace wavebayes
