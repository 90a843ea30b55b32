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
#include "wavebayes/wavelet.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace wavebayes {

bool is_power_of_two(std::size_t n) { return n > 0 && std::has_single_bit(n); }

int dyadic_level(std::size_t n) {
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("length " + std::to_string(n) +
                                " is not a power of two");
  }
  return std::countr_zero(n);
}

WaveletDecomposition::WaveletDecomposition(
    int primary_level, int top_level, std::vector<double> approx,
    std::vector<std::vector<double>> details)
    : primary_level_(primary_level),
      top_level_(top_level),
      approx_(std::move(approx)),
      details_(std::move(details)) {
  if (primary_level < 0 || top_level <= primary_level || top_level > 30) {
    throw std::invalid_argument("decomposition levels must satisfy 0 <= J0 < J");
  }
  if (approx_.size() != (std::size_t{1} << primary_level)) {
    throw std::invalid_argument("approximation block must hold 2^J0 values");
  }
  if (details_.size() != static_cast<std::size_t>(top_level - primary_level)) {
    throw std::invalid_argument("expected one detail block per level J0..J-1");
  }
  for (std::size_t i = 0; i < details_.size(); ++i) {
    if (details_[i].size() != (std::size_t{1} << (primary_level + i))) {
      throw std::invalid_argument("detail level " +
                                  std::to_string(primary_level + i) +
                                  " has the wrong number of coefficients");
    }
  }
}

WaveletDecomposition WaveletDecomposition::zeros(int primary_level,
                                                 int top_level) {
  if (primary_level < 0 || top_level <= primary_level || top_level > 30) {
    throw std::invalid_argument("decomposition levels must satisfy 0 <= J0 < J");
  }
  std::vector<std::vector<double>> details;
  for (int j = primary_level; j < top_level; ++j) {
    details.emplace_back(std::size_t{1} << j, 0.0);
  }
  return WaveletDecomposition(primary_level, top_level,
                              std::vector<double>(std::size_t{1} << primary_level, 0.0),
                              std::move(details));
}

std::span<const double> WaveletDecomposition::detail(int level) const {
  if (!has_level(level)) {
    throw std::out_of_range("no detail coefficients at level " +
                            std::to_string(level));
  }
  return details_[level - primary_level_];
}

std::span<double> WaveletDecomposition::detail(int level) {
  if (!has_level(level)) {
    throw std::out_of_range("no detail coefficients at level " +
                            std::to_string(level));
  }
  return details_[level - primary_level_];
}

double WaveletDecomposition::energy() const {
  double total = 0.0;
  for (double v : approx_) total += v * v;
  for (const auto& level : details_) {
    for (double v : level) total += v * v;
  }
  return total;
}

void WaveletDecomposition::check_same_shape(
    const WaveletDecomposition& other) const {
  if (other.primary_level_ != primary_level_ || other.top_level_ != top_level_) {
    throw std::invalid_argument("decompositions have different shapes");
  }
}

WaveletDecomposition& WaveletDecomposition::operator+=(
    const WaveletDecomposition& other) {
  check_same_shape(other);
  for (std::size_t k = 0; k < approx_.size(); ++k) approx_[k] += other.approx_[k];
  for (std::size_t i = 0; i < details_.size(); ++i) {
    for (std::size_t k = 0; k < details_[i].size(); ++k) {
      details_[i][k] += other.details_[i][k];
    }
  }
  return *this;
}

WaveletDecomposition& WaveletDecomposition::operator*=(double factor) {
  for (double& v : approx_) v *= factor;
  for (auto& level : details_) {
    for (double& v : level) v *= factor;
  }
  return *this;
}

namespace {

// One analysis stage: input of length m -> (approx, detail), each m/2.
void analysis_step(std::span<const double> input, const WaveletFilter& filter,
                   std::vector<double>& approx, std::vector<double>& detail) {
  const std::size_t m = input.size();
  const std::size_t half = m / 2;
  const std::size_t L = filter.length();
  approx.assign(half, 0.0);
  detail.assign(half, 0.0);
  for (std::size_t k = 0; k < half; ++k) {
    double a = 0.0;
    double d = 0.0;
    std::size_t idx = (2 * k) % m;
    for (std::size_t l = 0; l < L; ++l) {
      const double x = input[idx];
      a += filter.lowpass[l] * x;
      d += filter.highpass[l] * x;
      if (++idx == m) idx = 0;
    }
    approx[k] = a;
    detail[k] = d;
  }
}

// Transpose of analysis_step.
void synthesis_step(std::span<const double> approx,
                    std::span<const double> detail, const WaveletFilter& filter,
                    std::vector<double>& output) {
  const std::size_t half = approx.size();
  const std::size_t m = 2 * half;
  const std::size_t L = filter.length();
  output.assign(m, 0.0);
  for (std::size_t k = 0; k < half; ++k) {
    const double a = approx[k];
    const double d = detail[k];
    std::size_t idx = (2 * k) % m;
    for (std::size_t l = 0; l < L; ++l) {
      output[idx] += filter.lowpass[l] * a + filter.highpass[l] * d;
      if (++idx == m) idx = 0;
    }
  }
}

}  // namespace

WaveletDecomposition dwt(std::span<const double> signal,
                         const WaveletFilter& filter, int primary_level) {
  const int top_level = dyadic_level(signal.size());
  if (primary_level < 0 || primary_level >= top_level) {
    throw std::invalid_argument("primary level J0 = " +
                                std::to_string(primary_level) +
                                " must satisfy 0 <= J0 < J = " +
                                std::to_string(top_level));
  }
  if (filter.lowpass.empty() || filter.lowpass.size() != filter.highpass.size()) {
    throw std::invalid_argument("malformed wavelet filter");
  }

  std::vector<std::vector<double>> details(top_level - primary_level);
  std::vector<double> current(signal.begin(), signal.end());
  std::vector<double> approx;
  for (int j = top_level - 1; j >= primary_level; --j) {
    analysis_step(current, filter, approx, details[j - primary_level]);
    current.swap(approx);
  }
  return WaveletDecomposition(primary_level, top_level, std::move(current),
                              std::move(details));
}

std::vector<double> idwt(const WaveletDecomposition& decomposition,
                         const WaveletFilter& filter) {
  if (decomposition.top_level() <= decomposition.primary_level()) {
    throw std::invalid_argument("empty decomposition");
  }
  if (filter.lowpass.empty() || filter.lowpass.size() != filter.highpass.size()) {
    throw std::invalid_argument("malformed wavelet filter");
  }
  std::vector<double> current(decomposition.approx().begin(),
                              decomposition.approx().end());
  std::vector<double> next;
  for (int j = decomposition.primary_level(); j < decomposition.top_level(); ++j) {
    synthesis_step(current, decomposition.detail(j), filter, next);
    current.swap(next);
  }
  return current;
}

}  // namespace wavebayes
