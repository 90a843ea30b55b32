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

/// Orthonormal Daubechies (extremal phase) filter pair.
///
/// lowpass has 2 * vanishing_moments taps normalized so that the taps sum to
/// sqrt(2); highpass[k] = (-1)^k * lowpass[L - 1 - k].
struct WaveletFilter {
  int vanishing_moments = 0;
  std::vector<double> lowpass;
  std::vector<double> highpass;

  std::size_t length() const { return lowpass.size(); }
};

inline constexpr int kMaxVanishingMoments = 10;

/// Builds the Daubechies filter with the given number of vanishing moments
/// (1..10) by spectral factorization of the Daubechies polynomial.
/// Throws std::invalid_argument for unsupported moment counts.
WaveletFilter build_filter(int vanishing_moments);

/// Cached, immutable filter instance shared across threads.
const WaveletFilter& cached_filter(int vanishing_moments);

/// Empirical wavelet coefficients of a signal of length n = 2^J.
///
/// Holds the 2^J0 scaling (approximation) coefficients and, for every level
/// J0 <= j <= J - 1, the 2^j detail coefficients in translation order.
class WaveletDecomposition {
 public:
  WaveletDecomposition() = default;

  /// details[i] holds level primary_level + i. Throws std::invalid_argument
  /// when the level sizes are inconsistent.
  WaveletDecomposition(int primary_level, int top_level,
                       std::vector<double> approx,
                       std::vector<std::vector<double>> details);

  /// All-zero decomposition with the given shape.
  static WaveletDecomposition zeros(int primary_level, int top_level);

  int primary_level() const { return primary_level_; }
  int top_level() const { return top_level_; }
  std::size_t signal_length() const { return std::size_t{1} << top_level_; }
  bool has_level(int level) const {
    return level >= primary_level_ && level < top_level_;
  }

  std::span<const double> approx() const { return approx_; }
  std::span<double> approx() { return approx_; }

  std::span<const double> detail(int level) const;
  std::span<double> detail(int level);

  /// Sum of squares over every stored coefficient.
  double energy() const;

  WaveletDecomposition& operator+=(const WaveletDecomposition& other);
  WaveletDecomposition& operator*=(double factor);

 private:
  void check_same_shape(const WaveletDecomposition& other) const;

  int primary_level_ = 0;
  int top_level_ = 0;
  std::vector<double> approx_;
  std::vector<std::vector<double>> details_;
};

/// True when n is a positive power of two.
bool is_power_of_two(std::size_t n);

/// log2(n) for a power of two; throws std::invalid_argument otherwise.
int dyadic_level(std::size_t n);

/// Periodic pyramidal DWT down to primary_level. At every stage the input is
/// circularly correlated with the filters and the even-indexed outputs are
/// kept: a[k] = sum_l h[l] x[(2k + l) mod m].
WaveletDecomposition dwt(std::span<const double> signal,
                         const WaveletFilter& filter, int primary_level);

/// Exact inverse of dwt() (the transpose of the orthogonal transform).
std::vector<double> idwt(const WaveletDecomposition& decomposition,
                         const WaveletFilter& filter);

}  // namespace wavebayes
