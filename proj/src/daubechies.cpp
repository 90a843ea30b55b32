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
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavebayes/wavelet.hpp"

namespace wavebayes {
namespace {

using Real = long double;
using Complex = std::complex<Real>;

Complex eval_poly(const std::vector<Real>& coeffs, Complex x) {
  Complex acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Complex eval_derivative(const std::vector<Real>& coeffs, Complex x) {
  Complex acc = 0;
  for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
    acc = acc * x + static_cast<Real>(k) * coeffs[k];
  }
  return acc;
}

// Durand-Kerner iteration followed by Newton polishing. coeffs are in
// ascending powers; degree is small (<= 9) so this is robust enough.
std::vector<Complex> polynomial_roots(const std::vector<Real>& coeffs) {
  const std::size_t degree = coeffs.size() - 1;
  std::vector<Real> monic(coeffs);
  for (auto& c : monic) c /= coeffs.back();

  std::vector<Complex> roots(degree);
  const Complex seed(0.4L, 0.9L);
  Complex power = 1;
  for (auto& r : roots) {
    power *= seed;
    r = power;
  }
  for (int iter = 0; iter < 2000; ++iter) {
    Real max_step = 0;
    for (std::size_t i = 0; i < degree; ++i) {
      Complex denom = 1;
      for (std::size_t j = 0; j < degree; ++j) {
        if (i != j) denom *= roots[i] - roots[j];
      }
      const Complex step = eval_poly(monic, roots[i]) / denom;
      roots[i] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < 1e-30L) break;
  }
  for (auto& r : roots) {
    for (int iter = 0; iter < 8; ++iter) {
      const Complex d = eval_derivative(monic, r);
      if (std::abs(d) == 0) break;
      r -= eval_poly(monic, r) / d;
    }
  }
  return roots;
}

// Multiplies the polynomial p (ascending powers) by (x - root).
void multiply_linear(std::vector<Complex>& p, Complex root) {
  p.push_back(0);
  for (std::size_t k = p.size() - 1; k >= 1; --k) {
    p[k] = p[k - 1] - root * p[k];
  }
  p[0] = -root * p[0];
}

Real binomial(int n, int k) {
  Real result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<Real>(n - k + i) / static_cast<Real>(i);
  }
  return result;
}

void check_moments(int vanishing_moments) {
  if (vanishing_moments < 1 || vanishing_moments > kMaxVanishingMoments) {
    throw std::invalid_argument(
        "unsupported number of vanishing moments: " +
        std::to_string(vanishing_moments) + " (expected 1.." +
        std::to_string(kMaxVanishingMoments) + ")");
  }
}

}  // namespace

WaveletFilter build_filter(int vanishing_moments) {
  check_moments(vanishing_moments);
  const int N = vanishing_moments;

  // |H(w)|^2 = 2 cos^{2N}(w/2) Q(sin^2(w/2)), Q(y) = sum C(N-1+k, k) y^k.
  std::vector<Complex> poly{Complex(1)};
  for (int k = 0; k < N; ++k) multiply_linear(poly, Complex(-1));

  if (N > 1) {
    std::vector<Real> q(N);
    for (int k = 0; k < N; ++k) q[k] = binomial(N - 1 + k, k);
    for (const Complex& y : polynomial_roots(q)) {
      // y = (2 - z - 1/z) / 4  =>  z^2 - (2 - 4y) z + 1 = 0; keep |z| < 1.
      const Complex b = Real(2) - Real(4) * y;
      const Complex disc = std::sqrt(b * b / Real(4) - Real(1));
      Complex z = b / Real(2) + disc;
      if (std::abs(z) > 1) z = b / Real(2) - disc;
      multiply_linear(poly, z);
    }
  }

  std::vector<Real> taps(poly.size());
  Real sum = 0;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    taps[k] = poly[k].real();
    sum += taps[k];
  }
  const Real scale = std::sqrt(Real(2)) / sum;
  for (auto& t : taps) t *= scale;

  // Extremal phase: energy concentrated at the start of the filter.
  Real forward = 0;
  Real backward = 0;
  const std::size_t L = taps.size();
  for (std::size_t k = 0; k < L; ++k) {
    forward += static_cast<Real>(k) * taps[k] * taps[k];
    backward += static_cast<Real>(L - 1 - k) * taps[k] * taps[k];
  }
  if (backward < forward) std::reverse(taps.begin(), taps.end());

  WaveletFilter filter;
  filter.vanishing_moments = N;
  filter.lowpass.resize(L);
  filter.highpass.resize(L);
  for (std::size_t k = 0; k < L; ++k) {
    filter.lowpass[k] = static_cast<double>(taps[k]);
  }
  for (std::size_t k = 0; k < L; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    filter.highpass[k] = sign * filter.lowpass[L - 1 - k];
  }
  return filter;
}

const WaveletFilter& cached_filter(int vanishing_moments) {
  check_moments(vanishing_moments);
  static std::mutex mutex;
  static std::array<std::unique_ptr<const WaveletFilter>,
                    kMaxVanishingMoments + 1>
      table;
  std::lock_guard lock(mutex);
  auto& slot = table[vanishing_moments];
  if (!slot) {
    slot = std::make_unique<const WaveletFilter>(build_filter(vanishing_moments));
  }
  return *slot;
}

}  // namespace wavebayes
