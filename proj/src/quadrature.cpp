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
#include "wavebayes/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace wavebayes {

NormalQuadrature gauss_hermite_normal(int nodes) {
  if (nodes < 1) throw std::invalid_argument("quadrature needs at least one node");
  using Real = long double;
  const int n = nodes;
  const Real pim4 = 1.0L / std::sqrt(std::sqrt(std::numbers::pi_v<Real>));
  std::vector<Real> x(n);
  std::vector<Real> w(n);

  Real z = 0;
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Initial guesses for the largest roots first (Numerical Recipes gauher).
    if (i == 0) {
      z = std::sqrt(Real(2 * n + 1)) - 1.85575L * std::pow(Real(2 * n + 1), -0.16667L);
    } else if (i == 1) {
      z -= 1.14L * std::pow(Real(n), 0.426L) / z;
    } else if (i == 2) {
      z = 1.86L * z - 0.86L * x[0];
    } else if (i == 3) {
      z = 1.91L * z - 0.91L * x[1];
    } else {
      z = 2.0L * z - x[i - 2];
    }
    Real pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      Real p1 = pim4;
      Real p2 = 0;
      for (int j = 1; j <= n; ++j) {
        const Real p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(Real(2) / j) * p2 - std::sqrt(Real(j - 1) / j) * p3;
      }
      pp = std::sqrt(Real(2 * n)) * p2;
      const Real previous = z;
      z = previous - p1 / pp;
      if (std::abs(z - previous) <= 1e-17L * std::max(Real(1), std::abs(z))) break;
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = w[n - 1 - i] = Real(2) / (pp * pp);
  }

  NormalQuadrature rule;
  rule.node.resize(n);
  rule.weight.resize(n);
  const Real sqrt2 = std::sqrt(Real(2));
  const Real inv_sqrt_pi = 1.0L / std::sqrt(std::numbers::pi_v<Real>);
  // x is descending; store ascending.
  for (int i = 0; i < n; ++i) {
    rule.node[i] = static_cast<double>(sqrt2 * x[n - 1 - i]);
    rule.weight[i] = static_cast<double>(w[n - 1 - i] * inv_sqrt_pi);
  }
  return rule;
}

const NormalQuadrature& cached_gauss_hermite_normal(int nodes) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const NormalQuadrature>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[nodes];
  if (!slot) {
    slot = std::make_unique<const NormalQuadrature>(gauss_hermite_normal(nodes));
  }
  return *slot;
}

}  // namespace wavebayes
