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

#include <vector>

namespace wavebayes {

/// Gauss-Hermite rule rewritten for the standard normal weight:
///   integral h(u) phi(u) du  ~=  sum_i weight[i] * h(node[i]).
/// Nodes are ascending; weights sum to 1.
struct NormalQuadrature {
  std::vector<double> node;
  std::vector<double> weight;
};

/// Computes the rule by Newton iteration on the orthonormal Hermite
/// recurrence. Throws std::invalid_argument for nodes < 1.
NormalQuadrature gauss_hermite_normal(int nodes);

/// Shared immutable rule, computed once per node count.
const NormalQuadrature& cached_gauss_hermite_normal(int nodes);

}  // namespace wavebayes
