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
#include <string_view>
#include <vector>

#include "wavebayes/quadrature.hpp"
#include "wavebayes/wavelet.hpp"

namespace wavebayes {

/// pi(theta) = alpha delta_0(theta) + (1 - alpha) g(theta; tau), g logistic.
struct LogisticMixturePrior {
  double alpha = 0.0;
  double tau = 5.0;

  /// Requires 0 <= alpha < 1 and 0 < tau.
  void validate() const;
};

/// Logistic density with scale tau, evaluated without overflow for any theta.
double logistic_density(double theta, double tau);

/// alpha(j) = 1 - 1 / (j - J0 + 1)^gamma.
double alpha_level(int level, int primary_level, double gamma);

/// MAD(values) / 0.6745, the median taken as the mean of the two middle
/// order statistics for even counts.
double mad_sigma(std::span<const double> values);

/// Posterior mean of theta given z ~ N(theta, sigma^2) under the mixture
/// prior, with both integrals evaluated by Gauss-Hermite quadrature.
double bayes_shrink(double z, double sigma, const LogisticMixturePrior& prior,
                    int nodes = 64);

/// Reusable form of bayes_shrink for a fixed (sigma, prior, nodes).
class BayesShrinker {
 public:
  BayesShrinker(double sigma, const LogisticMixturePrior& prior, int nodes = 64);

  double operator()(double z) const;

 private:
  double sigma_;
  double tau_;
  // log(alpha tau / ((1 - alpha) sigma)) - log(sqrt(2 pi)); -inf when alpha = 0.
  double log_point_mass_factor_;
  const NormalQuadrature* rule_;
};

/// sgn(z) (|z| - lambda) outside the kill zone |z| <= lambda, else 0.
double soft_threshold(double z, double lambda);

/// sigma * sqrt(2 ln n).
double universal_lambda(double sigma, std::size_t n);

enum class RuleKind { LogisticBayes, SoftUniversal };

std::string_view name(RuleKind kind);
RuleKind parse_rule_kind(std::string_view text);

struct ShrinkageRule {
  RuleKind kind = RuleKind::LogisticBayes;
  int quadrature_nodes = 64;

  void validate() const;
};

inline constexpr int kMinQuadratureNodes = 16;

/// Level-dependent hyperparameters and noise scales.
struct LevelPolicy {
  int primary_level = 4;
  double gamma = 2.0;
  double tau = 5.0;
  /// Upper bound on tau; set to +inf to lift the default tau <= 10 policy.
  double tau_limit = 10.0;
  std::map<int, double> sigma_estimates;

  void validate() const;
};

/// mad_sigma of every detail level of the decomposition.
std::map<int, double> estimate_level_sigmas(const WaveletDecomposition& decomposition);

struct ShrinkResult {
  WaveletDecomposition coefficients;
  /// Levels left unshrunk because their sigma estimate was zero.
  std::vector<int> unshrunk_levels;
};

/// Applies the rule level by level; the approximation block is copied as is.
/// n is the signal length used by the universal threshold.
ShrinkResult apply_rule(const WaveletDecomposition& decomposition,
                        const ShrinkageRule& rule, const LevelPolicy& policy,
                        std::size_t n);

}  // namespace wavebayes
