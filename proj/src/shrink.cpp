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
#include "wavebayes/shrink.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wavebayes {

void LogisticMixturePrior::validate() const {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("point-mass weight alpha must lie in [0, 1)");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("logistic scale tau must be positive and finite");
  }
}

double logistic_density(double theta, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("logistic scale tau must be positive");
  // Symmetric form: exp(-|t|) / (1 + exp(-|t|))^2 never overflows.
  const double e = std::exp(-std::abs(theta) / tau);
  const double denom = 1.0 + e;
  return e / (tau * denom * denom);
}

double alpha_level(int level, int primary_level, double gamma) {
  if (level < primary_level) {
    throw std::invalid_argument("level " + std::to_string(level) +
                                " is below the primary resolution level " +
                                std::to_string(primary_level));
  }
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  return 1.0 - 1.0 / std::pow(static_cast<double>(level - primary_level + 1), gamma);
}

namespace {

double median_in_place(std::vector<double>& v) {
  const std::size_t n = v.size();
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(v.begin(), mid, v.end());
  const double upper = *mid;
  if (n % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), mid);
  return 0.5 * (lower + upper);
}

}  // namespace

double mad_sigma(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("MAD of an empty vector");
  std::vector<double> work(values.begin(), values.end());
  const double center = median_in_place(work);
  for (std::size_t i = 0; i < values.size(); ++i) work[i] = std::abs(values[i] - center);
  return median_in_place(work) / 0.6745;
}

BayesShrinker::BayesShrinker(double sigma, const LogisticMixturePrior& prior,
                             int nodes)
    : sigma_(sigma), tau_(prior.tau) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("noise scale sigma must be positive and finite");
  }
  prior.validate();
  if (nodes < kMinQuadratureNodes) {
    throw std::invalid_argument("at least " + std::to_string(kMinQuadratureNodes) +
                                " quadrature nodes are required");
  }
  rule_ = &cached_gauss_hermite_normal(nodes);
  log_point_mass_factor_ =
      prior.alpha > 0.0
          ? std::log(prior.alpha * prior.tau / ((1.0 - prior.alpha) * sigma)) -
                0.5 * std::log(2.0 * std::numbers::pi)
          : -std::numeric_limits<double>::infinity();
}

double BayesShrinker::operator()(double z) const {
  if (!std::isfinite(z)) throw std::invalid_argument("coefficient must be finite");
  // The rule is odd in z: evaluate at |z| so antisymmetry holds exactly.
  if (z == 0.0) return 0.0;
  const double sign = z < 0.0 ? -1.0 : 1.0;
  z = std::abs(z);
  const auto& node = rule_->node;
  const auto& weight = rule_->weight;
  const std::size_t m = node.size();

  // Integrals are scaled by exp(-s_ref), s_ref the largest exponent
  // -|sigma u + z| / tau over the nodes, so nothing underflows:
  //   delta = S1 / (S0 + alpha tau phi(z / sigma) e^{-s_ref} / ((1 - alpha) sigma))
  double min_abs = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    min_abs = std::min(min_abs, std::abs(sigma_ * node[i] + z));
  }
  const double s_ref = -min_abs / tau_;
  const double e_ref = std::exp(s_ref);

  double s0 = 0.0;
  double s1 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double theta = sigma_ * node[i] + z;
    const double r = std::exp((min_abs - std::abs(theta)) / tau_);
    const double denom = 1.0 + e_ref * r;
    const double q = weight[i] * r / (denom * denom);
    s0 += q;
    s1 += theta * q;
  }

  const double u = z / sigma_;
  const double point_mass = std::exp(log_point_mass_factor_ - 0.5 * u * u - s_ref);
  return sign * s1 / (s0 + point_mass);
}

double bayes_shrink(double z, double sigma, const LogisticMixturePrior& prior,
                    int nodes) {
  return BayesShrinker(sigma, prior, nodes)(z);
}

double soft_threshold(double z, double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("threshold must be non-negative");
  const double magnitude = std::abs(z) - lambda;
  if (magnitude <= 0.0) return 0.0;
  return z > 0.0 ? magnitude : -magnitude;
}

double universal_lambda(double sigma, std::size_t n) {
  if (n < 2) throw std::invalid_argument("universal threshold needs n >= 2");
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be non-negative");
  return sigma * std::sqrt(2.0 * std::log(static_cast<double>(n)));
}

std::string_view name(RuleKind kind) {
  return kind == RuleKind::LogisticBayes ? "logistic" : "soft";
}

RuleKind parse_rule_kind(std::string_view text) {
  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "logistic" || lower == "bayes") return RuleKind::LogisticBayes;
  if (lower == "soft" || lower == "soft-universal") return RuleKind::SoftUniversal;
  throw std::invalid_argument("unknown shrinkage rule '" + std::string(text) + "'");
}

void ShrinkageRule::validate() const {
  if (quadrature_nodes < kMinQuadratureNodes) {
    throw std::invalid_argument("at least " + std::to_string(kMinQuadratureNodes) +
                                " quadrature nodes are required");
  }
}

void LevelPolicy::validate() const {
  if (primary_level < 0) throw std::invalid_argument("primary level must be >= 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  if (tau > tau_limit) {
    throw std::invalid_argument("tau exceeds the configured limit");
  }
  for (const auto& [level, sigma] : sigma_estimates) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
      throw std::invalid_argument("sigma estimate at level " + std::to_string(level) +
                                  " must be finite and non-negative");
    }
  }
}

std::map<int, double> estimate_level_sigmas(const WaveletDecomposition& decomposition) {
  std::map<int, double> sigmas;
  for (int j = decomposition.primary_level(); j < decomposition.top_level(); ++j) {
    sigmas[j] = mad_sigma(decomposition.detail(j));
  }
  return sigmas;
}

ShrinkResult apply_rule(const WaveletDecomposition& decomposition,
                        const ShrinkageRule& rule, const LevelPolicy& policy,
                        std::size_t n) {
  rule.validate();
  policy.validate();
  if (decomposition.primary_level() != policy.primary_level) {
    throw std::invalid_argument("decomposition and policy disagree on the primary level");
  }

  ShrinkResult result{decomposition, {}};
  for (int j = decomposition.primary_level(); j < decomposition.top_level(); ++j) {
    const auto found = policy.sigma_estimates.find(j);
    if (found == policy.sigma_estimates.end()) {
      throw std::invalid_argument("missing sigma estimate for level " + std::to_string(j));
    }
    const double sigma = found->second;
    if (sigma == 0.0) {
      result.unshrunk_levels.push_back(j);
      continue;
    }
    auto level = result.coefficients.detail(j);
    if (rule.kind == RuleKind::LogisticBayes) {
      const LogisticMixturePrior prior{alpha_level(j, policy.primary_level, policy.gamma),
                                       policy.tau};
      const BayesShrinker shrink(sigma, prior, rule.quadrature_nodes);
      for (double& z : level) z = shrink(z);
    } else {
      const double lambda = universal_lambda(sigma, n);
      for (double& z : level) z = soft_threshold(z, lambda);
    }
  }
  return result;
}

}  // namespace wavebayes
