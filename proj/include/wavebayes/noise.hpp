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
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wavebayes {

struct IidNoise {
  bool operator==(const IidNoise&) const = default;
};

/// e_i = phi e_{i-1} + eta_i with |phi| < 1.
struct Ar1Noise {
  double phi = 0.0;
  bool operator==(const Ar1Noise&) const = default;
};

/// (1 - B)^d e_i = eta_i with 0 < d < 0.5.
struct ArfimaNoise {
  double d = 0.0;
  bool operator==(const ArfimaNoise&) const = default;
};

using NoiseKind = std::variant<IidNoise, Ar1Noise, ArfimaNoise>;

/// Stationary Gaussian error process with marginal standard deviation sigma_e.
struct NoiseSpec {
  NoiseKind kind = IidNoise{};
  double sigma_e = 1.0;

  /// Throws std::invalid_argument when a parameter is out of range.
  void validate() const;
};

void validate(const NoiseKind& kind);

/// "iid", "ar1(0.25)", "arfima(0.4)".
std::string describe(const NoiseKind& kind);

/// Accepts "iid", "ar1:<phi>", "ar1(<phi>)", "arfima:<d>", "arfima(<d>)".
NoiseKind parse_noise(std::string_view text);

/// Reproducibility key of one generated sequence.
struct Seed {
  std::uint64_t base = 0;
  std::uint64_t stream = 0;
};

/// Standard normal variates from a 64-bit Mersenne Twister seeded with
/// splitmix64(base ^ stream), mapped through the Wichura AS241 inverse CDF.
/// The sequence is a pure function of the seed on every platform.
class NormalStream {
 public:
  explicit NormalStream(Seed seed);

  double next_uniform();
  double next();

 private:
  std::mt19937_64 engine_;
};

/// Inverse of the standard normal CDF for p in (0, 1).
double normal_quantile(double p);

/// Innovation sd sigma_eta giving the stationary marginal sd sigma_e.
double innovation_sd(const NoiseSpec& spec);

/// gamma(0..max_lag) of ARFIMA(0, d, 0) scaled to gamma(0) = sigma_e^2.
std::vector<double> arfima_acvf(double d, double sigma_e, std::size_t max_lag);

/// Exact stationary sample of length n. ARFIMA uses Durbin-Levinson
/// (Hosking) conditional sampling from arfima_acvf.
std::vector<double> generate(const NoiseSpec& spec, std::size_t n, Seed seed);

}  // namespace wavebayes
