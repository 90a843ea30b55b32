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
#include "wavebayes/noise.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wavebayes {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::string format_parameter(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("invalid number '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

void validate(const NoiseKind& kind) {
  if (const auto* ar = std::get_if<Ar1Noise>(&kind)) {
    if (!(ar->phi > -1.0 && ar->phi < 1.0)) {
      throw std::invalid_argument("AR(1) coefficient must lie in (-1, 1)");
    }
  } else if (const auto* arf = std::get_if<ArfimaNoise>(&kind)) {
    if (!(arf->d > 0.0 && arf->d < 0.5)) {
      throw std::invalid_argument("ARFIMA memory parameter must lie in (0, 0.5)");
    }
  }
}

void NoiseSpec::validate() const {
  wavebayes::validate(kind);
  if (!(sigma_e > 0.0) || !std::isfinite(sigma_e)) {
    throw std::invalid_argument("noise sd must be positive and finite");
  }
}

std::string describe(const NoiseKind& kind) {
  if (std::holds_alternative<IidNoise>(kind)) return "iid";
  if (const auto* ar = std::get_if<Ar1Noise>(&kind)) {
    return "ar1(" + format_parameter(ar->phi) + ")";
  }
  return "arfima(" + format_parameter(std::get<ArfimaNoise>(kind).d) + ")";
}

NoiseKind parse_noise(std::string_view text) {
  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "iid") return IidNoise{};

  std::string_view view(lower);
  std::string_view head;
  std::string_view arg;
  if (auto colon = view.find(':'); colon != std::string_view::npos) {
    head = view.substr(0, colon);
    arg = view.substr(colon + 1);
  } else if (auto open = view.find('('); open != std::string_view::npos &&
                                          view.back() == ')') {
    head = view.substr(0, open);
    arg = view.substr(open + 1, view.size() - open - 2);
  } else {
    throw std::invalid_argument("unrecognized noise process '" + std::string(text) + "'");
  }

  NoiseKind kind;
  if (head == "ar1" || head == "ar") {
    kind = Ar1Noise{parse_double(arg)};
  } else if (head == "arfima") {
    kind = ArfimaNoise{parse_double(arg)};
  } else {
    throw std::invalid_argument("unrecognized noise process '" + std::string(text) + "'");
  }
  validate(kind);
  return kind;
}

// Hashing the base before adding the stream keeps distinct (base, stream)
// pairs from mapping onto the same engine state in any structured way.
NormalStream::NormalStream(Seed seed)
    : engine_(splitmix64(splitmix64(seed.base) + seed.stream)) {}

double NormalStream::next_uniform() {
  // 53 random bits, shifted off the endpoints.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double NormalStream::next() { return normal_quantile(next_uniform()); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("normal quantile requires 0 < p < 1");
  }
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2509.0809287301226727 * r + 33430.575583588128105) * r +
                 67265.770927008700853) * r + 45921.953931549871457) * r +
               13731.693765509461125) * r + 1971.5909503065514427) * r +
             133.14166789178437745) * r + 3.387132872796366608) /
           (((((((5226.495278852545925 * r + 28729.085735721942674) * r +
                 39307.89580009271061) * r + 21213.794301586595867) * r +
               5394.1960214247511077) * r + 687.1870074920579083) * r +
             42.313330701600911252) * r + 1.0);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = (((((((7.7454501427834140764e-4 * r + 0.0227238449892691845833) * r +
                  0.24178072517745061177) * r + 1.27045825245236838258) * r +
                3.64784832476320460504) * r + 5.7694972214606914055) * r +
              4.6303378461565452959) * r + 1.42343711074968357734) /
            (((((((1.05075007164441684324e-9 * r + 5.475938084995344946e-4) * r +
                  0.0151986665636164571966) * r + 0.14810397642748007459) * r +
                0.68976733498510000455) * r + 1.6763848301838038494) * r +
              2.05319162663775882187) * r + 1.0);
  } else {
    r -= 5.0;
    value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  0.0012426609473880784386) * r + 0.026532189526576123093) * r +
                0.29656057182850489123) * r + 1.7848265399172913358) * r +
              5.4637849111641143699) * r + 6.6579046435011037772) /
            (((((((2.04426310338993978564e-15 * r + 1.4215117583164458887e-7) * r +
                  1.8463183175100546818e-5) * r + 7.868691311456132591e-4) * r +
                0.0148753612908506148525) * r + 0.13692988092273580531) * r +
              0.59983220655588793769) * r + 1.0);
  }
  return q < 0.0 ? -value : value;
}

double innovation_sd(const NoiseSpec& spec) {
  spec.validate();
  if (const auto* ar = std::get_if<Ar1Noise>(&spec.kind)) {
    return spec.sigma_e * std::sqrt(1.0 - ar->phi * ar->phi);
  }
  if (const auto* arf = std::get_if<ArfimaNoise>(&spec.kind)) {
    // sigma_e^2 = sigma_eta^2 Gamma(1 - 2d) / Gamma(1 - d)^2
    return spec.sigma_e * std::tgamma(1.0 - arf->d) /
           std::sqrt(std::tgamma(1.0 - 2.0 * arf->d));
  }
  return spec.sigma_e;
}

std::vector<double> arfima_acvf(double d, double sigma_e, std::size_t max_lag) {
  validate(ArfimaNoise{d});
  if (!(sigma_e > 0.0)) throw std::invalid_argument("noise sd must be positive");
  std::vector<double> gamma(max_lag + 1);
  gamma[0] = sigma_e * sigma_e;
  for (std::size_t k = 1; k <= max_lag; ++k) {
    const double kk = static_cast<double>(k);
    gamma[k] = gamma[k - 1] * (kk - 1.0 + d) / (kk - d);
  }
  return gamma;
}

namespace {

std::vector<double> durbin_levinson_sample(const std::vector<double>& acvf,
                                           NormalStream& normals) {
  const std::size_t n = acvf.size();
  std::vector<double> out(n);
  std::vector<double> phi(n, 0.0);
  std::vector<double> previous(n, 0.0);
  double variance = acvf[0];
  out[0] = std::sqrt(variance) * normals.next();
  for (std::size_t t = 1; t < n; ++t) {
    // Partial autocorrelation phi_{t,t}.
    double acc = acvf[t];
    for (std::size_t j = 1; j < t; ++j) acc -= phi[j - 1] * acvf[t - j];
    const double kappa = acc / variance;
    previous.assign(phi.begin(), phi.begin() + static_cast<std::ptrdiff_t>(t - 1));
    for (std::size_t j = 1; j < t; ++j) {
      phi[j - 1] = previous[j - 1] - kappa * previous[t - 1 - j];
    }
    phi[t - 1] = kappa;
    variance *= (1.0 - kappa * kappa);

    double mean = 0.0;
    for (std::size_t j = 1; j <= t; ++j) mean += phi[j - 1] * out[t - j];
    out[t] = mean + std::sqrt(variance) * normals.next();
  }
  return out;
}

}  // namespace

std::vector<double> generate(const NoiseSpec& spec, std::size_t n, Seed seed) {
  spec.validate();
  if (n == 0) throw std::invalid_argument("noise length must be at least 1");
  NormalStream normals(seed);

  if (const auto* ar = std::get_if<Ar1Noise>(&spec.kind)) {
    const double eta = innovation_sd(spec);
    std::vector<double> out(n);
    out[0] = spec.sigma_e * normals.next();
    for (std::size_t i = 1; i < n; ++i) {
      out[i] = ar->phi * out[i - 1] + eta * normals.next();
    }
    return out;
  }
  if (const auto* arf = std::get_if<ArfimaNoise>(&spec.kind)) {
    return durbin_levinson_sample(arfima_acvf(arf->d, spec.sigma_e, n - 1), normals);
  }
  std::vector<double> out(n);
  for (double& v : out) v = spec.sigma_e * normals.next();
  return out;
}

}  // namespace wavebayes
