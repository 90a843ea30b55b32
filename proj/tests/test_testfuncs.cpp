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
#include <stdexcept>
#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "wavebayes/testfuncs.hpp"

namespace wb = wavebayes;

TEST_CASE("bump and block tables") {
  const std::array<double, 11> t{.10, .13, .15, .23, .25, .40, .44, .65, .76, .78, .81};
  const std::array<double, 11> hb{4, 5, 3, 4, 5, 4.2, 2.1, 4.3, 3.1, 5.1, 4.2};
  const std::array<double, 11> wbump{.005, .005, .006, .01, .01, .03, .01, .01, .005, .008, .005};
  const std::array<double, 11> hk{4, -5, 3, -4, 5, -4.2, 2.1, 4.3, -3.1, 2.1, -4.2};
  CHECK(wb::bumps_parameters().location == t);
  CHECK(wb::bumps_parameters().height == hb);
  CHECK(wb::bumps_parameters().width == wbump);
  CHECK(wb::blocks_parameters().location == t);
  CHECK(wb::blocks_parameters().height == hk);
}

TEST_CASE("point values") {
  CHECK(wb::evaluate(wb::TestFunction::Bumps, 0.1) == doctest::Approx(4.0029470414431108768).epsilon(1e-14));
  // Blocks: sum of h_j (1 + sgn(x - t_j)) / 2
  CHECK(wb::evaluate(wb::TestFunction::Blocks, 0.0) == doctest::Approx(0.0));
  CHECK(wb::evaluate(wb::TestFunction::Blocks, 0.12) == doctest::Approx(4.0));
  CHECK(wb::evaluate(wb::TestFunction::Blocks, 0.14) == doctest::Approx(-1.0));
  CHECK(wb::evaluate(wb::TestFunction::Blocks, 0.10) == doctest::Approx(2.0));  // sgn(0) = 0
  CHECK(wb::evaluate(wb::TestFunction::Blocks, 0.9) == doctest::Approx(0.0).epsilon(1e-14));  // heights sum to zero
  CHECK(wb::evaluate(wb::TestFunction::Doppler, 0.0) == doctest::Approx(0.0));
  CHECK(wb::evaluate(wb::TestFunction::Doppler, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
  const double x = 0.3;
  CHECK(wb::evaluate(wb::TestFunction::Doppler, x) ==
        doctest::Approx(std::sqrt(x * (1 - x)) * std::sin(2.1 * M_PI / (x + 0.05))));
  CHECK(wb::evaluate(wb::TestFunction::Heavisine, x) ==
        doctest::Approx(4 * std::sin(4 * M_PI * x) - wb::sign(x - 0.3) - wb::sign(0.72 - x)));
  CHECK(wb::evaluate(wb::TestFunction::Heavisine, 0.5) ==
        doctest::Approx(4 * std::sin(2 * M_PI) - 1 - 1));
}

TEST_CASE("sign convention") {
  CHECK(wb::sign(0.0) == 0.0);
  CHECK(wb::sign(-0.0) == 0.0);
  CHECK(wb::sign(2.5) == 1.0);
  CHECK(wb::sign(-1e-300) == -1.0);
}

TEST_CASE("sampling grid is i / n") {
  const auto v = wb::sample(wb::TestFunction::Bumps, 512);
  REQUIRE(v.size() == 512);
  const auto it = std::max_element(v.begin(), v.end());
  CHECK(*it == doctest::Approx(5.0526863340030554387).epsilon(1e-13));
  CHECK(std::distance(v.begin(), it) == 127);  // i = 128, x = 0.25
  CHECK(v.back() == doctest::Approx(wb::evaluate(wb::TestFunction::Bumps, 1.0)));
  const auto small = wb::sample(wb::TestFunction::Heavisine, 8);
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(small[i] == wb::evaluate(wb::TestFunction::Heavisine, static_cast<double>(i + 1) / 8.0));
  CHECK_THROWS_AS(wb::sample(wb::TestFunction::Bumps, 100), std::invalid_argument);
  CHECK_THROWS_AS(wb::sample(wb::TestFunction::Bumps, 0), std::invalid_argument);
}

TEST_CASE("noise level for a target SNR") {
  const auto v = wb::sample(wb::TestFunction::Doppler, 1024);
  CHECK(wb::noise_sd_for_snr(v, 5.0) == doctest::Approx(0.057799291317674667283).epsilon(1e-13));
  CHECK(wb::noise_sd_for_snr(v, 5.0) * 5.0 == doctest::Approx(wb::population_sd(v)));
  CHECK_THROWS_AS(wb::noise_sd_for_snr(v, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(wb::noise_sd_for_snr(v, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(wb::noise_sd_for_snr(v, NAN), std::invalid_argument);
  const std::vector<double> flat(16, 2.0);
  CHECK_THROWS_AS(wb::noise_sd_for_snr(flat, 3.0), std::invalid_argument);
}

TEST_CASE("population sd and rescaling") {
  const std::vector<double> v{1, 2, 3, 4};
  CHECK(wb::population_sd(v) == doctest::Approx(std::sqrt(1.25)));
  auto w = wb::sample(wb::TestFunction::Blocks, 256);
  const auto raw = w;
  double mean = 0;
  for (double x : raw) mean += x;
  mean /= 256;
  wb::rescale_to_sd(w, 7.0);
  CHECK(wb::population_sd(w) == doctest::Approx(7.0).epsilon(1e-13));
  // Scaling only: the shape (and thus the zero crossing structure) is kept.
  const double factor = w[100] / raw[100];
  for (std::size_t i = 0; i < 256; ++i) CHECK(w[i] == doctest::Approx(raw[i] * factor));
  std::vector<double> flat(8, 1.0);
  CHECK_THROWS_AS(wb::rescale_to_sd(flat, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(wb::rescale_to_sd(w, 0.0), std::invalid_argument);
}

TEST_CASE("names round trip") {
  for (auto f : wb::kAllTestFunctions) CHECK(wb::parse_test_function(wb::name(f)) == f);
  CHECK(wb::parse_test_function("HeaviSine") == wb::TestFunction::Heavisine);
  CHECK_THROWS_AS(wb::parse_test_function("sawtooth"), std::invalid_argument);
}
