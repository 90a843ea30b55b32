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

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wavebayes {

/// The four Donoho-Johnstone benchmark signals on [0, 1].
enum class TestFunction { Bumps, Blocks, Doppler, Heavisine };

inline constexpr std::array<TestFunction, 4> kAllTestFunctions{
    TestFunction::Bumps, TestFunction::Blocks, TestFunction::Doppler,
    TestFunction::Heavisine};

/// Jump / bump locations, heights and widths shared by Bumps and Blocks.
struct BumpParameters {
  std::array<double, 11> location;
  std::array<double, 11> height;
  std::array<double, 11> width;  // unused by Blocks
};

const BumpParameters& bumps_parameters();
const BumpParameters& blocks_parameters();

std::string_view name(TestFunction f);

/// Case-insensitive lookup ("bumps", "Blocks", ...). Throws
/// std::invalid_argument for unknown names.
TestFunction parse_test_function(std::string_view text);

/// sgn with sgn(0) = 0.
double sign(double x);

/// Exact closed-form value of f at x in [0, 1].
double evaluate(TestFunction f, double x);

/// values[i - 1] = f(i / n) for i = 1..n; n must be a power of two.
std::vector<double> sample(TestFunction f, std::size_t n);

/// Population standard deviation (divides by n).
double population_sd(std::span<const double> values);

/// sigma_e = sd(signal) / snr. Throws std::invalid_argument for a constant
/// signal or a non-positive snr.
double noise_sd_for_snr(std::span<const double> signal, double snr);

/// Affinely rescales values in place to population sd = target_sd (mean is
/// preserved up to the same scale factor: values *= target_sd / sd).
void rescale_to_sd(std::span<double> values, double target_sd);

}  // namespace wavebayes
