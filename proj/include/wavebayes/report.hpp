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

#include <ostream>
#include <span>
#include <string>

#include "wavebayes/montecarlo.hpp"

namespace wavebayes {

/// Shortest round-trip decimal representation ('.' separator, no locale).
std::string format_number(double value);

/// Header plus one row per cell:
/// function,noise,n,snr,rule,mean,sd,median,iqr
/// Contains no timing information, so reruns are byte-identical.
void write_grid_csv(const GridReport& report, std::ostream& out);

/// Full per-replication MSE vectors, summaries and metadata.
void write_grid_json(const GridReport& report, std::ostream& out);

/// function,n,snr,rule,noise,ratio,ratio_display (two decimals).
void write_ratio_csv(std::span<const RatioEntry> table, std::ostream& out);

/// replication,logistic,soft
void write_pairs_csv(const PairedMses& pairs, std::ostream& out);

}  // namespace wavebayes
