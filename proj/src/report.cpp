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
#include "wavebayes/report.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace wavebayes {

std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

void write_grid_csv(const GridReport& report, std::ostream& out) {
  out << "function,noise,n,snr,rule,mean,sd,median,iqr\n";
  for (const auto& cell : report.cells) {
    const Scenario& s = cell.scenario;
    const MseSummary& m = cell.summary;
    out << name(s.function) << ',' << describe(s.noise) << ',' << s.n << ','
        << format_number(s.snr) << ',' << name(s.rule.kind) << ','
        << format_number(m.mean) << ',' << format_number(m.sd) << ','
        << format_number(m.median) << ',' << format_number(m.iqr) << '\n';
  }
}

void write_grid_json(const GridReport& report, std::ostream& out) {
  nlohmann::ordered_json root;
  root["metadata"] = {
      {"base_seeds", report.metadata.base_seeds},
      {"config_hash", report.metadata.config_hash},
      {"wall_time_seconds", report.metadata.wall_time_seconds},
      {"generated_at", report.metadata.generated_at},
  };
  auto& cells = root["cells"] = nlohmann::ordered_json::array();
  for (const auto& cell : report.cells) {
    const Scenario& s = cell.scenario;
    cells.push_back({
        {"function", name(s.function)},
        {"noise", describe(s.noise)},
        {"n", s.n},
        {"snr", s.snr},
        {"rule", name(s.rule.kind)},
        {"replications", s.replications},
        {"primary_level", s.primary_level},
        {"gamma", s.gamma},
        {"tau", s.tau},
        {"vanishing_moments", s.vanishing_moments},
        {"signal_sd", s.signal_sd},
        {"quadrature_nodes", s.rule.quadrature_nodes},
        {"base_seed", s.base_seed},
        {"summary",
         {{"mean", cell.summary.mean},
          {"sd", cell.summary.sd},
          {"median", cell.summary.median},
          {"iqr", cell.summary.iqr},
          {"count", cell.summary.count},
          {"degenerate", cell.summary.degenerate}}},
        {"mse", cell.mses},
    });
  }
  out << root.dump(2) << '\n';
}

void write_ratio_csv(std::span<const RatioEntry> table, std::ostream& out) {
  out << "function,n,snr,rule,noise,ratio,ratio_display\n";
  for (const auto& row : table) {
    char display[32];
    std::snprintf(display, sizeof(display), "%.2f", row.ratio);
    out << name(row.function) << ',' << row.n << ',' << format_number(row.snr) << ','
        << name(row.rule) << ',' << describe(row.noise) << ','
        << format_number(row.ratio) << ',' << display << '\n';
  }
}

void write_pairs_csv(const PairedMses& pairs, std::ostream& out) {
  if (pairs.logistic.size() != pairs.soft.size()) {
    throw std::invalid_argument("paired MSE vectors differ in length");
  }
  out << "replication,logistic,soft\n";
  for (std::size_t i = 0; i < pairs.logistic.size(); ++i) {
    out << (i + 1) << ',' << format_number(pairs.logistic[i]) << ','
        << format_number(pairs.soft[i]) << '\n';
  }
}

}  // namespace wavebayes
