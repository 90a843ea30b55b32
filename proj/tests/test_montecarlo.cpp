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
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "wavebayes/diagnostics.hpp"
#include "wavebayes/montecarlo.hpp"
#include "wavebayes/report.hpp"
#include "wavebayes/testfuncs.hpp"

namespace wb = wavebayes;

namespace {
wb::Scenario small(wb::TestFunction f, wb::NoiseKind noise, int reps = 6) {
  wb::Scenario s;
  s.function = f;
  s.noise = noise;
  s.n = 256;
  s.replications = reps;
  return s;
}

std::string csv_of(const wb::GridReport& r) {
  std::ostringstream o;
  wb::write_grid_csv(r, o);
  return o.str();
}
}  // namespace

TEST_CASE("scenario validation") {
  wb::Scenario s;
  CHECK_NOTHROW(s.validate());
  auto bad = s;
  bad.snr = -1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = s;
  bad.n = 500;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = s;
  bad.replications = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = s;
  bad.primary_level = 9;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = s;
  bad.noise = wb::Ar1Noise{1.2};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = s;
  bad.vanishing_moments = 11;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("cell labels") {
  CHECK(wb::cell_label(wb::Scenario{}) == "bumps/iid/n=512/snr=3/logistic");
  auto s = small(wb::TestFunction::Doppler, wb::ArfimaNoise{0.4});
  s.rule.kind = wb::RuleKind::SoftUniversal;
  s.snr = 2.5;
  CHECK(wb::cell_label(s) == "doppler/arfima(0.4)/n=256/snr=2.5/soft");
}

TEST_CASE("replications are deterministic and distinct") {
  const auto s = small(wb::TestFunction::Blocks, wb::Ar1Noise{0.5});
  CHECK(wb::run_replication(s, 3) == wb::run_replication(s, 3));
  CHECK(wb::run_replication(s, 3) != wb::run_replication(s, 4));
  auto other = s;
  other.base_seed = 43;
  CHECK(wb::run_replication(s, 3) != wb::run_replication(other, 3));
  CHECK_THROWS_AS(wb::run_replication(s, 0), std::invalid_argument);
  CHECK_THROWS_AS(wb::run_replication(s, 7), std::invalid_argument);
}

TEST_CASE("noise-free limit recovers the signal") {
  auto s = small(wb::TestFunction::Heavisine, wb::IidNoise{});
  s.n = 512;
  s.snr = 1e9;
  // Coarse-level sigma tracks the signal, so the rule never becomes the
  // identity; the error is still negligible against the signal variance.
  const auto f = wb::sample(s.function, s.n);
  CHECK(wb::run_replication(s, 1) < 1e-3 * wb::summarize(f).sd * wb::summarize(f).sd);
}

TEST_CASE("single-cell grid equals the replication loop") {
  const auto s = small(wb::TestFunction::Doppler, wb::ArfimaNoise{0.2});
  const auto report = wb::run_grid(std::vector<wb::Scenario>{s});
  REQUIRE(report.cells.size() == 1);
  std::vector<double> direct;
  for (int m = 1; m <= s.replications; ++m) direct.push_back(wb::run_replication(s, m));
  CHECK(report.cells[0].mses == direct);
  const auto summary = wb::summarize(direct);
  CHECK(report.cells[0].summary.mean == summary.mean);
  CHECK(report.cells[0].summary.iqr == summary.iqr);
}

TEST_CASE("grid results ignore order and thread count") {
  const auto a = small(wb::TestFunction::Bumps, wb::IidNoise{});
  const auto b = small(wb::TestFunction::Heavisine, wb::Ar1Noise{0.9});
  const auto r1 = wb::run_grid(std::vector<wb::Scenario>{a, b}, {1});
  const auto r2 = wb::run_grid(std::vector<wb::Scenario>{b, a}, {4});
  CHECK(r1.cells[0].mses == r2.cells[1].mses);
  CHECK(r1.cells[1].mses == r2.cells[0].mses);
  const auto r3 = wb::run_grid(std::vector<wb::Scenario>{a, b}, {3});
  CHECK(csv_of(r1) == csv_of(r3));
  CHECK(r1.metadata.config_hash == r3.metadata.config_hash);
}

TEST_CASE("grids reject duplicate and empty input") {
  const auto a = small(wb::TestFunction::Bumps, wb::IidNoise{});
  CHECK_THROWS_AS(wb::run_grid(std::vector<wb::Scenario>{a, a}), std::invalid_argument);
  CHECK_THROWS_AS(wb::run_grid(std::vector<wb::Scenario>{}), std::invalid_argument);
}

TEST_CASE("cells sharing a seed see the same noise") {
  // Common random numbers: only the correlation structure changes between
  // noise cells, so a cell with a larger AR coefficient is worse on average.
  auto weak = small(wb::TestFunction::Blocks, wb::Ar1Noise{0.25}, 30);
  auto strong = small(wb::TestFunction::Blocks, wb::Ar1Noise{0.9}, 30);
  const auto r = wb::run_grid(std::vector<wb::Scenario>{weak, strong});
  CHECK(r.cells[0].summary.mean < r.cells[1].summary.mean);
}

TEST_CASE("paired rule comparison") {
  auto s = small(wb::TestFunction::Bumps, wb::Ar1Noise{0.9}, 5);
  const auto pairs = wb::compare_rules(s);
  REQUIRE(pairs.logistic.size() == 5);
  for (int m = 1; m <= 5; ++m) {
    CHECK(pairs.logistic[m - 1] == wb::run_replication(s, m));
    auto soft = s;
    soft.rule.kind = wb::RuleKind::SoftUniversal;
    CHECK(pairs.soft[m - 1] == wb::run_replication(soft, m));
  }
  CHECK(wb::compare_rules(s, {1}).soft == wb::compare_rules(s, {3}).soft);
}

TEST_CASE("ratio table") {
  const auto iid = small(wb::TestFunction::Bumps, wb::IidNoise{}, 4);
  const auto ar = small(wb::TestFunction::Bumps, wb::Ar1Noise{0.9}, 4);
  auto report = wb::run_grid(std::vector<wb::Scenario>{iid, ar});
  auto table = wb::ratio_table(report);
  REQUIRE(table.size() == 2);
  CHECK(table[0].ratio == 1.0);
  CHECK(table[1].ratio == doctest::Approx(report.cells[1].summary.mean / report.cells[0].summary.mean));
  // Scaling a whole stratum leaves ratios unchanged.
  for (auto& c : report.cells) c.summary.mean *= 7.5;
  CHECK(wb::ratio_table(report)[1].ratio == doctest::Approx(table[1].ratio));
  const auto lonely = wb::run_grid(std::vector<wb::Scenario>{ar});
  CHECK(wb::ratio_table(lonely).empty());
}

TEST_CASE("study grid") {
  const auto grid = wb::paper_grid(wb::paper_profile());
  CHECK(grid.size() == 216);
  std::set<std::string> labels;
  for (const auto& s : grid) labels.insert(wb::cell_label(s));
  CHECK(labels.size() == 216);
  CHECK(wb::paper_noises().size() == 6);
  for (const auto& s : grid) {
    CHECK(s.replications == 200);
    CHECK(s.vanishing_moments == 10);
  }
}

TEST_CASE("configuration hash") {
  std::vector<wb::Scenario> g{small(wb::TestFunction::Bumps, wb::IidNoise{})};
  const auto h = wb::config_hash(g);
  CHECK(h.size() == 16);
  CHECK(h == wb::config_hash(g));
  g[0].tau = 4;
  CHECK(h != wb::config_hash(g));
  g[0].tau = 5;
  g[0].base_seed = 1;
  CHECK(h != wb::config_hash(g));
}

TEST_CASE("report serialization") {
  const auto a = small(wb::TestFunction::Bumps, wb::IidNoise{}, 3);
  const auto b = small(wb::TestFunction::Bumps, wb::ArfimaNoise{0.4}, 3);
  const auto report = wb::run_grid(std::vector<wb::Scenario>{a, b});

  const auto csv = csv_of(report);
  std::istringstream lines(csv);
  std::string header, row1, row2, extra;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  CHECK(header == "function,noise,n,snr,rule,mean,sd,median,iqr");
  CHECK(row1.rfind("bumps,iid,256,3,logistic,", 0) == 0);
  CHECK(row2.rfind("bumps,arfima(0.4),256,3,logistic,", 0) == 0);
  CHECK_FALSE(std::getline(lines, extra));
  // Shortest round-trip formatting.
  CHECK(wb::format_number(0.1) == "0.1");
  CHECK(std::stod(wb::format_number(report.cells[0].summary.mean)) == report.cells[0].summary.mean);

  std::ostringstream js;
  wb::write_grid_json(report, js);
  const auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["metadata"]["config_hash"] == report.metadata.config_hash);
  CHECK(doc["metadata"].contains("generated_at"));
  CHECK(doc["metadata"].contains("wall_time_seconds"));
  CHECK(doc["cells"].size() == 2);
  CHECK(doc["cells"][1]["mse"].size() == 3);
  CHECK(doc["cells"][1]["mse"][2].get<double>() == report.cells[1].mses[2]);

  std::ostringstream ratios;
  const auto table = wb::ratio_table(report);
  wb::write_ratio_csv(table, ratios);
  CHECK(ratios.str().rfind("function,n,snr,rule,noise,ratio,ratio_display\n", 0) == 0);
  CHECK(ratios.str().find(",1,1.00\n") != std::string::npos);

  std::ostringstream pairs;
  wb::write_pairs_csv(wb::PairedMses{{1.5, 2}, {3, 4.25}}, pairs);
  CHECK(pairs.str() == "replication,logistic,soft\n1,1.5,3\n2,2,4.25\n");
}
