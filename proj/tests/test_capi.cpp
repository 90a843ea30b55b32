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
// Exercises the shared library through its C interface only.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "wavebayes/wavebayes.h"

TEST_CASE("version and status strings") {
  CHECK(std::string(wb_version()).size() > 0);
  CHECK(std::string(wb_status_name(WB_OK)) == "ok");
  CHECK(std::string(wb_status_name(WB_ERROR_IO)) == "i/o error");
}

TEST_CASE("errors come back as status codes with a message") {
  double out = 0;
  CHECK(wb_bayes_shrink(1.0, -1.0, 0.5, 5.0, 64, &out) == WB_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(wb_last_error()).find("sigma") != std::string::npos);
  CHECK(wb_bayes_shrink(1.0, 1.0, 0.5, 5.0, 64, nullptr) == WB_ERROR_INVALID_ARGUMENT);
  CHECK(wb_bayes_shrink(3.0, 1.0, 0.8, 5.0, 64, &out) == WB_OK);
  CHECK(std::string(wb_last_error()).empty());
  CHECK(out == doctest::Approx(2.1170095250489720291).epsilon(1e-12));
  wb_decomposition* d = nullptr;
  const double x[3] = {1, 2, 3};
  CHECK(wb_dwt(x, 3, 10, 0, &d) == WB_ERROR_INVALID_ARGUMENT);
  CHECK(d == nullptr);
  CHECK(wb_chi_square_upper_tail(1, 0, &out) == WB_ERROR_INVALID_ARGUMENT);
  wb_function f;
  CHECK(wb_function_parse("nope", &f) == WB_ERROR_INVALID_ARGUMENT);
  CHECK(wb_noise_generate(nullptr, 4, 1, 1, &out) == WB_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("wavelet round trip through handles") {
  std::vector<double> x(256);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::sin(0.1 * static_cast<double>(i * i));
  wb_decomposition* d = nullptr;
  REQUIRE(wb_dwt(x.data(), x.size(), 10, 3, &d) == WB_OK);
  CHECK(wb_decomposition_primary_level(d) == 3);
  CHECK(wb_decomposition_top_level(d) == 8);
  const double* data = nullptr;
  std::size_t len = 0;
  CHECK(wb_decomposition_detail(d, 7, &data, &len) == WB_OK);
  CHECK(len == 128);
  CHECK(wb_decomposition_detail(d, 8, &data, &len) == WB_ERROR_OUT_OF_RANGE);
  CHECK(wb_decomposition_approx(d, &data, &len) == WB_OK);
  CHECK(len == 8);
  std::vector<double> back(256);
  CHECK(wb_idwt(d, 10, back.data(), back.size()) == WB_OK);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(back[i] == doctest::Approx(x[i]).epsilon(1e-12));
  CHECK(wb_idwt(d, 10, back.data(), 100) == WB_ERROR_INVALID_ARGUMENT);
  wb_decomposition_free(d);
  wb_decomposition_free(nullptr);
  double taps[20];
  CHECK(wb_filter_lowpass(10, taps, 20) == WB_OK);
  CHECK(taps[0] == doctest::Approx(0.026670057900555554));
  CHECK(wb_filter_lowpass(10, taps, 19) == WB_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("noise and test functions") {
  wb_noise_spec spec{};
  REQUIRE(wb_noise_parse("arfima:0.4", &spec) == WB_OK);
  CHECK(spec.kind == WB_NOISE_ARFIMA);
  CHECK(spec.parameter == 0.4);
  char label[32];
  CHECK(wb_noise_describe(&spec, label, sizeof label) == WB_OK);
  CHECK(std::string(label) == "arfima(0.4)");
  CHECK(wb_noise_describe(&spec, label, 4) == WB_ERROR_INVALID_ARGUMENT);
  double isd = 0;
  CHECK(wb_noise_innovation_sd(&spec, &isd) == WB_OK);
  CHECK(isd == doctest::Approx(0.69503154000411690975));
  std::vector<double> a(64), b(64);
  CHECK(wb_noise_generate(&spec, 64, 9, 2, a.data()) == WB_OK);
  CHECK(wb_noise_generate(&spec, 64, 9, 2, b.data()) == WB_OK);
  CHECK(a == b);
  spec.parameter = 0.7;
  CHECK(wb_noise_generate(&spec, 64, 9, 2, a.data()) == WB_ERROR_INVALID_ARGUMENT);

  wb_function f{};
  REQUIRE(wb_function_parse("Doppler", &f) == WB_OK);
  CHECK(std::string(wb_function_name(f)) == "doppler");
  std::vector<double> v(1024);
  CHECK(wb_function_sample(f, 1024, v.data()) == WB_OK);
  double sd = 0;
  CHECK(wb_noise_sd_for_snr(v.data(), v.size(), 5, &sd) == WB_OK);
  CHECK(sd == doctest::Approx(0.057799291317674667283));
}

TEST_CASE("denoise through the C interface") {
  std::vector<double> y(512);
  REQUIRE(wb_function_sample(WB_FUNCTION_HEAVISINE, 512, y.data()) == WB_OK);
  wb_noise_spec spec{WB_NOISE_IID, 0, 0.3};
  std::vector<double> e(512);
  REQUIRE(wb_noise_generate(&spec, 512, 1, 1, e.data()) == WB_OK);
  for (std::size_t i = 0; i < 512; ++i) y[i] += e[i];
  wb_denoise_options opt;
  wb_denoise_options_init(&opt);
  CHECK(opt.primary_level == 4);
  CHECK(opt.moments == 10);
  wb_denoise_result* r = nullptr;
  REQUIRE(wb_denoise(y.data(), y.size(), &opt, &r) == WB_OK);
  const double* est = nullptr;
  std::size_t len = 0;
  CHECK(wb_denoise_result_estimate(r, &est, &len) == WB_OK);
  CHECK(len == 512);
  double sigma = 0;
  CHECK(wb_denoise_result_sigma(r, 8, &sigma) == WB_OK);
  CHECK(sigma == doctest::Approx(0.3).epsilon(0.2));
  CHECK(wb_denoise_result_sigma(r, 2, &sigma) == WB_ERROR_OUT_OF_RANGE);
  CHECK(wb_denoise_result_unshrunk_count(r) == 0);
  CHECK(wb_decomposition_top_level(wb_denoise_result_shrunk(r)) == 9);
  wb_denoise_result_free(r);
  opt.primary_level = 9;
  CHECK(wb_denoise(y.data(), y.size(), &opt, &r) == WB_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("preprocessing helpers") {
  const double t[] = {1, 1, 2};
  const double v[] = {1, 3, 5};
  double ot[3], ov[3];
  std::size_t len = 0;
  CHECK(wb_collapse_median(t, v, 3, ot, ov, &len) == WB_OK);
  CHECK(len == 2);
  CHECK(ov[0] == 2);
  double padded[8];
  const double x[] = {1, 2, 3, 4, 5};
  CHECK(wb_pad_symmetric(x, 5, padded, &len) == WB_OK);
  CHECK(len == 8);
  CHECK(padded[5] == 5);
  CHECK(wb_next_power_of_two(300) == 512);
  CHECK(wb_previous_power_of_two(300) == 256);
  CHECK(wb_is_power_of_two(256));
}

TEST_CASE("diagnostics") {
  const double x[] = {1, 2, 3, 4, 5};
  double r[3];
  CHECK(wb_acf(x, 5, 2, r) == WB_OK);
  CHECK(r[1] == doctest::Approx(0.4));
  double c[5];
  CHECK(wb_ccf(x, x, 5, 2, c) == WB_OK);
  CHECK(c[2] == doctest::Approx(1.0));
  double q = 0, p = 0;
  CHECK(wb_ljung_box(x, 5, 2, &q, &p) == WB_OK);
  CHECK(p > 0);
  wb_summary s{};
  CHECK(wb_summarize(x, 5, &s) == WB_OK);
  CHECK(s.median == 3);
  CHECK(s.count == 5);
  CHECK(wb_summarize(x, 0, &s) == WB_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("grid run and report files") {
  wb_scenario s;
  wb_scenario_init(&s);
  CHECK(s.replications == 200);
  CHECK(s.primary_level == 4);
  wb_scenario paper;
  wb_scenario_init_paper(&paper);
  CHECK(paper.primary_level == 6);
  s.n = 256;
  s.replications = 3;
  wb_grid* g = nullptr;
  REQUIRE(wb_grid_create(&g) == WB_OK);
  CHECK(wb_grid_add(g, &s) == WB_OK);
  s.noise.kind = WB_NOISE_AR1;
  s.noise.parameter = 0.5;
  CHECK(wb_grid_add(g, &s) == WB_OK);
  wb_scenario bad = s;
  bad.snr = -1;
  CHECK(wb_grid_add(g, &bad) == WB_ERROR_INVALID_ARGUMENT);
  CHECK(wb_grid_size(g) == 2);
  wb_report* rep = nullptr;
  REQUIRE(wb_grid_run(g, 2, &rep) == WB_OK);
  CHECK(wb_report_cell_count(rep) == 2);
  wb_summary sum{};
  CHECK(wb_report_cell_summary(rep, 1, &sum) == WB_OK);
  CHECK(sum.count == 3);
  const double* mses = nullptr;
  std::size_t len = 0;
  CHECK(wb_report_cell_mses(rep, 0, &mses, &len) == WB_OK);
  CHECK(len == 3);
  double direct = 0;
  wb_scenario first{};
  CHECK(wb_report_cell_scenario(rep, 0, &first) == WB_OK);
  CHECK(first.noise.kind == WB_NOISE_IID);
  CHECK(wb_run_replication(&first, 2, &direct) == WB_OK);
  CHECK(direct == mses[1]);
  double ratio = 0;
  CHECK(wb_report_cell_ratio(rep, 0, &ratio) == WB_OK);
  CHECK(ratio == 1.0);
  CHECK(wb_report_cell_ratio(rep, 1, &ratio) == WB_OK);
  CHECK(ratio == doctest::Approx(sum.mean / [&] { wb_summary b{}; wb_report_cell_summary(rep, 0, &b); return b.mean; }()));
  CHECK(wb_report_cell_summary(rep, 5, &sum) == WB_ERROR_OUT_OF_RANGE);

  const auto dir = std::filesystem::temp_directory_path() / "wavebayes_capi_test";
  std::filesystem::create_directories(dir);
  const auto csv = (dir / "grid.csv").string();
  CHECK(wb_report_write_csv(rep, csv.c_str()) == WB_OK);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "function,noise,n,snr,rule,mean,sd,median,iqr");
  CHECK(wb_report_write_json(rep, (dir / "grid.json").string().c_str()) == WB_OK);
  CHECK(wb_report_write_ratio_csv(rep, (dir / "ratios.csv").string().c_str()) == WB_OK);
  CHECK(wb_report_write_csv(rep, "/nonexistent-dir/x/grid.csv") == WB_ERROR_IO);

  std::vector<double> lo(3), so(3);
  CHECK(wb_compare_rules(&first, 1, lo.data(), so.data()) == WB_OK);
  CHECK(lo[1] == mses[1]);
  CHECK(wb_write_pairs_csv(lo.data(), so.data(), 3, (dir / "pairs.csv").string().c_str()) == WB_OK);
  wb_report_free(rep);
  wb_grid_free(g);
  std::filesystem::remove_all(dir);
}

TEST_CASE("study grid through the C interface") {
  wb_scenario knobs;
  wb_scenario_init_paper(&knobs);
  wb_grid* g = nullptr;
  REQUIRE(wb_grid_create(&g) == WB_OK);
  CHECK(wb_grid_add_paper(g, &knobs) == WB_OK);
  CHECK(wb_grid_size(g) == 216);
  wb_grid_free(g);
}
