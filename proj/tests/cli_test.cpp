/* Copyright (C) 2026 The padic-diaphony authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PADIC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    std::vector<std::string> cells;
    std::istringstream cols(line);
    for (std::string cell; std::getline(cols, cell, ',');) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

double num(const std::string& s) { return std::stod(s); }

TEST(CliHalton, EmitsExactAndDecimalCoordinates) {
  const auto r = run("halton --bases 2,3 --count 2");
  ASSERT_EQ(r.status, 0);
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "x1", "x1_decimal", "x2", "x2_decimal"}));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"0", "0/1", "0", "0/1", "0"}));
  EXPECT_EQ(rows[2], (std::vector<std::string>{"1", "1/2", "0.5", "1/3", "0.33333333333333331"}));
}

TEST(CliHalton, StartOffset) {
  const auto rows = csv(run("halton --bases 2 --count 1 --start 5").out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"5", "5/8", "0.625"}));
}

TEST(CliHalton, DimShorthand) {
  const auto rows = csv(run("halton --dim 3 --count 2").out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[2][5], "1/5");
}

TEST(CliHalton, RejectsBadBases) {
  EXPECT_EQ(run("halton --bases 2,2 --count 1").status, 2);
  EXPECT_EQ(run("halton --bases 6 --count 1").status, 2);
  EXPECT_EQ(run("halton --count 1").status, 2);
  EXPECT_EQ(run("halton --bases 2 --dim 2 --count 1").status, 2);
  EXPECT_EQ(run("halton --bases 2 --count 1 --workers 0").status, 2);
}

TEST(CliDiaphony, KernelMethod) {
  auto rows = csv(run("diaphony --bases 2 --count 1 --method kernel").out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][0], "N");
  EXPECT_EQ(num(rows[1][2]), 1.0);
  rows = csv(run("diaphony --bases 2 --count 2 --method kernel").out);
  EXPECT_EQ(num(rows[1][2]), 0.5);
  EXPECT_DOUBLE_EQ(num(rows[1][4]), std::sqrt(2.0) * 0.5);  // worst-case error
  rows = csv(run("diaphony --bases 2 --count 2 --mode exact").out);
  EXPECT_EQ(num(rows[1][3]), 0.25);
}

TEST(CliDiaphony, SpectralMethod) {
  const auto r = run("diaphony --bases 2 --count 2 --method spectral --g 3");
  ASSERT_EQ(r.status, 0);
  const auto rows = csv(r.out);
  EXPECT_NEAR(num(rows[1][5]), 0.1875, 1e-15);
  EXPECT_NEAR(num(rows[1][6]), 0.3125, 1e-15);
  EXPECT_EQ(run("diaphony --bases 2 --count 2 --method spectral").status, 2);
  EXPECT_EQ(run("diaphony --bases 2,3 --count 2 --method spectral --g 3").status, 2);
  EXPECT_EQ(run("diaphony --bases 2,3 --count 2 --method spectral --g 30,30").status, 3);
}

TEST(CliBound, Examples) {
  auto rows = csv(run("bound --bases 2 --count 1").out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"N", "c", "d", "bound_F2", "bound_F"}));
  EXPECT_EQ(num(rows[1][3]), 4.0);
  rows = csv(run("bound --bases 2,3 --count 1").out);
  EXPECT_EQ(num(rows[1][2]), 12.0);
  rows = csv(run("bound --bases 2 --count 1024").out);
  const double c = num(rows[1][1]);
  EXPECT_NEAR(c, 20.63, 5e-3);
  EXPECT_NEAR(num(rows[1][3]), (c * std::log(1024.0) + 4.0) / (1024.0 * 1024.0), 1e-18);
}

TEST(CliSweep, StrideRows) {
  const auto r = run("sweep --bases 2 --from 1 --to 4 --step 1");
  ASSERT_EQ(r.status, 0);
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"N", "F", "F2", "bound_F2", "ratio"}));
  EXPECT_EQ(rows[1][0], "1");
  EXPECT_EQ(num(rows[1][1]), 1.0);
  EXPECT_EQ(num(rows[1][4]), 0.25);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(num(rows[i][4]), 1.0);
}

TEST(CliSweep, PowersOfTwo) {
  const auto rows = csv(run("sweep --bases 2,3 --from 2 --to 16 --step pow2").out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[1][0], "2");
  EXPECT_EQ(rows[2][0], "4");
  EXPECT_EQ(rows[3][0], "8");
  EXPECT_EQ(rows[4][0], "16");
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(num(rows[i][4]), 1.0);
}

TEST(CliSweep, BadRange) {
  EXPECT_EQ(run("sweep --bases 2 --from 0 --to 4").status, 2);
  EXPECT_EQ(run("sweep --bases 2 --from 5 --to 4").status, 2);
  EXPECT_EQ(run("sweep --bases 2 --from 1 --to 4 --step x").status, 2);
  EXPECT_EQ(run("sweep --bases 2 --from 1 --to 4 --step 0").status, 2);
}

TEST(CliSweep, DeterministicAcrossRunsAndWorkers) {
  const auto a = run("sweep --bases 2,3,5 --from 1 --to 600 --step 7 --workers 1");
  const auto b = run("sweep --bases 2,3,5 --from 1 --to 600 --step 7 --workers 1");
  const auto c = run("sweep --bases 2,3,5 --from 1 --to 600 --step 7 --workers 3");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(CliVerifyLemma, Examples) {
  auto r = run("verify-lemma --bases 2 --count 2 --g 1");
  ASSERT_EQ(r.status, 0);
  auto rows = csv(r.out);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"N", "g", "worst_ratio", "worst_index", "violations", "checked"}));
  EXPECT_EQ(rows[1][4], "0");
  r = run("verify-lemma --bases 2,3 --count 128 --g 4,3");
  EXPECT_EQ(r.status, 0);
  rows = csv(r.out);
  EXPECT_EQ(rows[1][4], "0");
  EXPECT_EQ(rows[1][5], "431");
  EXPECT_EQ(run("verify-lemma --bases 2 --count 2").status, 2);
  EXPECT_EQ(run("verify-lemma --bases 2,3 --count 2 --g 30,30").status, 3);
}

TEST(CliJson, MirrorsCsvWithConfigEcho) {
  const auto r = run("diaphony --bases 2 --count 2 --method spectral --g 3 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["config"]["bases"], nlohmann::json::array({2}));
  EXPECT_EQ(j["config"]["g"], nlohmann::json::array({3}));
  EXPECT_EQ(j["method"], "spectral");
  EXPECT_NEAR(j["lower_F2"].get<double>(), 0.1875, 1e-15);
  EXPECT_NEAR(j["upper_F2"].get<double>(), 0.3125, 1e-15);

  const auto s = nlohmann::json::parse(run("sweep --bases 2 --from 1 --to 2 --format json").out);
  ASSERT_EQ(s["rows"].size(), 2u);
  EXPECT_EQ(s["rows"][0]["ratio"].get<double>(), 0.25);
  EXPECT_EQ(s["config"]["step"], "1");

  const auto h = nlohmann::json::parse(run("halton --bases 2,3 --count 2 --format json").out);
  EXPECT_EQ(h["points"][1]["coords"][1]["fraction"], "1/3");
}

TEST(CliOut, WritesFile) {
  const std::string path = ::testing::TempDir() + "padic_cli_out.csv";
  ASSERT_EQ(run("bound --bases 2 --count 1 --out " + path).status, 0);
  FILE* f = std::fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  char line[64] = {};
  ASSERT_NE(std::fgets(line, sizeof line, f), nullptr);
  std::fclose(f);
  EXPECT_EQ(std::string(line), "N,c,d,bound_F2,bound_F\n");
}

}  // namespace
