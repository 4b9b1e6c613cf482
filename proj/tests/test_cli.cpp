// Copyright 2026 The qclone authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run_cli(const std::string &args) {
  const std::string out_file =
      std::string(::testing::TempDir()) + "/cli_stdout.txt";
  const std::string cmd =
      std::string(QCLONE_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(status), ss.str()};
}

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_lines(const std::string &text) {
  int n = 0;
  for (char c : text)
    if (c == '\n')
      ++n;
  return n;
}

} // namespace

TEST(cli, machine_symmetric_summary) {
  RunResult r = run_cli("machine --d 2 --sign + --coeffs 1,1,1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.stdout_text.find("0.777777777777778"), std::string::npos);
  EXPECT_NE(r.stdout_text.find("SPlus_central"), std::string::npos);
}

TEST(cli, machine_rejects_bad_config) {
  EXPECT_EQ(run_cli("machine --d 7 --sign + --coeffs 1,1,1").exit_code, 1);
  EXPECT_EQ(run_cli("machine --d 2 --sign ? --coeffs 1,1,1").exit_code, 1);
  EXPECT_EQ(run_cli("machine --d 2 --sign -").exit_code, 1);
}

TEST(cli, boundary12_row_count_and_symmetric_row) {
  const std::string out = std::string(::testing::TempDir()) + "/b12.csv";
  RunResult r =
      run_cli("boundary12 --d 2 --resolution 100 --out " + out);
  EXPECT_EQ(r.exit_code, 0);
  const std::string text = slurp(out);
  EXPECT_EQ(count_lines(text), 101); // header + 100 rows
  EXPECT_EQ(text.substr(0, text.find('\n')), "x,y,fA,fB,FA,FB");
  // The x = y row carries F = 5/6.
  bool found = false;
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double x, y, fa, fb, Fa, Fb;
    fields >> x >> y >> fa >> fb >> Fa >> Fb;
    if (std::abs(x - y) < 1e-12) {
      EXPECT_NEAR(Fa, 5.0 / 6.0, 1e-12);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(cli, boundary13_schema_and_d2_minus_empty) {
  const std::string out = std::string(::testing::TempDir()) + "/b13.csv";
  RunResult r = run_cli("boundary13 --d 2 --resolution 24 --out " + out);
  EXPECT_EQ(r.exit_code, 0);
  const std::string text = slurp(out);
  EXPECT_EQ(text.substr(0, text.find('\n')), "x,y,z,fA,fB,fC,region");
  EXPECT_GT(count_lines(text), 24 * 24);

  RunResult rm =
      run_cli("boundary13 --d 2 --resolution 24 --component minus --out " +
              out);
  EXPECT_EQ(rm.exit_code, 0);
  EXPECT_NE(rm.stdout_text.find("warning"), std::string::npos);
  EXPECT_EQ(slurp(out), "x,y,z,fA,fB,fC,region\n");
}

TEST(cli, deterministic_reruns_byte_identical) {
  const std::string out1 = std::string(::testing::TempDir()) + "/det1.csv";
  const std::string out2 = std::string(::testing::TempDir()) + "/det2.csv";
  EXPECT_EQ(run_cli("boundary13 --d 3 --resolution 24 --out " + out1).exit_code,
            0);
  EXPECT_EQ(run_cli("boundary13 --d 3 --resolution 24 --out " + out2).exit_code,
            0);
  EXPECT_EQ(slurp(out1), slurp(out2));

  const std::string j1 = std::string(::testing::TempDir()) + "/det1.json";
  const std::string j2 = std::string(::testing::TempDir()) + "/det2.json";
  EXPECT_EQ(run_cli("bound1n --d 2 --n 3 --trials 5 --seed 9 --format json "
                    "--out " + j1)
                .exit_code,
            0);
  EXPECT_EQ(run_cli("bound1n --d 2 --n 3 --trials 5 --seed 9 --format json "
                    "--out " + j2)
                .exit_code,
            0);
  EXPECT_EQ(slurp(j1), slurp(j2));
}

TEST(cli, json_and_csv_agree) {
  const std::string csv = std::string(::testing::TempDir()) + "/bz.csv";
  const std::string json = std::string(::testing::TempDir()) + "/bz.json";
  EXPECT_EQ(run_cli("banaszek --d 2 --resolution 5 --n-values 10,100 --out " +
                    csv)
                .exit_code,
            0);
  EXPECT_EQ(run_cli("banaszek --d 2 --resolution 5 --n-values 10,100 "
                    "--format json --out " + json)
                .exit_code,
            0);
  auto parsed = nlohmann::json::parse(slurp(json));
  ASSERT_EQ(parsed.size(), 5u);
  // Compare the first data row against the CSV.
  std::istringstream lines(slurp(csv));
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header, "g,f_asymptotic,f_N10,f_N100");
  std::getline(lines, row);
  std::replace(row.begin(), row.end(), ',', ' ');
  std::istringstream fields(row);
  double g, fa, f10, f100;
  fields >> g >> fa >> f10 >> f100;
  EXPECT_NEAR(parsed[0]["g"].get<double>(), g, 1e-14);
  EXPECT_NEAR(parsed[0]["f_asymptotic"].get<double>(), fa, 1e-14);
  EXPECT_NEAR(parsed[0]["f_N10"].get<double>(), f10, 1e-14);
}

TEST(cli, mix_reports_face_position) {
  RunResult r = run_cli(
      "mix --d 2 --e1 1.154700538379251,1.732050807568877,1.732050807568877 "
      "--e2 0,1.732050807568877,1.732050807568877 --p 0.5");
  EXPECT_EQ(r.exit_code, 0);
  // q = sqrt(p) = sqrt(0.5) on this face.
  EXPECT_NE(r.stdout_text.find("q=0.707106781186548"), std::string::npos);
}

TEST(cli, output_dir_env_override) {
  const std::string dir = ::testing::TempDir();
  const std::string cmd = std::string("QCLONE_OUTPUT_DIR=") + dir + " " +
                          QCLONE_CLI_PATH +
                          " boundary12 --d 2 --resolution 4 --out env_test.csv"
                          " > /dev/null 2>&1";
  ASSERT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 0);
  EXPECT_FALSE(slurp(dir + "/env_test.csv").empty());
}

TEST(cli, verify_quick_passes_and_reports) {
  const std::string out = std::string(::testing::TempDir()) + "/verify.json";
  RunResult r = run_cli("verify --seed 7 --quick --out " + out);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.stdout_text.find("FAIL"), std::string::npos);
  auto report = nlohmann::json::parse(slurp(out));
  EXPECT_TRUE(report.contains("meta"));
  EXPECT_TRUE(report["meta"].contains("tolerances"));
  ASSERT_GE(report["checks"].size(), 10u);
  for (const auto &check : report["checks"]) {
    EXPECT_EQ(check["verdict"].get<std::string>(), "pass");
    EXPECT_TRUE(check.contains("name"));
    EXPECT_TRUE(check.contains("trials"));
    EXPECT_TRUE(check.contains("max_residual"));
  }
}

TEST(cli, verify_exit_code_two_on_failure) {
  // Force a failure with an impossible tolerance override; the failing
  // check is named on stderr (captured in stdout_text here).
  RunResult r = run_cli(
      "verify --seed 7 --quick --d 2 --tol isometry_u3=1e-30");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.stdout_text.find("verification failed: isometry_u3"),
            std::string::npos);
}
