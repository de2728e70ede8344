// Copyright 2026 The gamecheck Authors
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


#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.h"
#include "cli_goldens.h"
#include "gamecheck/report_json.h"

namespace gamecheck::cli {
namespace {

using testing::CliGoldenCases;
using testing::ReadFileOrEmpty;

std::string Fixture(const std::string& stem) {
  return std::string(GAMECHECK_FIXTURE_DIR) + "/" + stem + ".json";
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliGoldenTest, OutputsMatchCommittedFiles) {
  for (const auto& c : CliGoldenCases()) {
    SCOPED_TRACE(c.fixture + " " + c.command + " " + c.format);
    const CliRun r = Invoke({c.command, Fixture(c.fixture), "--format", c.format});
    EXPECT_EQ(r.code, c.exit_code);
    if (c.golden.empty()) {
      EXPECT_TRUE(r.out.empty());
    } else {
      const std::string want =
          ReadFileOrEmpty(std::string(GAMECHECK_GOLDEN_DIR) + "/" + c.golden);
      ASSERT_FALSE(want.empty());
      EXPECT_EQ(r.out, want);
    }
  }
}

TEST(CliTest, RepeatedRunsAreByteIdentical) {
  for (const char* cmd : {"classify", "potential", "cycle"}) {
    const std::vector<std::string> args = {cmd, Fixture("three_player_potential"),
                                           "--format", "json"};
    const CliRun a = Invoke(args);
    const CliRun b = Invoke(args);
    EXPECT_EQ(a.code, 0) << cmd;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

TEST(CliTest, JsonReportRoundTrips) {
  const CliRun r = Invoke({"classify", Fixture("battle_of_sexes"), "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const ClassificationReport report = ReportFromJson(Json::parse(r.out));
  EXPECT_TRUE(report.potential.passed);
  EXPECT_FALSE(report.zero_sum_equivalent.passed);
  EXPECT_EQ(ReportToJson(report).dump(2) + "\n", r.out);
}

TEST(CliTest, AssertFlagsSetExitCode) {
  const std::string mp = Fixture("matching_pennies");
  EXPECT_EQ(Invoke({"classify", mp, "--assert-zerosum"}).code, kOk);
  EXPECT_EQ(Invoke({"classify", mp, "--assert-potential"}).code, kAssertionFailed);
  EXPECT_EQ(Invoke({"cycle", mp, "--assert-potential"}).code, kAssertionFailed);
  const std::string bos = Fixture("battle_of_sexes");
  EXPECT_EQ(Invoke({"classify", bos, "--assert-potential"}).code, kOk);
  EXPECT_EQ(Invoke({"classify", bos, "--assert-potential", "--assert-zerosum"}).code,
            kAssertionFailed);
}

TEST(CliTest, FailedAssertionStillReportsVerdicts) {
  const CliRun r = Invoke({"classify", Fixture("matching_pennies"), "--assert-potential"});
  EXPECT_EQ(r.code, kAssertionFailed);
  EXPECT_NE(r.out.find("potential: FAILED"), std::string::npos);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Invoke({"classify", Fixture("no_such_game")}).code, kUsageError);
  EXPECT_EQ(Invoke({"classify", Fixture("matching_pennies"), "--tol", "-1"}).code,
            kUsageError);
  EXPECT_EQ(Invoke({"classify", Fixture("matching_pennies"), "--format", "xml"}).code,
            kUsageError);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(Invoke({"smooth", "--builtin", "nosuch"}).code, kUsageError);
}

TEST(CliTest, NoOutputFileWhenNotInClass) {
  const auto path = std::filesystem::temp_directory_path() / "gamecheck_cli_test.json";
  std::filesystem::remove(path);
  const CliRun r = Invoke(
      {"potential", Fixture("matching_pennies"), "--out", path.string()});
  EXPECT_EQ(r.code, kAssertionFailed);
  EXPECT_FALSE(std::filesystem::exists(path));
}

TEST(CliTest, OutFileMatchesStdout) {
  const auto path = std::filesystem::temp_directory_path() / "gamecheck_cli_out.json";
  const std::vector<std::string> base = {"potential", Fixture("battle_of_sexes"),
                                         "--format", "json"};
  const CliRun direct = Invoke(base);
  std::vector<std::string> to_file = base;
  to_file.push_back("--out");
  to_file.push_back(path.string());
  const CliRun r = Invoke(to_file);
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(ReadFileOrEmpty(path.string()), direct.out);
  std::filesystem::remove(path);
}

TEST(CliTest, RepresentationFlag) {
  const CliRun r = Invoke({"potential", Fixture("battle_of_sexes"), "--representation",
                        "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j.contains("w"));
  EXPECT_EQ(j["passives"].size(), 2u);
}

TEST(CliTest, SmoothContestIsZeroSumEquivalent) {
  const CliRun r = Invoke({"smooth", "--builtin", "contest", "--param", "alpha=0.5",
                        "--assert-zerosum"});
  EXPECT_EQ(r.code, kOk) << r.err;
  const CliRun integral = Invoke({"smooth", "--builtin", "bilinear-common", "--test",
                               "integral", "--assert-potential"});
  EXPECT_EQ(integral.code, kOk) << integral.err;
  const CliRun control = Invoke({"smooth", "--builtin", "bilinear-common",
                              "--assert-zerosum"});
  EXPECT_EQ(control.code, kAssertionFailed);
}

}  // namespace
}  // namespace gamecheck::cli
