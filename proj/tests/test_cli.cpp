// Copyright 2026 The skrates Authors.
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

#include <gtest/gtest.h>

#include <sstream>

#include "skrates/cli.hpp"

namespace skrates {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "skrates");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SKRATES_DATA_DIR) + "/" + name; }

TEST(Cli, AnalyzeTriangle) {
  const Outcome o = run({"analyze", "--source", data("triangle.json")});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  const Json doc = Json::parse(o.out);
  EXPECT_EQ(doc["capacity"]["C_S"], "3/2");
  EXPECT_EQ(doc["pin_curve"]["R_S"], "3/2");
  EXPECT_EQ(doc["fundamental"], Json::parse(R"([["1"],["2"],["3"]])"));
}

TEST(Cli, CurveCsv) {
  const Outcome o = run({"curve", "--source", data("motivating.json"), "--r-max", "2", "--step", "1/4"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_EQ(o.out,
            "R,upper_bound,achievable\n"
            "0,0,0\n1/4,1/4,1/4\n1/2,1/2,1/2\n3/4,3/4,3/4\n1,1,1\n5/4,1,1\n3/2,1,1\n7/4,1,1\n2,1,1\n");
}

TEST(Cli, CurveJson) {
  const Outcome o = run({"curve", "--source", data("triangle.json"), "--r-max", "2", "--step", "1", "--output", "json"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  const Json doc = Json::parse(o.out);
  ASSERT_EQ(doc["rows"].size(), 3U);
  EXPECT_EQ(doc["rows"][2]["upper_bound"], "3/2");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"pack", "--source", data("hyperedge3.json")}).code, cli::kDomainFailure);
  EXPECT_EQ(run({"pack", "--source", data("missing.json")}).code, cli::kInputFailure);
  EXPECT_EQ(run({"entropy", "--source", data("triangle.json"), "--set", "9"}).code, cli::kInputFailure);
  EXPECT_EQ(run({"bounds", "--source", data("triangle.json"), "--point", "{bad"}).code, cli::kInputFailure);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInputFailure);
  EXPECT_EQ(run({"capacity", "--source", data("triangle.json"), "--output", "csv"}).code, cli::kInputFailure);
  EXPECT_EQ(run({"curve", "--source", data("triangle.json"), "--step", "0"}).code, cli::kInputFailure);
  const Outcome o = run({"pack", "--source", data("hyperedge3.json")});
  EXPECT_FALSE(o.err.empty());
}

TEST(Cli, BoundsVerdicts) {
  Outcome o = run({"bounds", "--source", data("triangle.json"), "--point",
                   R"({"r_K": "3/2", "r": {"1": "1/2", "2": "1/2", "3": "1/2"}})"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_EQ(Json::parse(o.out)["verdict"], "feasible-under-outer-bound");
  o = run({"bounds", "--source", data("triangle.json"), "--point",
           R"({"r_K": "3/2", "r": {"1": "1/2", "2": "1/2", "3": "1/4"}})"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_EQ(Json::parse(o.out)["verdict"], "violated");
}

TEST(Cli, SimulateAndGreedy) {
  Outcome o = run({"simulate", "--source", data("triangle.json"), "--exhaustive"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  Json doc = Json::parse(o.out);
  EXPECT_EQ(doc["verdict"], "perfect");
  o = run({"greedy", "--source", data("triangle.json")});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  doc = Json::parse(o.out);
  EXPECT_EQ(doc["chain"].size(), 3U);
  o = run({"greedy", "--weights", R"([["x", 3], ["y", "1"]])"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
}

TEST(Cli, Deterministic) {
  for (const char* cmd : {"analyze", "capacity", "mmi", "pack"}) {
    const Outcome a = run({cmd, "--source", data("six_user.json")});
    const Outcome b = run({cmd, "--source", data("six_user.json"), "--threads", "3"});
    if (std::string(cmd) == "pack") {
      EXPECT_EQ(a.code, cli::kDomainFailure);
      continue;
    }
    ASSERT_EQ(a.code, cli::kOk) << a.err;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

}  // namespace
}  // namespace skrates
