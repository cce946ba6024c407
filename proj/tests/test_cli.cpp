// Copyright 2026 The Qudit Adder Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "qudit/serialize.hpp"

namespace qudit {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result qudit_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qudit_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, BuildBlockAdder) {
  const auto r = qudit_cli({"build", "--kind", "block-adder", "--n", "30", "--scheme",
                            "231", "--out", path("b.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("width=60"), std::string::npos);
  EXPECT_NE(r.out.find("c=5"), std::string::npos);
  EXPECT_NE(r.out.find("exact-accounting minimum c=5"), std::string::npos);
  EXPECT_EQ(circuit_from_json(read_json_file(path("b.json"))).width(), 60u);
  EXPECT_EQ(plan_from_json(read_json_file(path("b.plan.json"))).c, 5u);
}

TEST_F(CliTest, BuildInfeasible) {
  const auto r = qudit_cli({"build", "--kind", "block-adder", "--n", "29", "--scheme",
                            "231", "--out", path("b.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("floor((c-1)*2n/(3c)) >= 2n/c + c - 1"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("b.json")));
}

TEST_F(CliTest, BuildCompress241) {
  const auto r = qudit_cli({"build", "--kind", "compress241", "--out", path("c.json")});
  ASSERT_EQ(r.code, 0);
  const Circuit c = circuit_from_json(read_json_file(path("c.json")));
  EXPECT_EQ(c.width(), 2u);
  EXPECT_EQ(c.size(), 3u);
}

TEST_F(CliTest, BuildUsageErrors) {
  EXPECT_EQ(qudit_cli({"build", "--kind", "nope"}).code, 2);
  EXPECT_EQ(qudit_cli({"build", "--kind", "cla-adder", "--out", path("x.json")}).code, 2);
  EXPECT_EQ(qudit_cli({"build", "--kind", "plus-k", "--n", "4", "--out", path("x.json")}).code, 2);
  EXPECT_EQ(qudit_cli({"build", "--kind", "plus-k", "--n", "4", "--k", "16",
                       "--out", path("x.json")}).code, 2);
  EXPECT_EQ(qudit_cli({"build", "--kind", "plus-k", "--n", "4", "--k", "1x",
                       "--out", path("x.json")}).code, 2);
  EXPECT_EQ(qudit_cli({"build", "--kind", "cla-adder", "--n", "4", "--k", "1",
                       "--out", path("x.json")}).code, 2);
  EXPECT_EQ(qudit_cli({}).code, 2);
  EXPECT_EQ(qudit_cli({"--help"}).code, 0);
}

TEST_F(CliTest, Simulate) {
  ASSERT_EQ(qudit_cli({"build", "--kind", "compress231", "--out", path("c.json")}).code, 0);
  auto r = qudit_cli({"simulate", path("c.json"), "--input", "1,0,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2,1,0\n");
  EXPECT_EQ(qudit_cli({"simulate", path("c.json"), "--input", "1,0"}).code, 2);
  EXPECT_EQ(qudit_cli({"simulate", path("c.json"), "--input", "1,x,0"}).code, 2);
  EXPECT_EQ(qudit_cli({"simulate", path("c.json"), "--input", "1,0,3"}).code, 2);
  EXPECT_EQ(qudit_cli({"simulate", path("missing.json"), "--input", "1"}).code, 2);
}

TEST_F(CliTest, SimulateIdentityEchoes) {
  std::ofstream(path("id.json")) << R"({"wires":[{"name":"q","dim":3},{"name":"r","dim":2}],"gates":[]})";
  const auto r = qudit_cli({"simulate", path("id.json"), "--input", "2,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2,1\n");
}

TEST_F(CliTest, VerifyPasses) {
  auto r = qudit_cli({"verify", "--kind", "compress231", "--exhaustive"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_NE(r.out.find("cases=8"), std::string::npos);
  r = qudit_cli({"verify", "--kind", "block-adder", "--n", "30", "--scheme", "231",
                 "--samples", "1000", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  for (const char* kind : {"cla-adder", "ripple-adder", "plus-k"}) {
    r = qudit_cli({"verify", "--kind", kind, "--n", "4", "--carry-in", "--carry-out",
                   "--exhaustive"});
    EXPECT_EQ(r.code, 0) << kind << r.out << r.err;
  }
  r = qudit_cli({"verify", "--kind", "block-plus-k", "--n", "60", "--scheme", "241",
                 "--samples", "50", "--k", "12345"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST_F(CliTest, VerifyMisuse) {
  EXPECT_EQ(qudit_cli({"verify", "--kind", "compress231"}).code, 2);
  EXPECT_EQ(qudit_cli({"verify", "--kind", "compress231", "--exhaustive", "--samples", "3"}).code, 2);
  EXPECT_EQ(qudit_cli({"verify", "--kind", "cla-adder", "--n", "11", "--exhaustive"}).code, 2);
}

TEST_F(CliTest, VerifyCorruptedCircuitGivesCounterexample) {
  ASSERT_EQ(qudit_cli({"build", "--kind", "cla-adder", "--n", "4", "--out", path("a.json")}).code, 0);
  Json j = read_json_file(path("a.json"));
  j["gates"].erase(j["gates"].size() / 2);
  write_text_file(path("bad.json"), dump(j));
  const auto r = qudit_cli({"verify", "--kind", "cla-adder", "--n", "4", "--exhaustive",
                            "--circuit", path("bad.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("input="), std::string::npos);
  // Same run again: identical report.
  EXPECT_EQ(qudit_cli({"verify", "--kind", "cla-adder", "--n", "4", "--exhaustive",
                       "--circuit", path("bad.json")}).out,
            r.out);
  // Wrong shape for the kind.
  EXPECT_EQ(qudit_cli({"verify", "--kind", "cla-adder", "--n", "5", "--exhaustive",
                       "--circuit", path("bad.json")}).code, 2);
}

TEST_F(CliTest, Stats) {
  ASSERT_EQ(qudit_cli({"build", "--kind", "compress241", "--out", path("c.json")}).code, 0);
  auto r = qudit_cli({"stats", path("c.json")});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["total_gates"], 3);
  EXPECT_EQ(j["gate_counts"][0]["arity"], 2);

  ASSERT_EQ(qudit_cli({"build", "--kind", "compress231", "--out", path("t.json")}).code, 0);
  r = qudit_cli({"stats", path("t.json"), "--expand-cost-model"});
  EXPECT_LE(Json::parse(r.out)["total_gates"].get<int>(), 22);

  std::ofstream(path("empty.json")) << R"({"wires":[],"gates":[]})";
  r = qudit_cli({"stats", path("empty.json"), "--csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n0,0,true,0,0,0,0,0,,false\n"), std::string::npos);

  std::ofstream(path("junk.json")) << "{not json";
  EXPECT_EQ(qudit_cli({"stats", path("junk.json")}).code, 2);
}

TEST_F(CliTest, StatsWithPlan) {
  ASSERT_EQ(qudit_cli({"build", "--kind", "block-adder", "--n", "12", "--scheme", "241",
                       "--out", path("b.json")}).code, 0);
  const auto r = qudit_cli({"stats", path("b.json"), "--plan", path("b.plan.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["ancilla_generated"], 12);
}

TEST_F(CliTest, Deterministic) {
  const std::vector<std::string> build{"build", "--kind", "block-plus-k", "--n", "60",
                                       "--scheme", "241", "--k", "987654321",
                                       "--carry-out", "--out"};
  auto a = build;
  a.push_back(path("a.json"));
  auto b = build;
  b.push_back(path("b.json"));
  ASSERT_EQ(qudit_cli(a).code, 0);
  ASSERT_EQ(qudit_cli(b).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(slurp(path("a.plan.json")), slurp(path("b.plan.json")));

  const std::vector<std::string> verify{"verify", "--kind", "block-plus-k", "--n", "60",
                                        "--scheme", "241", "--samples", "40", "--seed", "3"};
  EXPECT_EQ(qudit_cli(verify).out, qudit_cli(verify).out);
}

}  // namespace
}  // namespace qudit
