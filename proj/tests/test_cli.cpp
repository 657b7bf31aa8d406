// Copyright 2026 The dsep Authors
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

#include "dsep/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"

namespace dsep {
namespace {

using testing::fixture;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliDsep, Examples) {
  CliResult a = run({"dsep", fixture("collider7.graph"), "--j", "n4", "--l", "n2"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, "n3\n");
  EXPECT_EQ(run({"dsep", fixture("two_roots.graph"), "--j", "2"}).out, "1 3\n");
  EXPECT_EQ(run({"dsep", fixture("collider7.graph"), "--j", "n4", "--l", "n2,n6"}).out, "\n");
  EXPECT_EQ(run({"dsep", fixture("collider7.graph"), "--j", "n4", "--l", "n2", "--faithful"}).out,
            "n3\n");
  EXPECT_EQ(run({"dsep", fixture("two_roots.json"), "--json", "--j", "2"}).out, "1 3\n");
}

TEST(CliDsep, N7ReachableFromN1) {
  CliResult r = run({"dsep", fixture("collider7.graph"), "--j", "n1", "--l", "n6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.find("n7"), std::string::npos);
}

TEST(CliCheck, Examples) {
  CliResult holds = run({"check", fixture("collider7.graph"), "--j", "n4", "--l", "n2", "--k", "n3"});
  EXPECT_EQ(holds.code, kExitOk);
  EXPECT_EQ(holds.out, "HOLDS\n");
  CliResult fails = run({"check", fixture("collider7.graph"), "--j", "n4", "--l", "n2,n6", "--k", "n3"});
  EXPECT_EQ(fails.code, kExitFails);
  EXPECT_EQ(fails.out, "FAILS\n");
  CliResult marginal = run({"check", fixture("two_roots.graph"), "--j", "3", "--k", "2", "--faithful"});
  EXPECT_EQ(marginal.code, kExitOk);
  EXPECT_EQ(marginal.out, "HOLDS\n");
}

TEST(CliRequisite, Examples) {
  EXPECT_EQ(run({"requisite", fixture("two_roots.graph"), "--j", "3"}).out,
            "parameters: 1' 3'\nvariables: 1 4\n");
  EXPECT_EQ(run({"requisite", fixture("single.graph"), "--j", "a"}).out,
            "parameters: a'\nvariables:\n");
  EXPECT_EQ(run({"requisite", fixture("chain.graph"), "--j", "c", "--l", "b"}).out,
            "parameters: c'\nvariables:\n");
}

TEST(CliErrors, InputErrorsExitTwo) {
  CliResult unknown = run({"dsep", fixture("collider7.graph"), "--j", "n9"});
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_NE(unknown.err.find("n9"), std::string::npos);
  EXPECT_TRUE(unknown.out.empty());

  EXPECT_EQ(run({"dsep", fixture("cycle.graph"), "--j", "a"}).code, kExitUsage);
  EXPECT_EQ(run({"dsep", fixture("nope.graph"), "--j", "a"}).code, kExitUsage);
  EXPECT_EQ(run({"dsep", fixture("collider7.graph"), "--j", "n1", "--l", "n1"}).code, kExitUsage);
  EXPECT_EQ(run({"check", fixture("collider7.graph"), "--j", "n1", "--k", "n1"}).code, kExitUsage);
  EXPECT_EQ(run({"check", fixture("collider7.graph"), "--j", "n1"}).code, kExitUsage);
  EXPECT_EQ(run({"dsep", fixture("collider7.graph"), "--j", "n1", "--fast", "--faithful"}).code,
            kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"verify"}).code, kExitUsage);
  EXPECT_EQ(run({"bench", "--family", "tree"}).code, kExitUsage);
}

TEST(CliErrors, CycleMessageHasLocation) {
  CliResult r = run({"dsep", fixture("cycle.graph"), "--j", "a"});
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;
}

TEST(CliHelp, ExitsZero) {
  CliResult r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("requisite"), std::string::npos);
}

TEST(CliVerify, Collider7Agrees) {
  CliResult r = run({"verify", fixture("collider7.graph")});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("result: AGREE"), std::string::npos);
}

TEST(CliVerify, RandomCorpus) {
  CliResult r = run({"verify", "--random", "5", "1234", "--graphs", "60"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("result: AGREE"), std::string::npos);
}

TEST(CliVerify, TwoRootsNumeric) {
  CliResult r = run({"verify", fixture("two_roots.graph"), "--numeric"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("soundness violations: 0\n"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("soundness confirmations: 0\n"), std::string::npos) << r.out;
}

TEST(CliVerify, OversizedNumericIsSkipped) {
  CliResult r = run({"verify", "--random", "30", "7", "--graphs", "3", "--numeric"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
}

TEST(CliBench, SmallRun) {
  CliResult r = run({"bench", "--family", "random", "--sizes", "100,200", "--repeats", "1"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 1 + 2 * 3);
}

TEST(CliOutput, ByteDeterministic) {
  std::vector<std::vector<std::string>> commands{
      {"dsep", fixture("collider7.graph"), "--j", "n1", "--l", "n6"},
      {"requisite", fixture("two_roots.graph"), "--j", "3"},
      {"verify", "--random", "6", "99", "--graphs", "20", "--numeric", "--trials", "2"},
  };
  for (const auto& command : commands) {
    CliResult a = run(command);
    CliResult b = run(command);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace dsep
