// Copyright 2026 The focusres Authors.
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

#include "cli.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "focusres/corpus_io.h"
#include "testing.h"

namespace focusres {
namespace {

using ::focusres::testing::FixturePath;
using ::focusres::testing::SampleOntologyPath;
using ::testing::HasSubstr;
using ::testing::StartsWith;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = CliMain(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("focusres_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Temp(const std::string& name) { return (dir_ / name).string(); }

  void Write(const std::string& path, const std::string& text) {
    std::ofstream(path, std::ios::binary) << text;
  }

  const std::string ont_ = SampleOntologyPath().string();
  std::filesystem::path dir_;
};

TEST_F(CliTest, ResolveFocusWritesKeyMarkup) {
  const CliRun run = Cli({"resolve", "--algo", "focus", "--ontology", ont_,
                       FixturePath("walkthrough.json").string(), "-"});
  EXPECT_EQ(run.code, 0) << run.err;
  EXPECT_EQ(run.out, ReadFile(FixturePath("walkthrough.key.sgml")));
  EXPECT_EQ(run.err, "");
}

TEST_F(CliTest, ResolveToFile) {
  const std::string out = Temp("out.sgml");
  const CliRun run = Cli({"resolve", "--ontology", ont_,
                       FixturePath("brothers.json").string(), out});
  EXPECT_EQ(run.code, 0) << run.err;
  EXPECT_EQ(ReadFile(out), ReadFile(FixturePath("brothers.key.sgml")));
}

TEST_F(CliTest, SelfScoreIsPerfect) {
  const std::string key = FixturePath("walkthrough.key.sgml").string();
  const CliRun run = Cli({"score", key, key});
  EXPECT_EQ(run.code, 0);
  EXPECT_EQ(run.out, "recall 100.0 precision 100.0 f 100.0\n");
}

TEST_F(CliTest, NoneScoresBelowFocus) {
  for (const char* fixture : {"walkthrough", "twa", "writ", "brothers"}) {
    const std::string in = FixturePath(std::string(fixture) + ".json").string();
    const std::string key =
        FixturePath(std::string(fixture) + ".key.sgml").string();
    const CliRun focus = Cli({"resolve", "--ontology", ont_, in, Temp("focus.sgml")});
    const CliRun none = Cli({"resolve", "--algo", "none", "--ontology", ont_, in,
                          Temp("none.sgml")});
    ASSERT_EQ(focus.code, 0) << focus.err;
    ASSERT_EQ(none.code, 0) << none.err;
    const auto keys = LoadChainSets(key);
    const ScoreReport f = ScoreCorpus(keys, LoadChainSets(Temp("focus.sgml")));
    const ScoreReport n = ScoreCorpus(keys, LoadChainSets(Temp("none.sgml")));
    EXPECT_LE(n.recall.value(), f.recall.value()) << fixture;
  }
}

TEST_F(CliTest, ScoreWarnsOnEmptyResponse) {
  const std::string key = FixturePath("walkthrough.key.sgml").string();
  Write(Temp("empty.chains"), "walkthrough:\n");
  const CliRun run = Cli({"score", key, Temp("empty.chains")});
  EXPECT_EQ(run.code, 0);
  EXPECT_EQ(run.out, "recall 0.0 precision 0.0 f 0.0\n");
  EXPECT_THAT(run.err, HasSubstr("precision"));
}

TEST_F(CliTest, TraceGolden) {
  const CliRun run =
      Cli({"trace", "--ontology", ont_, FixturePath("walkthrough.json").string()});
  EXPECT_EQ(run.code, 0) << run.err;
  EXPECT_EQ(run.out,
            "walkthrough 0 CF=e1 AF=m1 AFL=[] FS=[] AFS=[] IntraAFL=[]\n"
            "walkthrough 1 CF=m1 AF=m2 AFL=[m2] FS=[e1] AFS=[] IntraAFL=[m1,m2]\n"
            "walkthrough 2 CF=m4 AF=m2 AFL=[m2] FS=[m1,e1] AFS=[] IntraAFL=[m4]\n"
            "walkthrough 3 CF=m5 AF=m2 AFL=[] FS=[m4,m1,e1] AFS=[] IntraAFL=[m5]\n"
            "walkthrough 4 CF=m5 AF=m2 AFL=[m7] FS=[m4,m1,e1] AFS=[] "
            "IntraAFL=[m5,m7]\n");
}

TEST_F(CliTest, RunsAreDeterministic) {
  const std::vector<std::string> args = {"resolve", "--granularity", "sentence",
                                         "--ontology", ont_,
                                         FixturePath("writ.json").string(), "-"};
  const CliRun a = Cli(args);
  const CliRun b = Cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_THAT(a.out, HasSubstr("<COREF ID=\"w5\" REF=\"w1\">It</COREF>"));
}

TEST_F(CliTest, PrioritiesFileIsApplied) {
  Write(Temp("prio.txt"), "non-agent: CF,AFL,FS\n");
  const CliRun run = Cli({"resolve", "--priorities", Temp("prio.txt"), "--ontology",
                       ont_, FixturePath("walkthrough.json").string(), "-"});
  EXPECT_EQ(run.code, 0) << run.err;
  EXPECT_THAT(run.out, StartsWith("<DOC ID=\"walkthrough\">\nState Police said"));
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(Cli({}).code, 2);
  EXPECT_EQ(Cli({"frobnicate"}).code, 2);
  const CliRun bad_algo = Cli({"resolve", "--algo", "bogus", "--ontology", ont_,
                            "in.json", "-"});
  EXPECT_EQ(bad_algo.code, 2);
  EXPECT_THAT(bad_algo.err, HasSubstr("--algo"));
  EXPECT_EQ(bad_algo.out, "");
  EXPECT_EQ(Cli({"resolve", "in.json", "-"}).code, 2) << "missing --ontology";
  EXPECT_EQ(Cli({"score", "only-one"}).code, 2);
}

TEST_F(CliTest, ValidationErrorsExitOne) {
  Write(Temp("bad.json"), "{\"documents\": [}");
  const CliRun syntax = Cli({"resolve", "--ontology", ont_, Temp("bad.json"), "-"});
  EXPECT_EQ(syntax.code, 1);
  EXPECT_THAT(syntax.err, HasSubstr("bad.json:1:"));
  EXPECT_EQ(syntax.out, "");

  const CliRun missing = Cli({"trace", "--ontology", ont_, Temp("absent.json")});
  EXPECT_EQ(missing.code, 1);

  Write(Temp("bad.prio"), "agent: XX\n");
  EXPECT_EQ(Cli({"resolve", "--priorities", Temp("bad.prio"), "--ontology", ont_,
                 FixturePath("walkthrough.json").string(), "-"})
                .code,
            1);
}

TEST_F(CliTest, HelpExitsZero) {
  const CliRun run = Cli({"--help"});
  EXPECT_EQ(run.code, 0);
  EXPECT_THAT(run.out, HasSubstr("resolve"));
  const CliRun sub = Cli({"resolve", "--help"});
  EXPECT_EQ(sub.code, 0);
  EXPECT_THAT(sub.out, HasSubstr("--granularity"));
}

}  // namespace
}  // namespace focusres
