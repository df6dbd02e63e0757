// Copyright 2026 The hcover Authors
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


#include "hcover/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace hcover {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hcover_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

const char* kWorked = R"({"kind":"points",
  "points":[[0,0],[1,2],[2,0],[3,2],[4,0]],
  "halfplanes":[{"a":0,"b":1,"c":1},{"a":-1,"b":1,"c":0},{"a":1,"b":1,"c":4}]})";

// Minimal XML well-formedness: tags balance and every tag closes.
bool balanced_xml(const std::string& s) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = s.find('<', pos)) != std::string::npos) {
    const std::size_t end = s.find('>', pos);
    if (end == std::string::npos) return false;
    const std::string tag = s.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?') continue;
    if (tag[0] == '/') {
      const std::string name = tag.substr(1);
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
      continue;
    }
    if (tag.back() == '/') continue;
    stack.push_back(tag.substr(0, tag.find(' ')));
  }
  return stack.empty();
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

TEST_F(CliTest, SolveLowerWorkedInstance) {
  const std::string in = write("worked.json", kWorked);
  const CliRun r = run({"solve-lower", "--input", in});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"status\":\"optimal\",\"size\":2,\"chosen\":[1,2]}\n");
  const CliRun o = run({"oracle", "--input", in});
  EXPECT_EQ(o.out, r.out);
  const CliRun g = run({"solve-general", "--input", in});
  EXPECT_EQ(g.out, r.out);
}

TEST_F(CliTest, InfeasibleGeneral) {
  const std::string in = write("bad.json", R"({"kind":"points","points":[[0,0],[5,5]],
    "halfplanes":[{"a":1,"b":0,"c":1}]})");
  const CliRun r = run({"solve-general", "--input", in});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "{\"status\":\"infeasible\",\"size\":0,\"chosen\":[],\"witness\":1}\n");
}

TEST_F(CliTest, PlotIsWellFormedSvg) {
  const std::string in = write("worked.json", kWorked);
  const CliRun r = run({"plot", "--input", in});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("<?xml", 0), 0u);
  EXPECT_TRUE(balanced_xml(r.out));
  EXPECT_EQ(count(r.out, "class=\"halfplane\""), 3u);
  EXPECT_EQ(count(r.out, "class=\"point\""), 5u);
  const CliRun s = run({"solve-lower", "--input", in, "--format", "svg"});
  EXPECT_TRUE(balanced_xml(s.out));
  EXPECT_EQ(count(s.out, "#d62728"), 2u);
  for (const std::string& kind : generator_kinds()) {
    const std::string f = write(kind + ".json", run({"gen", "--kind", kind, "--n", "12"}).out);
    const CliRun p = run({"plot", "--input", f});
    const Instance inst = parse_instance(run({"gen", "--kind", kind, "--n", "12"}).out);
    EXPECT_TRUE(balanced_xml(p.out)) << kind;
    EXPECT_EQ(count(p.out, "class=\"halfplane\""), inst.halfplanes.size()) << kind;
  }
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  const CliRun unknown = run({"gen", "--kind", "nope"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_FALSE(unknown.err.empty());
  EXPECT_EQ(run({"solve-lower"}).code, 2);
  EXPECT_EQ(run({"solve-lower", "--input", (dir_ / "missing.json").string()}).code, 2);
  const std::string junk = write("junk.json", "{\"kind\":\"points\",\"points\":[[1,\"x/0\"]]}");
  const CliRun bad = run({"solve-lower", "--input", junk});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("InvalidInput"), std::string::npos);
  EXPECT_EQ(run({"solve-lower", "--format", "pdf"}).code, 2);
  const std::string star = write("star.json", run({"gen", "--kind", "star-random", "--n", "6"}).out);
  EXPECT_EQ(run({"solve-lower", "--input", star}).code, 2);
}

TEST_F(CliTest, Kernel) {
  const std::string base = R"({"kind":"points","points":[[0,0],[1,0],[1,1],[0,1],["1/2","1/2"]],
    "halfplanes":[],"epsilon":"1/10")";
  const std::string ok = write("ok.json", base + R"(,"subset":[0,1,2,3]})");
  const CliRun a = run({"kernel-check", "--input", ok});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "{\"kernel\":true}\n");
  const std::string no = write("no.json", base + R"(,"subset":[0,1,3]})");
  const CliRun b = run({"kernel-check", "--input", no});
  EXPECT_EQ(b.code, 1);
  EXPECT_NE(b.out.find("\"violation\""), std::string::npos);
  const CliRun c = run({"kernel-opt", "--input", ok});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "{\"status\":\"optimal\",\"size\":4,\"chosen\":[0,1,2,3]}\n");
  EXPECT_EQ(run({"kernel-opt", "--input", ok, "--budget-n", "3"}).code, 2);
}

TEST_F(CliTest, OutputFile) {
  const std::string in = write("worked.json", kWorked);
  const std::string out = (dir_ / "sol.json").string();
  const CliRun r = run({"solve-lower", "--input", in, "--output", out});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), "{\"status\":\"optimal\",\"size\":2,\"chosen\":[1,2]}\n");
}

TEST_F(CliTest, GenRoundTripsAndBenchIsStable) {
  for (const std::string& kind : generator_kinds()) {
    const CliRun g = run({"gen", "--kind", kind, "--n", "20", "--seed", "5"});
    ASSERT_EQ(g.code, 0) << kind;
    EXPECT_EQ(serialize_instance(parse_instance(g.out)), g.out) << kind;
    EXPECT_EQ(run({"gen", "--kind", kind, "--n", "20", "--seed", "5"}).out, g.out) << kind;
    const CliRun b1 = run({"bench", "--kind", kind, "--n", "20", "--seed", "5"});
    EXPECT_EQ(b1.code, 0) << kind << b1.err;
    EXPECT_EQ(run({"bench", "--kind", kind, "--n", "20", "--seed", "5"}).out, b1.out) << kind;
  }
}

}  // namespace
}  // namespace hcover
