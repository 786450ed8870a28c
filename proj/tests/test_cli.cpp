#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "weylbool/cli.hpp"

using weylbool::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, Series) {
  auto r = cli({"series", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 1 2 6 21 78\n");
  auto j = nlohmann::json::parse(cli({"series", "6", "--json"}).out);
  EXPECT_EQ(j["coefficients"].back(), "297");
}

TEST(Cli, KBooleanReportsTheLetter) {
  auto r = cli({"--json", "kboolean", "436512", "3"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["k_boolean"]);
  EXPECT_EQ(j["multiplicities"][2], 4);
  EXPECT_EQ(j["violations"][0]["i"], 3);
  EXPECT_TRUE(nlohmann::json::parse(cli({"--json", "kboolean", "4357612", "3"}).out)["k_boolean"]);
}

TEST(Cli, BooleanWithWitness) {
  auto r = cli({"boolean", "A3", "2 1 3 2", "--json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["boolean"]);
  EXPECT_FALSE(j["via_bp"]);
  EXPECT_FALSE(j["via_linear"]);
  EXPECT_EQ(j["bp_witness"], "A3:2 3 1 2");
  EXPECT_TRUE(j["consistent"]);
  EXPECT_TRUE(nlohmann::json::parse(cli({"--json", "boolean", "D4", "1 2 3 4"}).out)["boolean"]);
}

TEST(Cli, ElementSchema) {
  auto j = nlohmann::json::parse(cli({"--json", "element", "A2", "1 2 1"}).out);
  EXPECT_EQ(j["system"], "A2");
  EXPECT_EQ(j["word"], "1 2 1");
  EXPECT_EQ(j["length"], 3);
  EXPECT_EQ(j["inversions"], nlohmann::json::parse("[[1,0],[0,1],[1,1]]"));
}

TEST(Cli, RootsSchema) {
  auto j = nlohmann::json::parse(cli({"--json", "roots", "B2"}).out);
  EXPECT_EQ(j["type"], "B2");
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["positive_roots"].size(), 4u);
}

TEST(Cli, CountSchema) {
  auto j = nlohmann::json::parse(cli({"--json", "count", "5"}).out);
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["f"], 78);
  EXPECT_TRUE(j["refined"]["holds"]);
  EXPECT_TRUE(nlohmann::json::parse(cli({"--json", "count", "1"}).out)["refined"].is_null());
}

TEST(Cli, Containment) {
  auto bp = nlohmann::json::parse(cli({"--json", "bp-contains", "B3", "2 1 3 2", "B3:2 1 3 2"}).out);
  EXPECT_TRUE(bp["contains"]);
  EXPECT_EQ(bp["witness"]["subsystem"], "B3");
  auto lin = nlohmann::json::parse(cli({"--json", "linear-contains", "G2", "2 1 2", "A2:1 2 1"}).out);
  EXPECT_TRUE(lin["contains"]);
  EXPECT_EQ(lin["images"].size(), 2u);
  auto none = nlohmann::json::parse(cli({"--json", "linear-contains", "B2", "1 2 1", "A2:1 2 1"}).out);
  EXPECT_FALSE(none["contains"]);
}

TEST(Cli, UsageErrorsNameTheToken) {
  auto w = cli({"element", "A3", "2 x 1"});
  EXPECT_EQ(w.code, 2);
  EXPECT_NE(w.err.find("'x'"), std::string::npos);
  auto t = cli({"roots", "Q7"});
  EXPECT_EQ(t.code, 2);
  EXPECT_NE(t.err.find("Q7"), std::string::npos);
  auto p = cli({"kboolean", "4365z2", "3"});
  EXPECT_EQ(p.code, 2);
  EXPECT_NE(p.err.find("'z'"), std::string::npos);
  auto k = cli({"kboolean", "4321", "two"});
  EXPECT_EQ(k.code, 2);
  EXPECT_NE(k.err.find("'two'"), std::string::npos);
  auto l = cli({"element", "A2", "1 3"});
  EXPECT_EQ(l.code, 2);
  EXPECT_NE(l.err.find("'3'"), std::string::npos);
  EXPECT_EQ(cli({"verify", "bogus"}).code, 2);
  EXPECT_EQ(cli({"table", "3"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
}

TEST(Cli, VerifyExitCodeAndJson) {
  auto r = cli({"--json", "verify", "table2"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["passed"]);
  EXPECT_EQ(j["reports"][0]["claim"], "pattern-inversions");
  auto text = cli({"verify", "pattern-sets"});
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(text.out.rfind("PASS", 0), 0u);
}

TEST(CliGolden, ForbiddenPatterns) {
  auto r = cli({"--json", "table", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(GOLDEN_DIR "/forbidden_patterns.json"));
}

TEST(CliGolden, PatternInversions) {
  auto r = cli({"--json", "table", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(GOLDEN_DIR "/pattern_inversions.json"));
}
