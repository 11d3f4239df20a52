#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oracle.hpp"
#include "ptw/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ptw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return oracle::fixture(name); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json payload(const Outcome& o) { return nlohmann::json::parse(o.out).at("payload"); }

}  // namespace

TEST(Golden, EveryCaseMatchesItsFile) {
  ASSERT_GE(ptw::cli::golden_cases().size(), 15u);
  for (const auto& c : ptw::cli::golden_cases()) {
    const std::string path = std::string(PTW_GOLDEN_DIR) + "/" + c.name + ".txt";
    const std::string expected = slurp(path);
    ASSERT_FALSE(expected.empty()) << "missing golden file " << path;
    EXPECT_EQ(ptw::cli::golden_output(c, PTW_FIXTURE_DIR), expected) << c.name;
  }
}

TEST(Golden, RecordedExitCodesAreTheDeclaredOnes) {
  for (const auto& c : ptw::cli::golden_cases()) {
    EXPECT_EQ(run(ptw::cli::expand_golden_args(c, PTW_FIXTURE_DIR)).code, c.exit_code) << c.name;
  }
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"verify", fx("schubert36.json"), "--seed", "4", "--trials", "2"};
  const Outcome a = run(args);
  const Outcome b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TimingGoesToStderrOnly) {
  const Outcome plain = run({"inspect", fx("square4.json")});
  const Outcome timed = run({"--timing", "inspect", fx("square4.json")});
  EXPECT_EQ(plain.out, timed.out);
  EXPECT_TRUE(plain.err.empty());
  EXPECT_NE(timed.err.find("elapsed"), std::string::npos);
}

TEST(Cli, InspectReportsTheSchubertDivisor) {
  const Outcome o = run({"inspect", fx("schubert36.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto p = payload(o);
  EXPECT_EQ(p.at("n"), 6);
  EXPECT_EQ(p.at("k"), 3);
  EXPECT_EQ(p.at("faces"), 9);
  EXPECT_EQ(p.at("positroid_size"), 19);
  EXPECT_EQ(p.at("reduced"), true);
  EXPECT_EQ(p.at("perm"), (std::vector<int>{3, 5, 6, 7, 8, 10}));
}

TEST(Cli, MalformedInputExitsOne) {
  EXPECT_EQ(run({"inspect", fx("does_not_exist.json")}).code, 1);
  EXPECT_EQ(run({"inspect", fx("ex35.json")}).code, 1);
  EXPECT_EQ(run({"synth", "--perm", "2,1,3"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"labels", fx("square4.json"), "--mode", "sideways"}).code, 1);
}

TEST(Cli, MathematicalFailureExitsTwoWithAWitness) {
  const Outcome o = run({"move", fx("square4.json"), "unit", "--spec", fx("bad_move.json")});
  EXPECT_EQ(o.code, 2);
  EXPECT_TRUE(o.out.empty());
  const auto err = nlohmann::json::parse(o.err);
  EXPECT_EQ(err.at("error"), "math");
  EXPECT_EQ(err.at("witness"), "v1");
  const Outcome unknown = run({"move", fx("chamber.json"), "unit", "--spec", fx("bad_move.json")});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_EQ(nlohmann::json::parse(unknown.err).at("error"), "input");
}

TEST(Cli, MeasureAgreesWithMatrixOutput) {
  const Outcome o = run({"measure", fx("square4.json"), "unit"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto p = payload(o);
  EXPECT_EQ(p.at("pluecker").size(), 6u);
  EXPECT_EQ(p.at("matrix").at("k"), 2);
}

TEST(Cli, SynthesisRoundTripsThroughInspect) {
  const Outcome o = run({"synth", "--perm", "3,5,6,7,8,10"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto p = payload(o);
  EXPECT_EQ(p.at("faces"), 9);
}

TEST(Cli, LaurentCountsOnD4) {
  EXPECT_EQ(payload(run({"laurent", fx("d4.json"), "--J", "2,4,6,8"})).at("count"), 17);
  EXPECT_EQ(payload(run({"laurent", fx("d4.json"), "--J", "4,5,6,8"})).at("count"), 2);
}
