#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

using namespace vconc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(VCONC_TEST_DATA) + "/" + name; }

nlohmann::json machine_block(const std::string& out) {
  auto at = out.find("---\n");
  EXPECT_NE(at, std::string::npos);
  return nlohmann::json::parse(out.substr(at + 4));
}

}  // namespace

TEST(Cli, OrderOfKnotFixture) {
  auto r = run({"order", "fixture://6.85091", "--side", "plus"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = machine_block(r.out);
  EXPECT_EQ(j["order"], 2);
  EXPECT_NE(r.out.find("order 2"), std::string::npos);
}

TEST(Cli, ArfOfKnotFixture) {
  auto r = run({"arf", "fixture://5.2433", "--side", "plus"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(machine_block(r.out)["arf"], 1);
}

TEST(Cli, ValidationFailureNamesCondition) {
  auto r = run({"validate", data("nonskew.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("skew-symmetry"), std::string::npos) << r.err;
  auto ok = run({"validate", data("f0_3_5.json")});
  EXPECT_EQ(ok.code, 0) << ok.err;
}

TEST(Cli, ComputationLimitExitCode) {
  EXPECT_EQ(run({"kmn", "--m", "3", "--n", "7", "--i", "40"}).code, 2);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"order", "fixture://nonesuch"}).code, 1);
  EXPECT_EQ(run({"order", data("missing.json")}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"vlk", data("bad.gauss"), "J", "K"}).code, 1);
  EXPECT_EQ(run({"order", "fixture://6.85091", "--side", "sideways"}).code, 1);
}

TEST(Cli, ReportsAreByteStable) {
  for (auto args : std::vector<std::vector<std::string>>{{"invariants", "fixture://6.85091", "--side", "plus"},
                                                         {"sigfn", "fixture://kmn(3,7,1)", "--side", "minus"},
                                                         {"witt", "-2,10"}}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, InvariantReportMirrorsLibrary) {
  auto j = machine_block(run({"invariants", "fixture://6.85091", "--side", "plus"}).out);
  EXPECT_EQ(j["delta"]["text"], "(t - 1)^2 * (t^2 + 3*t + 1)");
  EXPECT_EQ(j["t_minus_one_class"]["class"], "<-2, 10>");
  EXPECT_EQ(j["metabolic"], false);
  EXPECT_EQ(j["order"], 2);
  auto m = machine_block(run({"invariants", "fixture://6.85091", "--side", "minus"}).out);
  EXPECT_EQ(m["metabolic"], true);
}

TEST(Cli, RationalEntriesRoundTrip) {
  auto r = run({"validate", data("rational.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto c = cli::load_couple(data("rational.json"));
  auto doc = cli::couple_to_json(c.name, c.couple);
  EXPECT_EQ(doc["a_plus"][1][1], "-3/7");
  auto back = cli::parse_couple_json(doc);
  EXPECT_EQ(back.couple, c.couple);
}

TEST(Cli, EmitWritesALoadableCouple) {
  auto path = testing::TempDir() + "vconc_kmn.json";
  auto r = run({"kmn", "--m", "5", "--n", "13", "--i", "-1", "--emit", path});
  ASSERT_EQ(r.code, 0) << r.err;
  auto o = run({"order", path, "--side", "plus"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(machine_block(o.out)["order"], 2);
}

TEST(Cli, DiagramCommands) {
  auto v = run({"vlk", data("hopf.gauss"), "J", "K"});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(machine_block(v.out)["vlk"], 1);
  auto a = run({"assemble", data("band.gauss")});
  ASSERT_EQ(a.code, 0) << a.err;
  auto j = machine_block(a.out);
  EXPECT_EQ(j["a_plus"], nlohmann::json::parse(R"([["1","1"],["0","1"]])"));
}

TEST(Cli, OtherCommands) {
  auto al = run({"alexander", data("f0_3_5.json"), "--side", "plus"});
  ASSERT_EQ(al.code, 0) << al.err;
  EXPECT_EQ(machine_block(al.out)["polynomial"], "-15*t^2 + 30*t - 15");
  auto mx = run({"alexander", "fixture://6.85091", "--side", "mixed"});
  EXPECT_EQ(mx.code, 0) << mx.err;
  auto w = machine_block(run({"witt", "-2,10"}).out);
  EXPECT_EQ(w["boundaries"]["5"]["e"], 1);
  EXPECT_EQ(w["order"], 2);
  auto c = run({"concordant", "fixture://kmn(3,11,0)", "fixture://kmn(7,11,0)", "--side", "plus"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(machine_block(c.out)["concordant"], false);
  auto met = run({"metabolic", "fixture://6.85091", "--side", "minus"});
  EXPECT_EQ(machine_block(met.out)["metabolic"], true);
  auto fx = run({"fixture", "5.2433"});
  EXPECT_EQ(fx.code, 0);
  EXPECT_EQ(run({"--help"}).code, 0);
}
