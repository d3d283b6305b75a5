#include <gtest/gtest.h>

#include "roundtrip.hpp"

using roundtrip::invoke;

namespace {

void expect_output(const std::vector<std::string>& args, const std::string& out, int code = 0) {
  const auto r = invoke(args);
  EXPECT_EQ(r.code, code) << r.err;
  EXPECT_EQ(r.out, out);
}

}  // namespace

TEST(Cli, Bracket) {
  expect_output({"bracket", "glinf", "E[0,1]", "E[1,0]"}, "E[0,0] - E[1,1] + K\n");
  expect_output({"bracket", "glinf-e", "B[0,2]", "B[1,3]"}, "0\n");
  expect_output({"bracket", "glinf-e", "B[0,-1]", "B[1,-1]"}, "EB[0;-1;1] - EB[1;-1;-1] + K\n");
  expect_output({"bracket", "glinf-e", "B[0,-1]", "B[1,-1]", "--format", "json"},
                "{\"result\":\"EB[0;-1;1] - EB[1;-1;-1] + K\"}\n");
}

TEST(Cli, Vacuum) {
  expect_output({"vacuum", "--level", "2", "B[1,-1] B[0,-1]"}, "B[0,-1]B[1,-1].1 - B[0,-1].1 + B[1,-1].1 - 2.1\n");
  expect_output({"vacuum", "--level", "7/3", "B[0,3]"}, "0\n");
  expect_output({"vacuum", "--lambda", "{\"3\": \"5/2\"}", "--word", "B[3,0]"}, "5/2 .1\n");
}

TEST(Cli, Module) {
  expect_output({"module", "cinf", "act", "--elem", "E[0,1]", "--vector", "v[1]"}, "v[0]\n");
  expect_output({"module", "cinf", "bbar", "--m", "2", "--k", "1", "--vector", "v[5]"}, "-3*v[2]\n");
  expect_output({"module", "sym:2", "act", "--elem", "E[0,1]", "--vector", "x[1]*x[3]"}, "x[0]*x[3]\n");
  expect_output({"module", "ext:2", "witness", "--vector", "v[0]^v[1]"}, "m=-1 n=2 forced=0\n");
  expect_output({"module", "cinf", "series", "--m", "0", "--vector", "v[2]"}, "v[0]*x^-2\n");
  expect_output({"module", "cinf", "recover", "--m", "2", "--N", "1", "--vector", "v[3]", "--format", "json"},
                "{\"result\":{\"-1\":\"0\",\"0\":\"0\",\"1\":\"v[2]\"}}\n");
  expect_output({"module", "vsa:{\"0\":\"1/2\"}", "act", "--elem", "E[1,0]", "--vector", "x[0]^{1/2}"},
                "1/2*x[0]^{1/2-1}*x[1]\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"bracket", "glinf", "E[0,", "E[1,0]"}).code, 2);
  EXPECT_NE(invoke({"bracket", "glinf", "E[0,", "E[1,0]"}).err.find("position"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "no-such-suite"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"module", "cinf", "recover", "--m", "0", "--N", "1", "--vector", "v[5]"}).code, 1);
  EXPECT_EQ(invoke({"module", "sym:2", "act", "--elem", "E[0,1]", "--vector", "x[1]"}).code, 1);
  EXPECT_EQ(invoke({"vacuum", "--lambda", "[1]", "B[0,-1]"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, VerifyReportSchema) {
  const auto r = invoke({"verify", "recovery", "--window", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["suite"], "recovery");
  EXPECT_EQ(j["params"]["window"], 1);
  EXPECT_EQ(j["params"]["level"], "0");
  EXPECT_EQ(j["params"]["seed"], 1);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["failure_count"], 0);
  EXPECT_FALSE(j.contains("wall_time_ms"));
  const auto t = invoke({"verify", "recovery", "--window", "1", "--format", "json", "--timing"});
  EXPECT_TRUE(nlohmann::json::parse(t.out).contains("wall_time_ms"));
}

TEST(Cli, Determinism) {
  const auto o = roundtrip::determinism(roundtrip::determinism_invocations());
  EXPECT_TRUE(o.failures.empty()) << o.failures.front();
}

TEST(Cli, ParsePrintRoundTrip) {
  const auto o = roundtrip::parse_print(3, 200);
  EXPECT_GT(o.cases, 1000u);
  EXPECT_TRUE(o.failures.empty()) << o.failures.front();
}

TEST(Cli, ParseErrorsCarryPositions) {
  try {
    glinf::parse_glinf_e("B[0,1] + EB[1;2]");
    FAIL();
  } catch (const glinf::ParseError& e) {
    EXPECT_EQ(e.position(), 15u);
  }
  EXPECT_THROW(glinf::parse_pbw("B[1,-1]B[0,-1].1"), glinf::ParseError);
  EXPECT_THROW(glinf::parse_rational("1/0"), glinf::ParseError);
  EXPECT_EQ(glinf::parse_rational("-6/4"), glinf::Rational(-3, 2));
}
