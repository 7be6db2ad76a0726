#include <gtest/gtest.h>

#include <sstream>

#include "fracnoether/io.hpp"
#include "fracnoether/random.hpp"
#include "fracnoether/suites.hpp"

using namespace fracnoether;

TEST(Json, CircleFunctionRoundTrip) {
  Rng rng(4);
  const auto u = random_trig_polynomial(rng, 6, 3);
  const auto j = to_json(u);
  EXPECT_EQ(j.at("N"), 6);
  EXPECT_EQ(j.at("m"), 3);
  EXPECT_EQ(j.at("coeffs").at(0).size(), 13u);
  const auto v = circle_function_from_json(Json::parse(j.dump()));
  EXPECT_EQ((u - v).max_abs_coeff(), 0.0);
}

TEST(Json, CircleFunctionRejectsBadInput) {
  EXPECT_THROW(circle_function_from_json(Json::parse(R"({"N":1,"m":1})")), InvalidInput);
  // k = 1 is not the conjugate of k = -1
  EXPECT_THROW(circle_function_from_json(Json::parse(R"({"N":1,"m":1,"coeffs":[[[1,0],[0,0],[2,0]]]})")),
               InvalidInput);
  std::istringstream bad("{not json");
  EXPECT_THROW(parse_json(bad), InvalidInput);
}

TEST(Json, SampledLineFunctionRoundTrip) {
  const auto u = SampledLineFunction::sample_scalar(0.0, 2.0, 8, [](double x) { return x * (2.0 - x); });
  const auto j = to_json(u);
  EXPECT_DOUBLE_EQ(j.at("h").get<double>(), 0.25);
  const auto v = sampled_line_function_from_json(Json::parse(j.dump()));
  EXPECT_EQ(v.samples(), u.samples());
  EXPECT_EQ(v.a(), 0.0);
  EXPECT_EQ(v.b(), 2.0);
}

TEST(Json, ChebyshevSolutionRoundTrip) {
  const auto u = chebyshev_solve(Nonlinearity("1 + 0.1*u"), -1.0, 1.0, 8);
  const auto j = to_json(u);
  EXPECT_EQ(j.at("f"), "1 + 0.1*u");
  EXPECT_EQ(j.at("M"), 8);
  const auto v = chebyshev_solution_from_json(Json::parse(j.dump()));
  EXPECT_EQ(v.coeffs(), u.coeffs());
  EXPECT_EQ(v.f()(2.0), u.f()(2.0));
}

TEST(Report, SchemaAndVerdict) {
  const auto r = make_check("x", {{"s", 0.5}}, 1e-13, 1e-12, 64);
  const auto j = to_json(r);
  for (const char* key : {"check", "params", "residual", "tolerance", "pass", "resolution"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_FALSE(make_check("y", {}, std::nan(""), 1.0, 0).pass);
  const auto back = verification_report_from_json(j);
  EXPECT_EQ(back.check, "x");
  EXPECT_EQ(back.resolution, 64);
}

TEST(Report, CsvHeaderAndShortestDoubles) {
  std::ostringstream os;
  write_reports_csv(os, {make_check("a", {}, 0.1, 1e-6, 3)});
  EXPECT_EQ(os.str(), "check,residual,tolerance,pass,resolution\na,0.1,1e-06,false,3\n");
}

TEST(Suites, DescribeAnchors) {
  EXPECT_NE(describe_suite("hopf").find("stationary point of E if and only if"), std::string::npos);
  EXPECT_NE(describe_suite("pohozaev").find("Assume that u²∈C²([a,b])"), std::string::npos);
  EXPECT_NE(describe_suite("gagliardo").find("1/(4(2π)²)"), std::string::npos);
  for (const auto& s : suite_names()) EXPECT_FALSE(describe_suite(s).empty());
  EXPECT_THROW(describe_suite("nope"), InvalidInput);
}

TEST(Suites, SeedChangesRandomSuites) {
  SuiteConfig a, b;
  a.suite = b.suite = "circle-pohozaev";
  b.seed = a.seed + 1;
  EXPECT_NE(dump(to_json(run_suite(a).reports)), dump(to_json(run_suite(b).reports)));
}
