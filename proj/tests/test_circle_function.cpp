#include <gtest/gtest.h>

#include <sstream>

#include "fracnoether/circle_function.hpp"
#include "fracnoether/random.hpp"

using namespace fracnoether;

namespace {

CircleSamples sample(const std::function<double(double)>& f, int points) {
  CircleSamples s(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) s[static_cast<std::size_t>(i)] = {f(grid_angle(i, points))};
  return s;
}

}  // namespace

TEST(CircleFunction, AnalyzeCosine) {
  const auto u = analyze(sample([](double t) { return std::cos(t); }, 16), 4);
  EXPECT_NEAR(u.coeff(0, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(u.coeff(0, -1).real(), 0.5, 1e-15);
  for (int k = -4; k <= 4; ++k) {
    if (std::abs(k) == 1) continue;
    EXPECT_LT(std::abs(u.coeff(0, k)), 1e-15) << "k=" << k;
  }
}

TEST(CircleFunction, AnalyzeConstant) {
  const auto u = analyze(sample([](double) { return 3.0; }, 9), 4);
  EXPECT_DOUBLE_EQ(u.coeff(0, 0).real(), 3.0);
  EXPECT_LT(u.max_abs_coeff() - 3.0, 1e-15);
}

TEST(CircleFunction, RoundTripRandom) {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = random_trig_polynomial(rng, 12, 3);
    for (int p : {25, 32, 101}) {
      const auto v = analyze(synthesize(u, p), 12);
      for (int j = 0; j < 3; ++j)
        for (int k = -12; k <= 12; ++k)
          EXPECT_LT(std::abs(v.coeff(j, k) - u.coeff(j, k)), 1e-12 * u.max_abs_coeff());
    }
  }
}

TEST(CircleFunction, GridTooSmall) {
  EXPECT_THROW(analyze(CircleSamples(8, {1.0}), 4), GridTooSmall);
}

TEST(CircleFunction, RealityEnforced) {
  CircleFunction u(3, 1);
  u.set_mode(0, 2, Complex(1.0, 2.0));
  EXPECT_EQ(u.coeff(0, -2), Complex(1.0, -2.0));
  EXPECT_THROW(u.set_mode(0, 0, Complex(0.0, 1.0)), DomainError);
  std::vector<std::vector<Complex>> rows{{{0, 0}, {1, 1}, {0, 0}, {1, 1}, {0, 0}}};
  EXPECT_THROW(CircleFunction::from_coefficients(2, rows), InvalidInput);
}

TEST(CircleFunction, EvaluationMatchesSynthesis) {
  Rng rng(3);
  const auto u = random_trig_polynomial(rng, 6, 2);
  const auto s = synthesize(u, 40);
  for (int i = 0; i < 40; ++i)
    for (int j = 0; j < 2; ++j)
      EXPECT_NEAR(u.value(j, grid_angle(i, 40)), s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                  1e-13);
}

TEST(CircleFunction, MultiplyTracksBandwidth) {
  const auto c = cos_mode(3);
  const auto p = multiply(c, c);
  EXPECT_EQ(p.bandwidth(), 6);
  EXPECT_NEAR(p.value(0, 0.4), std::cos(1.2) * std::cos(1.2), 1e-15);
  EXPECT_THROW(multiply(c, c, 5), BandwidthOverflow);
  try {
    multiply(c, c, 4);
  } catch (const BandwidthOverflow& e) {
    EXPECT_EQ(e.required(), 6);
    EXPECT_EQ(e.allowed(), 4);
  }
}

TEST(CircleFunction, DerivativeShiftAndInner) {
  const auto s = sin_mode(2);
  EXPECT_NEAR(derivative(s).value(0, 0.3), 2.0 * std::cos(0.6), 1e-15);
  EXPECT_NEAR(shift(s, 0.5).value(0, 0.3), std::sin(1.6), 1e-15);
  EXPECT_NEAR(inner(s, s), kPi, 1e-14);
  EXPECT_NEAR(triple_integral(cos_mode(1), cos_mode(1), cos_mode(2)), kPi / 2.0, 1e-14);
}

TEST(CircleFunction, Parseval) {
  Rng rng(11);
  const auto u = random_trig_polynomial(rng, 10, 2);
  const int p = 64;
  const auto s = synthesize(u, p);
  double quad = 0.0;
  for (const auto& v : s) quad += v[0] * v[0] + v[1] * v[1];
  quad *= kTwoPi / p;
  EXPECT_LT(std::abs(quad - inner(u, u)) / quad, 1e-10);
}

TEST(CircleFunction, CsvExport) {
  std::ostringstream os;
  write_samples_csv(os, stack({cos_mode(1), sin_mode(1)}), 4);
  const auto text = os.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "theta,u_1,u_2");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
}
