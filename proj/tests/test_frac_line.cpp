#include <gtest/gtest.h>

#include "fracnoether/frac_line.hpp"
#include "fracnoether/random.hpp"

using namespace fracnoether;

namespace {

SampledLineFunction semicircle(int n, double a = -1.0, double b = 1.0) {
  return SampledLineFunction::sample_scalar(a, b, n, [a, b](double x) {
    return std::sqrt(std::max(0.0, (x - a) * (b - x)));
  });
}

// Closed form of (-Delta)^{1/2} sqrt(1-x^2) at x = 1 + d, d > 0.
double semicircle_exterior(double d) { return 1.0 - (1.0 + d) / std::sqrt(d * (2.0 + d)); }

}  // namespace

TEST(LineConstant, HalfIsOneOverPi) {
  EXPECT_NEAR(c1s(0.5), 1.0 / kPi, 1e-15);
  // Fourier oracle: \int (1-cos(y)) / |y|^{1+2s} dy = 1 / C_{1,s}
  for (double s : {0.25, 0.75}) {
    const double ref = kPi / (std::tgamma(1.0 + 2.0 * s) * std::sin(kPi * s));
    EXPECT_NEAR(c1s(s) * ref, 1.0, 1e-12) << s;
  }
}

TEST(FraclapLinePv, SemicircleInterior) {
  const auto u = semicircle(kDefaultLineIntervals);
  for (double x : {0.0, -0.45, 0.7, 0.9}) EXPECT_NEAR(fraclap_line_pv(u, 0.5, x)[0], 1.0, 1e-8) << x;
}

TEST(FraclapLinePv, SemicircleExterior) {
  const auto u = semicircle(kDefaultLineIntervals);
  const double v = fraclap_line_pv(u, 0.5, 2.0)[0];
  EXPECT_LT(v, 0.0);
  EXPECT_NEAR(v, semicircle_exterior(1.0), 1e-9);
  // decay bound (2/pi) [u]_{C^{1/2}} |(x-b)^{-1/2} - (x-a)^{-1/2}| with [u]_{C^{1/2}} = sqrt 2
  const double bound = 2.0 / kPi * std::sqrt(2.0) * std::abs(1.0 - 1.0 / std::sqrt(3.0));
  EXPECT_LE(std::abs(v), bound);
  EXPECT_LT(std::abs(fraclap_line_pv(u, 0.5, 20.0)[0]), std::abs(v));
  for (double d : {0.1, 0.01}) EXPECT_NEAR(fraclap_line_pv(u, 0.5, 1.0 + d)[0], semicircle_exterior(d), 1e-6);
}

TEST(FraclapLinePv, AffineTransfer) {
  const auto u = semicircle(8192, 1.0, 3.0);
  for (double x : {1.5, 2.0, 2.8}) EXPECT_NEAR(fraclap_line_pv(u, 0.5, x)[0], 1.0, 1e-6);
}

TEST(FraclapLinePv, ZeroFunctionAndErrors) {
  const auto z = SampledLineFunction::sample_scalar(0.0, 1.0, 64, [](double) { return 0.0; });
  for (double x : {0.5, 2.0, -3.0}) EXPECT_EQ(fraclap_line_pv(z, 0.3, x)[0], 0.0);
  const auto u = semicircle(64);
  const double h = u.h();
  EXPECT_THROW(fraclap_line_pv(u, 0.5, 1.0 - 1.5 * h), DomainError);
  EXPECT_THROW(fraclap_line_pv(u, 0.75, -1.0 + h), DomainError);
  EXPECT_NO_THROW(fraclap_line_pv(u, 0.25, 1.0 - 1.5 * h));
  EXPECT_THROW(fraclap_line_pv(u, 0.5, 1.0), DomainError);
}

TEST(FraclapLinePv, Homogeneity) {
  const auto u = sample_test_function(bump(0.1, 0.6), -1.0, 1.0, 2048);
  Rng rng(17);
  for (int trial = 0; trial < 4; ++trial) {
    const double lambda = rng.uniform(0.3, 3.0);
    const double s = trial % 2 == 0 ? 0.5 : 0.3;
    const auto ul = u.dilated(lambda);
    for (double x : {-0.2, 0.15, 0.4}) {
      const double ref = std::pow(lambda, 2.0 * s) * fraclap_line_pv(u, s, lambda * x)[0];
      const double got = fraclap_line_pv(ul, s, x)[0];
      EXPECT_NEAR(got, ref, 1e-6 * std::abs(ref)) << lambda;
    }
  }
}

TEST(FraclapLinePv, LeibnizDefect) {
  const auto u = sample_test_function(bump(-0.1, 0.7), -1.0, 1.0, 2048);
  const auto v = sample_test_function(bump(0.2, 0.6, 2.0), -1.0, 1.0, 2048);
  std::vector<std::vector<double>> prod;
  for (int i = 0; i <= u.intervals(); ++i) prod.push_back({u.sample(i, 0) * v.sample(i, 0)});
  const SampledLineFunction uv(-1.0, 1.0, prod);
  for (double s : {0.25, 0.5}) {
    for (double x : {-0.3, 0.0, 0.35}) {
      const double lhs = fraclap_line_pv(uv, s, x)[0] - u.interpolate(0, x) * fraclap_line_pv(v, s, x)[0] -
                         v.interpolate(0, x) * fraclap_line_pv(u, s, x)[0];
      const double rhs = -leibniz_defect_integral(u, v, s, x);
      EXPECT_NEAR(lhs, rhs, 1e-3) << s << " " << x;
    }
  }
}

TEST(FracGradient, ConstantAndAntisymmetry) {
  const auto c = SampledLineFunction::sample_scalar(0.0, 1.0, 16, [](double) { return 2.0; });
  const auto fc = frac_gradient(c, 0.5);
  for (int i = 0; i <= 16; ++i)
    for (int j = 0; j <= 16; ++j) EXPECT_EQ(fc.at(i, j, 0), 0.0);

  Rng rng(2);
  std::vector<std::vector<double>> s;
  for (int i = 0; i <= 20; ++i) s.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
  const SampledLineFunction u(0.0, 2.0, s);
  const auto f = frac_gradient(u, 0.3);
  for (int i = 0; i <= 20; ++i) {
    EXPECT_EQ(f.at(i, i, 0), 0.0);
    for (int j = 0; j <= 20; ++j)
      for (int k = 0; k < 2; ++k) EXPECT_EQ(f.at(i, j, k), -f.at(j, i, k));
  }
}

TEST(FracGradient, NormIdentityWithWeightShift) {
  // [d_{1/4} u]_{H^{1/4}(wedge)} = [u]_{W^{1/2,2}}, both as double integrals
  const auto u = sample_test_function(bump(0.0, 0.5), -1.0, 1.0, 1024);
  const double lhs = offdiag_norm(frac_gradient(u, 0.25).reweighted(0.25), 2.0);
  const double rhs = line_gagliardo_seminorm(u, 0.5);
  EXPECT_LT(std::abs(lhs - rhs) / rhs, 1e-3);
  const double direct = offdiag_norm(frac_gradient(u, 0.5), 2.0);
  EXPECT_LT(std::abs(direct - rhs) / rhs, 1e-6);
}

TEST(FracDivergence, ZeroAndSymmetricFields) {
  const auto u = sample_test_function(bump(0.0, 0.5), -1.0, 1.0, 128);
  OffDiagonalField zero(-1.0, 1.0, 128, 1, 0.5);
  EXPECT_EQ(frac_divergence_pair(zero, 0.5, bump(0.3, 0.4)), 0.0);
  const auto a = sample_test_function(bump(-0.2, 0.5), -1.0, 1.0, 128);
  EXPECT_EQ(frac_divergence_pair(product_field(a, a, 0.5), 0.5, bump(0.3, 0.4)), 0.0);
  EXPECT_THROW(frac_divergence_pair(zero, 0.5, bump(0.9, 0.4)), DomainError);
}

TEST(OffdiagNorm, ZeroAndHomogeneity) {
  OffDiagonalField zero(0.0, 1.0, 32, 1, 0.5);
  EXPECT_EQ(offdiag_norm(zero, 2.0), 0.0);
  const auto u = sample_test_function(bump(0.5, 0.3), 0.0, 1.0, 256);
  auto f = frac_gradient(u, 0.4);
  const double base = offdiag_norm(f, 3.0);
  EXPECT_GT(base, 0.0);
  f *= -2.5;
  EXPECT_NEAR(offdiag_norm(f, 3.0), 2.5 * base, 1e-12 * base);
}

TEST(DivGrad, ConstantAndBumps) {
  const auto c = SampledLineFunction::sample_scalar(-1.0, 1.0, 128, [](double) { return 0.0; });
  const auto rc = check_div_grad_identity(c, bump(0.5, 0.3), 0.5);
  EXPECT_EQ(rc.residual, 0.0);
  const auto u = sample_test_function(bump(-0.4, 0.4), -1.0, 1.0, 512);
  for (double s : {0.25, 0.5}) {
    const auto r = check_div_grad_identity(u, bump(0.5, 0.3), s);
    EXPECT_NE(r.lhs, 0.0);
    EXPECT_LT(r.relative, 1e-3) << s;
  }
}
