#include <gtest/gtest.h>

#include "fracnoether/frac_div_circle.hpp"
#include "fracnoether/random.hpp"

using namespace fracnoether;

TEST(KernelKs, EvenAndErrors) {
  for (double z : {0.3, 1.1, 2.9}) EXPECT_EQ(kernel_Ks(0.25, z, 0.9), kernel_Ks(0.25, -z, 0.9));
  EXPECT_THROW(kernel_Ks(0.25, 0.0, 0.9), DomainError);
  EXPECT_THROW(kernel_Ks(0.25, kTwoPi, 0.9), DomainError);
  EXPECT_THROW(kernel_Ks(0.5, 1.0, 0.9), DomainError);
  EXPECT_THROW(kernel_Ks(0.25, 1.0, 1.0), DomainError);
}

TEST(KernelKs, AbelLimitIsPeriodizedLineKernel) {
  for (double z : {0.5, 1.5, 3.0}) {
    const double lim = kernel_circle(0.25, z);
    EXPECT_NEAR(kernel_Ks(0.25, z, 0.9999), lim, 1e-3 * lim) << z;
  }
}

TEST(KernelKs, ReproducesMultiplierOnCosine) {
  const RegularizedKernel k{0.25, 0.999};
  const auto u = cos_mode(1);
  EXPECT_NEAR(regularized_kernel_action(u, k, 1.3), std::cos(1.3), 1e-2);
}

TEST(KernelKs, BracketingConstants) {
  const auto b = RegularizedKernel{0.25, 0.999}.bracketing(0.1, kPi);
  EXPECT_GT(b.lower, 0.0);
  EXPECT_TRUE(std::isfinite(b.upper));
  EXPECT_GE(b.upper, b.lower);
}

TEST(DivSProduct, Examples) {
  Rng rng(1);
  const auto a = random_trig_polynomial(rng, 5);
  const auto phi = random_trig_polynomial(rng, 4);
  EXPECT_EQ(div_s_product(a, a, 0.5, phi), 0.0);
  const auto phi2 = multiply(cos_mode(1), sin_mode(2));
  EXPECT_NEAR(div_s_product(cos_mode(1), sin_mode(2), 0.5, phi2), -kPi / 2.0, 1e-14);
  const double one[] = {1.0};
  EXPECT_NEAR(div_s_product(constant_function(one), cos_mode(1), 0.5, cos_mode(1)), -kPi, 1e-14);
  EXPECT_THROW(div_s_product(cos_mode(3), sin_mode(3), 0.5, phi, 5), BandwidthOverflow);
}

TEST(DivSProduct, AntisymmetryAndBilinearity) {
  Rng rng(8);
  for (double s : {0.25, 0.5}) {
    const auto a = random_trig_polynomial(rng, 6);
    const auto a2 = random_trig_polynomial(rng, 6);
    const auto b = random_trig_polynomial(rng, 5);
    const auto phi = random_trig_polynomial(rng, 4);
    EXPECT_NEAR(div_s_product(a, b, s, phi), -div_s_product(b, a, s, phi), 1e-13);
    EXPECT_NEAR(div_extended_pair(a, b, s, phi), -div_extended_pair(b, a, s, phi), 1e-12);
    const double lin = div_s_product(2.0 * a + a2, b, s, phi);
    EXPECT_NEAR(lin, 2.0 * div_s_product(a, b, s, phi) + div_s_product(a2, b, s, phi), 1e-12);
  }
}

TEST(CommutatorG, ConstantPhiAndCosineExample) {
  Rng rng(3);
  const auto w = random_trig_polynomial(rng, 6);
  const double c[] = {2.5};
  for (double s : {0.25, 0.5})
    EXPECT_LT(commutator_G(w, constant_function(c), s).G.max_abs_coeff(), 1e-14);
  // w = phi = cos: G = cos^2 - (-Delta)^{1/2}(1/2 + cos 2t / 2) = sin^2
  const auto g = commutator_G(cos_mode(1), cos_mode(1), 0.5).G;
  for (double t : {0.0, 0.7, 2.0}) EXPECT_NEAR(g.value(0, t), std::sin(t) * std::sin(t), 1e-15);
  EXPECT_NEAR(g.coeff(0, 0).real(), 0.5, 1e-15);
}

TEST(CommutatorG, KernelQuadratureCrossCheck) {
  Rng rng(12);
  for (double s : {0.25, 0.5}) {
    const auto w = random_trig_polynomial(rng, 6);
    const auto phi = random_trig_polynomial(rng, 4);
    const auto g = commutator_G(w, phi, s).G;
    for (double x : {0.2, 3.3}) EXPECT_NEAR(commutator_G_quadrature(w, phi, s, x), g.value(0, x), 1e-8) << s;
  }
}

TEST(CommutatorG, BoundRatioStaysBelowYoungConstant) {
  Rng rng(99);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = random_trig_polynomial(rng, rng.integer(1, 10), 1, 0.0, true);
    const auto phi = random_trig_polynomial(rng, rng.integer(1, 10));
    worst = std::max(worst, commutator_bound_ratio(w, phi, 0.25));
  }
  EXPECT_GT(worst, 0.0);
  EXPECT_LE(worst, std::sqrt(kTwoPi));
}

TEST(DivExtendedPair, MatchesProductForm) {
  const auto phi2 = multiply(cos_mode(1), sin_mode(2));
  EXPECT_NEAR(div_extended_pair(cos_mode(1), sin_mode(2), 0.5, phi2), -kPi / 2.0, 1e-10);
  Rng rng(31);
  const double c[] = {1.7};
  for (int trial = 0; trial < 20; ++trial) {
    const double s = trial % 2 == 0 ? 0.25 : 0.5;
    const auto a = random_trig_polynomial(rng, rng.integer(0, 8));
    const auto b = random_trig_polynomial(rng, rng.integer(0, 8));
    const auto phi = random_trig_polynomial(rng, rng.integer(0, 8));
    EXPECT_NEAR(div_extended_pair(a, b, s, phi), div_s_product(a, b, s, phi), 1e-10);
    EXPECT_NEAR(div_extended_pair(a, b, s, constant_function(c)), 0.0, 1e-12);
    EXPECT_NEAR(div_extended_pair(a, a, s, phi), 0.0, 1e-12);
  }
}

TEST(DivSProduct, KernelIntegralCrossCheckHalf) {
  // \int (b L a - a L b) phi with L a evaluated by the K^{1/2} PV quadrature
  Rng rng(44);
  const auto a = random_trig_polynomial(rng, 8);
  const auto b = random_trig_polynomial(rng, 8);
  const auto phi = random_trig_polynomial(rng, 8);
  const int p = 64;  // outer trapezoid over the integrand of bandwidth 24
  double acc = 0.0;
  for (int i = 0; i < p; ++i) {
    const double x = grid_angle(i, p);
    const double la = pv_fraclap_circle(a, 0.5, x)[0];
    const double lb = pv_fraclap_circle(b, 0.5, x)[0];
    acc += (b.value(0, x) * la - a.value(0, x) * lb) * phi.value(0, x);
  }
  acc *= kTwoPi / p;
  EXPECT_NEAR(acc, div_s_product(a, b, 0.5, phi), 1e-4);
}
