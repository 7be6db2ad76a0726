#pragma once

// Normalization constants and singular kernels of (-Delta)^s in one dimension
// and on the circle.

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include <cmath>
#include <numbers>

#include "fracnoether/circle_function.hpp"
#include "fracnoether/errors.hpp"

namespace fracnoether {

/// C_{1,s} = 4^s Gamma(1/2+s) / (sqrt(pi) |Gamma(-s)|), the constant of the
/// pointwise formula (-Delta)^s u(x) = C_{1,s} PV \int (u(x)-u(y))/|x-y|^{1+2s} dy.
/// At s = 1 the formula degenerates (Gamma(-1) is a pole) and 0 is returned.
inline double c1s(double s) {
  if (!(s > 0.0) || s > 1.0) throw DomainError("c1s: s must lie in (0,1]");
  if (s == 1.0) return 0.0;
  return -std::pow(4.0, s) * std::tgamma(0.5 + s) /
         (std::sqrt(std::numbers::pi) * std::tgamma(-s));
}

namespace detail {

// RAII switch that keeps GSL from aborting; callers check the status instead.
class GslQuiet {
 public:
  GslQuiet() : old_(gsl_set_error_handler_off()) {}
  ~GslQuiet() { gsl_set_error_handler(old_); }
  GslQuiet(const GslQuiet&) = delete;
  GslQuiet& operator=(const GslQuiet&) = delete;

 private:
  gsl_error_handler_t* old_;
};

inline double riemann_zeta(double x) {
  GslQuiet quiet;
  gsl_sf_result r;
  if (gsl_sf_zeta_e(x, &r) != GSL_SUCCESS) throw QuadratureError("zeta evaluation failed");
  return r.val;
}

inline double hurwitz_zeta(double x, double q) {
  GslQuiet quiet;
  gsl_sf_result r;
  if (gsl_sf_hzeta_e(x, q, &r) != GSL_SUCCESS) throw QuadratureError("hzeta evaluation failed");
  return r.val;
}

}  // namespace detail

/// Circle kernel of the half Laplacian, K^{1/2}(z) = 1/(4 pi sin^2(z/2)).
/// With this normalization \int (u(x)-u(y)) K^{1/2}(x-y) dy has multiplier |k|.
inline double kernel_half(double z) {
  const double sn = std::sin(0.5 * z);
  if (sn == 0.0) throw DomainError("kernel_half: z must be nonzero mod 2pi");
  return 1.0 / (4.0 * kPi * sn * sn);
}

/// Circle kernel of (-Delta)^s for s in (0,1): the periodization
/// C_{1,s} sum_n |z + 2 pi n|^{-1-2s}, written through the Hurwitz zeta function.
/// It is the r -> 1 limit of the Abel-regularized multiplier series.
inline double kernel_circle(double s, double z) {
  if (!(s > 0.0) || !(s < 1.0)) throw DomainError("kernel_circle: s must lie in (0,1)");
  if (s == 0.5) return kernel_half(z);
  const double q = normalize_angle(z) / kTwoPi;
  if (q == 0.0) throw DomainError("kernel_circle: z must be nonzero mod 2pi");
  const double e = 1.0 + 2.0 * s;
  return c1s(s) * std::pow(kTwoPi, -e) *
         (detail::hurwitz_zeta(e, q) + detail::hurwitz_zeta(e, 1.0 - q));
}

/// Periodic principal-value integral PV \int_{S^1} N(y) K^s(x-y) dy for a
/// smooth periodic numerator with N(x) = 0.
///
/// `numerator(j)` returns N(x + j h), h = 2 pi / P, for j = 1..P-1. The node
/// y = x is excluded (symmetric exclusion); the leading generalized
/// Euler-Maclaurin term of the excluded singular node is added back, with
/// `n2` = N''(x). This raises the order from O(h^{2-2s}) to O(h^{4-2s}).
template <class Numerator>
double circle_pv(double s, int points, const Numerator& numerator, double n2) {
  if (points < 3) throw GridTooSmall("circle_pv: need at least 3 nodes");
  const double h = kTwoPi / points;
  double acc = 0.0;
  for (int j = 1; j < points; ++j) acc += numerator(j) * kernel_circle(s, j * h);
  acc *= h;
  const double beta = 1.0 - 2.0 * s;
  const double g0 = c1s(s) * 0.5 * n2;
  acc -= 2.0 * detail::riemann_zeta(-beta) * g0 * std::pow(h, 1.0 + beta);
  if (!std::isfinite(acc)) throw QuadratureError("circle_pv: non-finite result");
  return acc;
}

}  // namespace fracnoether
