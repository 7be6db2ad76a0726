#pragma once

// Circle s-divergences of product fields a(x) b(y), the commutator G_{w,phi}
// and the Abel-regularized kernel K^s_r.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "fracnoether/circle_function.hpp"
#include "fracnoether/errors.hpp"
#include "fracnoether/kernels.hpp"
#include "fracnoether/spectral_circle.hpp"

namespace fracnoether {

/// K^s_r(z) = -(1/2pi) sum_{k != 0} |k|^{2s} r^{|k|} cos(kz), truncated once
/// r^{|k|} |k|^{2s} < 1e-16 past the peak of the weights.
inline double kernel_Ks(double s, double z, double r) {
  if (!(s > 0.0 && s < 0.5)) throw DomainError("kernel_Ks: s must lie in (0,1/2)");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("kernel_Ks: r must lie in (0,1)");
  if (normalize_angle(z) == 0.0) throw DomainError("kernel_Ks: z must be nonzero mod 2pi");
  const double c1 = std::cos(z);
  const double peak = -2.0 * s / std::log(r);
  double prev = 1.0;  // cos(0 z)
  double cur = c1;    // cos(1 z)
  double rk = r;
  double acc = 0.0;
  for (long k = 1;; ++k) {
    const double w = std::pow(static_cast<double>(k), 2.0 * s) * rk;
    acc += w * cur;
    if (static_cast<double>(k) > peak && w < 1e-16) break;
    const double next = 2.0 * c1 * cur - prev;
    prev = cur;
    cur = next;
    rk *= r;
  }
  return -acc / kPi;
}

/// Fitted constants of b_s / |sin(z/2)|^{1+2s} <= K^s_r(z) <= B_s / |sin(z/2)|^{1+2s}.
struct KernelBracket {
  double lower;  // b_s
  double upper;  // B_s
};

/// Abel-regularized circle kernel for s in (0, 1/2).
struct RegularizedKernel {
  double s;
  double r;

  double operator()(double z) const { return kernel_Ks(s, z, r); }

  /// Extremes of K^s_r(z) |sin(z/2)|^{1+2s} over `samples` points of [zmin, zmax].
  KernelBracket bracketing(double zmin, double zmax, int samples = 200) const {
    KernelBracket b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (int i = 0; i < samples; ++i) {
      const double z = zmin + (zmax - zmin) * i / (samples - 1.0);
      const double v = (*this)(z) * std::pow(std::abs(std::sin(0.5 * z)), 1.0 + 2.0 * s);
      b.lower = std::min(b.lower, v);
      b.upper = std::max(b.upper, v);
    }
    return b;
  }
};

/// K^s_r at the nodes j 2pi/P, j = 0..P-1, sharing one table of weights.
inline std::vector<double> sample_kernel_Ks(const RegularizedKernel& kernel, int points) {
  if (!(kernel.s > 0.0 && kernel.s < 0.5)) throw DomainError("sample_kernel_Ks: s must lie in (0,1/2)");
  if (!(kernel.r > 0.0 && kernel.r < 1.0)) throw DomainError("sample_kernel_Ks: r must lie in (0,1)");
  const double peak = -2.0 * kernel.s / std::log(kernel.r);
  std::vector<double> w;
  double rk = kernel.r;
  for (long k = 1;; ++k) {
    w.push_back(std::pow(static_cast<double>(k), 2.0 * kernel.s) * rk);
    if (static_cast<double>(k) > peak && w.back() < 1e-16) break;
    rk *= kernel.r;
  }
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j) {
    const double c1 = std::cos(grid_angle(j, points));
    double prev = 1.0, cur = c1, acc = 0.0;
    for (double wk : w) {
      acc += wk * cur;
      const double next = 2.0 * c1 * cur - prev;
      prev = cur;
      cur = next;
    }
    out[static_cast<std::size_t>(j)] = -acc / kPi;
  }
  return out;
}

/// Trapezoid rule for \int_{S^1} (u(x) - u(y)) K^s_r(x - y) dy at one point of
/// a scalar u. K_r is smooth for r < 1, but its width is about 1 - r, so P
/// must resolve that scale (P >= 16384 for r = 0.999).
inline double regularized_kernel_action(const CircleFunction& u, const RegularizedKernel& kernel,
                                        double x, int points = 16384) {
  const auto k = sample_kernel_Ks(kernel, points);
  const double h = kTwoPi / points;
  const double ux = u.value(0, x);
  double acc = 0.0;
  for (int j = 1; j < points; ++j) acc += (ux - u.value(0, x + j * h)) * k[static_cast<std::size_t>(j)];
  return acc * h;
}

namespace detail {

inline void check_product_exponent(double s) {
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("s must lie in (0,1]");
}

inline void check_bandwidth(const CircleFunction& a, const CircleFunction& b,
                            std::optional<int> max_bandwidth) {
  const int need = a.bandwidth() + b.bandwidth();
  if (max_bandwidth && need > *max_bandwidth) throw BandwidthOverflow(need, *max_bandwidth);
}

}  // namespace detail

/// div_s(a(x) b(y))[phi] = \int (b (-Delta)^s a - a (-Delta)^s b) phi for scalar a, b, phi.
inline double div_s_product(const CircleFunction& a, const CircleFunction& b, double s,
                            const CircleFunction& phi, std::optional<int> max_bandwidth = std::nullopt) {
  detail::check_product_exponent(s);
  detail::check_bandwidth(a, b, max_bandwidth);
  const auto la = fractional_laplacian_circle(a, s);
  const auto lb = fractional_laplacian_circle(b, s);
  return triple_integral(b, la, phi) - triple_integral(a, lb, phi);
}

struct CommutatorResult {
  CircleFunction G;
  CircleFunction w;
  CircleFunction phi;
  double s;
};

/// G_{w,phi} = phi (-Delta)^s w - (-Delta)^s (w phi), spectrally; bandwidth N_w + N_phi.
/// Equivalently G(x) = PV \int w(y)(phi(y) - phi(x)) K^s(x - y) dy.
inline CommutatorResult commutator_G(const CircleFunction& w, const CircleFunction& phi, double s) {
  detail::check_product_exponent(s);
  if (w.components() != 1 || phi.components() != 1)
    throw DomainError("commutator_G: scalar operands expected");
  auto g = multiply(phi, fractional_laplacian_circle(w, s)) -
           fractional_laplacian_circle(multiply(w, phi), s);
  return {std::move(g), w, phi, s};
}

/// Kernel-integral evaluation of G_{w,phi}(x) by the corrected PV trapezoid rule.
inline double commutator_G_quadrature(const CircleFunction& w, const CircleFunction& phi, double s,
                                      double x, int points = kDefaultCircleResolution) {
  if (!(s > 0.0) || s > 0.5) throw DomainError("commutator_G_quadrature: s must lie in (0,1/2]");
  const double h = kTwoPi / points;
  const double px = phi.value(0, x);
  const double w0 = w.value(0, x);
  const double w1 = derivative(w).value(0, x);
  const double p1 = derivative(phi).value(0, x);
  const double p2 = derivative(phi, 2).value(0, x);
  // N(y) = w(y)(phi(y) - phi(x)); N''(x) = 2 w' phi' + w phi''
  const double n2 = 2.0 * w1 * p1 + w0 * p2;
  return circle_pv(
      s, points,
      [&](int j) {
        const double y = x + j * h;
        return w.value(0, y) * (phi.value(0, y) - px);
      },
      n2);
}

/// Extended divergence div_s[a(x) b(y)][phi] := <G_{a,phi}, b>.
inline double div_extended_pair(const CircleFunction& a, const CircleFunction& b, double s,
                                const CircleFunction& phi) {
  return inner(commutator_G(a, phi, s).G, b);
}

/// ||G_{w,phi}||_{L^2} / ([phi]_{A^1} [w]_{H^{-1/2}}); Young's inequality bounds
/// it by sqrt(2 pi) at s = 1/4. Returns 0 when the denominator vanishes.
inline double commutator_bound_ratio(const CircleFunction& w, const CircleFunction& phi, double s = 0.25) {
  const auto g = commutator_G(w, phi, s).G;
  const double den = seminorm(phi, SeminormKind::wiener_1).value *
                     seminorm(w, SeminormKind::sobolev, -0.5).value;
  if (den == 0.0) return 0.0;
  return std::sqrt(inner(g, g)) / den;
}

}  // namespace fracnoether
