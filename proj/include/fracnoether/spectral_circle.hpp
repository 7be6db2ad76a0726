#pragma once

// Fourier-multiplier operators on the circle and their quadrature cross-checks.

#include <cmath>
#include <string>
#include <vector>

#include "fracnoether/circle_function.hpp"
#include "fracnoether/errors.hpp"
#include "fracnoether/kernels.hpp"

namespace fracnoether {

inline constexpr int kDefaultCircleResolution = 4096;

/// (-Delta)^s u with multiplier |k|^{2s}. Negative s gives the inverse on
/// mean-free functions (the k = 0 mode is mapped to 0).
inline CircleFunction fractional_laplacian_circle(const CircleFunction& u, double s) {
  return u.apply_real_multiplier(
      [s](int k) { return k == 0 ? 0.0 : std::pow(static_cast<double>(k), 2.0 * s); });
}

/// Hilbert transform, multiplier -i sgn(k).
inline CircleFunction hilbert_transform(const CircleFunction& u) {
  return u.apply_multiplier([](int k) {
    if (k == 0) return Complex{};
    return Complex(0.0, k > 0 ? -1.0 : 1.0);
  });
}

/// Harmonic extension slice at radius r: coefficients r^{|k|} u_hat(k).
inline CircleFunction poisson_slice(const CircleFunction& u, double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("poisson_slice: radius must lie in (0,1)");
  return u.apply_real_multiplier([r](int k) { return std::pow(r, k); });
}

/// Radial derivative of the harmonic extension at radius r: |k| r^{|k|-1} u_hat(k).
inline CircleFunction poisson_radial_derivative(const CircleFunction& u, double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("poisson_radial_derivative: radius must lie in (0,1)");
  return u.apply_real_multiplier(
      [r](int k) { return k == 0 ? 0.0 : static_cast<double>(k) * std::pow(r, k - 1); });
}

/// Samples of the harmonic extension on a polar grid.
struct DiskFunction {
  std::vector<double> radii;
  std::vector<double> angles;
  /// values[i][j] is the m-vector at (radii[i], angles[j]).
  std::vector<std::vector<std::vector<double>>> values;
  /// Exact spectral slices, one per radius.
  std::vector<CircleFunction> slices;
};

inline DiskFunction poisson_extend(const CircleFunction& u, const std::vector<double>& radii,
                                   const std::vector<double>& angles) {
  DiskFunction d;
  d.radii = radii;
  d.angles = angles;
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("poisson_extend: radius must lie in (0,1)");
    CircleFunction slice = poisson_slice(u, r);
    std::vector<std::vector<double>> row;
    row.reserve(angles.size());
    for (double t : angles) row.push_back(slice(t));
    d.values.push_back(std::move(row));
    d.slices.push_back(std::move(slice));
  }
  return d;
}

/// Uniform angular grid of P points.
inline std::vector<double> uniform_angles(int points) {
  std::vector<double> a(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) a[static_cast<std::size_t>(i)] = grid_angle(i, points);
  return a;
}

enum class SeminormKind { sobolev, gagliardo_half, wiener_1, wiener_3half };

struct SeminormValue {
  SeminormKind kind;
  double s;  // exponent for sobolev; 1/2 for gagliardo_half
  double value;
};

/// Homogeneous seminorms from Fourier data, summed over components:
/// sobolev(s) = (sum_{k != 0} |k|^{2s} |u_hat(k)|^2)^{1/2}, gagliardo_half is
/// sobolev(1/2), wiener_1 = sum |k| |u_hat(k)|, wiener_3half = sum |k|^{3/2} |u_hat(k)|.
inline SeminormValue seminorm(const CircleFunction& u, SeminormKind kind, double s = 0.5) {
  if (kind == SeminormKind::gagliardo_half) s = 0.5;
  double acc = 0.0;
  for (int j = 0; j < u.components(); ++j) {
    for (int k = 1; k <= u.bandwidth(); ++k) {
      const double a = std::abs(u.coeff(j, k));
      const double kk = static_cast<double>(k);
      switch (kind) {
        case SeminormKind::sobolev:
        case SeminormKind::gagliardo_half:
          acc += 2.0 * std::pow(kk, 2.0 * s) * a * a;
          break;
        case SeminormKind::wiener_1:
          acc += 2.0 * kk * a;
          break;
        case SeminormKind::wiener_3half:
          acc += 2.0 * std::pow(kk, 1.5) * a;
          break;
      }
    }
  }
  const bool quadratic = kind == SeminormKind::sobolev || kind == SeminormKind::gagliardo_half;
  return {kind, s, quadratic ? std::sqrt(acc) : acc};
}

/// Result of a quadrature-based computation with its provenance.
struct QuadratureValue {
  double value = 0.0;
  int resolution = 0;
  std::string warning;  // empty when the resolution is adequate
};

/// (1/(4(2 pi)^2)) \int\int |u(x)-u(y)|^2 / sin^2((x-y)/2) dx dy, the squared
/// Gagliardo H^{1/2} seminorm, by a P x P trapezoid rule in (x, t = y - x).
/// The t-integrand is a smooth trigonometric polynomial once the diagonal is
/// filled with its limit 4 |u'(x)|^2, so the rule is exact for P > 2N.
inline QuadratureValue gagliardo_seminorm_quadrature(const CircleFunction& u,
                                                     int points = kDefaultCircleResolution) {
  if (points < 2) throw GridTooSmall("gagliardo quadrature needs at least 2 nodes");
  QuadratureValue out;
  out.resolution = points;
  if (points < 2 * u.bandwidth() + 1)
    out.warning = "resolution " + std::to_string(points) + " below 2N+1 = " +
                  std::to_string(2 * u.bandwidth() + 1) + "; result is aliased";
  const auto vals = synthesize(u, points);
  const auto der = synthesize(derivative(u), points);
  const auto m = static_cast<std::size_t>(u.components());
  const double h = kTwoPi / points;
  std::vector<double> inv_sin2(static_cast<std::size_t>(points));
  for (int t = 1; t < points; ++t) {
    const double sn = std::sin(0.5 * t * h);
    inv_sin2[static_cast<std::size_t>(t)] = 1.0 / (sn * sn);
  }
  double total = 0.0;
  for (int i = 0; i < points; ++i) {
    const auto& ui = vals[static_cast<std::size_t>(i)];
    double row = 0.0;
    for (std::size_t c = 0; c < m; ++c) {
      const double d = der[static_cast<std::size_t>(i)][c];
      row += 4.0 * d * d;
    }
    for (int t = 1; t < points; ++t) {
      const auto& uj = vals[static_cast<std::size_t>((i + t) % points)];
      double sq = 0.0;
      for (std::size_t c = 0; c < m; ++c) sq += (ui[c] - uj[c]) * (ui[c] - uj[c]);
      row += sq * inv_sin2[static_cast<std::size_t>(t)];
    }
    total += row;
  }
  out.value = total * h * h / (4.0 * kTwoPi * kTwoPi);
  return out;
}

/// PV \int_{S^1} (u(x) - u(y)) K^s(x - y) dy at one point, per component,
/// using the corrected symmetric-exclusion trapezoid rule on P nodes anchored at x.
inline std::vector<double> pv_fraclap_circle(const CircleFunction& u, double s, double x,
                                             int points = kDefaultCircleResolution) {
  if (!(s > 0.0) || s > 0.5) throw DomainError("pv_fraclap_circle: s must lie in (0,1/2]");
  x = normalize_angle(x);
  const double h = kTwoPi / points;
  const auto ux = u(x);
  const auto u2 = derivative(u, 2)(x);
  std::vector<std::vector<double>> uy(static_cast<std::size_t>(points));
  for (int j = 1; j < points; ++j) uy[static_cast<std::size_t>(j)] = u(x + j * h);
  std::vector<double> out(static_cast<std::size_t>(u.components()));
  for (int c = 0; c < u.components(); ++c) {
    const auto cc = static_cast<std::size_t>(c);
    out[cc] = circle_pv(
        s, points,
        [&](int j) { return ux[cc] - uy[static_cast<std::size_t>(j)][cc]; }, -u2[cc]);
  }
  return out;
}

}  // namespace fracnoether
