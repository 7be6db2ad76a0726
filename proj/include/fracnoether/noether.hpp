#pragma once

// Rotation currents of the half Dirichlet energy for maps S^1 -> S^{m-1}.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "fracnoether/circle_function.hpp"
#include "fracnoether/errors.hpp"
#include "fracnoether/kernels.hpp"
#include "fracnoether/spectral_circle.hpp"

namespace fracnoether {

/// A trigonometric polynomial map validated to take values in the unit sphere.
class SphereValuedCircleFunction {
 public:
  /// Checks 1 - eta <= |u|^2 <= 1 + eta on a uniform grid of `points`
  /// nodes (default max(64, 4N+4)); inputs are validated, never projected.
  explicit SphereValuedCircleFunction(CircleFunction u, double eta = 1e-8, int points = 0)
      : u_(std::move(u)), eta_(eta) {
    if (u_.components() < 2) throw InvalidInput("sphere-valued maps need m >= 2");
    if (points <= 0) points = std::max(64, 4 * u_.bandwidth() + 4);
    const auto s = synthesize(u_, points);
    for (std::size_t i = 0; i < s.size(); ++i) {
      double n2 = 0.0;
      for (double v : s[i]) n2 += v * v;
      if (std::abs(n2 - 1.0) > eta)
        throw InvalidInput("map leaves the sphere: |u|^2 = " + std::to_string(n2) + " at node " +
                           std::to_string(i));
    }
  }

  const CircleFunction& map() const noexcept { return u_; }
  double eta() const noexcept { return eta_; }
  int components() const noexcept { return u_.components(); }

 private:
  CircleFunction u_;
  double eta_;
};

/// theta -> (cos(d theta), sin(d theta)), the trace of z^d.
inline CircleFunction circle_power_map(int degree) {
  return stack({cos_mode(degree), sin_mode(degree)});
}

/// theta -> (cos(theta + eps sin theta), sin(theta + eps sin theta)), analyzed at bandwidth N.
inline CircleFunction perturbed_circle_map(double eps, int bandwidth) {
  const int p = 4 * bandwidth + 1;
  CircleSamples s(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    const double t = grid_angle(i, p);
    s[static_cast<std::size_t>(i)] = {std::cos(t + eps * std::sin(t)), std::sin(t + eps * std::sin(t))};
  }
  return analyze(s, bandwidth);
}

/// Two-point field on a uniform P x P grid of S^1 x S^1.
struct NoetherCurrent {
  enum class Kind { omega, lambda };
  Kind kind;
  int i;
  int k;
  int points;
  std::vector<double> values;  // row-major, values[a * P + b] = field(theta_a, theta_b)

  double operator()(int a, int b) const {
    return values[static_cast<std::size_t>(a) * static_cast<std::size_t>(points) + static_cast<std::size_t>(b)];
  }
};

namespace detail {

inline void check_pair(int m, int i, int k) {
  if (i < 0 || k < 0 || i >= m || k >= m) throw DomainError("component index out of range");
  if (i == k) throw DomainError("current indices must differ");
}

// |2 sin((x-y)/2)|^{1/2}, the chord-distance denominator of d_{1/2} on S^1.
inline double chord_root(double d) { return std::sqrt(std::abs(2.0 * std::sin(0.5 * d))); }

}  // namespace detail

/// Omega_ik(x,y) = u^k(x) d_{1/2}u^i(x,y) - u^i(x) d_{1/2}u^k(x,y) with the
/// chord distance; indices are 0-based; the diagonal is 0.
inline NoetherCurrent omega_field(const SphereValuedCircleFunction& u, int i, int k, int points = 256) {
  detail::check_pair(u.components(), i, k);
  const auto s = synthesize(u.map(), points);
  NoetherCurrent c{NoetherCurrent::Kind::omega, i, k, points,
                   std::vector<double>(static_cast<std::size_t>(points) * static_cast<std::size_t>(points))};
  const auto ui = static_cast<std::size_t>(i);
  const auto uk = static_cast<std::size_t>(k);
  for (int a = 0; a < points; ++a) {
    const auto& x = s[static_cast<std::size_t>(a)];
    for (int b = 0; b < points; ++b) {
      if (a == b) continue;
      const auto& y = s[static_cast<std::size_t>(b)];
      const double den = detail::chord_root(grid_angle(a - b, points));
      const double v = x[uk] * (x[ui] - y[ui]) / den - x[ui] * (x[uk] - y[uk]) / den;
      c.values[static_cast<std::size_t>(a) * static_cast<std::size_t>(points) + static_cast<std::size_t>(b)] = v;
    }
  }
  return c;
}

/// Lambda_ik(x,y) = (L u^k(x) - L u^k(y)) u^i(y) - (L u^i(x) - L u^i(y)) u^k(y)
/// with L = (-Delta)^{1/4}.
inline NoetherCurrent lambda_field(const SphereValuedCircleFunction& u, int i, int k, int points = 256) {
  detail::check_pair(u.components(), i, k);
  const auto s = synthesize(u.map(), points);
  const auto q = synthesize(fractional_laplacian_circle(u.map(), 0.25), points);
  NoetherCurrent c{NoetherCurrent::Kind::lambda, i, k, points,
                   std::vector<double>(static_cast<std::size_t>(points) * static_cast<std::size_t>(points))};
  const auto ui = static_cast<std::size_t>(i);
  const auto uk = static_cast<std::size_t>(k);
  for (int a = 0; a < points; ++a)
    for (int b = 0; b < points; ++b) {
      const auto& qa = q[static_cast<std::size_t>(a)];
      const auto& qb = q[static_cast<std::size_t>(b)];
      const auto& ub = s[static_cast<std::size_t>(b)];
      const double v = (qa[uk] - qb[uk]) * ub[ui] - (qa[ui] - qb[ui]) * ub[uk];
      c.values[static_cast<std::size_t>(a) * static_cast<std::size_t>(points) + static_cast<std::size_t>(b)] = v;
    }
  return c;
}

struct WedgeResidual {
  std::vector<std::pair<int, int>> pairs;  // (i, k) with i < k, 0-based
  CircleFunction residuals;                // component p holds r_{pairs[p]}
  double max_abs = 0.0;                    // sup over a fine grid
};

/// r_ik = u^i (-Delta)^{1/2} u^k - u^k (-Delta)^{1/2} u^i for all i < k.
inline WedgeResidual wedge_el_residual(const CircleFunction& u) {
  const int m = u.components();
  if (m < 2) throw DomainError("wedge residual needs m >= 2");
  const auto lu = fractional_laplacian_circle(u, 0.5);
  WedgeResidual w;
  std::vector<CircleFunction> parts;
  for (int i = 0; i < m; ++i)
    for (int k = i + 1; k < m; ++k) {
      w.pairs.emplace_back(i, k);
      parts.push_back(multiply(u.component(i), lu.component(k)) -
                      multiply(u.component(k), lu.component(i)));
    }
  w.residuals = stack(std::span<const CircleFunction>(parts));
  const int points = 8 * w.residuals.bandwidth() + 16;
  for (const auto& row : synthesize(w.residuals, points))
    for (double v : row) w.max_abs = std::max(w.max_abs, std::abs(v));
  return w;
}

inline WedgeResidual wedge_el_residual(const SphereValuedCircleFunction& u) {
  return wedge_el_residual(u.map());
}

/// sup_theta |(-Delta)^{1/2}u - u * (1/2) \int |u(theta)-u(y)|^2 K^{1/2}(theta-y) dy|
/// over the P-point grid. The integrand is smooth once the diagonal is filled
/// with its limit |u'|^2 / pi, so the trapezoid rule is spectrally accurate.
inline QuadratureValue sphere_representation_residual(const SphereValuedCircleFunction& u,
                                                      int points = kDefaultCircleResolution) {
  const auto& f = u.map();
  const int m = f.components();
  const auto s = synthesize(f, points);
  const auto d = synthesize(derivative(f), points);
  const auto l = synthesize(fractional_laplacian_circle(f, 0.5), points);
  const double h = kTwoPi / points;
  std::vector<double> kern(static_cast<std::size_t>(points));
  for (int t = 1; t < points; ++t) kern[static_cast<std::size_t>(t)] = kernel_half(t * h);
  QuadratureValue out;
  out.resolution = points;
  if (points < 2 * f.bandwidth() + 1) out.warning = "resolution below 2N+1";
  for (int a = 0; a < points; ++a) {
    const auto& x = s[static_cast<std::size_t>(a)];
    double acc = 0.0;
    for (int c = 0; c < m; ++c) acc += d[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] *
                                       d[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
    acc /= kPi;
    for (int t = 1; t < points; ++t) {
      const auto& y = s[static_cast<std::size_t>((a + t) % points)];
      double sq = 0.0;
      for (int c = 0; c < m; ++c) {
        const double dv = x[static_cast<std::size_t>(c)] - y[static_cast<std::size_t>(c)];
        sq += dv * dv;
      }
      acc += sq * kern[static_cast<std::size_t>(t)];
    }
    const double factor = 0.5 * acc * h;
    for (int c = 0; c < m; ++c) {
      const double r = l[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] - x[static_cast<std::size_t>(c)] * factor;
      out.value = std::max(out.value, std::abs(r));
    }
  }
  return out;
}

/// div_{1/2} Omega_ik [phi] = 2 \int (u^i (-Delta)^{1/2}u^k - u^k (-Delta)^{1/2}u^i) phi, spectrally.
inline double noether_divergence_residual(const SphereValuedCircleFunction& u, int i, int k,
                                          const CircleFunction& phi) {
  detail::check_pair(u.components(), i, k);
  const auto& f = u.map();
  const auto lu = fractional_laplacian_circle(f, 0.5);
  return 2.0 * (triple_integral(f.component(i), lu.component(k), phi) -
                triple_integral(f.component(k), lu.component(i), phi));
}

/// Direct double integral \int\int Omega_ik(x,y) d_{1/2}phi(x,y) / |2 sin((x-y)/2)| dx dy
/// on a P x P grid. It equals -pi times noether_divergence_residual; the
/// integrand is smooth with diagonal limit -(u^i u^k' - u^k u^i') phi'.
inline double noether_divergence_quadrature(const SphereValuedCircleFunction& u, int i, int k,
                                            const CircleFunction& phi, int points = 512) {
  detail::check_pair(u.components(), i, k);
  const auto& f = u.map();
  const auto s = synthesize(f, points);
  const auto d = synthesize(derivative(f), points);
  const auto ps = synthesize(phi, points);
  const auto pd = synthesize(derivative(phi), points);
  const auto ui = static_cast<std::size_t>(i);
  const auto uk = static_cast<std::size_t>(k);
  const double h = kTwoPi / points;
  double total = 0.0;
  for (int a = 0; a < points; ++a) {
    const auto& x = s[static_cast<std::size_t>(a)];
    const auto& dx = d[static_cast<std::size_t>(a)];
    double row = -(x[ui] * dx[uk] - x[uk] * dx[ui]) * pd[static_cast<std::size_t>(a)][0];
    for (int t = 1; t < points; ++t) {
      const auto b = static_cast<std::size_t>((a + t) % points);
      const double sn = 2.0 * std::sin(0.5 * t * h);
      const double num = (x[ui] * s[b][uk] - x[uk] * s[b][ui]) *
                         (ps[static_cast<std::size_t>(a)][0] - ps[b][0]);
      row += num / (sn * sn);
    }
    total += row;
  }
  return total * h * h;
}

/// A_u[X] = 2 \int ((-Delta)^{1/2} u . u') X for any m; zero for all X iff u
/// is stationary for the half Dirichlet energy.
inline double stationarity_functional_A(const CircleFunction& u, const CircleFunction& x) {
  if (x.components() != 1) throw DomainError("stationarity_functional_A: scalar X expected");
  const auto lu = fractional_laplacian_circle(u, 0.5);
  const auto du = derivative(u);
  double acc = 0.0;
  for (int j = 0; j < u.components(); ++j) acc += triple_integral(lu.component(j), du.component(j), x);
  return 2.0 * acc;
}

}  // namespace fracnoether
