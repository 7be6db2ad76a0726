#pragma once

// The 1/2-fractional Hopf differential v_+ . v_+ with v = (-Delta)^{1/2} u,
// and conformality diagnostics of the harmonic extension.

#include <cmath>
#include <ostream>
#include <vector>

#include "fracnoether/circle_function.hpp"
#include "fracnoether/errors.hpp"
#include "fracnoether/spectral_circle.hpp"

namespace fracnoether {

/// H(k), k = 1..2N, of a bandwidth-N map.
struct HopfCoefficients {
  int source_bandwidth = 0;
  std::vector<Complex> values;  // values[k-1] = H(k)

  int size() const { return static_cast<int>(values.size()); }
  Complex operator()(int k) const {
    if (k < 1 || k > size()) return {0.0, 0.0};
    return values[static_cast<std::size_t>(k - 1)];
  }

  /// H(theta) = sum_k H(k) e^{ik theta}.
  Complex evaluate(double theta) const {
    Complex acc{};
    for (int k = 1; k <= size(); ++k) acc += (*this)(k) * std::polar(1.0, k * theta);
    return acc;
  }
};

/// H(k) = sum_{a+b=k, a,b>=1} a u_hat(a) . b u_hat(b) with the bilinear
/// (non-conjugated) dot product over components.
inline HopfCoefficients hopf_coefficients(const CircleFunction& u) {
  const int n = u.bandwidth();
  HopfCoefficients h;
  h.source_bandwidth = n;
  h.values.assign(static_cast<std::size_t>(2 * n), Complex{});
  for (int k = 2; k <= 2 * n; ++k) {
    Complex acc{};
    for (int a = std::max(1, k - n); a <= std::min(n, k - 1); ++a) {
      const int b = k - a;
      for (int j = 0; j < u.components(); ++j)
        acc += static_cast<double>(a) * u.coeff(j, a) * static_cast<double>(b) * u.coeff(j, b);
    }
    h.values[static_cast<std::size_t>(k - 1)] = acc;
  }
  return h;
}

/// (sum_k |H(k)|^2 (1+k^2)^{-3})^{1/2}.
inline double hopf_hminus3_norm(const HopfCoefficients& h) {
  double acc = 0.0;
  for (int k = 1; k <= h.size(); ++k) acc += std::norm(h(k)) * std::pow(1.0 + double(k) * k, -3.0);
  return std::sqrt(acc);
}

/// Bound on hopf_hminus3_norm^2 in terms of [u]_{H^{1/2}}: (pi^2/3) [u]^4.
inline double hopf_hminus3_bound(const CircleFunction& u) {
  const double s = seminorm(u, SeminormKind::sobolev, 0.5).value;
  return kPi * kPi / 3.0 * s * s * s * s;
}

struct StationarityVerdict {
  bool pass = false;
  double max_abs = 0.0;
  int argmax = 0;  // k attaining max |H(k)| (0 when H is empty)
  double tau = 0.0;
};

/// Default threshold 1e-10, scaled by [u]^2_{H^{1/2}} when that exceeds 1.
inline double default_hopf_tolerance(const CircleFunction& u) {
  const double s = seminorm(u, SeminormKind::sobolev, 0.5).value;
  return 1e-10 * std::max(1.0, s * s);
}

inline StationarityVerdict is_stationary(const CircleFunction& u, double tau) {
  if (!(tau > 0.0)) throw DomainError("is_stationary: tau must be positive");
  const auto h = hopf_coefficients(u);
  StationarityVerdict v;
  v.tau = tau;
  for (int k = 1; k <= h.size(); ++k)
    if (std::abs(h(k)) > v.max_abs) {
      v.max_abs = std::abs(h(k));
      v.argmax = k;
    }
  v.pass = v.max_abs <= tau;
  return v;
}

inline StationarityVerdict is_stationary(const CircleFunction& u) {
  return is_stationary(u, default_hopf_tolerance(u));
}

struct ConformalityReport {
  double orthogonality = 0.0;  // sup |d_theta u~ . d_r u~|
  double modulus = 0.0;        // sup | |d_theta u~|/r - |d_r u~| |
  std::vector<double> radii;
  std::vector<double> angles;
};

inline ConformalityReport conformality_report(const CircleFunction& u, const std::vector<double>& radii,
                                              const std::vector<double>& angles) {
  ConformalityReport rep;
  rep.radii = radii;
  rep.angles = angles;
  const int m = u.components();
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("conformality_report: radius must lie in (0,1)");
    const auto dt = derivative(poisson_slice(u, r));
    const auto dr = poisson_radial_derivative(u, r);
    for (double t : angles) {
      const auto a = dt(t);
      const auto b = dr(t);
      double dot = 0.0, na = 0.0, nb = 0.0;
      for (int j = 0; j < m; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        dot += a[jj] * b[jj];
        na += a[jj] * a[jj];
        nb += b[jj] * b[jj];
      }
      rep.orthogonality = std::max(rep.orthogonality, std::abs(dot));
      rep.modulus = std::max(rep.modulus, std::abs(std::sqrt(na) / r - std::sqrt(nb)));
    }
  }
  return rep;
}

/// CSV export with header k,re,im.
inline void write_hopf_csv(std::ostream& os, const HopfCoefficients& h) {
  os << "k,re,im\n";
  os.precision(17);
  for (int k = 1; k <= h.size(); ++k) os << k << ',' << h(k).real() << ',' << h(k).imag() << '\n';
}

}  // namespace fracnoether
