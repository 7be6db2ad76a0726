#pragma once

// Truncated Fourier series of R^m-valued functions on the circle R/2piZ.
//
// Coefficients follow u_hat(k) = (1/2pi) \int u(x) e^{-ikx} dx, so that
// u(x) = sum_k u_hat(k) e^{ikx} and ||u||_{L^2}^2 = 2pi sum_k |u_hat(k)|^2.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fracnoether/errors.hpp"

namespace fracnoether {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Point samples on a uniform circle grid: samples[i] is the m-vector at
/// theta_i = 2 pi i / P.
using CircleSamples = std::vector<std::vector<double>>;

/// Normalizes an angle to [0, 2pi).
inline double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

/// Wraps an angle difference to (-pi, pi].
inline double wrap_difference(double d) {
  double t = std::remainder(d, kTwoPi);
  if (t <= -kPi) t += kTwoPi;
  return t;
}

/// Real-valued trigonometric polynomial u: S^1 -> R^m of bandwidth N.
///
/// Storage is dense, k = -N..N per component. The reality constraint
/// u_hat(-k) = conj(u_hat(k)) is maintained by every mutator; the bandwidth
/// never changes after construction.
class CircleFunction {
 public:
  CircleFunction() : CircleFunction(0, 1) {}

  CircleFunction(int bandwidth, int components)
      : n_(bandwidth), m_(components) {
    if (bandwidth < 0) throw DomainError("bandwidth must be non-negative");
    if (components < 1) throw DomainError("need at least one component");
    coeffs_.assign(static_cast<std::size_t>(m_),
                   std::vector<Complex>(static_cast<std::size_t>(2 * n_ + 1)));
  }

  /// Builds from per-component coefficient rows (k ascending from -N).
  /// Throws InvalidInput when a row has the wrong length or the reality
  /// constraint is violated beyond `tol` (relative to the largest modulus).
  static CircleFunction from_coefficients(
      int bandwidth, const std::vector<std::vector<Complex>>& rows,
      double tol = 1e-12) {
    if (rows.empty()) throw InvalidInput("no components given");
    CircleFunction u(bandwidth, static_cast<int>(rows.size()));
    double scale = 0.0;
    for (const auto& row : rows) {
      if (row.size() != static_cast<std::size_t>(2 * bandwidth + 1))
        throw InvalidInput("coefficient row length must be 2N+1");
      for (const auto& c : row) scale = std::max(scale, std::abs(c));
    }
    const double limit = tol * std::max(scale, 1.0);
    for (int j = 0; j < u.m_; ++j) {
      const auto& row = rows[static_cast<std::size_t>(j)];
      for (int k = 0; k <= bandwidth; ++k) {
        const Complex pos = row[static_cast<std::size_t>(bandwidth + k)];
        const Complex neg = row[static_cast<std::size_t>(bandwidth - k)];
        if (std::abs(pos - std::conj(neg)) > limit)
          throw InvalidInput("coefficients violate the reality constraint");
        u.set_mode(j, k, k == 0 ? Complex(pos.real(), 0.0)
                                : 0.5 * (pos + std::conj(neg)));
      }
    }
    return u;
  }

  int bandwidth() const noexcept { return n_; }
  int components() const noexcept { return m_; }

  /// u_hat_j(k); zero for |k| > N.
  Complex coeff(int j, int k) const {
    if (k < -n_ || k > n_) return {0.0, 0.0};
    return coeffs_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k + n_)];
  }

  /// Sets u_hat_j(k) = c and u_hat_j(-k) = conj(c). For k = 0 the imaginary
  /// part must vanish.
  void set_mode(int j, int k, Complex c) {
    if (j < 0 || j >= m_) throw DomainError("component index out of range");
    if (k < -n_ || k > n_) throw BandwidthOverflow(std::abs(k), n_);
    if (k < 0) {
      k = -k;
      c = std::conj(c);
    }
    auto& row = coeffs_[static_cast<std::size_t>(j)];
    if (k == 0) {
      if (c.imag() != 0.0) throw DomainError("mean of a real function must be real");
      row[static_cast<std::size_t>(n_)] = c;
      return;
    }
    row[static_cast<std::size_t>(n_ + k)] = c;
    row[static_cast<std::size_t>(n_ - k)] = std::conj(c);
  }

  std::span<const Complex> row(int j) const {
    return coeffs_[static_cast<std::size_t>(j)];
  }

  /// Value of component j at angle theta.
  double value(int j, double theta) const {
    const auto& row = coeffs_[static_cast<std::size_t>(j)];
    double acc = row[static_cast<std::size_t>(n_)].real();
    for (int k = 1; k <= n_; ++k)
      acc += 2.0 * (row[static_cast<std::size_t>(n_ + k)] * std::polar(1.0, k * theta)).real();
    return acc;
  }

  std::vector<double> operator()(double theta) const {
    std::vector<double> out(static_cast<std::size_t>(m_));
    for (int j = 0; j < m_; ++j) out[static_cast<std::size_t>(j)] = value(j, theta);
    return out;
  }

  /// Single component as a scalar function.
  CircleFunction component(int j) const {
    CircleFunction out(n_, 1);
    out.coeffs_[0] = coeffs_.at(static_cast<std::size_t>(j));
    return out;
  }

  /// Same function represented with a larger (or equal) bandwidth.
  CircleFunction with_bandwidth(int bandwidth) const {
    if (bandwidth < n_) {
      for (int j = 0; j < m_; ++j)
        for (int k = bandwidth + 1; k <= n_; ++k)
          if (coeff(j, k) != Complex{}) throw BandwidthOverflow(n_, bandwidth);
    }
    CircleFunction out(bandwidth, m_);
    const int keep = std::min(bandwidth, n_);
    for (int j = 0; j < m_; ++j)
      for (int k = -keep; k <= keep; ++k)
        out.coeffs_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k + bandwidth)] =
            coeff(j, k);
    return out;
  }

  /// Largest |u_hat_j(k)| over all components and modes.
  double max_abs_coeff() const {
    double best = 0.0;
    for (const auto& row : coeffs_)
      for (const auto& c : row) best = std::max(best, std::abs(c));
    return best;
  }

  /// Sums and differences take the larger of the two bandwidths.
  CircleFunction& operator+=(const CircleFunction& other) { return accumulate(other, 1.0); }
  CircleFunction& operator-=(const CircleFunction& other) { return accumulate(other, -1.0); }
  CircleFunction& operator*=(double c) {
    for (auto& row : coeffs_)
      for (auto& z : row) z *= c;
    return *this;
  }

  friend CircleFunction operator+(CircleFunction a, const CircleFunction& b) { return a += b; }
  friend CircleFunction operator-(CircleFunction a, const CircleFunction& b) { return a -= b; }
  friend CircleFunction operator*(double c, CircleFunction a) { return a *= c; }
  friend CircleFunction operator*(CircleFunction a, double c) { return a *= c; }

  /// Applies a Fourier multiplier k -> w(k); w must satisfy w(-k) = conj(w(k))
  /// for the result to stay real.
  CircleFunction apply_multiplier(const std::function<Complex(int)>& w) const {
    CircleFunction out(n_, m_);
    for (int j = 0; j < m_; ++j) {
      out.set_mode(j, 0, Complex(coeff(j, 0).real() * w(0).real(), 0.0));
      for (int k = 1; k <= n_; ++k) out.set_mode(j, k, coeff(j, k) * w(k));
    }
    return out;
  }

  /// Applies a real even multiplier k -> w(|k|).
  CircleFunction apply_real_multiplier(const std::function<double(int)>& w) const {
    return apply_multiplier([&](int k) { return Complex(w(std::abs(k)), 0.0); });
  }

 private:
  CircleFunction& accumulate(const CircleFunction& other, double sign) {
    if (other.m_ != m_) throw DomainError("component mismatch between circle functions");
    if (other.n_ > n_) *this = with_bandwidth(other.n_);
    for (int j = 0; j < m_; ++j) {
      auto& row = coeffs_[static_cast<std::size_t>(j)];
      for (int k = -other.n_; k <= other.n_; ++k)
        row[static_cast<std::size_t>(k + n_)] += sign * other.coeff(j, k);
    }
    return *this;
  }

  int n_;
  int m_;
  std::vector<std::vector<Complex>> coeffs_;
};

/// Discrete Fourier analysis of samples on a uniform grid of P >= 2N+1 nodes.
inline CircleFunction analyze(const CircleSamples& samples, int bandwidth) {
  const auto p = static_cast<int>(samples.size());
  if (bandwidth < 0) throw DomainError("bandwidth must be non-negative");
  if (p < 2 * bandwidth + 1)
    throw GridTooSmall("analyze: " + std::to_string(p) + " samples cannot resolve N=" +
                       std::to_string(bandwidth) + " (need at least 2N+1)");
  const auto m = static_cast<int>(samples.front().size());
  if (m < 1) throw InvalidInput("samples have no components");
  for (const auto& s : samples)
    if (static_cast<int>(s.size()) != m) throw InvalidInput("ragged sample rows");

  CircleFunction u(bandwidth, m);
  for (int k = 0; k <= bandwidth; ++k) {
    std::vector<Complex> acc(static_cast<std::size_t>(m));
    for (int i = 0; i < p; ++i) {
      // exact reduction of the phase index keeps the twiddles accurate
      const long long idx = (static_cast<long long>(k) * i) % p;
      const Complex e = std::polar(1.0, -kTwoPi * static_cast<double>(idx) / p);
      for (int j = 0; j < m; ++j)
        acc[static_cast<std::size_t>(j)] +=
            samples[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * e;
    }
    for (int j = 0; j < m; ++j) {
      Complex c = acc[static_cast<std::size_t>(j)] / static_cast<double>(p);
      if (k == 0) c = Complex(c.real(), 0.0);
      u.set_mode(j, k, c);
    }
  }
  return u;
}

/// Samples u on the uniform grid theta_i = 2 pi i / P.
inline CircleSamples synthesize(const CircleFunction& u, int points) {
  if (points < 1) throw DomainError("need at least one sample point");
  CircleSamples out(static_cast<std::size_t>(points),
                    std::vector<double>(static_cast<std::size_t>(u.components())));
  const int n = u.bandwidth();
  for (int i = 0; i < points; ++i) {
    for (int j = 0; j < u.components(); ++j) {
      double acc = u.coeff(j, 0).real();
      for (int k = 1; k <= n; ++k) {
        const long long idx = (static_cast<long long>(k) * i) % points;
        const Complex e = std::polar(1.0, kTwoPi * static_cast<double>(idx) / points);
        acc += 2.0 * (u.coeff(j, k) * e).real();
      }
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
    }
  }
  return out;
}

/// Grid angle theta_i = 2 pi i / P.
inline double grid_angle(int i, int points) {
  return kTwoPi * static_cast<double>(i) / static_cast<double>(points);
}

/// Derivative of the given order.
inline CircleFunction derivative(const CircleFunction& u, int order = 1) {
  return u.apply_multiplier([order](int k) {
    Complex f(1.0, 0.0);
    for (int i = 0; i < order; ++i) f *= Complex(0.0, static_cast<double>(k));
    return f;
  });
}

/// Translation: returns theta -> u(theta + delta).
inline CircleFunction shift(const CircleFunction& u, double delta) {
  return u.apply_multiplier(
      [delta](int k) { return std::polar(1.0, static_cast<double>(k) * delta); });
}

/// Pointwise product. Either factor may be scalar (broadcast); otherwise the
/// product is componentwise. The result has bandwidth N_f + N_g; when
/// `max_bandwidth` is given and smaller than that, BandwidthOverflow reports
/// the required bandwidth instead of truncating.
inline CircleFunction multiply(const CircleFunction& f, const CircleFunction& g,
                               std::optional<int> max_bandwidth = std::nullopt) {
  const int need = f.bandwidth() + g.bandwidth();
  if (max_bandwidth && need > *max_bandwidth) throw BandwidthOverflow(need, *max_bandwidth);
  int m = 0;
  if (f.components() == g.components()) m = f.components();
  else if (f.components() == 1) m = g.components();
  else if (g.components() == 1) m = f.components();
  else throw DomainError("multiply: incompatible component counts");

  CircleFunction out(need, m);
  for (int j = 0; j < m; ++j) {
    const int jf = f.components() == 1 ? 0 : j;
    const int jg = g.components() == 1 ? 0 : j;
    for (int k = 0; k <= need; ++k) {
      Complex acc{};
      const int lo = std::max(-f.bandwidth(), k - g.bandwidth());
      const int hi = std::min(f.bandwidth(), k + g.bandwidth());
      for (int a = lo; a <= hi; ++a) acc += f.coeff(jf, a) * g.coeff(jg, k - a);
      if (k == 0) acc = Complex(acc.real(), 0.0);
      out.set_mode(j, k, acc);
    }
  }
  return out;
}

/// Pointwise Euclidean dot product sum_j f_j g_j as a scalar function.
inline CircleFunction dot(const CircleFunction& f, const CircleFunction& g) {
  if (f.components() != g.components()) throw DomainError("dot: component mismatch");
  CircleFunction acc(f.bandwidth() + g.bandwidth(), 1);
  for (int j = 0; j < f.components(); ++j) acc += multiply(f.component(j), g.component(j));
  return acc;
}

/// L^2 pairing \int_{S^1} f . g dtheta = 2 pi sum_j sum_k f_hat_j(k) conj(g_hat_j(k)).
inline double inner(const CircleFunction& f, const CircleFunction& g) {
  if (f.components() != g.components()) throw DomainError("inner: component mismatch");
  const int n = std::min(f.bandwidth(), g.bandwidth());
  double acc = 0.0;
  for (int j = 0; j < f.components(); ++j) {
    acc += (f.coeff(j, 0) * std::conj(g.coeff(j, 0))).real();
    for (int k = 1; k <= n; ++k) acc += 2.0 * (f.coeff(j, k) * std::conj(g.coeff(j, k))).real();
  }
  return kTwoPi * acc;
}

/// \int_{S^1} f g h dtheta for scalar f, g, h, computed as an exact
/// Fourier convolution sum (no intermediate truncation).
inline double triple_integral(const CircleFunction& f, const CircleFunction& g,
                              const CircleFunction& h) {
  if (f.components() != 1 || g.components() != 1 || h.components() != 1)
    throw DomainError("triple_integral expects scalar functions");
  Complex acc{};
  for (int a = -f.bandwidth(); a <= f.bandwidth(); ++a) {
    const Complex fa = f.coeff(0, a);
    if (fa == Complex{}) continue;
    for (int b = -g.bandwidth(); b <= g.bandwidth(); ++b) {
      const int c = -a - b;
      if (c < -h.bandwidth() || c > h.bandwidth()) continue;
      acc += fa * g.coeff(0, b) * h.coeff(0, c);
    }
  }
  return kTwoPi * acc.real();
}

/// Constant function with the given component values.
inline CircleFunction constant_function(std::span<const double> values, int bandwidth = 0) {
  CircleFunction u(bandwidth, static_cast<int>(values.size()));
  for (int j = 0; j < u.components(); ++j) u.set_mode(j, 0, Complex(values[static_cast<std::size_t>(j)], 0.0));
  return u;
}

/// Scalar cos(k theta) and sin(k theta) helpers.
inline CircleFunction cos_mode(int k, int bandwidth = -1) {
  CircleFunction u(bandwidth < 0 ? std::abs(k) : bandwidth, 1);
  if (k == 0) u.set_mode(0, 0, 1.0);
  else u.set_mode(0, std::abs(k), 0.5);
  return u;
}

inline CircleFunction sin_mode(int k, int bandwidth = -1) {
  CircleFunction u(bandwidth < 0 ? std::abs(k) : bandwidth, 1);
  if (k != 0) u.set_mode(0, std::abs(k), Complex(0.0, k > 0 ? -0.5 : 0.5));
  return u;
}

/// Stacks scalar functions into an R^m-valued function.
inline CircleFunction stack(std::span<const CircleFunction> parts) {
  if (parts.empty()) throw DomainError("stack: nothing to stack");
  int n = 0;
  for (const auto& p : parts) {
    if (p.components() != 1) throw DomainError("stack expects scalar parts");
    n = std::max(n, p.bandwidth());
  }
  CircleFunction out(n, static_cast<int>(parts.size()));
  for (int j = 0; j < out.components(); ++j)
    for (int k = 0; k <= parts[static_cast<std::size_t>(j)].bandwidth(); ++k)
      out.set_mode(j, k, parts[static_cast<std::size_t>(j)].coeff(0, k));
  return out;
}

inline CircleFunction stack(std::initializer_list<CircleFunction> parts) {
  std::vector<CircleFunction> v(parts);
  return stack(std::span<const CircleFunction>(v));
}

/// Writes samples on a P-point grid as CSV with header theta,u_1..u_m.
inline void write_samples_csv(std::ostream& os, const CircleFunction& u, int points) {
  const auto samples = synthesize(u, points);
  os << "theta";
  for (int j = 1; j <= u.components(); ++j) os << ",u_" << j;
  os << '\n';
  os.precision(17);
  for (int i = 0; i < points; ++i) {
    os << grid_angle(i, points);
    for (double v : samples[static_cast<std::size_t>(i)]) os << ',' << v;
    os << '\n';
  }
}

}  // namespace fracnoether
