#pragma once

// Compactly supported functions on the real line sampled on a uniform grid,
// and smooth test functions.

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "fracnoether/errors.hpp"

namespace fracnoether {

/// u: R -> R^m given by samples at x_i = a + i h, i = 0..n, with u = 0
/// outside [a, b].
class SampledLineFunction {
 public:
  SampledLineFunction(double a, double b, std::vector<std::vector<double>> samples)
      : a_(a), b_(b), samples_(std::move(samples)) {
    if (!(a < b)) throw DomainError("support interval needs a < b");
    if (samples_.size() < 2) throw GridTooSmall("need at least two samples");
    m_ = static_cast<int>(samples_.front().size());
    if (m_ < 1) throw InvalidInput("samples have no components");
    for (const auto& s : samples_) {
      if (static_cast<int>(s.size()) != m_) throw InvalidInput("ragged sample rows");
      for (double v : s)
        if (!std::isfinite(v)) throw InvalidInput("non-finite sample");
    }
    h_ = (b_ - a_) / static_cast<double>(intervals());
  }

  /// Samples f on n intervals of [a, b].
  static SampledLineFunction sample(double a, double b, int intervals,
                                    const std::function<std::vector<double>(double)>& f) {
    if (intervals < 1) throw GridTooSmall("need at least one interval");
    std::vector<std::vector<double>> s(static_cast<std::size_t>(intervals) + 1);
    for (int i = 0; i <= intervals; ++i) s[static_cast<std::size_t>(i)] = f(node(a, b, intervals, i));
    return {a, b, std::move(s)};
  }

  static SampledLineFunction sample_scalar(double a, double b, int intervals,
                                           const std::function<double(double)>& f) {
    return sample(a, b, intervals, [&](double x) { return std::vector<double>{f(x)}; });
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double h() const noexcept { return h_; }
  int components() const noexcept { return m_; }
  int intervals() const noexcept { return static_cast<int>(samples_.size()) - 1; }
  const std::vector<std::vector<double>>& samples() const noexcept { return samples_; }

  double x(int i) const { return node(a_, b_, intervals(), i); }
  double sample(int i, int j) const {
    return samples_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  /// Piecewise-cubic interpolant (4-point Lagrange, one-sided at the ends);
  /// zero outside [a, b].
  double interpolate(int j, double y) const {
    if (y < a_ || y > b_) return 0.0;
    const int n = intervals();
    if (n < 3) {
      const double t = (y - a_) / h_;
      const int i = std::min(static_cast<int>(t), n - 1);
      const double f = t - i;
      return (1.0 - f) * sample(i, j) + f * sample(i + 1, j);
    }
    const int cell = std::clamp(static_cast<int>((y - a_) / h_), 0, n - 1);
    const int i0 = std::clamp(cell - 1, 0, n - 3);
    const double t = (y - a_) / h_ - i0;
    double acc = 0.0;
    for (int p = 0; p < 4; ++p) {
      double w = 1.0;
      for (int q = 0; q < 4; ++q)
        if (q != p) w *= (t - q) / static_cast<double>(p - q);
      acc += w * sample(i0 + p, j);
    }
    return acc;
  }

  /// Uniform rescaling x -> lambda x of the argument: returns y -> u(lambda y)
  /// on [a/lambda, b/lambda] with the same samples.
  SampledLineFunction dilated(double lambda) const {
    if (!(lambda > 0.0)) throw DomainError("dilation factor must be positive");
    return {a_ / lambda, b_ / lambda, samples_};
  }

  /// Returns y -> u(y - d) on [a+d, b+d].
  SampledLineFunction translated(double d) const { return {a_ + d, b_ + d, samples_}; }

 private:
  static double node(double a, double b, int n, int i) {
    // endpoint-exact node placement
    return i == n ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
  }

  double a_;
  double b_;
  double h_ = 0.0;
  int m_ = 1;
  std::vector<std::vector<double>> samples_;
};

/// Smooth compactly supported scalar test function.
struct TestFunction {
  double lo;
  double hi;
  std::function<double(double)> value;
  std::function<double(double)> derivative;

  double operator()(double x) const { return (x <= lo || x >= hi) ? 0.0 : value(x); }
};

/// exp(-1/(1-r^2)) bump with r = (x-c)/radius, scaled by amplitude.
inline TestFunction bump(double center, double radius, double amplitude = 1.0) {
  if (!(radius > 0.0)) throw DomainError("bump radius must be positive");
  TestFunction f;
  f.lo = center - radius;
  f.hi = center + radius;
  f.value = [=](double x) {
    const double r = (x - center) / radius;
    if (std::abs(r) >= 1.0) return 0.0;
    return amplitude * std::exp(-1.0 / (1.0 - r * r));
  };
  f.derivative = [=](double x) {
    const double r = (x - center) / radius;
    if (std::abs(r) >= 1.0) return 0.0;
    const double q = 1.0 - r * r;
    return amplitude * std::exp(-1.0 / q) * (-2.0 * r / (q * q)) / radius;
  };
  return f;
}

/// Samples a test function on [a, b] with the given number of intervals.
inline SampledLineFunction sample_test_function(const TestFunction& f, double a, double b,
                                                int intervals) {
  return SampledLineFunction::sample_scalar(a, b, intervals, [&](double x) { return f(x); });
}

/// CSV export with header x,u_1..u_m.
inline void write_samples_csv(std::ostream& os, const SampledLineFunction& u) {
  os << 'x';
  for (int j = 1; j <= u.components(); ++j) os << ",u_" << j;
  os << '\n';
  os.precision(17);
  for (int i = 0; i <= u.intervals(); ++i) {
    os << u.x(i);
    for (int j = 0; j < u.components(); ++j) os << ',' << u.sample(i, j);
    os << '\n';
  }
}

}  // namespace fracnoether
