#pragma once

// Dirichlet problem (-Delta)^{1/2} u = f(u) on (a,b), u = 0 outside: a
// weighted-Chebyshev collocation solver, boundary limits of u^2/dist, exterior
// blow-up of (-Delta)^{1/2} u, and the dilation/translation identities.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "fracnoether/circle_function.hpp"
#include "fracnoether/errors.hpp"
#include "fracnoether/frac_line.hpp"
#include "fracnoether/line_function.hpp"
#include "fracnoether/nonlinearity.hpp"
#include "fracnoether/spectral_circle.hpp"

namespace fracnoether {

namespace detail {

// U_0..U_{n-1} at t
inline void chebyshev_u(double t, std::vector<double>& out) {
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() > 1) out[1] = 2.0 * t;
  for (std::size_t k = 2; k < out.size(); ++k) out[k] = 2.0 * t * out[k - 1] - out[k - 2];
}

}  // namespace detail

/// u(x) = sum_n c_n sqrt(1-t^2) U_n(t), t = (x - mid)/L, L = (b-a)/2.
class ChebyshevSolution {
 public:
  ChebyshevSolution(double a, double b, std::vector<double> coeffs, Nonlinearity f)
      : a_(a), b_(b), coeffs_(std::move(coeffs)), f_(std::move(f)) {
    if (!(a < b)) throw DomainError("ChebyshevSolution: need a < b");
    if (coeffs_.empty()) throw InvalidInput("ChebyshevSolution: no coefficients");
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  int M() const noexcept { return static_cast<int>(coeffs_.size()); }
  double half_length() const noexcept { return 0.5 * (b_ - a_); }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  const Nonlinearity& f() const noexcept { return f_; }

  double value(double x) const {
    if (x <= a_ || x >= b_) return 0.0;
    return at_distance(x - a_ <= b_ - x ? -1 : 1, std::min(x - a_, b_ - x));
  }
  double operator()(double x) const { return value(x); }

  /// u at distance d > 0 inside from the end `side` (-1 for a, +1 for b);
  /// avoids the cancellation in 1 - t^2 near the ends.
  double at_distance(int side, double d) const {
    const double L = half_length();
    const double e = d / L;  // 1 -+ t
    const double t = side < 0 ? -1.0 + e : 1.0 - e;
    if (!(e > 0.0 && e < 2.0)) return 0.0;
    std::vector<double> u(coeffs_.size());
    detail::chebyshev_u(t, u);
    double acc = 0.0;
    for (std::size_t n = 0; n < u.size(); ++n) acc += coeffs_[n] * u[n];
    return std::sqrt(e * (2.0 - e)) * acc;
  }

  /// Spectral (-Delta)^{1/2} u at x in (a,b): sum_n c_n (n+1) U_n(t) / L.
  double half_laplacian(double x) const {
    if (x <= a_ || x >= b_) throw DomainError("half_laplacian: x must lie in (a,b)");
    std::vector<double> u(coeffs_.size());
    detail::chebyshev_u(to_t(x), u);
    double acc = 0.0;
    for (std::size_t n = 0; n < u.size(); ++n) acc += coeffs_[n] * static_cast<double>(n + 1) * u[n];
    return acc / half_length();
  }

  /// max over collocation nodes of |(-Delta)^{1/2} u - f(u)|.
  double collocation_residual() const {
    double r = 0.0;
    for (double t : nodes(M())) {
      const double x = to_x(t);
      r = std::max(r, std::abs(half_laplacian(x) - f_(value(x))));
    }
    return r;
  }

  /// Closed-form lim u^2/dist at a (side -1) or b (side +1).
  double closed_form_limit(int side) const {
    double acc = 0.0;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      const double sign = (side < 0 && n % 2 == 1) ? -1.0 : 1.0;
      acc += sign * static_cast<double>(n + 1) * coeffs_[n];
    }
    return 2.0 * acc * acc / half_length();
  }

  ChebyshevSolution translated(double d) const { return {a_ + d, b_ + d, coeffs_, f_}; }

  SampledLineFunction sampled(int intervals) const {
    return SampledLineFunction::sample_scalar(a_, b_, intervals, [&](double x) { return value(x); });
  }

  double to_t(double x) const { return (x - 0.5 * (a_ + b_)) / half_length(); }
  double to_x(double t) const { return 0.5 * (a_ + b_) + half_length() * t; }

  /// Chebyshev-Gauss collocation nodes cos((2i+1) pi / 2M).
  static std::vector<double> nodes(int m) {
    std::vector<double> t(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) t[static_cast<std::size_t>(i)] = std::cos((2.0 * i + 1.0) * kPi / (2.0 * m));
    return t;
  }

 private:
  double a_;
  double b_;
  std::vector<double> coeffs_;
  Nonlinearity f_;
};

struct EigenrelationCheck {
  int max_degree = 0;
  int probes = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Compares fraclap_line_pv of sqrt(1-t^2) U_n on (-1,1) against (n+1) U_n
/// at `probes` points of [-0.9, 0.9] for n = 0..max_degree.
inline EigenrelationCheck validate_eigenrelation(int max_degree = 8, int probes = 10, double tol = 1e-3,
                                                 int intervals = 4096) {
  EigenrelationCheck c;
  c.max_degree = max_degree;
  c.probes = probes;
  c.tolerance = tol;
  std::vector<double> u(static_cast<std::size_t>(max_degree) + 1);
  for (int n = 0; n <= max_degree; ++n) {
    const auto w = SampledLineFunction::sample_scalar(-1.0, 1.0, intervals, [&](double t) {
      detail::chebyshev_u(t, u);
      return std::sqrt(std::max(0.0, (1.0 - t) * (1.0 + t))) * u[static_cast<std::size_t>(n)];
    });
    for (int p = 0; p < probes; ++p) {
      const double t = probes == 1 ? 0.0 : -0.9 + 1.8 * p / (probes - 1.0);
      detail::chebyshev_u(t, u);
      const double expect = (n + 1.0) * u[static_cast<std::size_t>(n)];
      const double got = fraclap_line_pv(w, 0.5, t)[0];
      c.max_error = std::max(c.max_error, std::abs(got - expect));
    }
  }
  c.pass = c.max_error <= tol;
  return c;
}

/// The gate run once per process with its default settings.
inline const EigenrelationCheck& eigenrelation_gate() {
  static const EigenrelationCheck check = validate_eigenrelation();
  return check;
}

struct SolverOptions {
  double tolerance = 1e-12;
  int max_iterations = 50;
};

/// Newton iteration on the collocation equations
/// sum_n c_n (n+1) U_n(t_i)/L = f(sum_n c_n w_n(t_i)), analytic Jacobian.
inline ChebyshevSolution chebyshev_solve(const Nonlinearity& f, double a, double b, int m,
                                         const SolverOptions& opt = {}) {
  if (m < 4) throw DomainError("chebyshev_solve: need M >= 4");
  if (!(a < b)) throw DomainError("chebyshev_solve: need a < b");
  if (const auto& gate = eigenrelation_gate(); !gate.pass)
    throw ValidationError("chebyshev_solve: eigenrelation check failed, max error " +
                          std::to_string(gate.max_error));
  const double L = 0.5 * (b - a);
  const auto t = ChebyshevSolution::nodes(m);
  Eigen::MatrixXd A(m, m), W(m, m);
  std::vector<double> u(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double ti = t[static_cast<std::size_t>(i)];
    detail::chebyshev_u(ti, u);
    const double root = std::sqrt((1.0 - ti) * (1.0 + ti));
    for (int n = 0; n < m; ++n) {
      A(i, n) = (n + 1.0) * u[static_cast<std::size_t>(n)] / L;
      W(i, n) = root * u[static_cast<std::size_t>(n)];
    }
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(m);
  for (int it = 0; it <= opt.max_iterations; ++it) {
    const Eigen::VectorXd uv = W * c;
    Eigen::VectorXd r = A * c;
    Eigen::MatrixXd J = A;
    for (int i = 0; i < m; ++i) {
      r(i) -= f(uv(i));
      J.row(i) -= f.derivative(uv(i)) * W.row(i);
    }
    if (!r.allFinite()) break;
    if (r.lpNorm<Eigen::Infinity>() <= opt.tolerance)
      return {a, b, std::vector<double>(c.data(), c.data() + m), f};
    c -= J.fullPivLu().solve(r);
  }
  throw ConvergenceError("chebyshev_solve: Newton iteration did not converge");
}

struct BoundaryLimits {
  double ell_a = 0.0;
  double ell_b = 0.0;
  double alpha_a = 0.0;
  double alpha_b = 0.0;
  // diagnostics
  double spread_a = 0.0;  // |last two diagonal entries| of the Richardson table
  double spread_b = 0.0;
  double slope_a = 0.0;   // d/d(dist) of u^2/dist at the end, from the same table
  double slope_b = 0.0;
  std::vector<double> distances_a;
  std::vector<double> distances_b;
};

namespace detail {

struct Extrapolated {
  double value;
  double spread;
  double slope;
};

// q sampled at d_0 > d_1 > ... with d_{k+1} = d_k / 2; Richardson in powers of d.
inline Extrapolated richardson_halving(const std::vector<double>& d, const std::vector<double>& q) {
  const std::size_t K = q.size();
  std::vector<std::vector<double>> T(K);
  for (std::size_t k = 0; k < K; ++k) {
    T[k].push_back(q[k]);
    for (std::size_t j = 1; j <= k; ++j) {
      const double f = std::ldexp(1.0, static_cast<int>(j)) - 1.0;
      T[k].push_back(T[k][j - 1] + (T[k][j - 1] - T[k - 1][j - 1]) / f);
    }
  }
  Extrapolated e{T[K - 1][K - 1], K > 1 ? std::abs(T[K - 1][K - 1] - T[K - 1][K - 2]) : 0.0, 0.0};
  // slope from the quadratic through the three smallest distances
  if (K >= 3) {
    Eigen::Matrix3d V;
    Eigen::Vector3d y;
    for (int r = 0; r < 3; ++r) {
      const double dd = d[K - 3 + static_cast<std::size_t>(r)];
      V.row(r) << 1.0, dd, dd * dd;
      y(r) = q[K - 3 + static_cast<std::size_t>(r)];
    }
    e.slope = V.fullPivLu().solve(y)(1);
  }
  return e;
}

inline void finish_limits(BoundaryLimits& bl, const Extrapolated& ea, const Extrapolated& eb,
                          double spread_tol) {
  bl.ell_a = ea.value;
  bl.ell_b = eb.value;
  bl.spread_a = ea.spread;
  bl.spread_b = eb.spread;
  bl.slope_a = ea.slope;
  bl.slope_b = eb.slope;
  if (!std::isfinite(bl.ell_a) || !std::isfinite(bl.ell_b) ||
      bl.spread_a > spread_tol * std::max(1.0, std::abs(bl.ell_a)) ||
      bl.spread_b > spread_tol * std::max(1.0, std::abs(bl.ell_b)))
    throw ConvergenceError("boundary_limits: extrapolation of u^2/dist did not settle; u^2 may not be C^2 up to the boundary");
  // tiny negative values are extrapolation noise
  bl.alpha_a = std::sqrt(std::max(0.0, bl.ell_a));
  bl.alpha_b = std::sqrt(std::max(0.0, bl.ell_b));
}

}  // namespace detail

inline constexpr double kDefaultSpreadTolerance = 1e-6;

/// Limits of u^2/(x-a) and u^2/(b-x), Richardson-extrapolated from 8 distances
/// halving from min((b-a)/16, (b-a)/M^2).
inline BoundaryLimits boundary_limits(const ChebyshevSolution& u, double spread_tol = kDefaultSpreadTolerance) {
  BoundaryLimits bl;
  const double width = u.b() - u.a();
  const double d0 = std::min(width / 16.0, width / (double(u.M()) * u.M()));
  std::vector<double> qa, qb;
  for (int k = 0; k < 8; ++k) {
    const double d = std::ldexp(d0, -k);
    bl.distances_a.push_back(d);
    const double va = u.at_distance(-1, d);
    const double vb = u.at_distance(1, d);
    qa.push_back(va * va / d);
    qb.push_back(vb * vb / d);
  }
  bl.distances_b = bl.distances_a;
  detail::finish_limits(bl, detail::richardson_halving(bl.distances_a, qa),
                        detail::richardson_halving(bl.distances_b, qb), spread_tol);
  return bl;
}

/// Same for sampled data, on the grid distances h 2^k (largest first), |u|^2
/// summed over components.
inline BoundaryLimits boundary_limits(const SampledLineFunction& u, double spread_tol = kDefaultSpreadTolerance) {
  const int n = u.intervals();
  int levels = 0;
  while ((2 << levels) <= n / 4 && levels < 7) ++levels;  // 2^levels <= n/8
  if (levels < 2) throw GridTooSmall("boundary_limits: need at least 32 intervals");
  BoundaryLimits bl;
  auto sq = [&](int i) {
    double acc = 0.0;
    for (int j = 0; j < u.components(); ++j) acc += u.sample(i, j) * u.sample(i, j);
    return acc;
  };
  std::vector<double> qa, qb;
  for (int k = levels; k >= 0; --k) {
    const int i = 1 << k;
    const double d = i * u.h();
    bl.distances_a.push_back(d);
    qa.push_back(sq(i) / d);
    qb.push_back(sq(n - i) / d);
  }
  bl.distances_b = bl.distances_a;
  detail::finish_limits(bl, detail::richardson_halving(bl.distances_a, qa),
                        detail::richardson_halving(bl.distances_b, qb), spread_tol);
  return bl;
}

enum class Side { a, b };

struct FitWindow {
  double dmin;
  double dmax;
  int samples = 12;
};

struct ExteriorAsymptotics {
  Side side = Side::b;
  FitWindow window{0.0, 0.0};
  double alpha = 0.0;        // (-Delta)^{1/2}u ~ -(alpha/2) dist^{-1/2}
  double remainder = 0.0;    // sup |(-Delta)^{1/2}u + (alpha/2) dist^{-1/2}| over the window
  double fit_residual = 0.0; // rms misfit of the sqrt model, in units of (-Delta)^{1/2}u
  double log_residual = 0.0; // same for P + Q log(dist) + R dist
  double log_coefficient = 0.0;
  bool log_growth = false;
};

/// Default window: dist in [1e-4, 1e-2] (b-a)/2, 12 geometric samples.
inline FitWindow default_fit_window(const SampledLineFunction& u) {
  const double L = 0.5 * (u.b() - u.a());
  return {1e-4 * L, 1e-2 * L, 12};
}

/// Fits sqrt(dist) (-Delta)^{1/2}u ~ A + B sqrt(dist) + C dist on the
/// exterior side and reports alpha = -2A. When a P + Q log(dist) + R dist
/// model explains the data better the log-growth flag is raised instead of
/// throwing on a poor sqrt fit.
inline ExteriorAsymptotics exterior_asymptotics(const SampledLineFunction& u, Side side, FitWindow window,
                                                double residual_tol = 1e-3) {
  if (!(window.dmin > 0.0 && window.dmax > window.dmin) || window.samples < 4)
    throw DomainError("exterior_asymptotics: bad fit window");
  const int K = window.samples;
  std::vector<double> d(static_cast<std::size_t>(K)), v(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) {
    const double dk = window.dmin * std::pow(window.dmax / window.dmin, k / (K - 1.0));
    const double x = side == Side::b ? u.b() + dk : u.a() - dk;
    d[static_cast<std::size_t>(k)] = dk;
    v[static_cast<std::size_t>(k)] = fraclap_line_pv(u, 0.5, x)[0];
  }
  Eigen::MatrixXd S(K, 3), G(K, 3);
  Eigen::VectorXd ys(K), yl(K);
  for (int k = 0; k < K; ++k) {
    const double dk = d[static_cast<std::size_t>(k)], r = std::sqrt(dk);
    S.row(k) << 1.0, r, dk;
    ys(k) = r * v[static_cast<std::size_t>(k)];
    G.row(k) << 1.0, std::log(dk), dk;
    yl(k) = v[static_cast<std::size_t>(k)];
  }
  const Eigen::Vector3d cs = S.colPivHouseholderQr().solve(ys);
  const Eigen::Vector3d cl = G.colPivHouseholderQr().solve(yl);
  ExteriorAsymptotics ex;
  ex.side = side;
  ex.window = window;
  ex.alpha = -2.0 * cs(0);
  ex.log_coefficient = cl(1);
  double scale = 0.0, ss = 0.0, sl = 0.0;
  for (int k = 0; k < K; ++k) {
    const double dk = d[static_cast<std::size_t>(k)], vk = v[static_cast<std::size_t>(k)];
    scale = std::max(scale, std::abs(vk));
    const double es = (ys(k) - S.row(k).dot(cs)) / std::sqrt(dk);
    const double el = yl(k) - G.row(k).dot(cl);
    ss += es * es;
    sl += el * el;
    ex.remainder = std::max(ex.remainder, std::abs(vk + 0.5 * ex.alpha / std::sqrt(dk)));
  }
  ex.fit_residual = std::sqrt(ss / K);
  ex.log_residual = std::sqrt(sl / K);
  ex.log_growth = ex.log_residual < ex.fit_residual;
  if (!ex.log_growth && ex.fit_residual > residual_tol * std::max(1.0, scale))
    throw QuadratureError("exterior_asymptotics: fit residual above threshold");
  return ex;
}

inline ExteriorAsymptotics exterior_asymptotics(const SampledLineFunction& u, Side side) {
  return exterior_asymptotics(u, side, default_fit_window(u));
}

struct PohozaevReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // |lhs - rhs|
};

namespace detail {

// \int_a^b u'(x) g(x) (-Delta)^{1/2}u(x) dx with x = mid + L cos(theta): the
// integrand becomes a cosine polynomial of degree <= 2M+1 in theta, so the
// trapezoid rule on [0, pi] with more than 2M+1 panels is exact.
template <class Weight>
double chebyshev_lhs(const ChebyshevSolution& u, Weight g) {
  const int m = u.M();
  const int panels = 4 * m + 16;
  const double L = u.half_length();
  std::vector<double> U(static_cast<std::size_t>(m));
  double acc = 0.0;
  for (int p = 0; p <= panels; ++p) {
    const double th = kPi * p / panels;
    const double t = std::cos(th);
    detail::chebyshev_u(t, U);
    double du = 0.0, lap = 0.0;
    for (int n = 0; n < m; ++n) {
      const double c = u.coeffs()[static_cast<std::size_t>(n)];
      du += c * (n + 1.0) * std::cos((n + 1.0) * th);
      lap += c * (n + 1.0) * U[static_cast<std::size_t>(n)];
    }
    const double w = (p == 0 || p == panels) ? 0.5 : 1.0;
    acc += w * du * g(u.to_x(t)) * lap / L;
  }
  // dx = -L sin(theta) d theta and u' dx = du/dtheta d theta, theta from pi to 0
  return -acc * kPi / panels;
}

inline PohozaevReport make_report(double lhs, double rhs) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) throw QuadratureError("pohozaev: non-finite quadrature");
  return {lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace detail

/// \int u' x (-Delta)^{1/2}u  versus  (pi/8)(l_a a - l_b b).
inline PohozaevReport pohozaev_dilation_residual(const ChebyshevSolution& u) {
  const auto bl = boundary_limits(u);
  return detail::make_report(detail::chebyshev_lhs(u, [](double x) { return x; }),
                             kPi / 8.0 * (bl.ell_a * u.a() - bl.ell_b * u.b()));
}

/// \int u' (-Delta)^{1/2}u  versus  (pi/8)(l_a - l_b).
inline PohozaevReport pohozaev_translation_residual(const ChebyshevSolution& u) {
  const auto bl = boundary_limits(u);
  return detail::make_report(detail::chebyshev_lhs(u, [](double) { return 1.0; }),
                             kPi / 8.0 * (bl.ell_a - bl.ell_b));
}

namespace detail {

// Sampled scalar u solving (-Delta)^{1/2}u = f(u). The interior
// [a + delta, b - delta] uses 4th-order finite differences for u' and the
// composite Simpson rule; each boundary layer of width delta uses the model
// u = sqrt(d (l + l' d)) with l, l' from boundary_limits, integrated in
// sigma = sqrt(d) where it is smooth.
template <class Weight>
double sampled_lhs(const SampledLineFunction& u, const Nonlinearity& f, const BoundaryLimits& bl,
                   int layer_cells, Weight g) {
  const int n = u.intervals();
  if (u.components() != 1) throw DomainError("pohozaev: scalar u expected");
  if (n < 2 * layer_cells + 8) throw GridTooSmall("pohozaev: too few intervals for the boundary layer");
  const double h = u.h();
  auto val = [&](int i) { return u.sample(i, 0); };
  auto du = [&](int i) { return (val(i - 2) - 8.0 * val(i - 1) + 8.0 * val(i + 1) - val(i + 2)) / (12.0 * h); };
  auto integrand = [&](int i) { return du(i) * g(u.x(i)) * f(val(i)); };

  const int lo = layer_cells, hi = n - layer_cells;
  double inner = 0.0;
  int cells = hi - lo;
  int end = hi;
  if (cells % 2 == 1) {  // Simpson 3/8 on the last three cells
    end = hi - 3;
    inner += 3.0 * h / 8.0 * (integrand(end) + 3.0 * integrand(end + 1) + 3.0 * integrand(end + 2) + integrand(hi));
    cells -= 3;
  }
  double s = integrand(lo) + integrand(end);
  for (int i = lo + 1; i < end; ++i) s += (i - lo) % 2 == 1 ? 4.0 * integrand(i) : 2.0 * integrand(i);
  inner += s * h / 3.0;

  const double delta = layer_cells * h;
  boost::math::quadrature::gauss<double, 20> gl;
  auto layer = [&](double ell, double slope, double sign, double edge) {
    // d -> u = sigma sqrt(ell + slope sigma^2); u' dx = +-(du/dsigma) dsigma
    return gl.integrate(
        [&](double sig) {
          const double q = std::max(0.0, ell + slope * sig * sig);
          const double root = std::sqrt(q);
          const double uu = sig * root;
          const double dud = root + (q > 0.0 ? slope * sig * sig / root : 0.0);
          return sign * dud * g(edge + sign * sig * sig) * f(uu);
        },
        0.0, std::sqrt(delta));
  };
  // at a, x = a + d and u' dx = du; at b, x = b - d and u' dx = -du
  const double la = layer(bl.ell_a, bl.slope_a, 1.0, u.a());
  const double lb = layer(bl.ell_b, bl.slope_b, -1.0, u.b());
  return inner + la + lb;
}

}  // namespace detail

inline constexpr int kDefaultLayerCells = 10;

/// Sampled counterpart; (-Delta)^{1/2}u is replaced by f(u).
inline PohozaevReport pohozaev_dilation_residual(const SampledLineFunction& u, const Nonlinearity& f,
                                                 int layer_cells = kDefaultLayerCells) {
  const auto bl = boundary_limits(u);
  return detail::make_report(detail::sampled_lhs(u, f, bl, layer_cells, [](double x) { return x; }),
                             kPi / 8.0 * (bl.ell_a * u.a() - bl.ell_b * u.b()));
}

inline PohozaevReport pohozaev_translation_residual(const SampledLineFunction& u, const Nonlinearity& f,
                                                    int layer_cells = kDefaultLayerCells) {
  const auto bl = boundary_limits(u);
  return detail::make_report(detail::sampled_lhs(u, f, bl, layer_cells, [](double) { return 1.0; }),
                             kPi / 8.0 * (bl.ell_a - bl.ell_b));
}

struct ShiftCovariance {
  double shift = 0.0;
  double rhs_original = 0.0;
  double rhs_shifted = 0.0;
  double rhs_translation = 0.0;
  double defect = 0.0;  // |rhs_shifted - rhs_original - shift * rhs_translation|
};

/// Moving u to (a+d, b+d) changes the dilation rhs by d times the
/// translation rhs.
inline ShiftCovariance shift_covariance(const ChebyshevSolution& u, double d) {
  ShiftCovariance c;
  c.shift = d;
  c.rhs_original = pohozaev_dilation_residual(u).rhs;
  c.rhs_shifted = pohozaev_dilation_residual(u.translated(d)).rhs;
  c.rhs_translation = pohozaev_translation_residual(u).rhs;
  c.defect = std::abs(c.rhs_shifted - c.rhs_original - d * c.rhs_translation);
  return c;
}

/// (\int u' . (-Delta)^{1/2}u, \int u' . (-Delta)^{1/2}u sin(x - delta)), both spectral.
inline std::pair<double, double> circle_pohozaev_residuals(const CircleFunction& u, double delta) {
  const auto du = derivative(u);
  const auto lu = fractional_laplacian_circle(u, 0.5);
  const auto sn = shift(sin_mode(1), -delta);
  double first = 0.0, second = 0.0;
  for (int j = 0; j < u.components(); ++j) {
    const auto a = du.component(j);
    const auto b = lu.component(j);
    first += inner(a, b);
    second += triple_integral(a, b, sn);
  }
  return {first, second};
}

}  // namespace fracnoether
