#pragma once

// Named verification suites. Each returns a list of reports; nothing here
// depends on wall-clock time or global state, so a fixed config reproduces
// the same numbers.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fracnoether/circle_function.hpp"
#include "fracnoether/frac_div_circle.hpp"
#include "fracnoether/frac_line.hpp"
#include "fracnoether/hopf.hpp"
#include "fracnoether/io.hpp"
#include "fracnoether/noether.hpp"
#include "fracnoether/pohozaev.hpp"
#include "fracnoether/random.hpp"
#include "fracnoether/spectral_circle.hpp"

namespace fracnoether {

struct SuiteConfig {
  std::string suite;
  std::string map = "circle-identity";
  std::string pairs = "all";
  std::string f = "const1";
  double a = -1.0;
  double b = 1.0;
  std::optional<long> resolution;
  std::optional<double> tolerance;
  std::uint64_t seed = 12345;
  std::optional<CircleFunction> input;  // overrides `map` when set
};

struct SuiteOutput {
  std::vector<VerificationReport> reports;
  std::map<std::string, std::string> artifacts;  // file name -> contents (CSV/JSON)

  bool pass() const {
    for (const auto& r : reports)
      if (!r.pass) return false;
    return true;
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"spectral", "gagliardo", "frac-line", "frac-div",
                                              "noether",  "hopf",      "pohozaev",  "circle-pohozaev"};
  return names;
}

inline std::string describe_suite(const std::string& name) {
  if (name == "spectral")
    return "spectral: Fourier-multiplier fractional Laplacian on the circle.\n"
           "  pure modes cos(k x), sin(k x), k <= 32, s in {1/4, 1/2, 1}: relative error <= 1e-12\n"
           "  Hilbert transform squared equals minus the mean-free identity: <= 1e-12\n"
           "  PV quadrature vs multiplier, degree <= 8, s in {1/4, 1/2}: sup error <= 1e-6 (--tolerance)\n"
           "  --resolution: PV nodes (default 4096)\n"
           "  anchor: (-Delta)^{1/2} u = H u' with C_{1,1/2} = 1/pi\n";
  if (name == "gagliardo")
    return "gagliardo: circle Gagliardo double integral vs Fourier seminorm.\n"
           "  anchor: constant 1/(4(2π)²) in the Gagliardo-Fourier equivalence\n"
           "  20 random trig polynomials, relative error <= 1e-5 (--tolerance)\n"
           "  --resolution: quadrature nodes per axis (default 256)\n";
  if (name == "frac-line")
    return "frac-line: fractional Laplacian on the line by PV quadrature, div_s d_s identity.\n"
           "  anchor: (-Delta)^s u = (C_{1,s}/2) div_s d_s u, \"the constant introduced in\"\n"
           "  (-Delta)^{1/2} sqrt(1-x^2) = 1 for |x| <= 0.9: error <= 1e-4 (--tolerance)\n"
           "  div-grad identity on bumps, s in {1/4, 1/2}: relative residual <= 1e-3\n"
           "  C_{1,1/2} = 1/pi: <= 1e-12; Chebyshev eigenrelation gate n <= 8: <= 1e-3\n"
           "  --resolution: intervals on [-1,1] (default 32768)\n";
  if (name == "frac-div")
    return "frac-div: circle s-divergence of product fields and the commutator G_{w,phi}.\n"
           "  anchor: div_s(a(x) b(y)) = b (-Delta)^s a - a (-Delta)^s b\n"
           "  extended pairing <G_{a,phi}, b> vs product form: <= 1e-10\n"
           "  kernel quadrature of G vs spectral G, s in {1/4, 1/2}: <= 1e-6 (--tolerance)\n"
           "  ||G||_{L^2} / ([phi]_{A^1} [w]_{H^{-1/2}}) <= sqrt(2 pi) on 100 random inputs\n"
           "  --resolution: quadrature nodes (default 4096)\n";
  if (name == "noether")
    return "noether: divergence-free currents of half-harmonic circle maps.\n"
           "  anchor: div_{1/2}(Omega_ik) = 0 and (-Delta)^{1/2} u wedge u = 0\n"
           "  --map circle-identity|z2|perturbed, --pairs all|i,k (1-based)\n"
           "  wedge residual and div_{1/2}(Omega_ik) against cos/sin modes: <= 1e-12 (--tolerance)\n"
           "  sphere representation quadrature: <= 1e-4; --resolution: its nodes (default 4096)\n";
  if (name == "hopf")
    return "hopf: the 1/2-fractional Hopf differential.\n"
           "  anchor: u is a stationary point of E if and only if all Fourier coefficients of H vanish\n"
           "  --map circle-identity|z2|cos|perturbed\n"
           "  max_k |H(k)| <= tau, tau = 1e-10 max(1, [u]^2) (--tolerance)\n"
           "  H^{-3} bound (pi^2/3)[u]^4 on 100 random inputs\n"
           "  conformality of the harmonic extension on r <= 0.99: <= 1e-8\n";
  if (name == "pohozaev")
    return "pohozaev: interval Dirichlet problem (-Delta)^{1/2} u = f(u) on (a,b).\n"
           "  anchor: \"Assume that u²∈C²([a,b])\"; dilation identity\n"
           "    int u' x (-Delta)^{1/2}u = (pi/8)(l_a a - l_b b), translation identity\n"
           "    int u' (-Delta)^{1/2}u = (pi/8)(l_a - l_b), l = lim u^2/dist\n"
           "  --f polynomial in u (e.g. \"1 + 0.1*u\", const1), --interval a,b\n"
           "  identity residuals <= 1e-3 (--tolerance); collocation residual <= 1e-8;\n"
           "  shift covariance <= 1e-6; eigenrelation gate <= 1e-3\n"
           "  --resolution: Chebyshev modes M (default 32)\n";
  if (name == "circle-pohozaev")
    return "circle-pohozaev: identities from the traces of automorphisms of the disk.\n"
           "  anchor: int u' (-Delta)^{1/2}u = 0 and int u' (-Delta)^{1/2}u sin(x - delta) = 0\n"
           "  200 random trig polynomials and random delta: <= 1e-10 (--tolerance)\n";
  throw InvalidInput("unknown suite '" + name + "'");
}

namespace detail {

inline CircleFunction named_map(const std::string& name) {
  if (name == "circle-identity") return circle_power_map(1);
  if (name == "z2") return circle_power_map(2);
  if (name == "cos") return cos_mode(1);
  if (name == "perturbed") return perturbed_circle_map(0.3, 32);
  throw InvalidInput("unknown map '" + name + "'");
}

inline std::vector<std::pair<int, int>> parse_pairs(const std::string& spec, int m) {
  std::vector<std::pair<int, int>> out;
  if (spec == "all") {
    for (int i = 0; i < m; ++i)
      for (int k = i + 1; k < m; ++k) out.emplace_back(i, k);
    return out;
  }
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw InvalidInput("--pairs expects 'all' or 'i,k'");
  int i = 0, k = 0;
  try {
    i = std::stoi(spec.substr(0, comma)) - 1;
    k = std::stoi(spec.substr(comma + 1)) - 1;
  } catch (const std::exception&) {
    throw InvalidInput("--pairs expects 'all' or 'i,k'");
  }
  if (i < 0 || k < 0 || i >= m || k >= m || i == k) throw InvalidInput("--pairs index out of range");
  out.emplace_back(i, k);
  return out;
}

inline double coeff_max_rel(const CircleFunction& got, const CircleFunction& want) {
  const double scale = std::max(want.max_abs_coeff(), 1e-300);
  return (got - want).max_abs_coeff() / scale;
}

inline SuiteOutput suite_spectral(const SuiteConfig& c) {
  SuiteOutput out;
  const int P = static_cast<int>(c.resolution.value_or(kDefaultCircleResolution));
  double worst = 0.0;
  for (double s : {0.25, 0.5, 1.0})
    for (int k = 1; k <= 32; ++k)
      for (const auto& mode : {cos_mode(k), sin_mode(k)}) {
        const auto want = std::pow(double(k), 2.0 * s) * mode;
        worst = std::max(worst, coeff_max_rel(fractional_laplacian_circle(mode, s), want));
      }
  out.reports.push_back(make_check("pure_modes", {{"s", {0.25, 0.5, 1.0}}, {"kmax", 32}}, worst, 1e-12, 0));

  Rng rng(c.seed);
  double hh = 0.0;
  for (int t = 0; t < 20; ++t) {
    auto u = random_trig_polynomial(rng, rng.integer(1, 12), rng.integer(1, 3));
    auto mean_free = u;
    for (int j = 0; j < u.components(); ++j) mean_free.set_mode(j, 0, 0.0);
    hh = std::max(hh, (hilbert_transform(hilbert_transform(u)) + mean_free).max_abs_coeff());
  }
  out.reports.push_back(make_check("hilbert_squared", {{"trials", 20}}, hh, 1e-12, 0));

  double pv = 0.0;
  const double tol = c.tolerance.value_or(1e-6);
  for (int t = 0; t < 10; ++t) {
    const auto u = random_trig_polynomial(rng, rng.integer(1, 8));
    for (double s : {0.25, 0.5}) {
      const auto lu = fractional_laplacian_circle(u, s);
      for (int q = 0; q < 8; ++q) {
        const double x = rng.uniform(0.0, kTwoPi);
        pv = std::max(pv, std::abs(pv_fraclap_circle(u, s, x, P)[0] - lu.value(0, x)));
      }
    }
  }
  out.reports.push_back(make_check("pv_vs_multiplier", {{"trials", 10}, {"max_degree", 8}}, pv, tol, P));
  return out;
}

inline SuiteOutput suite_gagliardo(const SuiteConfig& c) {
  SuiteOutput out;
  const int P = static_cast<int>(c.resolution.value_or(256));
  Rng rng(c.seed);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto u = random_trig_polynomial(rng, rng.integer(1, 10), rng.integer(1, 2));
    const double fourier = std::pow(seminorm(u, SeminormKind::gagliardo_half).value, 2);
    const auto q = gagliardo_seminorm_quadrature(u, P);
    if (fourier > 0.0) worst = std::max(worst, std::abs(q.value - fourier) / fourier);
  }
  out.reports.push_back(make_check("gagliardo_vs_fourier", {{"trials", 20}}, worst,
                                   c.tolerance.value_or(1e-5), P));
  return out;
}

inline SuiteOutput suite_frac_line(const SuiteConfig& c) {
  SuiteOutput out;
  const int n = static_cast<int>(c.resolution.value_or(kDefaultLineIntervals));
  const auto u = SampledLineFunction::sample_scalar(-1.0, 1.0, n, [](double x) {
    return std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
  });
  double worst = 0.0;
  for (int p = 0; p < 7; ++p) {
    const double x = -0.9 + 0.3 * p;
    worst = std::max(worst, std::abs(fraclap_line_pv(u, 0.5, x)[0] - 1.0));
  }
  out.reports.push_back(make_check("semicircle_half_laplacian", {{"xmax", 0.9}}, worst,
                                   c.tolerance.value_or(1e-4), n));
  const auto bump_u = sample_test_function(bump(-0.4, 0.4), -1.0, 1.0, 512);
  for (double s : {0.25, 0.5}) {
    const auto r = check_div_grad_identity(bump_u, bump(0.5, 0.3), s);
    out.reports.push_back(make_check("div_grad", {{"s", s}, {"lhs", r.lhs}, {"rhs", r.rhs}}, r.relative, 1e-3,
                                     r.resolution));
  }
  out.reports.push_back(make_check("c_half", {{"value", c1s(0.5)}}, std::abs(c1s(0.5) - 1.0 / kPi), 1e-12, 0));
  const auto& gate = eigenrelation_gate();
  out.reports.push_back(make_check("eigenrelation_gate", {{"max_degree", gate.max_degree}, {"probes", gate.probes}},
                                   gate.max_error, gate.tolerance, 4096));
  return out;
}

inline SuiteOutput suite_frac_div(const SuiteConfig& c) {
  SuiteOutput out;
  const int P = static_cast<int>(c.resolution.value_or(kDefaultCircleResolution));
  Rng rng(c.seed);
  double ext = 0.0;
  for (int t = 0; t < 20; ++t) {
    const double s = t % 2 == 0 ? 0.25 : 0.5;
    const auto a = random_trig_polynomial(rng, rng.integer(0, 8));
    const auto b = random_trig_polynomial(rng, rng.integer(0, 8));
    const auto phi = random_trig_polynomial(rng, rng.integer(0, 8));
    ext = std::max(ext, std::abs(div_extended_pair(a, b, s, phi) - div_s_product(a, b, s, phi)));
  }
  out.reports.push_back(make_check("extended_pair_vs_product", {{"trials", 20}}, ext, 1e-10, 0));

  double quad = 0.0;
  for (int t = 0; t < 4; ++t) {
    const auto w = random_trig_polynomial(rng, rng.integer(1, 6));
    const auto phi = random_trig_polynomial(rng, rng.integer(1, 6));
    for (double s : {0.25, 0.5}) {
      const auto g = commutator_G(w, phi, s).G;
      for (int q = 0; q < 4; ++q) {
        const double x = rng.uniform(0.0, kTwoPi);
        quad = std::max(quad, std::abs(commutator_G_quadrature(w, phi, s, x, P) - g.value(0, x)));
      }
    }
  }
  out.reports.push_back(make_check("commutator_quadrature", {{"trials", 4}}, quad, c.tolerance.value_or(1e-6), P));

  double ratio = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto w = random_trig_polynomial(rng, rng.integer(1, 10), 1, 0.0, true);
    const auto phi = random_trig_polynomial(rng, rng.integer(1, 10));
    ratio = std::max(ratio, commutator_bound_ratio(w, phi, 0.25));
  }
  out.reports.push_back(make_check("commutator_bound", {{"s", 0.25}, {"trials", 100}}, ratio, std::sqrt(kTwoPi), 0));
  return out;
}

inline SuiteOutput suite_noether(const SuiteConfig& c) {
  SuiteOutput out;
  const auto f = c.input ? *c.input : named_map(c.map);
  const SphereValuedCircleFunction u(f);
  const double tol = c.tolerance.value_or(1e-12);
  const auto pairs = parse_pairs(c.pairs, u.components());
  const Json p{{"map", c.input ? std::string("input") : c.map}, {"pairs", c.pairs}};

  out.reports.push_back(make_check("wedge_residual", p, wedge_el_residual(u).max_abs, tol, 0));
  const int kmax = 2 * f.bandwidth() + 2;
  for (const auto& [i, k] : pairs) {
    double worst = 0.0;
    for (int q = 0; q <= kmax; ++q) {
      worst = std::max(worst, std::abs(noether_divergence_residual(u, i, k, cos_mode(q))));
      worst = std::max(worst, std::abs(noether_divergence_residual(u, i, k, sin_mode(q))));
    }
    Json pp = p;
    pp["i"] = i + 1;
    pp["k"] = k + 1;
    pp["kmax"] = kmax;
    out.reports.push_back(make_check("omega_divergence", pp, worst, tol, 0));
  }
  const int P = static_cast<int>(c.resolution.value_or(kDefaultCircleResolution));
  const auto rep = sphere_representation_residual(u, P);
  out.reports.push_back(make_check("sphere_representation", p, rep.value, 1e-4, rep.resolution));
  return out;
}

inline SuiteOutput suite_hopf(const SuiteConfig& c) {
  SuiteOutput out;
  const auto u = c.input ? *c.input : named_map(c.map);
  const Json p{{"map", c.input ? std::string("input") : c.map}};
  const double tau = c.tolerance.value_or(default_hopf_tolerance(u));
  const auto v = is_stationary(u, tau);
  const auto h = hopf_coefficients(u);
  Json pv = p;
  pv["argmax"] = v.argmax;
  pv["H2_re"] = h(2).real();
  pv["H2_im"] = h(2).imag();
  out.reports.push_back(make_check("hopf_max", pv, v.max_abs, tau, 2 * u.bandwidth()));

  Rng rng(c.seed);
  double ratio = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto r = random_trig_polynomial(rng, rng.integer(1, 10), rng.integer(1, 3));
    const double n = hopf_hminus3_norm(hopf_coefficients(r));
    const double bound = hopf_hminus3_bound(r);
    if (bound > 0.0) ratio = std::max(ratio, n * n / bound);
  }
  out.reports.push_back(make_check("hminus3_bound_ratio", {{"trials", 100}}, ratio, 1.0, 0));

  const auto conf = conformality_report(u, {0.1, 0.5, 0.9, 0.99}, uniform_angles(64));
  out.reports.push_back(make_check("conformality", p, std::max(conf.orthogonality, conf.modulus), 1e-8, 64));

  std::ostringstream csv;
  write_hopf_csv(csv, h);
  out.artifacts["hopf_coefficients.csv"] = csv.str();
  return out;
}

inline SuiteOutput suite_pohozaev(const SuiteConfig& c) {
  SuiteOutput out;
  const int m = static_cast<int>(c.resolution.value_or(32));
  const double tol = c.tolerance.value_or(1e-3);
  const Nonlinearity f(c.f);
  const Json p{{"f", c.f}, {"a", c.a}, {"b", c.b}, {"M", m}};
  const auto& gate = eigenrelation_gate();
  out.reports.push_back(make_check("eigenrelation_gate", {{"max_degree", gate.max_degree}, {"probes", gate.probes}},
                                   gate.max_error, gate.tolerance, 4096));
  const auto u = chebyshev_solve(f, c.a, c.b, m);
  out.reports.push_back(make_check("collocation_residual", p, u.collocation_residual(), 1e-8, m));

  const auto bl = boundary_limits(u);
  Json pl = p;
  pl["ell_a"] = bl.ell_a;
  pl["ell_b"] = bl.ell_b;
  pl["alpha_a"] = bl.alpha_a;
  pl["alpha_b"] = bl.alpha_b;
  const double lim = std::max(std::abs(bl.ell_a - u.closed_form_limit(-1)), std::abs(bl.ell_b - u.closed_form_limit(1)));
  out.reports.push_back(make_check("boundary_limits", pl, lim, 1e-4, m));

  const auto dil = pohozaev_dilation_residual(u);
  Json pd = p;
  pd["lhs"] = dil.lhs;
  pd["rhs"] = dil.rhs;
  out.reports.push_back(make_check("dilation_identity", pd, dil.residual, tol, m));
  const auto tr = pohozaev_translation_residual(u);
  Json pt = p;
  pt["lhs"] = tr.lhs;
  pt["rhs"] = tr.rhs;
  out.reports.push_back(make_check("translation_identity", pt, tr.residual, tol, m));
  const auto sc = shift_covariance(u, 1.0);
  out.reports.push_back(make_check("shift_covariance", {{"shift", sc.shift}}, sc.defect, 1e-6, m));

  out.artifacts["pohozaev_solution.json"] = dump(to_json(u));
  std::ostringstream csv;
  write_samples_csv(csv, u.sampled(256));
  out.artifacts["pohozaev_solution.csv"] = csv.str();
  return out;
}

inline SuiteOutput suite_circle_pohozaev(const SuiteConfig& c) {
  SuiteOutput out;
  Rng rng(c.seed);
  double w1 = 0.0, w2 = 0.0;
  for (int t = 0; t < 200; ++t) {
    const auto u = random_trig_polynomial(rng, rng.integer(1, 12), rng.integer(1, 3));
    const auto [i1, i2] = circle_pohozaev_residuals(u, rng.uniform(0.0, kTwoPi));
    w1 = std::max(w1, std::abs(i1));
    w2 = std::max(w2, std::abs(i2));
  }
  const double tol = c.tolerance.value_or(1e-10);
  out.reports.push_back(make_check("translation_integral", {{"trials", 200}}, w1, tol, 0));
  out.reports.push_back(make_check("rotation_integral", {{"trials", 200}}, w2, tol, 0));
  return out;
}

}  // namespace detail

inline SuiteOutput run_suite(const SuiteConfig& c) {
  if (c.suite == "spectral") return detail::suite_spectral(c);
  if (c.suite == "gagliardo") return detail::suite_gagliardo(c);
  if (c.suite == "frac-line") return detail::suite_frac_line(c);
  if (c.suite == "frac-div") return detail::suite_frac_div(c);
  if (c.suite == "noether") return detail::suite_noether(c);
  if (c.suite == "hopf") return detail::suite_hopf(c);
  if (c.suite == "pohozaev") return detail::suite_pohozaev(c);
  if (c.suite == "circle-pohozaev") return detail::suite_circle_pohozaev(c);
  throw InvalidInput("unknown suite '" + c.suite + "'");
}

}  // namespace fracnoether
