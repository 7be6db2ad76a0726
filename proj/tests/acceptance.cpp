// Acceptance checks, one PASS/FAIL line each. Exit status is the number of
// failures.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "fracnoether/fracnoether.hpp"

using namespace fracnoether;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

void guarded(int id, const char* name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, name, false, std::string("exception: ") + e.what());
  }
}

SampledLineFunction semicircle(int n) {
  return SampledLineFunction::sample_scalar(-1.0, 1.0, n, [](double x) {
    return std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
  });
}

}  // namespace

int main() {
  guarded(1, "spectral exactness", [] {
    double worst = 0.0;
    for (double s : {0.25, 0.5, 1.0})
      for (int k = 1; k <= 64; ++k)
        for (const auto& mode : {cos_mode(k), sin_mode(k)}) {
          const auto got = fractional_laplacian_circle(mode, s);
          const auto want = std::pow(double(k), 2.0 * s) * mode;
          worst = std::max(worst, (got - want).max_abs_coeff() / want.max_abs_coeff());
        }
    Rng rng(1);
    double hh = 0.0;
    for (int t = 0; t < 50; ++t) {
      const auto u = random_trig_polynomial(rng, rng.integer(0, 16), rng.integer(1, 3));
      auto mean_free = u;
      for (int j = 0; j < u.components(); ++j) mean_free.set_mode(j, 0, 0.0);
      hh = std::max(hh, (hilbert_transform(hilbert_transform(u)) + mean_free).max_abs_coeff());
    }
    report(1, "spectral exactness", worst <= 1e-12 && hh <= 1e-12,
           fmt("pure-mode rel err %.3g, |H^2 u + (u - mean)| %.3g (tol 1e-12)", worst, hh));
  });

  guarded(2, "PV vs multiplier on the circle", [] {
    Rng rng(2);
    double worst = 0.0;
    for (int t = 0; t < 12; ++t) {
      const auto u = random_trig_polynomial(rng, rng.integer(1, 8));
      for (double s : {0.25, 0.4, 0.5}) {
        const auto lu = fractional_laplacian_circle(u, s);
        for (int q = 0; q < 32; ++q) {
          const double x = kTwoPi * q / 32.0 + 0.01;
          worst = std::max(worst, std::abs(pv_fraclap_circle(u, s, x, 4096)[0] - lu.value(0, x)));
        }
      }
    }
    report(2, "PV vs multiplier on the circle", worst < 1e-6, fmt("sup error %.3g at 4096 nodes (tol 1e-6)", worst));
  });

  guarded(3, "Gagliardo equivalence", [] {
    Rng rng(3);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      const auto u = random_trig_polynomial(rng, rng.integer(1, 12), rng.integer(1, 3));
      const double fourier = std::pow(seminorm(u, SeminormKind::gagliardo_half).value, 2);
      const double quad = gagliardo_seminorm_quadrature(u, 256).value;
      worst = std::max(worst, std::abs(quad - fourier) / fourier);
    }
    report(3, "Gagliardo equivalence", worst < 1e-5, fmt("max relative error %.3g over 20 inputs (tol 1e-5)", worst));
  });

  guarded(4, "div-grad identity", [] {
    double worst = 0.0;
    for (const auto& [uc, ur, pc, pr] : {std::array{-0.4, 0.4, 0.5, 0.3}, std::array{0.1, 0.5, -0.2, 0.6}}) {
      const auto u = sample_test_function(bump(uc, ur), -1.0, 1.0, 512);
      for (double s : {0.25, 0.5}) worst = std::max(worst, check_div_grad_identity(u, bump(pc, pr), s).relative);
    }
    const double c = std::abs(c1s(0.5) - 1.0 / kPi);
    report(4, "div-grad identity", worst < 1e-3 && c <= 1e-12,
           fmt("max relative residual %.3g (tol 1e-3), |C_{1,1/2} - 1/pi| %.3g (tol 1e-12)", worst, c));
  });

  guarded(5, "explicit half-Laplacian", [] {
    const auto u = semicircle(kDefaultLineIntervals);
    double worst = 0.0;
    for (int p = 0; p <= 18; ++p) {
      const double x = -0.9 + 0.1 * p;
      worst = std::max(worst, std::abs(fraclap_line_pv(u, 0.5, x)[0] - 1.0));
    }
    const auto gate = validate_eigenrelation(8, 10, 1e-3);
    report(5, "explicit half-Laplacian", worst < 1e-4 && gate.pass,
           fmt("semicircle error %.3g (tol 1e-4), eigenrelation n<=8 error %.3g (tol 1e-3)", worst, gate.max_error));
  });

  guarded(6, "Noether currents", [] {
    double worst = 0.0;
    for (int d : {1, 2}) {
      const SphereValuedCircleFunction u(circle_power_map(d));
      worst = std::max(worst, wedge_el_residual(u).max_abs);
      for (int k = 0; k <= 4 * d + 4; ++k) {
        worst = std::max(worst, std::abs(noether_divergence_residual(u, 0, 1, cos_mode(k))));
        worst = std::max(worst, std::abs(noether_divergence_residual(u, 0, 1, sin_mode(k))));
      }
    }
    const SphereValuedCircleFunction p(perturbed_circle_map(0.3, 32));
    double witness = wedge_el_residual(p).max_abs;
    for (int k = 0; k <= 4; ++k)
      witness = std::max(witness, std::abs(noether_divergence_residual(p, 0, 1, cos_mode(k))));
    report(6, "Noether currents", worst < 1e-12 && witness > 1e-2,
           fmt("harmonic residual %.3g (tol 1e-12), perturbed witness %.3g (> 1e-2)", worst, witness));
  });

  guarded(7, "Hopf criterion", [] {
    double trace = 0.0;
    for (int d : {1, 2, 3}) {
      const auto h = hopf_coefficients(circle_power_map(d));
      for (int k = 1; k <= h.size(); ++k) trace = std::max(trace, std::abs(h(k)));
    }
    const auto hc = hopf_coefficients(cos_mode(1))(2);
    const double h2 = std::abs(hc - Complex(0.25, 0.0));
    Rng rng(7);
    double ratio = 0.0;
    for (int t = 0; t < 100; ++t) {
      const auto u = random_trig_polynomial(rng, rng.integer(1, 12), rng.integer(1, 3));
      const double n = hopf_hminus3_norm(hopf_coefficients(u));
      ratio = std::max(ratio, n * n / hopf_hminus3_bound(u));
    }
    double conf = 0.0;
    for (int d : {1, 2, 3}) {
      const auto rep = conformality_report(circle_power_map(d), {0.1, 0.5, 0.9, 0.99}, uniform_angles(64));
      conf = std::max({conf, rep.orthogonality, rep.modulus});
    }
    report(7, "Hopf criterion", trace <= 1e-12 && h2 <= 1e-12 && ratio <= 1.0 && conf < 1e-8,
           fmt("trace maps max|H| %.3g, |H(2)-1/4| for cos %.3g, worst H^-3 ratio %.3g", trace, h2, ratio) +
               fmt(", conformality %.3g (tol 1e-8)", conf));
  });

  guarded(8, "circle Pohozaev", [] {
    Rng rng(8);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const auto u = random_trig_polynomial(rng, rng.integer(1, 16), rng.integer(1, 3));
      const auto [i1, i2] = circle_pohozaev_residuals(u, rng.uniform(0.0, kTwoPi));
      worst = std::max({worst, std::abs(i1), std::abs(i2)});
    }
    report(8, "circle Pohozaev", worst < 1e-10, fmt("max |integral| %.3g over 200 inputs (tol 1e-10)", worst));
  });

  guarded(9, "interval Pohozaev", [] {
    const double target = -kPi / 2.0;
    const auto u = chebyshev_solve(Nonlinearity("const1"), -1.0, 1.0, 16);
    const auto dil = pohozaev_dilation_residual(u);
    const auto tr = pohozaev_translation_residual(u);
    const auto s = chebyshev_solve(Nonlinearity("const1"), 1.0, 3.0, 16);
    const auto dils = pohozaev_dilation_residual(s);
    const auto bl = boundary_limits(u);
    const auto bls = boundary_limits(semicircle(4096));
    const auto ex = exterior_asymptotics(semicircle(kDefaultLineIntervals), Side::b);
    // the sampled route: finite differences plus a modelled boundary layer
    const auto sd = pohozaev_dilation_residual(semicircle(4096), Nonlinearity("const1"));
    const auto st = pohozaev_translation_residual(semicircle(4096), Nonlinearity("const1"));
    const double e_dil = std::max({std::abs(dil.lhs - target), std::abs(dil.rhs - target), std::abs(sd.lhs - target),
                                   std::abs(sd.rhs - target)});
    const double e_tr = std::max({std::abs(tr.lhs), std::abs(tr.rhs), std::abs(st.lhs), std::abs(st.rhs)});
    const double e_sh = std::max(std::abs(dils.lhs - target), std::abs(dils.rhs - target));
    const double e_l = std::max({std::abs(bl.ell_a - 2.0), std::abs(bl.ell_b - 2.0), std::abs(bls.ell_a - 2.0),
                                 std::abs(bls.ell_b - 2.0)});
    const double e_al = std::abs(ex.alpha - std::sqrt(2.0));
    report(9, "interval Pohozaev", e_dil < 1e-3 && e_tr < 1e-3 && e_sh < 1e-3 && e_l < 1e-4 && e_al < 1e-3,
           fmt("dilation err %.3g, translation err %.3g, shifted err %.3g", e_dil, e_tr, e_sh) +
               fmt(", limit err %.3g, exterior alpha err %.3g", e_l, e_al));
  });

  guarded(10, "determinism", [] {
    int identical = 0, total = 0;
    for (const auto& name : suite_names()) {
      SuiteConfig c;
      c.suite = name;
      c.seed = 99;
      const auto first = run_suite(c);
      const auto second = run_suite(c);
      std::ostringstream ca, cb;
      write_reports_csv(ca, first.reports);
      write_reports_csv(cb, second.reports);
      bool same = dump(to_json(first.reports)) == dump(to_json(second.reports)) && ca.str() == cb.str() &&
                  first.artifacts == second.artifacts;
      identical += same ? 1 : 0;
      ++total;
    }
    report(10, "determinism", identical == total,
           fmt("%g of %g suites byte-identical across two runs", identical, total));
  });

  std::printf("%d failure(s)\n", failures);
  return failures;
}
