// Acceptance suite: one line per criterion, exit 0 only if all pass.
// Grids and tolerances are pinned here, in code.

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "freud/asymptotics.hpp"
#include "freud/coeffs.hpp"
#include "freud/potential.hpp"
#include "freud/poly_engine.hpp"
#include "freud/quadrature.hpp"
#include "freud/report_io.hpp"
#include "freud/sobolev.hpp"

using namespace freud;
using cd = std::complex<double>;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s — %s\n", pass ? "PASS" : "FAIL", idx, name,
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

const double kTwoSqrt3 = 2.0 * std::sqrt(3.0);

}  // namespace

int main() {
  std::printf("acceptance: Freud-Sobolev balancing verification\n");

  // shared tables
  const CoeffTable t4k = solve_string_system<double>(4200, 1e-11);
  const CoeffTable t8k = solve_string_system<double>(8192, 1e-10);
  const CoeffTable t64k = solve_string_system<double>(65536, 1e-9);

  // ---- 1. moment recursion to 1e-12 for even k <= 40
  {
    const auto mom = compute_moments<double>(44);
    double worst = 0.0;
    for (int k = 0; k <= 40; k += 2) {
      const double want = (k + 1) * mom.values[k] / 4.0;
      worst = std::max(worst, std::abs(mom.values[k + 4] - want) / want);
    }
    // independent anchor: Gamma identity
    for (int k = 0; k <= 40; k += 2) {
      const double g = std::tgamma((k + 1) / 4.0) / 2.0;
      worst = std::max(worst, std::abs(mom.values[k] - g) / g);
    }
    report(1, "moment recursion mu_{k+4} = (k+1)/4 mu_k", worst <= 1e-12,
           "max rel residual " + fmt(worst) + " (tol 1e-12)");
  }

  // ---- 2. string system vs Stieltjes oracle
  {
    const auto so = stieltjes_oracle<double>(200, 1536);
    double worst_std = 0.0;
    for (int n = 1; n <= 200; ++n)
      worst_std = std::max(worst_std, std::abs(so.b[n] / t4k.b[n] - 1.0));

    double worst_ext;
    {
      PrecisionGuard guard(60);
      const auto ts = solve_string_system<ext_real>(50, pow(ext_real(10), -50));
      const auto sx = stieltjes_oracle<ext_real>(50, 1536);
      ext_real w(0);
      for (int n = 1; n <= 50; ++n)
        w = std::max(w, ext_real(abs(sx.b[n] / ts.b[n] - 1)));
      worst_ext = to_double(w);
    }
    const bool pass = worst_std <= 1e-10 && worst_ext <= 1e-30;
    report(2, "coefficient oracle equivalence", pass,
           "std max rel " + fmt(worst_std) + " (tol 1e-10); ext max rel " +
               fmt(worst_ext) + " (tol 1e-30)");
  }

  // ---- 3. (normafreud) deviation trend + Aitken within 1e-3
  {
    auto dev = [&](int n) {
      return std::abs(std::sqrt(static_cast<double>(n)) / t4k.b[n] - kTwoSqrt3);
    };
    const auto rep = verify_norm_ratio(t4k, parse_grid("64:4096:x2"));
    const bool pass = dev(4096) < dev(64) && dev(4096) <= 2e-2 &&
                      rep.deviation_extrapolated <= 1e-3;
    report(3, "norm ratio sqrt(n)/b_n -> 2 sqrt(3)", pass,
           "dev(64) " + fmt(dev(64)) + ", dev(4096) " + fmt(dev(4096)) +
               " (tol 2e-2), extrapolated dev " +
               fmt(rep.deviation_extrapolated) + " (tol 1e-3)");
  }

  // ---- 4. Sobolev construction vs Gram-Schmidt oracle + two-term truncation
  {
    PrecisionGuard guard(60);
    const auto tx = solve_string_system<ext_real>(30, pow(ext_real(10), -50));
    double worst_coef = 0.0;
    for (double lam : {1e-3, 1.0, 1e3}) {
      const auto stx = build_sobolev_table(tx, ext_real(lam), 26);
      for (int n = 3; n <= 24; ++n) {
        const auto mine = s_monomial_coeffs(tx, stx, n);
        const auto want = gram_schmidt_oracle(ext_real(lam), n, 60);
        ext_real scale(0);
        for (const auto& c : want) scale = std::max(scale, ext_real(abs(c)));
        for (int i = 0; i <= n; ++i)
          worst_coef = std::max(
              worst_coef, to_double(abs(mine[i] - want[i]) / scale));
      }
    }
    // truncation: expansion coefficients of P_n over {S_j}, j < n-2
    const auto mom = compute_moments<ext_real>(64);
    auto inner = [&](const std::vector<ext_real>& A,
                     const std::vector<ext_real>& B, const ext_real& lam) {
      ext_real acc(0);
      for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i] == 0) continue;
        for (std::size_t j = 0; j < B.size(); ++j) {
          if (B[j] == 0) continue;
          ext_real v = mom.values[i + j];
          if (i >= 1 && j >= 1)
            v += lam * int(i) * int(j) * mom.values[i + j - 2];
          acc += A[i] * B[j] * v;
        }
      }
      return acc;
    };
    double worst_beta = 0.0;
    const ext_real lam1(1);
    for (int n : {10, 15, 20}) {
      const auto pn = p_monomial_coeffs(tx, n);
      for (int j = 0; j < n - 2; ++j) {
        const auto sj = gram_schmidt_oracle(lam1, j, 60);
        worst_beta = std::max(
            worst_beta, to_double(abs(inner(pn, sj, lam1) / inner(sj, sj, lam1))));
      }
    }
    const bool pass = worst_coef <= 1e-9 && worst_beta <= 1e-12;
    report(4, "Sobolev construction vs Gram-Schmidt oracle", pass,
           "max coeff rel dev " + fmt(worst_coef) +
               " (tol 1e-9); max truncation coeff " + fmt(worst_beta) +
               " (tol 1e-12)");
  }

  // ---- 5. extremality sandwich for n <= 4096 + orthogonality residuals
  {
    bool sandwich_ok = true;
    for (const char* spec : {"power:1:-1.5", "power:1:-2", "const:1"}) {
      const auto schedule = LambdaSchedule::parse(spec);
      for (int n = 3; n <= 4096 && sandwich_ok; ++n) {
        const double lam = schedule(n);
        const auto st = build_sobolev_table(t4k, lam, n);
        const double lower = 1.0 + lam * n * n / t4k.b[n];
        const double upper =
            lower + 16.0 * lam * t4k.b[n] * t4k.b[n - 1] * t4k.b[n - 2];
        if (!(st.s[n] >= lower && st.s[n] <= upper)) sandwich_ok = false;
      }
    }
    const QuadRule rule = gauss_freud(t4k, 64);
    const auto st = build_sobolev_table(t4k, 1.0, 30);
    double worst_orth = 0.0;
    for (int n = 0; n <= 30; ++n)
      for (int m = n + 1; m <= 30; ++m) {
        const double ip = sobolev_inner(rule, s_fn(t4k, st, n), s_fn(t4k, st, m), 1.0);
        const double scale =
            std::sqrt(std::exp(st.log_kappa[n]) * std::exp(st.log_kappa[m]));
        worst_orth = std::max(worst_orth, std::abs(ip) / scale);
      }
    const bool pass = sandwich_ok && worst_orth <= 1e-10;
    report(5, "extremality sandwich and S-orthogonality", pass,
           std::string("sandwich exact for n <= 4096 on 3 schedules: ") +
               (sandwich_ok ? "yes" : "NO") + "; max orthogonality residual " +
               fmt(worst_orth) + " (tol 1e-10)");
  }

  // ---- 6. Proposition 1 at L = 1 and L = 0, grid 2^7..2^13
  {
    const auto grid = parse_grid("128:8192:x2");
    const auto r1 =
        verify_prop1(t8k, LambdaSchedule::parse("power:1:-1.5"), grid);
    const double d1 = r1.deviation_extrapolated / r1.target.real();
    const auto r0 = verify_prop1(t8k, LambdaSchedule::parse("power:1:-2"), grid);
    const double d0 = r0.deviation_extrapolated;
    const bool pass = d1 <= 1e-2 && d0 <= 1e-2;
    report(6, "norm limit s_n -> kappa(L), balanced schedules", pass,
           "L=1 rel dev " + fmt(d1) + " vs kappa(1)=" +
               std::to_string(r1.target.real()) + "; L=0 dev " + fmt(d0) +
               " (tol 1e-2)");
  }

  // ---- 7. (sncasoinfty): s_n/(lambda_n n^{3/2}) -> 2 sqrt(3)
  {
    const auto rep = verify_sn_infty(t8k, LambdaSchedule::parse("const:1"),
                                     parse_grid("128:8192:x2"));
    const double d = rep.deviation_extrapolated / kTwoSqrt3;
    report(7, "s_n/(lambda_n n^{3/2}) -> 2 sqrt(3), L = infinity", d <= 5e-2,
           "rel dev " + fmt(d) + " (tol 5e-2)");
  }

  // ---- 8. Theorem 1 at z = 2i for L = 1, 0, infinity
  {
    const auto grid = parse_grid("128:65536:x2");
    const cd z(0, 2);
    struct Case {
      const char* spec;
      double target;
    };
    const Case cases[] = {{"power:1:-1.5", 0.0}, {"power:1:-2", 1.0},
                          {"const:1", 1.5}};
    bool pass = true;
    std::string detail;
    bool in_band = true;
    for (const auto& c : cases) {
      const auto rep =
          verify_theorem1(t64k, LambdaSchedule::parse(c.spec), z, grid);
      const double dev = rep.deviation_extrapolated;  // targets are >= 1
      if (dev > 2e-2) pass = false;
      for (const auto& v : rep.values)
        if (v.real() < 1.0 - 1e-9 || v.real() > 1.5 + 1e-9 ||
            std::abs(v.imag()) > 1e-9)
          in_band = false;
      detail += std::string(c.spec) + " dev " + fmt(dev) + "; ";
    }
    pass = pass && in_band;
    report(8, "ratio asymptotics S_n/P_n -> 1/(1-b_L) at z = 2i", pass,
           detail + std::string("values in [1,3/2]: ") + (in_band ? "yes" : "NO") +
               " (tol 2e-2)");
  }

  // ---- 9. Lemma 1 at z = 2i, lambda_n = n^{-3/2}
  {
    const auto rep = verify_lemma1(t4k, LambdaSchedule::parse("power:1:-1.5"),
                                   cd(0, 2), parse_grid("128:4096:x2"));
    const double v_first = rep.values.front().real();
    const double v_last = rep.values.back().real();
    const bool pass = v_last < v_first && v_last <= 1e-2;
    report(9, "schedule perturbation (S_{n,l_{n-2}} - S_{n,l_n})/P_n -> 0", pass,
           "value(128) " + fmt(v_first) + ", value(4096) " + fmt(v_last) +
               " (tol 1e-2)");
  }

  // ---- 10. strong asymptotics at z = i; P-ratio at z = 2i
  {
    const auto rep =
        verify_strong_asymptotics(t8k, cd(0, 1), parse_grid("128:2048:x2"));
    const double d_first = std::abs(rep.values.front() - rep.target);
    const double d_last = rep.deviation_raw;
    const auto ratio =
        verify_pn_ratio(t64k, cd(0, 2), parse_grid("128:65536:x2"));
    const double d_ratio = ratio.deviation_extrapolated;
    const bool pass = d_last <= 5e-2 && d_last < d_first && d_ratio <= 5e-2;
    report(10, "strong asymptotics -> 1/sqrt(2 pi); P-ratio -> -2 sqrt(3)", pass,
           "strong dev(2048) " + fmt(d_last) + " < dev(128) " + fmt(d_first) +
               " (tol 5e-2); ratio extrapolated dev " + fmt(d_ratio) +
               " (tol 5e-2)");
  }

  // ---- 11. MRS solver vs closed forms; balance exponents
  {
    double worst = 0.0;
    for (const auto& field : {quartic_field(), hermite_field()}) {
      for (double n : {1., 2., 3., 4., 5., 6., 7., 8., 9., 10., 100., 1000., 10000.}) {
        const double got = mrs_number(field, n);
        worst = std::max(worst,
                         std::abs(got / field.closed_form_mrs(n) - 1.0));
      }
    }
    const auto bq = balance_exponent(quartic_field(), BalanceMode::standard);
    const auto bh = balance_exponent(hermite_field(), BalanceMode::coherent_hermite);
    const bool pass = worst <= 1e-10 && std::abs(bq.exponent + 1.5) <= 1e-6 &&
                      std::abs(bh.exponent) <= 1e-6;
    report(11, "MRS numbers and balance exponents", pass,
           "max closed-form rel dev " + fmt(worst) +
               " (tol 1e-10); quartic exponent " + std::to_string(bq.exponent) +
               ", hermite coherent exponent " + std::to_string(bh.exponent));
  }

  // ---- 12. Szego function: oracle, far field, boundary modulus
  {
    double worst_quad = 0.0;
    int samples = 0;
    for (int n : {3, 16, 100}) {
      const double a = std::pow(4.0 * n / 3.0, 0.25);
      for (const cd& z : {cd(0, 2 * a), cd(1.5 * a, a), cd(-a, 1.7 * a),
                          cd(0.3 * a, -2.2 * a)}) {
        const cd c = szego_fn(z, a);
        const cd q = std::exp(szego_log_quad(z, a, 256));
        worst_quad = std::max(worst_quad, std::abs(c - q) / std::abs(c));
        ++samples;
      }
    }
    double worst_far = 0.0;
    for (int n : {1, 2, 4, 8}) {
      const double a = std::pow(4.0 * n / 3.0, 0.25);
      const cd d = szego_fn(1e3 * a * cd(1.0, 0.5), a);
      worst_far =
          std::max(worst_far, std::abs(d - cd(std::exp(-n / 4.0), 0)) /
                                  std::exp(-n / 4.0));
    }
    const int n = 16;
    const double a = std::pow(4.0 * n / 3.0, 0.25), x = a / 2;
    const double bnd =
        std::abs(std::norm(szego_fn(cd(x, 1e-6), a)) - std::exp(-x * x * x * x)) /
        std::exp(-x * x * x * x);
    const bool pass = worst_quad <= 1e-8 && worst_far <= 1e-6 && bnd <= 1e-3;
    report(12, "Szego function: closed form, D(inf), boundary modulus", pass,
           "quad oracle dev " + fmt(worst_quad) + " over " +
               std::to_string(samples) + " z (tol 1e-8); far-field dev " +
               fmt(worst_far) + " (tol 1e-6); boundary dev " + fmt(bnd) +
               " (tol 1e-3)");
  }

  // ---- 13. balance diagnostic across the three regimes
  {
    const auto grid = parse_grid("64:4096:x2");
    bool banded = true;
    for (int n : grid) {
      const double r =
          balance_diagnostic(t4k, LambdaSchedule::parse("power:1:-1.5"), n).ratio;
      if (!(r >= 0.1 && r <= 10.0)) banded = false;
    }
    bool dec_ok = true;
    {
      double prev = 1e300;
      double last = 0;
      for (int n : grid) {
        last = balance_diagnostic(t4k, LambdaSchedule::parse("power:1:-2"), n).ratio;
        if (last >= prev) dec_ok = false;
        prev = last;
      }
      if (!(last < 0.1)) dec_ok = false;
    }
    bool inc_ok = true;
    {
      double prev = 0, last = 0;
      for (int n : grid) {
        last = balance_diagnostic(t4k, LambdaSchedule::parse("const:1"), n).ratio;
        if (last <= prev) inc_ok = false;
        prev = last;
      }
      if (!(last > 10.0)) inc_ok = false;
    }
    const bool pass = banded && dec_ok && inc_ok;
    report(13, "balance diagnostic t1/t0 across schedules", pass,
           std::string("n^{-3/2} in [0.1,10]: ") + (banded ? "yes" : "NO") +
               "; n^{-2} monotone below 0.1: " + (dec_ok ? "yes" : "NO") +
               "; const monotone above 10: " + (inc_ok ? "yes" : "NO"));
  }

  // ---- 14. kappa(L) internal consistency across decades
  {
    bool pass = true;
    double worst = 0.0;
    for (int k = -3; k <= 3; ++k) {
      const double L = std::pow(10.0, k);
      try {
        const LimitTargets t = kappa_limit(L);  // throws if forms disagree
        const double resid =
            std::abs(kappa_characteristic_residual(L, t.kappa)) /
            (t.kappa * t.kappa);
        worst = std::max(worst, resid);
        if (resid > 1e-12) pass = false;
        if (t.kappa < 1.0 + kTwoSqrt3 * L - 1e-12) pass = false;
      } catch (const NumericError&) {
        pass = false;
      }
    }
    report(14, "kappa(L): phi-form, root-form, characteristic quadratic", pass,
           "max scaled quadratic residual " + fmt(worst) +
               " (tol 1e-12); kappa >= 1 + 2 sqrt(3) L everywhere");
  }

  std::printf("%s: %d criterion failure(s)\n", g_failures ? "FAIL" : "OK",
              g_failures);
  return g_failures ? 1 : 0;
}
