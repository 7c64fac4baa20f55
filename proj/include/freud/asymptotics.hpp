#pragma once

// Closed-form limit targets for the balanced-schedule asymptotics and the
// convergence sweeps that verify them on doubling n-grids.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "freud/coeffs.hpp"
#include "freud/sobolev.hpp"

namespace freud {

struct LimitTargets {
  double L = 0.0;
  bool L_infinite = false;
  double kappa = 1.0;  // kappa(L), larger root of q^2-(1+(20sqrt3/9)L)q+(4/3)L^2
  bool kappa_infinite = false;
  double b = 0.0;            // b_L = 2L/(sqrt3 kappa(L)) in [0, 1/3]
  double ratio_limit = 1.0;  // 1/(1 - b_L) in [1, 3/2]
};

// Finite L >= 0. Computes kappa by both the phi-form and the explicit-root
// form and insists they agree to 1e-12 relative.
LimitTargets kappa_limit(double L);
LimitTargets kappa_limit_infinity();
// Residual of the characteristic quadratic at q (test helper).
double kappa_characteristic_residual(double L, double q);

struct AitkenResult {
  std::complex<double> value;
  bool fallback;  // degenerate differences: value is the last raw entry
};

// Single Delta^2 step on the last three entries; exact on geometric error.
AitkenResult aitken(const std::vector<std::complex<double>>& seq);

struct ConvergenceReport {
  std::string quantity;
  std::string schedule;  // empty when the quantity has no schedule
  std::optional<std::complex<double>> z;
  std::vector<int> grid;
  std::vector<std::complex<double>> values;
  std::complex<double> extrapolated;
  std::complex<double> target;
  double deviation_raw = 0.0;            // |last value - target|
  double deviation_extrapolated = 0.0;   // |extrapolated - target|
  std::vector<std::string> flags;
};

struct SweepOptions {
  int threads = 1;  // grid points are independent; assembly is in grid order
};

// s_n = kappa_n(lambda_n)/||P_n||^2 against kappa(L), finite L.
ConvergenceReport verify_prop1(const CoeffTable& table,
                               const LambdaSchedule& schedule,
                               const std::vector<int>& grid,
                               SweepOptions opt = {});

// s_n/(lambda_n n^{3/2}) against 2 sqrt(3), L = infinity schedules.
ConvergenceReport verify_sn_infty(const CoeffTable& table,
                                  const LambdaSchedule& schedule,
                                  const std::vector<int>& grid,
                                  SweepOptions opt = {});

// f_n(z) = S_{n,lambda_n}(z)/P_n(z) against 1/(1-b_L), Im z != 0.
ConvergenceReport verify_theorem1(const CoeffTable& table,
                                  const LambdaSchedule& schedule,
                                  std::complex<double> z,
                                  const std::vector<int>& grid,
                                  SweepOptions opt = {});

// |(S_{n,lambda_{n-2}}(z) - S_{n,lambda_n}(z))/P_n(z)| against 0.
ConvergenceReport verify_lemma1(const CoeffTable& table,
                                const LambdaSchedule& schedule,
                                std::complex<double> z,
                                const std::vector<int>& grid,
                                SweepOptions opt = {});

// P_n(z) D_n(z) (z^2-a_n^2)^{1/4} / (||P_n|| phi^{n+1/2}(z/a_n)) against
// 1/sqrt(2 pi). The algebraic quartic-root factor is the standard Szego-type
// outer factor; without it the product decays like n^{-1/8}.
ConvergenceReport verify_strong_asymptotics(const CoeffTable& table,
                                            std::complex<double> z,
                                            const std::vector<int>& grid,
                                            SweepOptions opt = {});

// sqrt(n-2) P_{n-2}(z)/P_n(z) against -2 sqrt(3).
ConvergenceReport verify_pn_ratio(const CoeffTable& table,
                                  std::complex<double> z,
                                  const std::vector<int>& grid,
                                  SweepOptions opt = {});

// sqrt(n)/b_n = sqrt(n) ||P_{n-1}||^2/||P_n||^2 against 2 sqrt(3).
ConvergenceReport verify_norm_ratio(const CoeffTable& table,
                                    const std::vector<int>& grid);

}  // namespace freud
