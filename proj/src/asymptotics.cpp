#include "freud/asymptotics.hpp"

#include <cmath>
#include <functional>
#include <thread>

#include "freud/potential.hpp"

namespace freud {

namespace {

const double kSqrt3 = std::sqrt(3.0);

void parallel_for(int count, int threads, const std::function<void(int)>& f) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int i = t; i < count; i += threads) f(i);
    });
  for (auto& th : pool) th.join();
}

std::vector<std::complex<double>> aitken_once(
    const std::vector<std::complex<double>>& v, bool* degenerate = nullptr) {
  std::vector<std::complex<double>> out;
  out.reserve(v.size() - 2);
  for (std::size_t i = 0; i + 2 < v.size(); ++i) {
    const std::complex<double> d1 = v[i + 1] - v[i];
    const std::complex<double> d2 = v[i + 2] - v[i + 1];
    const std::complex<double> den = d2 - d1;
    if (std::abs(den) <= 1e-15 * (std::abs(d1) + std::abs(d2))) {
      out.push_back(v[i + 2]);
      if (degenerate) *degenerate = true;
    } else {
      out.push_back(v[i] - d1 * d1 / den);
    }
  }
  return out;
}

// Guarded iterated Delta^2: descend the Aitken table while the last entries
// of successive levels keep approaching each other; never consults the target.
std::complex<double> extrapolate(const std::vector<std::complex<double>>& values,
                                 std::complex<double> target,
                                 std::vector<std::string>& flags) {
  if (values.size() < 3) {
    flags.push_back("aitken-skipped:short-grid");
    return values.back();
  }
  const std::size_t m = values.size();
  const double d0 = std::abs(values[m - 3] - target);
  const double d1 = std::abs(values[m - 2] - target);
  const double d2 = std::abs(values[m - 1] - target);
  if (!(d0 >= d1 && d1 >= d2)) {
    flags.push_back("aitken-skipped:non-monotone");
    return values.back();
  }
  std::vector<std::complex<double>> level = values;
  std::complex<double> best = values.back();
  double last_step = std::numeric_limits<double>::infinity();
  int depth = 0;
  while (level.size() >= 3) {
    bool degenerate = false;
    std::vector<std::complex<double>> next = aitken_once(level, &degenerate);
    const double step = std::abs(next.back() - best);
    if (degenerate || !(step <= last_step) || !std::isfinite(step)) break;
    best = next.back();
    last_step = step;
    ++depth;
    level.swap(next);
  }
  flags.push_back("aitken-depth:" + std::to_string(depth));
  return best;
}

struct SweepSpec {
  std::string quantity;
  std::string schedule;
  std::optional<std::complex<double>> z;
  std::complex<double> target;
};

ConvergenceReport run_sweep(
    const SweepSpec& spec, const std::vector<int>& grid, SweepOptions opt,
    const std::function<std::complex<double>(int)>& measure) {
  if (grid.empty()) throw ArgumentError("verify: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1])
      throw ArgumentError("verify: grid must be strictly increasing");

  ConvergenceReport rep;
  rep.quantity = spec.quantity;
  rep.schedule = spec.schedule;
  rep.z = spec.z;
  rep.grid = grid;
  rep.target = spec.target;
  rep.values.assign(grid.size(), 0.0);
  parallel_for(static_cast<int>(grid.size()), opt.threads,
               [&](int i) { rep.values[i] = measure(grid[i]); });
  rep.extrapolated = extrapolate(rep.values, rep.target, rep.flags);
  rep.deviation_raw = std::abs(rep.values.back() - rep.target);
  rep.deviation_extrapolated = std::abs(rep.extrapolated - rep.target);
  return rep;
}

void require_grid_within(const CoeffTable& table, const std::vector<int>& grid) {
  if (!grid.empty() && grid.back() > table.max_degree())
    throw ArgumentError("verify: grid exceeds coefficient table (max n = " +
                        std::to_string(table.max_degree()) + ")");
}

void require_off_axis(std::complex<double> z) {
  if (z.imag() == 0.0) throw DomainError("verify: z must have Im z != 0");
}

}  // namespace

LimitTargets kappa_limit(double L) {
  if (!(L >= 0)) throw ArgumentError("kappa_limit: L must be >= 0 or infinite");
  if (std::isinf(L)) return kappa_limit_infinity();
  LimitTargets t;
  t.L = L;
  if (L == 0.0) return t;  // kappa = 1, b = 0, ratio = 1

  const double x = (20.0 * L + 3.0 * kSqrt3) / (12.0 * L);
  const double phi_x = x + std::sqrt(x * x - 1.0);
  const double k_phi = 2.0 * L / kSqrt3 * phi_x;
  const double k_root =
      (9.0 + 20.0 * kSqrt3 * L +
       std::sqrt(768.0 * L * L + 360.0 * kSqrt3 * L + 81.0)) /
      18.0;
  if (std::abs(k_phi - k_root) > 1e-12 * k_root)
    throw NumericError("kappa_limit: phi-form and root-form disagree");
  t.kappa = k_phi;
  t.b = 1.0 / phi_x;
  const double b_alt = 2.0 * L / (kSqrt3 * t.kappa);
  if (std::abs(t.b - b_alt) > 1e-12)
    throw NumericError("kappa_limit: b_L forms disagree");
  t.ratio_limit = 1.0 / (1.0 - t.b);
  return t;
}

LimitTargets kappa_limit_infinity() {
  LimitTargets t;
  t.L = std::numeric_limits<double>::infinity();
  t.L_infinite = true;
  t.kappa_infinite = true;
  t.kappa = std::numeric_limits<double>::infinity();
  t.b = 1.0 / 3.0;
  t.ratio_limit = 1.5;
  return t;
}

double kappa_characteristic_residual(double L, double q) {
  return q * q - (1.0 + 20.0 * kSqrt3 / 9.0 * L) * q + 4.0 / 3.0 * L * L;
}

AitkenResult aitken(const std::vector<std::complex<double>>& seq) {
  if (seq.size() < 3) throw ArgumentError("aitken: need at least 3 entries");
  const std::size_t m = seq.size();
  const std::complex<double> d1 = seq[m - 2] - seq[m - 3];
  const std::complex<double> d2 = seq[m - 1] - seq[m - 2];
  const std::complex<double> den = d2 - d1;
  if (den == std::complex<double>(0.0, 0.0) || !std::isfinite(std::abs(den)))
    return {seq.back(), true};
  return {seq[m - 3] - d1 * d1 / den, false};
}

ConvergenceReport verify_prop1(const CoeffTable& table,
                               const LambdaSchedule& schedule,
                               const std::vector<int>& grid, SweepOptions opt) {
  require_grid_within(table, grid);
  const double L = schedule.classification();
  if (std::isinf(L))
    throw ArgumentError("verify_prop1: schedule classifies to L = infinity");
  const LimitTargets t = kappa_limit(L);
  return run_sweep({"prop1_s_n", schedule.spec_string(), std::nullopt, t.kappa},
                   grid, opt, [&](int n) {
                     const SobolevTable st =
                         build_sobolev_table(table, schedule(n), n);
                     return std::complex<double>(st.s[n], 0.0);
                   });
}

ConvergenceReport verify_sn_infty(const CoeffTable& table,
                                  const LambdaSchedule& schedule,
                                  const std::vector<int>& grid,
                                  SweepOptions opt) {
  require_grid_within(table, grid);
  if (!std::isinf(schedule.classification()))
    throw ArgumentError("verify_sn_infty: schedule must classify to L = infinity");
  return run_sweep(
      {"sn_infty", schedule.spec_string(), std::nullopt, 2.0 * kSqrt3}, grid,
      opt, [&](int n) {
        const double lam = schedule(n);
        const SobolevTable st = build_sobolev_table(table, lam, n);
        return std::complex<double>(st.s[n] / (lam * std::pow(n, 1.5)), 0.0);
      });
}

ConvergenceReport verify_theorem1(const CoeffTable& table,
                                  const LambdaSchedule& schedule,
                                  std::complex<double> z,
                                  const std::vector<int>& grid,
                                  SweepOptions opt) {
  require_grid_within(table, grid);
  require_off_axis(z);
  const double L = schedule.classification();
  const LimitTargets t = std::isinf(L) ? kappa_limit_infinity() : kappa_limit(L);
  return run_sweep(
      {"theorem1_ratio", schedule.spec_string(), z, t.ratio_limit}, grid, opt,
      [&](int n) {
        const SobolevTable st = build_sobolev_table(table, schedule(n), n);
        return eval_s_over_p(table, st, n, z);
      });
}

ConvergenceReport verify_lemma1(const CoeffTable& table,
                                const LambdaSchedule& schedule,
                                std::complex<double> z,
                                const std::vector<int>& grid, SweepOptions opt) {
  require_grid_within(table, grid);
  require_off_axis(z);
  if (!schedule.non_increasing_on(grid))
    throw ArgumentError("verify_lemma1: schedule must be non-increasing");
  return run_sweep({"lemma1_diff", schedule.spec_string(), z, 0.0}, grid, opt,
                   [&](int n) {
                     const SobolevTable st_n =
                         build_sobolev_table(table, schedule(n), n);
                     const SobolevTable st_m =
                         build_sobolev_table(table, schedule(n - 2), n);
                     const std::complex<double> d =
                         eval_s_over_p(table, st_m, n, z) -
                         eval_s_over_p(table, st_n, n, z);
                     return std::complex<double>(std::abs(d), 0.0);
                   });
}

ConvergenceReport verify_strong_asymptotics(const CoeffTable& table,
                                            std::complex<double> z,
                                            const std::vector<int>& grid,
                                            SweepOptions opt) {
  require_grid_within(table, grid);
  require_off_axis(z);
  const double target = 1.0 / std::sqrt(2.0 * M_PI);
  return run_sweep({"strong_asymptotics", "", z, target}, grid, opt, [&](int n) {
    const double a = std::pow(4.0 * n / 3.0, 0.25);
    const PolyValue pv = eval_p(table, n, z);
    // every factor in log space: P_n, D_n, the quartic-root outer factor,
    // the norm and phi^{n+1/2}
    const std::complex<double> lg =
        pv.p_n.log() + szego_log(z, a) + 0.25 * std::log(z * z - a * a) -
        std::complex<double>(0.5 * table.log_norm_sq[n], 0.0) -
        (n + 0.5) * std::log(phi(z / a));
    return std::exp(lg);
  });
}

ConvergenceReport verify_pn_ratio(const CoeffTable& table,
                                  std::complex<double> z,
                                  const std::vector<int>& grid,
                                  SweepOptions opt) {
  require_grid_within(table, grid);
  require_off_axis(z);
  return run_sweep({"pn_ratio", "", z, -2.0 * kSqrt3}, grid, opt, [&](int n) {
    if (n < 3) throw ArgumentError("verify_pn_ratio: grid entries must be >= 3");
    const std::vector<ScaledValue> seq = eval_p_sequence(table, n, z);
    return std::sqrt(static_cast<double>(n - 2)) *
           sv_ratio(seq[n - 2], seq[n]);
  });
}

ConvergenceReport verify_norm_ratio(const CoeffTable& table,
                                    const std::vector<int>& grid) {
  require_grid_within(table, grid);
  return run_sweep({"norm_ratio", "", std::nullopt, 2.0 * kSqrt3}, grid, {},
                   [&](int n) {
                     return std::complex<double>(
                         std::sqrt(static_cast<double>(n)) / table.b[n], 0.0);
                   });
}

}  // namespace freud
