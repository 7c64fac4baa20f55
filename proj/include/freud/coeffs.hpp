#pragma once

// Moments, three-term recurrence coefficients and norms of the monic
// polynomials orthogonal w.r.t. exp(-x^4) dx on the real line.
//
// The recurrence coefficients b_n = ||P_n||^2/||P_{n-1}||^2 satisfy the
// quartic string relation 4 b_n (b_{n-1} + b_n + b_{n+1}) = n. Forward
// substitution is exponentially unstable (perturbations grow like
// (2+sqrt(3))^n), so the relation is solved as a two-point boundary-value
// problem: b_1 pinned from moments, far boundary closed with the asymptote
// b ~ sqrt(n/12), damped Newton on the symmetric tridiagonal system.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "freud/errors.hpp"
#include "freud/kernels.hpp"
#include "freud/scalar.hpp"

namespace freud {

template <class R>
struct MomentTableT {
  std::vector<R> values;  // mu_k, k = 0..K
};
using MomentTable = MomentTableT<double>;

// mu_0 = Gamma(1/4)/2, mu_2 = Gamma(3/4)/2, mu_{k+4} = (k+1)/4 * mu_k,
// odd moments vanish.
template <class R>
MomentTableT<R> compute_moments(int K) {
  if (K < 0) throw ArgumentError("compute_moments: K must be >= 0");
  MomentTableT<R> t;
  t.values.assign(K + 1, R(0));
  t.values[0] = gamma_fn(R(1) / 4) / 2;
  if (K >= 2) t.values[2] = gamma_fn(R(3) / 4) / 2;
  for (int k = 0; k + 4 <= K; k += 2)
    t.values[k + 4] = t.values[k] * (k + 1) / 4;
  return t;
}

template <class R>
struct CoeffTableT {
  std::vector<R> b;            // b[0] = 0, b[n] = ||P_n||^2/||P_{n-1}||^2
  std::vector<R> log_norm_sq;  // ln ||P_n||^2, n = 0..N
  std::string precision_tag;

  int max_degree() const { return static_cast<int>(b.size()) - 1; }
};
using CoeffTable = CoeffTableT<double>;
using CoeffTableX = CoeffTableT<ext_real>;

struct StringOptions {
  int pad = 0;        // extra solved indices beyond N; 0 = automatic
  int max_iter = 80;  // Newton budget
};

namespace detail {

template <class R>
void fill_log_norms(CoeffTableT<R>& t) {
  const int N = t.max_degree();
  t.log_norm_sq.assign(N + 1, R(0));
  t.log_norm_sq[0] = log(gamma_fn(R(1) / 4) / 2);
  for (int n = 1; n <= N; ++n)
    t.log_norm_sq[n] = t.log_norm_sq[n - 1] + log(t.b[n]);
}

// Solves the tridiagonal system in place (Thomas algorithm).
template <class R>
void thomas_solve(std::vector<R>& dl, std::vector<R>& d, std::vector<R>& du,
                  std::vector<R>& rhs) {
  const std::size_t n = d.size();
  for (std::size_t i = 1; i < n; ++i) {
    R m = dl[i] / d[i - 1];
    d[i] -= m * du[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  rhs[n - 1] /= d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;)
    rhs[i] = (rhs[i] - du[i] * rhs[i + 1]) / d[i];
}

}  // namespace detail

template <class R>
CoeffTableT<R> solve_string_system(int N, R tol, StringOptions opt = {}) {
  using std::abs;
  using std::sqrt;
  if (N < 2) throw ArgumentError("solve_string_system: N must be >= 2");
  int pad = opt.pad;
  if (pad <= 0) {
    // Closure error decays inward like (2-sqrt(3))^k; pad so it is below the
    // working precision at index N.
    pad = std::is_same_v<R, double>
              ? 24
              : std::max<int>(32, 2 * static_cast<int>(ext_real::default_precision()));
  }
  const int M = N + pad;

  std::vector<R> b(M + 2);
  b[0] = R(0);
  b[1] = gamma_fn(R(3) / 4) / gamma_fn(R(1) / 4);  // mu_2/mu_0
  for (int n = 2; n <= M; ++n) b[n] = sqrt(R(n) / 12);
  b[M + 1] = sqrt(R(M + 1) / 12);  // asymptotic closure, held fixed

  // residuals of equations n = 2..M
  auto residual = [&](const std::vector<R>& v, std::vector<R>& r) {
    R worst(0);
    for (int n = 2; n <= M; ++n) {
      r[n - 2] = 4 * v[n] * (v[n - 1] + v[n] + v[n + 1]) - n;
      worst = std::max(worst, R(abs(r[n - 2])));
    }
    return worst;
  };

  const int nun = M - 1;
  std::vector<R> r(nun), dl(nun), d(nun), du(nun), rhs(nun);
  R rnorm = residual(b, r);
  int clamp_streak = 0;
  bool converged = rnorm <= tol;

  for (int it = 0; it < opt.max_iter && !converged; ++it) {
    for (int i = 0; i < nun; ++i) {
      const int n = i + 2;
      d[i] = 4 * (b[n - 1] + 2 * b[n] + b[n + 1]);
      dl[i] = (i > 0) ? 4 * b[n] : R(0);
      du[i] = (i < nun - 1) ? 4 * b[n] : R(0);
      rhs[i] = -r[i];
    }
    detail::thomas_solve(dl, d, du, rhs);

    // Damped update: halve the step while the residual does not improve;
    // clamp non-positive iterates and retry before giving up.
    R step(1);
    bool accepted = false, clamped = false;
    std::vector<R> cand(b);
    for (int half = 0; half < 40; ++half) {
      for (int i = 0; i < nun; ++i) cand[i + 2] = b[i + 2] + step * rhs[i];
      bool positive = true;
      for (int i = 0; i < nun; ++i)
        if (!(cand[i + 2] > 0)) {
          positive = false;
          break;
        }
      if (!positive) {
        if (half == 39) {
          for (int i = 0; i < nun; ++i)
            cand[i + 2] = std::max(cand[i + 2], R(1) / 1000000);
          clamped = true;
        } else {
          step /= 2;
          continue;
        }
      }
      std::vector<R> rc(nun);
      R rn = residual(cand, rc);
      if (rn < rnorm || clamped) {
        b.swap(cand);
        r.swap(rc);
        rnorm = rn;
        accepted = true;
        break;
      }
      step /= 2;
    }
    clamp_streak = clamped ? clamp_streak + 1 : 0;
    if (clamp_streak >= 3)
      throw NumericError("solve_string_system: iterates pinned at the positivity clamp");
    if (!accepted)
      throw ConvergenceError("solve_string_system: damped Newton stalled",
                             to_double(rnorm));
    converged = rnorm <= tol;
  }
  if (!converged)
    throw ConvergenceError("solve_string_system: iteration budget exhausted",
                           to_double(rnorm));

  CoeffTableT<R> t;
  t.b.assign(b.begin(), b.begin() + N + 1);
  t.precision_tag = precision_tag<R>();
  detail::fill_log_norms(t);
  return t;
}

namespace detail {

// Gauss-Legendre nodes/weights on [-1,1], Newton refinement in R precision.
template <class R>
std::pair<std::vector<R>, std::vector<R>> gauss_legendre(int m) {
  using std::abs;
  std::vector<R> x(m), w(m);
  const R eps = scalar_epsilon<R>() * 8;
  for (int k = 0; k < m / 2 + m % 2; ++k) {
    R xi(std::cos(M_PI * (k + 0.75) / (m + 0.5)));
    R pp(0);
    for (int it = 0; it < 100; ++it) {
      // forward Legendre recurrence is stable on [-1,1]
      R p0(1), p1 = xi;
      for (int j = 2; j <= m; ++j) {
        R p2 = ((2 * j - 1) * xi * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = m * (p0 - xi * p1) / (1 - xi * xi);
      R dx = p1 / pp;
      xi -= dx;
      if (abs(dx) < eps) break;
    }
    x[k] = -xi;  // ascending order, negative half first
    x[m - 1 - k] = xi;
    w[k] = w[m - 1 - k] = 2 / ((1 - xi * xi) * pp * pp);
  }
  if (m % 2) x[m / 2] = R(0);
  return {x, w};
}

template <class R>
double stieltjes_eps() {
  return std::is_same_v<R, double>
             ? 1e-17
             : std::pow(10.0, -static_cast<double>(ext_real::default_precision()) - 2);
}

inline double weighted_norm(const std::vector<double>& w,
                            const std::vector<double>& p) {
  return kernels::active().weighted_dot(w.data(), p.data(), p.data(), w.size());
}
inline ext_real weighted_norm(const std::vector<ext_real>& w,
                              const std::vector<ext_real>& p) {
  ext_real acc(0);
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * p[i] * p[i];
  return acc;
}
inline void step_nodes(std::vector<double>& out, const std::vector<double>& x,
                       const std::vector<double>& p,
                       const std::vector<double>& pm1, double b) {
  kernels::active().recurrence_step(out.data(), x.data(), p.data(), pm1.data(),
                                    b, x.size());
}
inline void step_nodes(std::vector<ext_real>& out, const std::vector<ext_real>& x,
                       const std::vector<ext_real>& p,
                       const std::vector<ext_real>& pm1, const ext_real& b) {
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * p[i] - b * pm1[i];
}

}  // namespace detail

// Truncation radius: e^{-R^4} * x^degree below eps outside [-R,R].
// R = (ln(1/eps) + (degree+2) ln R)^{1/4}, iterated (fixed point converges in
// a couple of steps from R = ln(1/eps)^{1/4}).
inline double truncation_radius(double eps, int degree) {
  double L = std::log(1.0 / eps);
  double R = std::pow(L, 0.25);
  for (int i = 0; i < 3; ++i)
    R = std::pow(L + (degree + 2) * std::log(std::max(R, 2.0)), 0.25);
  return R;
}

// Discretized Stieltjes procedure: orthogonalize against a composite
// Gauss-Legendre discretization (24-point panels, symmetric about 0) of
// exp(-x^4) dx on [-R, R]. Independent of the string solve.
template <class R>
CoeffTableT<R> stieltjes_oracle(int N, int rule_size) {
  using std::exp;
  if (N < 1) throw ArgumentError("stieltjes_oracle: N must be >= 1");
  if (rule_size < 4 * N)
    throw ResolutionError("stieltjes_oracle: rule_size must be >= 4N");

  const int order = 24;
  const int half_panels = (rule_size + 2 * order - 1) / (2 * order);
  const double Rcut =
      truncation_radius(detail::stieltjes_eps<R>(), 2 * N + 2);

  auto [gx, gw] = detail::gauss_legendre<R>(order);

  // nodes on (0, R], mirrored to enforce exact symmetry
  const std::size_t count = static_cast<std::size_t>(2 * half_panels * order);
  std::vector<R> x(count), w(count);
  std::size_t idx = 0;
  for (int pnl = 0; pnl < half_panels; ++pnl) {
    R a = R(Rcut) * pnl / half_panels;
    R bnd = R(Rcut) * (pnl + 1) / half_panels;
    R mid = (a + bnd) / 2, hw = (bnd - a) / 2;
    for (int j = 0; j < order; ++j) {
      R xj = mid + hw * gx[j];
      R wj = hw * gw[j] * exp(-xj * xj * xj * xj);
      x[idx] = xj;
      w[idx] = wj;
      x[idx + 1] = -xj;
      w[idx + 1] = wj;
      idx += 2;
    }
  }

  std::vector<R> p_prev(count, R(0)), p(count, R(1)), p_next(count);
  R nrm = detail::weighted_norm(w, p);

  CoeffTableT<R> t;
  t.b.assign(N + 1, R(0));
  for (int k = 1; k <= N; ++k) {
    detail::step_nodes(p_next, x, p, p_prev, t.b[k - 1]);
    R nrm_next = detail::weighted_norm(w, p_next);
    if (!(nrm_next > 0))
      throw ResolutionError(
          "stieltjes_oracle: discretization exhausted at degree " +
          std::to_string(k));
    t.b[k] = nrm_next / nrm;
    p_prev.swap(p);
    p.swap(p_next);
    nrm = nrm_next;
  }
  t.precision_tag = precision_tag<R>();
  detail::fill_log_norms(t);
  return t;
}

struct NormSqValue {
  double log_value;    // ln ||P_n||^2, always valid
  double value;        // exp(log_value) when representable
  bool representable;  // false => value overflowed/underflowed
};

template <class R>
NormSqValue norm_sq(const CoeffTableT<R>& t, int n) {
  if (n < 0 || n > t.max_degree())
    throw ArgumentError("norm_sq: degree out of table range");
  NormSqValue v;
  v.log_value = to_double(t.log_norm_sq[n]);
  v.representable = std::abs(v.log_value) < 700.0;
  v.value = v.representable ? std::exp(v.log_value)
                            : std::numeric_limits<double>::quiet_NaN();
  return v;
}

}  // namespace freud
