#pragma once

// Freud-Sobolev extremal polynomials S_{n,lambda} for
// <P,Q> = int P Q e^{-x^4} + lambda int P' Q' e^{-x^4}.
//
// Everything is kept in normalized form: s_m = kappa_m/||P_m||^2 obeys
// s_m = B_m - A_m/s_{m-2} with O(1) ingredients, and S_n is represented by
// the connection coefficients alpha_j over the P-basis (monomial
// representation is hopeless at large n).

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "freud/coeffs.hpp"
#include "freud/poly_engine.hpp"
#include "freud/quadrature.hpp"

namespace freud {

struct LambdaSchedule {
  enum class Kind { power, constant, table };

  Kind kind = Kind::power;
  double L = 1.0, e = -1.5;    // power: lambda_n = L * n^e
  double c = 1.0;              // constant
  std::vector<double> values;  // table, 1-indexed via values[n-1]
  std::string source;          // original spec string

  double operator()(int n) const;

  // L* = lim n^{3/2} lambda_n: 0, a finite positive value, or +infinity.
  // power/constant are classified exactly; table kind from the tail trend.
  double classification() const;

  // lambda non-increasing along the grid and across the (n-2, n) pairs.
  bool non_increasing_on(const std::vector<int>& grid) const;

  static LambdaSchedule parse(const std::string& spec);
  std::string spec_string() const { return source; }
};

template <class R>
struct SobolevTableT {
  R lambda;
  std::vector<R> s;          // s_m = kappa_m(lambda)/||P_m||^2, m = 0..n
  std::vector<R> log_kappa;  // ln kappa_m(lambda)
  std::vector<R> alpha;      // alpha_j(lambda), j = 0..n-2; alpha[0] = 0

  int max_degree() const { return static_cast<int>(s.size()) - 1; }
};
using SobolevTable = SobolevTableT<double>;
using SobolevTableX = SobolevTableT<ext_real>;

// kappa recursion at fixed lambda:
//   s_0 = 1, s_1 = 1 + lambda/b_1, s_2 = 1 + 4 lambda/b_2,
//   s_m = B_m - A_m/s_{m-2},
//   B_m = 1 + lambda m^2/b_m + 16 lambda b_m b_{m-1} b_{m-2},
//   A_m = 16 lambda^2 (m-2)^2 b_m b_{m-1},
//   alpha_j = 4 j lambda b_{j+2} b_{j+1} / s_j.
template <class R>
SobolevTableT<R> build_sobolev_table(const CoeffTableT<R>& table, R lambda,
                                     int n) {
  using std::log;
  if (n < 3) throw ArgumentError("build_sobolev_table: n must be >= 3");
  if (n > table.max_degree())
    throw ArgumentError("build_sobolev_table: n exceeds coefficient table");
  if (!(lambda > 0))
    throw ArgumentError("build_sobolev_table: lambda must be positive");

  SobolevTableT<R> st;
  st.lambda = lambda;
  st.s.assign(n + 1, R(0));
  st.s[0] = R(1);
  st.s[1] = 1 + lambda / table.b[1];
  st.s[2] = 1 + 4 * lambda / table.b[2];
  for (int m = 3; m <= n; ++m) {
    const R& bm = table.b[m];
    R B = 1 + lambda * m * m / bm + 16 * lambda * bm * table.b[m - 1] * table.b[m - 2];
    R A = 16 * lambda * lambda * (m - 2) * (m - 2) * bm * table.b[m - 1];
    if (!(st.s[m - 2] > 0))
      throw NumericError("build_sobolev_table: kappa recursion broke down at m = " +
                         std::to_string(m));
    st.s[m] = B - A / st.s[m - 2];
  }
  st.log_kappa.resize(n + 1);
  for (int m = 0; m <= n; ++m)
    st.log_kappa[m] = log(st.s[m]) + table.log_norm_sq[m];
  st.alpha.assign(std::max(0, n - 1), R(0));
  for (int j = 1; j <= n - 2; ++j)
    st.alpha[j] = 4 * j * lambda * table.b[j + 2] * table.b[j + 1] / st.s[j];
  return st;
}

// S_n(z) by telescoping P_n - alpha_{n-2} S_{n-2} down to S_0 = 1, S_1 = z
// (alpha_0 = 0 gives S_2 = P_2). Robust everywhere, O(n).
ScaledValue eval_s(const CoeffTable& table, const SobolevTable& st, int n,
                   std::complex<double> z);

// Same value through the connection expansion sum_k c_k(n) P_{n-2k}(z),
// accumulated in ratio form (the bare c_k overflow for n in the thousands,
// the terms c_k P_{n-2k}/P_n decay geometrically). Requires P_{n-2k}(z) != 0
// along the even/odd chain, so use off the real axis.
ScaledValue eval_s_connection(const CoeffTable& table, const SobolevTable& st,
                              int n, std::complex<double> z);

// f_n(z) = S_{n,lambda}(z)/P_n(z) for Im z != 0.
std::complex<double> eval_s_over_p(const CoeffTable& table,
                                   const SobolevTable& st, int n,
                                   std::complex<double> z);

// Connection coefficients c_k(m): S_m = sum_k c_k(m) P_{m-2k}, c_0 = 1,
// c_k = -c_{k-1} alpha_{m-2k}. Explicit values; safe in double only while
// the alpha products stay in range (fine for the oracle degrees).
std::vector<double> connection_coeffs(const SobolevTable& st, int m);

// A polynomial presented as value/derivative evaluators with a stated degree
// (plain double arithmetic; fine for the oracle degrees n <= 64).
struct PolyFn {
  int degree = 0;
  std::function<double(double)> value;
  std::function<double(double)> deriv;
};
PolyFn p_fn(const CoeffTable& table, int n);
PolyFn s_fn(const CoeffTable& table, const SobolevTable& st, int n);

// <A,B>_lambda by quadrature; rule must be exact for deg(A*B).
double sobolev_inner(const QuadRule& rule, const PolyFn& A, const PolyFn& B,
                     double lambda);

// Monic S_n coefficients by Gram-Schmidt on the monomial basis under
// exact-moment arithmetic at the requested precision. Independent oracle.
std::vector<ext_real> gram_schmidt_oracle(const ext_real& lambda, int n,
                                          int digits);

// Monomial coefficients of P_m from the recurrence (small m only).
template <class R>
std::vector<R> p_monomial_coeffs(const CoeffTableT<R>& table, int m) {
  if (m < 0 || m > table.max_degree())
    throw ArgumentError("p_monomial_coeffs: degree out of range");
  std::vector<R> prev{R(1)}, cur{R(0), R(1)};
  if (m == 0) return prev;
  for (int k = 1; k < m; ++k) {
    std::vector<R> next(k + 2, R(0));
    for (int i = 0; i <= k; ++i) next[i + 1] += cur[i];
    for (int i = 0; i < k; ++i) next[i] -= table.b[k] * prev[i];
    prev.swap(cur);
    cur.swap(next);
  }
  return cur;
}

// Monomial coefficients of S_n from the connection expansion (small n only).
template <class R>
std::vector<R> s_monomial_coeffs(const CoeffTableT<R>& table,
                                 const SobolevTableT<R>& st, int n) {
  std::vector<R> coef(n + 1, R(0));
  R ck(1);
  for (int m = n; m >= 0; m -= 2) {
    std::vector<R> pm = p_monomial_coeffs(table, m);
    for (int i = 0; i <= m; ++i) coef[i] += ck * pm[i];
    if (m < 2) break;
    const R aj = (m - 2 >= 1) ? st.alpha[m - 2] : R(0);
    if (aj == 0) break;  // alpha_0 = 0 terminates the even chain
    ck = -ck * aj;
  }
  return coef;
}

struct BalanceRecord {
  int n;
  double lambda_n;
  double log_t0;  // ln of int S^2 W^2 dx           (plain term)
  double log_t1;  // ln of lambda int (S')^2 W^2 dx (derivative term)
  double ratio;   // t1/t0
};

// t0 from P-orthogonality: t0 = sum_k c_k^2 ||P_{n-2k}||^2, t1 = kappa - t0.
BalanceRecord balance_diagnostic(const CoeffTable& table,
                                 const LambdaSchedule& schedule, int n);

}  // namespace freud
