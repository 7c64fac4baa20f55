#include "freud/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

namespace freud {

// ---------------------------------------------------------------------------
// LambdaSchedule

double LambdaSchedule::operator()(int n) const {
  if (n < 1) throw ArgumentError("LambdaSchedule: index must be >= 1");
  switch (kind) {
    case Kind::power:
      return L * std::pow(static_cast<double>(n), e);
    case Kind::constant:
      return c;
    case Kind::table:
      if (static_cast<std::size_t>(n) > values.size())
        throw ArgumentError("LambdaSchedule: table has no entry for n = " +
                            std::to_string(n));
      return values[n - 1];
  }
  throw ArgumentError("LambdaSchedule: bad kind");
}

double LambdaSchedule::classification() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (kind) {
    case Kind::power:
      if (e < -1.5) return 0.0;
      if (e == -1.5) return L;
      return inf;
    case Kind::constant:
      return inf;
    case Kind::table: {
      // tail trend of r_n = n^{3/2} lambda_n
      const int N = static_cast<int>(values.size());
      if (N < 4) throw ArgumentError("LambdaSchedule: table too short to classify");
      auto r = [&](int n) { return std::pow(n, 1.5) * values[n - 1]; };
      const double r1 = r(N / 4), r2 = r(N / 2), r3 = r(N);
      if (r3 > 2.0 * r2 && r2 > 2.0 * r1) return inf;
      if (r3 < 0.5 * r2 && r2 < 0.5 * r1) return 0.0;
      return r3;
    }
  }
  throw ArgumentError("LambdaSchedule: bad kind");
}

bool LambdaSchedule::non_increasing_on(const std::vector<int>& grid) const {
  double prev = std::numeric_limits<double>::infinity();
  for (int n : grid) {
    if (n >= 3 && (*this)(n - 2) < (*this)(n)) return false;
    const double v = (*this)(n);
    if (v > prev) return false;
    prev = v;
  }
  return true;
}

namespace {

double parse_positive(const std::string& tok, const char* what) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ArgumentError(std::string("schedule: malformed ") + what + " '" + tok + "'");
  }
  if (pos != tok.size())
    throw ArgumentError(std::string("schedule: malformed ") + what + " '" + tok + "'");
  return v;
}

}  // namespace

LambdaSchedule LambdaSchedule::parse(const std::string& spec) {
  LambdaSchedule s;
  s.source = spec;
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  if (parts.empty()) throw ArgumentError("schedule: empty spec");

  if (parts[0] == "power") {
    if (parts.size() != 3)
      throw ArgumentError("schedule: expected power:<L>:<e>, got '" + spec + "'");
    s.kind = Kind::power;
    s.L = parse_positive(parts[1], "L");
    s.e = parse_positive(parts[2], "exponent");
    if (!(s.L > 0)) throw ArgumentError("schedule: L must be positive");
    return s;
  }
  if (parts[0] == "const") {
    if (parts.size() != 2)
      throw ArgumentError("schedule: expected const:<c>, got '" + spec + "'");
    s.kind = Kind::constant;
    s.c = parse_positive(parts[1], "constant");
    if (!(s.c > 0)) throw ArgumentError("schedule: constant must be positive");
    return s;
  }
  if (parts[0] == "file") {
    if (parts.size() != 2)
      throw ArgumentError("schedule: expected file:<path>, got '" + spec + "'");
    std::ifstream in(parts[1]);
    if (!in) throw ArgumentError("schedule: cannot open '" + parts[1] + "'");
    s.kind = Kind::table;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const double v = parse_positive(line, "table entry");
      if (!(v > 0))
        throw ArgumentError("schedule: non-positive lambda in '" + parts[1] + "'");
      s.values.push_back(v);
    }
    if (s.values.empty())
      throw ArgumentError("schedule: empty table '" + parts[1] + "'");
    return s;
  }
  throw ArgumentError("schedule: unknown kind '" + parts[0] + "'");
}

// ---------------------------------------------------------------------------
// Evaluation

ScaledValue eval_s(const CoeffTable& table, const SobolevTable& st, int n,
                   std::complex<double> z) {
  if (n < 0 || n > st.max_degree())
    throw ArgumentError("eval_s: degree out of Sobolev table range");
  const std::vector<ScaledValue> p = eval_p_sequence(table, n, z);
  ScaledValue s_val =
      (n % 2 == 0) ? ScaledValue::from(1.0) : ScaledValue::from(z);
  for (int m = (n % 2) + 2; m <= n; m += 2) {
    const double a = st.alpha[m - 2];
    s_val = sv_add(p[m], sv_scale(s_val, std::complex<double>(-a, 0.0)));
  }
  return s_val;
}

ScaledValue eval_s_connection(const CoeffTable& table, const SobolevTable& st,
                              int n, std::complex<double> z) {
  if (n < 0 || n > st.max_degree())
    throw ArgumentError("eval_s_connection: degree out of Sobolev table range");
  const std::vector<ScaledValue> p = eval_p_sequence(table, n, z);
  std::complex<double> total = 1.0, term = 1.0;
  for (int m = n; m - 2 >= 1; m -= 2) {
    const double a = st.alpha[m - 2];
    if (a == 0.0) break;
    term *= -a * sv_ratio(p[m - 2], p[m]);
    if (std::abs(term) < 1e-22 * std::abs(total)) break;
    total += term;
  }
  return sv_scale(p[n], total);
}

std::complex<double> eval_s_over_p(const CoeffTable& table,
                                   const SobolevTable& st, int n,
                                   std::complex<double> z) {
  return sv_ratio(eval_s(table, st, n, z), eval_p(table, n, z).p_n);
}

// ---------------------------------------------------------------------------
// Quadrature-facing evaluators

PolyFn p_fn(const CoeffTable& table, int n) {
  if (n < 0 || n > table.max_degree())
    throw ArgumentError("p_fn: degree out of range");
  PolyFn f;
  f.degree = n;
  f.value = [&table, n](double x) {
    double prev = 0.0, cur = 1.0;
    for (int k = 0; k < n; ++k) {
      const double next = x * cur - (k >= 1 ? table.b[k] * prev : 0.0);
      prev = cur;
      cur = next;
    }
    return cur;
  };
  // differentiated recurrence: q'_{k+1} = q_k + x q'_k - b_k q'_{k-1}
  f.deriv = [&table, n](double x) {
    double prev = 0.0, cur = 1.0, dprev = 0.0, dcur = 0.0;
    for (int k = 0; k < n; ++k) {
      const double b = (k >= 1) ? table.b[k] : 0.0;
      const double next = x * cur - b * prev;
      const double dnext = cur + x * dcur - b * dprev;
      prev = cur;
      cur = next;
      dprev = dcur;
      dcur = dnext;
    }
    return dcur;
  };
  return f;
}

std::vector<double> connection_coeffs(const SobolevTable& st, int m) {
  if (m < 0 || m > st.max_degree())
    throw ArgumentError("connection_coeffs: degree out of Sobolev table range");
  std::vector<double> c;
  double ck = 1.0;
  for (int j = m; j >= 0; j -= 2) {
    c.push_back(ck);
    if (j < 2) break;
    const double a = (j - 2 >= 1) ? st.alpha[j - 2] : 0.0;
    ck = -ck * a;
    if (ck == 0.0) break;  // alpha_0 = 0 ends the even chain
  }
  return c;
}

PolyFn s_fn(const CoeffTable& table, const SobolevTable& st, int n) {
  if (n < 0 || n > st.max_degree())
    throw ArgumentError("s_fn: degree out of Sobolev table range");
  const std::vector<double> c = connection_coeffs(st, n);
  auto cmap = std::make_shared<std::vector<double>>(n + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) (*cmap)[n - 2 * k] = c[k];
  PolyFn f;
  f.degree = n;
  f.value = [&table, cmap, n](double x) {
    double prev = 0.0, cur = 1.0, acc = (*cmap)[0];
    for (int k = 0; k < n; ++k) {
      const double next = x * cur - (k >= 1 ? table.b[k] * prev : 0.0);
      prev = cur;
      cur = next;
      acc += (*cmap)[k + 1] * cur;
    }
    return acc;
  };
  f.deriv = [&table, cmap, n](double x) {
    double prev = 0.0, cur = 1.0, dprev = 0.0, dcur = 0.0, acc = 0.0;
    for (int k = 0; k < n; ++k) {
      const double b = (k >= 1) ? table.b[k] : 0.0;
      const double next = x * cur - b * prev;
      const double dnext = cur + x * dcur - b * dprev;
      prev = cur;
      cur = next;
      dprev = dcur;
      dcur = dnext;
      acc += (*cmap)[k + 1] * dcur;
    }
    return acc;
  };
  return f;
}

double sobolev_inner(const QuadRule& rule, const PolyFn& A, const PolyFn& B,
                     double lambda) {
  if (rule.tag != MeasureTag::freud_quartic)
    throw ArgumentError("sobolev_inner: rule must be a freud_quartic rule");
  if (2 * rule.size() - 1 < A.degree + B.degree)
    throw ResolutionError("sobolev_inner: rule not exact for deg(A*B) = " +
                          std::to_string(A.degree + B.degree));
  const std::size_t m = rule.nodes.size();
  std::vector<double> fa(m), fb(m);
  for (std::size_t i = 0; i < m; ++i) {
    fa[i] = A.value(rule.nodes[i]);
    fb[i] = B.value(rule.nodes[i]);
  }
  const auto& k = kernels::active();
  double acc = k.weighted_dot(rule.weights.data(), fa.data(), fb.data(), m);
  for (std::size_t i = 0; i < m; ++i) {
    fa[i] = A.deriv(rule.nodes[i]);
    fb[i] = B.deriv(rule.nodes[i]);
  }
  return acc + lambda * k.weighted_dot(rule.weights.data(), fa.data(),
                                       fb.data(), m);
}

// ---------------------------------------------------------------------------
// Gram-Schmidt oracle (exact-moment arithmetic)

std::vector<ext_real> gram_schmidt_oracle(const ext_real& lambda, int n,
                                          int digits) {
  if (digits < 50)
    throw ArgumentError("gram_schmidt_oracle: digits must be >= 50");
  if (n < 0 || n > 30)
    throw ArgumentError(
        "gram_schmidt_oracle: degree beyond the conditioning budget (n <= 30)");
  PrecisionGuard guard(static_cast<unsigned>(digits));

  const MomentTableT<ext_real> mom = compute_moments<ext_real>(2 * n);
  auto inner = [&](int i, int j) {
    ext_real v = mom.values[i + j];
    if (i >= 1 && j >= 1) v += lambda * i * j * mom.values[i + j - 2];
    return v;
  };

  std::vector<ext_real> coef(n + 1, ext_real(0));
  coef[n] = 1;
  if (n == 0) return coef;

  // parity: only monomials x^j with j = n (mod 2), j < n, couple to x^n
  std::vector<int> idx;
  for (int j = n % 2; j < n; j += 2) idx.push_back(j);
  const int m = static_cast<int>(idx.size());
  if (m == 0) return coef;  // n == 1: S_1 = x

  std::vector<std::vector<ext_real>> G(m, std::vector<ext_real>(m + 1));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) G[a][b] = inner(idx[a], idx[b]);
    G[a][m] = inner(idx[a], n);  // rhs
  }
  // Gaussian elimination with partial pivoting
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r)
      if (abs(G[r][col]) > abs(G[piv][col])) piv = r;
    std::swap(G[piv], G[col]);
    if (G[col][col] == 0)
      throw NumericError("gram_schmidt_oracle: singular Gram system");
    for (int r = col + 1; r < m; ++r) {
      ext_real f = G[r][col] / G[col][col];
      for (int cc = col; cc <= m; ++cc) G[r][cc] -= f * G[col][cc];
    }
  }
  std::vector<ext_real> sol(m);
  for (int r = m - 1; r >= 0; --r) {
    ext_real v = G[r][m];
    for (int cc = r + 1; cc < m; ++cc) v -= G[r][cc] * sol[cc];
    sol[r] = v / G[r][r];
  }
  for (int a = 0; a < m; ++a) coef[idx[a]] = -sol[a];
  return coef;
}

// ---------------------------------------------------------------------------
// Balance diagnostic

BalanceRecord balance_diagnostic(const CoeffTable& table,
                                 const LambdaSchedule& schedule, int n) {
  if (n < 3) throw ArgumentError("balance_diagnostic: n must be >= 3");
  if (n > table.max_degree())
    throw ArgumentError("balance_diagnostic: n exceeds coefficient table");
  const double lambda_n = schedule(n);
  const SobolevTable st = build_sobolev_table(table, lambda_n, n);

  // u0 = t0/||P_n||^2 = sum_k c_k^2 ||P_{n-2k}||^2/||P_n||^2, accumulated as
  // a product chain (all factors positive, geometrically decaying terms).
  double u0 = 1.0, term = 1.0;
  for (int m = n; m - 2 >= 1; m -= 2) {
    const double a = st.alpha[m - 2];
    if (a == 0.0) break;
    term *= (a * a) / (table.b[m] * table.b[m - 1]);
    if (term < 1e-18 * u0) break;
    u0 += term;
  }
  const double sn = st.s[n];
  if (!(sn > u0))
    throw NumericError("balance_diagnostic: derivative term vanished (t1 <= 0)");

  BalanceRecord rec;
  rec.n = n;
  rec.lambda_n = lambda_n;
  rec.log_t0 = std::log(u0) + table.log_norm_sq[n];
  rec.log_t1 = std::log(sn - u0) + table.log_norm_sq[n];
  rec.ratio = (sn - u0) / u0;
  return rec;
}

template SobolevTableT<double> build_sobolev_table<double>(
    const CoeffTableT<double>&, double, int);
template SobolevTableT<ext_real> build_sobolev_table<ext_real>(
    const CoeffTableT<ext_real>&, ext_real, int);

}  // namespace freud
