#include "freud/poly_engine.hpp"

#include <cmath>

namespace freud {

namespace {

constexpr double kRescaleHi = 0x1p512;
constexpr double kRescaleLo = 0x1p-512;

inline std::complex<double> ldexp_c(std::complex<double> v, int k) {
  return {std::ldexp(v.real(), k), std::ldexp(v.imag(), k)};
}

inline double max_abs_part(std::complex<double> a, std::complex<double> b) {
  return std::max(std::max(std::abs(a.real()), std::abs(a.imag())),
                  std::max(std::abs(b.real()), std::abs(b.imag())));
}

void check_degree(const CoeffTable& table, int n) {
  if (n < 0 || n > table.max_degree())
    throw ArgumentError("poly_engine: degree " + std::to_string(n) +
                        " out of table range");
}

// Runs the recurrence pair (P_k, P_{k-1}) with a shared power-of-two
// exponent, invoking sink(k, p_k, p_km1, exponent) after each step.
template <class Sink>
void run_recurrence(const CoeffTable& table, int n, std::complex<double> z,
                    Sink&& sink) {
  std::complex<double> p = 1.0, p_prev = 0.0;
  long e = 0;
  sink(0, p, p_prev, e);
  for (int k = 0; k < n; ++k) {
    std::complex<double> p_next = z * p - (k >= 1 ? table.b[k] * p_prev : 0.0);
    p_prev = p;
    p = p_next;
    const double m = max_abs_part(p, p_prev);
    if (m > kRescaleHi) {
      p = ldexp_c(p, -512);
      p_prev = ldexp_c(p_prev, -512);
      e += 512;
    } else if (m < kRescaleLo && m > 0.0) {
      p = ldexp_c(p, 512);
      p_prev = ldexp_c(p_prev, 512);
      e -= 512;
    }
    sink(k + 1, p, p_prev, e);
  }
}

}  // namespace

ScaledValue ScaledValue::from(std::complex<double> v, long exponent) {
  const double a = std::abs(v);
  if (a == 0.0) return {{0.0, 0.0}, 0};
  const int k = std::ilogb(a);  // 2^k <= |v| < 2^(k+1)
  return {ldexp_c(v, -k), exponent + k};
}

std::complex<double> sv_ratio(const ScaledValue& num, const ScaledValue& den) {
  if (den.is_zero()) throw ScaleError("sv_ratio: division by zero value");
  if (num.is_zero()) return 0.0;
  const long d = num.exponent - den.exponent;
  if (d > 1000) throw ScaleError("sv_ratio: quotient exceeds double range");
  if (d < -1060) return 0.0;
  return ldexp_c(num.mantissa / den.mantissa, static_cast<int>(d));
}

ScaledValue sv_add(const ScaledValue& a, const ScaledValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const ScaledValue& hi = (a.exponent >= b.exponent) ? a : b;
  const ScaledValue& lo = (a.exponent >= b.exponent) ? b : a;
  const long d = lo.exponent - hi.exponent;
  if (d < -1060) return hi;  // addend below representable contribution
  return ScaledValue::from(
      hi.mantissa + ldexp_c(lo.mantissa, static_cast<int>(d)), hi.exponent);
}

ScaledValue sv_scale(const ScaledValue& a, std::complex<double> c) {
  if (a.is_zero() || c == std::complex<double>(0.0, 0.0)) return {{0.0, 0.0}, 0};
  return ScaledValue::from(a.mantissa * c, a.exponent);
}

PolyValue eval_p(const CoeffTable& table, int n, std::complex<double> z) {
  check_degree(table, n);
  // anchored closed forms
  if (n == 0) return {ScaledValue::from(1.0), ScaledValue::from(0.0)};
  if (n == 1) return {ScaledValue::from(z), ScaledValue::from(1.0)};
  if (n == 2)
    return {ScaledValue::from(z * z - table.b[1]), ScaledValue::from(z)};

  PolyValue out;
  run_recurrence(table, n, z,
                 [&](int k, std::complex<double> p, std::complex<double> pm1,
                     long e) {
                   if (k == n) {
                     out.p_n = ScaledValue::from(p, e);
                     out.p_nm1 = ScaledValue::from(pm1, e);
                   }
                 });
  return out;
}

std::vector<ScaledValue> eval_p_sequence(const CoeffTable& table, int n,
                                         std::complex<double> z) {
  check_degree(table, n);
  std::vector<ScaledValue> seq(n + 1);
  run_recurrence(table, n, z,
                 [&](int k, std::complex<double> p,
                     [[maybe_unused]] std::complex<double> pm1, long e) {
                   seq[k] = ScaledValue::from(p, e);
                 });
  return seq;
}

ScaledValue eval_p_derivative(const CoeffTable& table, int n,
                              std::complex<double> z) {
  check_degree(table, n);
  if (n == 0) return ScaledValue::from(0.0);
  if (n == 1) return ScaledValue::from(1.0);
  if (n == 2) return ScaledValue::from(2.0 * z);

  ScaledValue p_nm1, p_nm3;
  run_recurrence(table, n, z,
                 [&](int k, [[maybe_unused]] std::complex<double> p,
                     std::complex<double> pm1, long e) {
                   if (k == n) {
                     p_nm1 = ScaledValue::from(pm1, e);
                   } else if (k == n - 2) {
                     p_nm3 = ScaledValue::from(pm1, e);
                   }
                 });
  const double c = 4.0 * table.b[n] * table.b[n - 1] * table.b[n - 2];
  return sv_add(sv_scale(p_nm1, static_cast<double>(n)), sv_scale(p_nm3, c));
}

ScaledValue eval_p_normalized(const CoeffTable& table, int n,
                              std::complex<double> z) {
  check_degree(table, n);
  const PolyValue pv = eval_p(table, n, z);
  if (pv.p_n.is_zero()) return pv.p_n;
  // split exp(-0.5 ln||P_n||^2) into a power of two and an O(1) factor
  const double lg2 = -0.5 * table.log_norm_sq[n] / M_LN2;
  const double e2 = std::floor(lg2);
  if (std::abs(e2) > 1e15)
    throw ScaleError("eval_p_normalized: exponent outside scaled range");
  const double frac = std::exp2(lg2 - e2);  // in [1, 2)
  ScaledValue out = ScaledValue::from(pv.p_n.mantissa * frac, pv.p_n.exponent);
  out.exponent += static_cast<long>(e2);
  return out;
}

}  // namespace freud
