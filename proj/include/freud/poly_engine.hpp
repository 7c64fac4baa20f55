#pragma once

// Overflow-safe evaluation of P_n and P'_n at complex points. Values are
// carried as mantissa * 2^exponent with |mantissa| in [1,2); the recurrence
// pair is rescaled by powers of two whenever it leaves [2^-512, 2^512], so
// no log-space phase is ever taken.

#include <complex>
#include <vector>

#include "freud/coeffs.hpp"

namespace freud {

struct ScaledValue {
  std::complex<double> mantissa{0.0, 0.0};  // |mantissa| in [1,2) or 0
  long exponent = 0;

  bool is_zero() const { return mantissa == std::complex<double>(0.0, 0.0); }

  // value as a plain complex; overflows/underflows outside double range
  std::complex<double> value() const {
    return {std::ldexp(mantissa.real(), static_cast<int>(exponent)),
            std::ldexp(mantissa.imag(), static_cast<int>(exponent))};
  }

  // principal complex log of the value
  std::complex<double> log() const {
    return std::log(mantissa) + std::complex<double>(exponent * M_LN2, 0.0);
  }
  double log_abs() const { return std::log(std::abs(mantissa)) + exponent * M_LN2; }

  static ScaledValue from(std::complex<double> v, long exponent = 0);
};

// num/den as a plain complex. ScaleError if the result is not representable.
std::complex<double> sv_ratio(const ScaledValue& num, const ScaledValue& den);

// a + b and c*a in scaled arithmetic.
ScaledValue sv_add(const ScaledValue& a, const ScaledValue& b);
ScaledValue sv_scale(const ScaledValue& a, std::complex<double> c);

struct PolyValue {
  ScaledValue p_n;    // P_n(z)
  ScaledValue p_nm1;  // P_{n-1}(z)
};

// Three-term recurrence P_{k+1} = z P_k - b_k P_{k-1}; closed forms for n <= 2.
PolyValue eval_p(const CoeffTable& table, int n, std::complex<double> z);

// All of P_0(z)..P_n(z), scaled. O(n) time and memory.
std::vector<ScaledValue> eval_p_sequence(const CoeffTable& table, int n,
                                         std::complex<double> z);

// Structure relation P'_n = n P_{n-1} + 4 b_n b_{n-1} b_{n-2} P_{n-3} (n >= 3);
// direct forms for n <= 2.
ScaledValue eval_p_derivative(const CoeffTable& table, int n,
                              std::complex<double> z);

// P_n(z)/||P_n|| combined in log/scale space. Returned scaled: the
// normalized magnitude itself exceeds double range once n ln|phi(z/a_n)|
// passes ~709 (already at n = 5000, z = 2i).
ScaledValue eval_p_normalized(const CoeffTable& table, int n,
                              std::complex<double> z);

}  // namespace freud
