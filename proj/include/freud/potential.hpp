#pragma once

// Mhaskar-Rakhmanov-Saff numbers for even external fields, the conformal map
// phi(z) = z + sqrt(z^2-1), the Szego function of the rescaled quartic
// weight, and the balance-exponent calculator.

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "freud/errors.hpp"

namespace freud {

struct ExternalField {
  std::string name;
  std::function<double(double)> q_prime;                // Q'(x), odd increasing
  std::function<double(double)> q_second;               // Q''(x); may be empty
  std::function<double(double)> closed_form_mrs;        // n -> a_n; may be empty
};

// Q = x^4/2 (W = e^{-x^4/2}, so W^2 = e^{-x^4}): a_n = (4n/3)^{1/4}.
ExternalField quartic_field();
// Q = x^2/2: a_n = sqrt(2n).
ExternalField hermite_field();
// Q = c |x|^m: a_n = (n sqrt(pi) Gamma(m/2+1) / (c m Gamma((m+1)/2)))^{1/m}.
ExternalField power_field(double m, double c = 1.0);

// Positive root of n = (2/pi) int_0^1 a t Q'(a t)/sqrt(1-t^2) dt, via
// Chebyshev-Gauss quadrature, doubling/halving bracket and safeguarded Newton.
double mrs_number(const ExternalField& field, double n, double tol = 1e-12,
                  int cheb_nodes = 64);

struct MrsNumbers {
  std::vector<int> n;
  std::vector<double> a;  // strictly increasing in n
};
MrsNumbers mrs_table(const ExternalField& field, const std::vector<int>& grid,
                     double tol = 1e-12);

// z + sqrt(z-1) sqrt(z+1) with principal square roots; maps C \ [-1,1] onto
// the exterior of the unit circle; sqrt(z^2-1) > 0 for z > 1.
std::complex<double> phi(std::complex<double> z);

// log D_n(z) for the weight W^2 = e^{-x^4} rescaled to [-a, a]:
//   log D_n(z) = sqrt(z^2-a^2) (a^2 z/2 + z^3)/2 - z^4/2,
// evaluated through the series in w = a^2/z^2 for |w| small (the direct form
// cancels catastrophically at large |z|/a).
std::complex<double> szego_log(std::complex<double> z, double a);
std::complex<double> szego_fn(std::complex<double> z, double a);

// Oracle: Chebyshev-Gauss quadrature of the defining integral
//   log D_n(z) = sqrt(z^2-a^2)/(2 pi) int_{-a}^{a} -t^4 /((z-t) sqrt(a^2-t^2)) dt.
std::complex<double> szego_log_quad(std::complex<double> z, double a, int m = 256);

// W^{1/n}(a_{n+1} t) = exp(-a_{n+1}^4 t^4/(2n)) for the quartic field.
double rescaled_weight(int n, double t);
// its limit exp(-2 t^4/3)
double rescaled_weight_limit(double t);

enum class BalanceMode { standard, coherent_hermite };

struct BalanceExponent {
  double gamma;         // fitted growth a_n ~ c n^gamma
  double exponent;      // schedule exponent e: lambda_n ~ n^e
  double fit_residual;  // max LS residual of ln a_n vs ln n
  bool power_law;       // false => residual above threshold (warning)
};

// standard: lambda_n n^2 ~ a_{n+1}^2     => e = 2 gamma - 2
// coherent_hermite: lambda_n ~ a^4 n^-2  => e = 4 gamma - 2
BalanceExponent balance_exponent(const ExternalField& field, BalanceMode mode);

}  // namespace freud
