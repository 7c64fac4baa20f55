#include "freud/potential.hpp"

#include <cmath>
#include <vector>

#include "freud/quadrature.hpp"

namespace freud {

ExternalField quartic_field() {
  ExternalField f;
  f.name = "freud4";
  f.q_prime = [](double x) { return 2.0 * x * x * x; };
  f.q_second = [](double x) { return 6.0 * x * x; };
  f.closed_form_mrs = [](double n) { return std::pow(4.0 * n / 3.0, 0.25); };
  return f;
}

ExternalField hermite_field() {
  ExternalField f;
  f.name = "hermite";
  f.q_prime = [](double x) { return x; };
  f.q_second = [](double) { return 1.0; };
  f.closed_form_mrs = [](double n) { return std::sqrt(2.0 * n); };
  return f;
}

ExternalField power_field(double m, double c) {
  if (!(m > 0) || !(c > 0))
    throw ArgumentError("power_field: m and c must be positive");
  ExternalField f;
  f.name = "power:" + std::to_string(m) + ":" + std::to_string(c);
  f.q_prime = [m, c](double x) {
    return c * m * std::copysign(std::pow(std::abs(x), m - 1.0), x);
  };
  f.q_second = [m, c](double x) {
    return c * m * (m - 1.0) * std::pow(std::abs(x), m - 2.0);
  };
  f.closed_form_mrs = [m, c](double n) {
    const double I = std::sqrt(M_PI) * std::tgamma(m / 2 + 1) /
                     std::tgamma((m + 1) / 2);
    return std::pow(n * I / (c * m), 1.0 / m);
  };
  return f;
}

double mrs_number(const ExternalField& field, double n, double tol,
                  int cheb_nodes) {
  if (!(n > 0)) throw ArgumentError("mrs_number: n must be positive");
  if (cheb_nodes < 4) throw ArgumentError("mrs_number: too few nodes");
  const QuadRule rule = gauss_chebyshev(cheb_nodes);

  // rhs(a) = (2/pi) int_0^1 a t Q'(a t)/sqrt(1-t^2) dt; the integrand is even
  // in t so the full symmetric rule divided by two applies.
  auto rhs = [&](double a) {
    double acc = 0.0;
    for (int k = 0; k < rule.size(); ++k) {
      const double t = rule.nodes[k];
      acc += rule.weights[k] * a * t * field.q_prime(a * t);
    }
    return acc / M_PI;  // (2/pi) * (1/2) * sum
  };
  auto drhs = [&](double a) {
    double acc = 0.0;
    for (int k = 0; k < rule.size(); ++k) {
      const double t = rule.nodes[k];
      acc += rule.weights[k] *
             (t * field.q_prime(a * t) +
              (field.q_second ? a * t * t * field.q_second(a * t) : 0.0));
    }
    return acc / M_PI;
  };

  // bracket by doubling/halving from a = 1 (rhs is increasing in a)
  double lo = 1.0, hi = 1.0;
  int budget = 0;
  while (rhs(hi) < n) {
    hi *= 2.0;
    if (++budget > 600)
      throw DomainError("mrs_number: no bracket found (field growth not admissible)");
  }
  while (rhs(lo) > n) {
    lo /= 2.0;
    if (++budget > 1200)
      throw DomainError("mrs_number: no bracket found (field growth not admissible)");
  }

  double a = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = rhs(a) - n;
    if (std::abs(f) <= tol * n) return a;
    if (f > 0)
      hi = a;
    else
      lo = a;
    double step;
    if (field.q_second) {
      step = f / drhs(a);
    } else {
      // secant-style slope from the bracket
      const double fh = rhs(hi) - n, fl = rhs(lo) - n;
      step = f * (hi - lo) / (fh - fl);
    }
    double next = a - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
    a = next;
  }
  throw ConvergenceError("mrs_number: did not reach tolerance",
                         std::abs(rhs(a) - n));
}

MrsNumbers mrs_table(const ExternalField& field, const std::vector<int>& grid,
                     double tol) {
  MrsNumbers t;
  t.n = grid;
  t.a.reserve(grid.size());
  double prev = 0.0;
  for (int n : grid) {
    const double a = mrs_number(field, n, tol);
    if (!(a > prev))
      throw NumericError("mrs_table: a_n failed to increase at n = " +
                         std::to_string(n));
    t.a.push_back(a);
    prev = a;
  }
  return t;
}

std::complex<double> phi(std::complex<double> z) {
  if (z.imag() == 0.0 && std::abs(z.real()) <= 1.0)
    throw DomainError("phi: z on the cut [-1,1]");
  return z + std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
}

std::complex<double> szego_log(std::complex<double> z, double a) {
  if (!(a > 0)) throw ArgumentError("szego_log: a must be positive");
  if (z.imag() == 0.0 && std::abs(z.real()) <= a)
    throw DomainError("szego_log: z on the cut [-a,a]");
  const std::complex<double> z2 = z * z;
  const std::complex<double> w = a * a / z2;  // small far from the cut
  if (std::abs(w) < 0.02) {
    // sqrt(1-w)(1+w/2) - 1 expanded: the direct form cancels two ~z^4/2 terms
    // down to O(a^4), losing all precision at large |z|/a.
    const std::complex<double> w2 = w * w;
    const std::complex<double> series =
        w2 * (3.0 / 8.0) + w2 * w * (1.0 / 8.0) + w2 * w2 * (9.0 / 128.0) +
        w2 * w2 * w * (3.0 / 64.0) + w2 * w2 * w2 * (35.0 / 1024.0);
    return -(z2 * z2 / 2.0) * series;
  }
  const std::complex<double> root = std::sqrt(z - a) * std::sqrt(z + a);
  return root * (a * a * z / 2.0 + z * z2) / 2.0 - z2 * z2 / 2.0;
}

std::complex<double> szego_fn(std::complex<double> z, double a) {
  return std::exp(szego_log(z, a));
}

std::complex<double> szego_log_quad(std::complex<double> z, double a, int m) {
  if (!(a > 0)) throw ArgumentError("szego_log_quad: a must be positive");
  if (z.imag() == 0.0 && std::abs(z.real()) <= a)
    throw DomainError("szego_log_quad: z on the cut [-a,a]");
  const QuadRule rule = gauss_chebyshev(m);
  // t = a u: int_{-a}^{a} -t^4/((z-t) sqrt(a^2-t^2)) dt
  //        = int_{-1}^{1} -(a u)^4/((z - a u) sqrt(1-u^2)) du
  const std::complex<double> integral = integrate(
      [&](double u) {
        const double au = a * u;
        const double au4 = au * au * au * au;
        return -au4 / (z - au);
      },
      rule);
  return std::sqrt(z - a) * std::sqrt(z + a) / (2.0 * M_PI) * integral;
}

double rescaled_weight(int n, double t) {
  if (n < 1) throw ArgumentError("rescaled_weight: n must be >= 1");
  if (!(std::abs(t) < 1.0)) throw ArgumentError("rescaled_weight: |t| must be < 1");
  const double a4 = 4.0 * (n + 1) / 3.0;  // a_{n+1}^4
  return std::exp(-a4 * t * t * t * t / (2.0 * n));
}

double rescaled_weight_limit(double t) {
  if (!(std::abs(t) < 1.0))
    throw ArgumentError("rescaled_weight_limit: |t| must be < 1");
  return std::exp(-2.0 * t * t * t * t / 3.0);
}

BalanceExponent balance_exponent(const ExternalField& field, BalanceMode mode) {
  // least squares on ln a_n = ln c + gamma ln n over three decades
  const double ns[3] = {1e2, 1e3, 1e4};
  double lx[3], ly[3];
  for (int i = 0; i < 3; ++i) {
    lx[i] = std::log(ns[i]);
    ly[i] = std::log(mrs_number(field, ns[i]));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < 3; ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double gamma = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
  const double icept = (sy - gamma * sx) / 3;
  double resid = 0;
  for (int i = 0; i < 3; ++i)
    resid = std::max(resid, std::abs(icept + gamma * lx[i] - ly[i]));

  BalanceExponent out;
  out.gamma = gamma;
  out.fit_residual = resid;
  out.power_law = resid <= 1e-3;
  out.exponent = (mode == BalanceMode::standard) ? 2 * gamma - 2 : 4 * gamma - 2;
  return out;
}

}  // namespace freud
