#pragma once

// Gauss rules: Golub-Welsch on the Jacobi matrix of exp(-x^4) dx, and
// first-kind Chebyshev-Gauss rules for 1/sqrt(1-t^2) kernels.

#include <complex>
#include <vector>

#include "freud/coeffs.hpp"

namespace freud {

enum class MeasureTag { freud_quartic, chebyshev_first_kind };

struct QuadRule {
  std::vector<double> nodes;    // strictly increasing, symmetric about 0
  std::vector<double> weights;  // positive; sum = mu_0 (freud) or pi (chebyshev)
  MeasureTag tag;

  int size() const { return static_cast<int>(nodes.size()); }
};

// m-point rule exact for polynomials of degree <= 2m-1 against exp(-x^4) dx.
QuadRule gauss_freud(const CoeffTable& table, int m);

// nodes cos((2k-1)pi/2m), weights pi/m; integrates f against 1/sqrt(1-t^2).
QuadRule gauss_chebyshev(int m);

// Deterministic weighted sum over ascending node index.
template <class F>
std::complex<double> integrate(F&& f, const QuadRule& rule) {
  std::complex<double> acc = 0.0;
  for (int k = 0; k < rule.size(); ++k) {
    std::complex<double> v = f(rule.nodes[k]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw EvaluationError("integrate: non-finite integrand at node " +
                            std::to_string(k) + " (x = " +
                            std::to_string(rule.nodes[k]) + ")");
    acc += rule.weights[k] * v;
  }
  return acc;
}

// Real-valued fast path used by the Sobolev inner product; pre-evaluated
// integrand values, summed with the dispatched kernel.
double integrate_values(const QuadRule& rule, const std::vector<double>& fvals);

}  // namespace freud
