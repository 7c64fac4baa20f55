#include "freud/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace freud {

QuadRule gauss_freud(const CoeffTable& table, int m) {
  if (m < 1) throw ArgumentError("gauss_freud: m must be >= 1");
  if (m > table.max_degree())
    throw ArgumentError("gauss_freud: m exceeds coefficient table length");

  const double mu0 = std::exp(table.log_norm_sq[0]);

  QuadRule rule;
  rule.tag = MeasureTag::freud_quartic;
  if (m == 1) {
    rule.nodes = {0.0};
    rule.weights = {mu0};
    return rule;
  }

  // Symmetric Jacobi matrix: zero diagonal (even weight), off-diagonal
  // sqrt(b_k). Nodes = eigenvalues. Weights from the Christoffel function
  // 1/sum_j p_j(x_k)^2 (orthonormal recurrence): the first-eigenvector
  // formula loses all relative accuracy at the outer nodes, where the
  // component is exponentially small against the absolute eigensolver error.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
  for (int k = 1; k < m; ++k) {
    const double off = std::sqrt(table.b[k]);
    J(k - 1, k) = off;
    J(k, k - 1) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericError("gauss_freud: eigensolver failed to converge");

  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int i = 0; i < m; ++i) rule.nodes[i] = es.eigenvalues()[i];
  std::sort(rule.nodes.begin(), rule.nodes.end());
  for (int i = 0; i < m; ++i) {
    const double x = rule.nodes[i];
    double pm1 = 0.0, p = 1.0 / std::sqrt(mu0), acc = p * p;
    for (int j = 1; j < m; ++j) {
      const double off_j = std::sqrt(table.b[j]);
      const double off_jm1 = (j >= 2) ? std::sqrt(table.b[j - 1]) : 0.0;
      const double next = (x * p - off_jm1 * pm1) / off_j;
      pm1 = p;
      p = next;
      acc += p * p;
    }
    if (!std::isfinite(acc))
      throw NumericError("gauss_freud: Christoffel sum overflowed (m too large)");
    rule.weights[i] = 1.0 / acc;
  }
  // Enforce exact node symmetry (the spectrum is symmetric analytically).
  for (int i = 0, j = m - 1; i < j; ++i, --j) {
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.weights[i] = rule.weights[j] = w;
  }
  if (m % 2) rule.nodes[m / 2] = 0.0;
  return rule;
}

QuadRule gauss_chebyshev(int m) {
  if (m < 1) throw ArgumentError("gauss_chebyshev: m must be >= 1");
  QuadRule rule;
  rule.tag = MeasureTag::chebyshev_first_kind;
  rule.nodes.resize(m);
  rule.weights.assign(m, M_PI / m);
  // cos((2k-1)pi/2m), k = 1..m, mirrored for exact symmetry, ascending.
  for (int k = 1; k <= m / 2; ++k) {
    const double x = std::cos((2 * k - 1) * M_PI / (2 * m));
    rule.nodes[k - 1] = -x;
    rule.nodes[m - k] = x;
  }
  if (m % 2) rule.nodes[m / 2] = 0.0;
  return rule;
}

double integrate_values(const QuadRule& rule, const std::vector<double>& fvals) {
  if (fvals.size() != rule.nodes.size())
    throw ArgumentError("integrate_values: size mismatch");
  return kernels::active().dot(rule.weights.data(), fvals.data(), fvals.size());
}

}  // namespace freud
