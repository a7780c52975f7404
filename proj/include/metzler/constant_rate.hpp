#pragma once

#include <array>

namespace metzler {
namespace constant_rate {

// Constant-rate specializations (beta_e = beta, delta_v = delta throughout).
// Every coefficient here is derived from the per-arc factored determinant
// under constant rates; the `ledger` command adjudicates these forms against
// direct determinants and records the rejected variants.

/// Per-pair factor G(u) = (1 + (beta+2delta) u)^2 - beta^2 u^2
///                      = (1 + 2 delta u)(1 + 2(beta+delta) u).
template <class T>
T pair_factor(double beta, double delta, T u) {
  return (1.0 + 2.0 * delta * u) * (1.0 + 2.0 * (beta + delta) * u);
}

/// Coefficient of the adjacency matrix in the reduced vertex determinant:
/// b(u) = u beta (1 + 2 delta u)(1 + (beta + 2 delta) u).
template <class T>
T adjacency_factor(double beta, double delta, T u) {
  return u * beta * (1.0 + 2.0 * delta * u) * (1.0 + (beta + 2.0 * delta) * u);
}

/// Scalar multiplying the identity in the reduced determinant of a
/// degree-regular graph:
/// c(u) = (1 + 2 delta u) [ (1 + delta u)(1 + 2(beta+delta) u)
///                          + degree beta^2 u^2 ].
template <class T>
T regular_vertex_factor(double beta, double delta, int degree, T u) {
  return (1.0 + 2.0 * delta * u) *
         ((1.0 + delta * u) * (1.0 + 2.0 * (beta + delta) * u) +
          static_cast<double>(degree) * beta * beta * u * u);
}

/// Coefficients {c2, c1, c0} of the cubic
/// lambda^3 + c2 lambda^2 + c1 lambda + c0 attached to an adjacency
/// eigenvalue mu of a degree-regular graph.
inline std::array<double, 3> eigen_cubic(double beta, double delta, int degree,
                                         double mu) {
  const double d = static_cast<double>(degree);
  const double c2 = 2.0 * beta + 5.0 * delta - beta * mu;
  const double c1 = 2.0 * delta * (3.0 * beta + 4.0 * delta) + d * beta * beta -
                    beta * (beta + 4.0 * delta) * mu;
  const double c0 =
      2.0 * delta * (2.0 * delta * (beta + delta) + d * beta * beta -
                     beta * (beta + 2.0 * delta) * mu);
  return {c2, c1, c0};
}

/// Roots of the pair factor in eigenvalue form,
/// lambda^2 + 2(beta+2delta) lambda + 4 delta (beta+delta).
inline std::array<double, 2> quadratic_roots(double beta, double delta) {
  return {-2.0 * delta, -2.0 * (beta + delta)};
}

}  // namespace constant_rate
}  // namespace metzler
