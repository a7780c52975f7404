#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "metzler/arc_ordering.hpp"
#include "metzler/digraph.hpp"
#include "metzler/errors.hpp"

namespace metzler {

/// Every matrix attached to a digraph's SIS system, under the canonical arc
/// order:
///   K, L     N x M terminus / origin incidence (rows = vertices), C = K - L
///   J        M x M inverse-pairing involution (zero on the singles block)
///   H        M x M non-backtracking matrix: H_ef = 1 iff t(e) = o(f), f != e^-1
///   b_diag, d1_diag, d2_diag, e_diag   per-arc beta_e, delta_o(e), delta_t(e),
///                                      and their sum gamma-less E = B' + D'1 + D'2
///   weighted_adjacency   N x N with (u,v) entry beta_uv for arcs (u,v)
///   matrix   the (N+M) x (N+M) Metzler matrix
///              [ -D        K B'        ]
///              [ D'2 L^T   H^T B' - E  ]
struct MetzlerAssembly {
  int n = 0;
  int m = 0;
  int m0 = 0;
  int m1 = 0;

  std::vector<Arc> arcs;      // canonical order
  Eigen::VectorXd beta;       // per canonical arc
  Eigen::VectorXd delta;      // per vertex
  std::vector<int> inverse;   // canonical index of e^-1, or -1

  Eigen::MatrixXd K, L, C, J, H;
  Eigen::VectorXd b_diag, d1_diag, d2_diag, e_diag;
  Eigen::MatrixXd weighted_adjacency;
  Eigen::MatrixXd matrix;
};

inline MetzlerAssembly assemble(const Digraph& g, const ArcOrdering& ord) {
  const int n = g.num_vertices();
  const int m = g.num_arcs();
  if (static_cast<int>(ord.from_canonical.size()) != m ||
      static_cast<int>(ord.to_canonical.size()) != m)
    throw StructureError("assemble: ordering does not match digraph");

  MetzlerAssembly a;
  a.n = n;
  a.m = m;
  a.m0 = ord.single_count();
  a.m1 = ord.pair_count();

  a.arcs.resize(static_cast<std::size_t>(m));
  a.beta.resize(m);
  a.delta.resize(n);
  a.inverse.assign(static_cast<std::size_t>(m), -1);
  for (int v = 0; v < n; ++v) a.delta[v] = g.delta(v);
  for (int pos = 0; pos < m; ++pos) {
    const int orig = ord.from_canonical[static_cast<std::size_t>(pos)];
    a.arcs[static_cast<std::size_t>(pos)] = g.arc(orig);
    a.beta[pos] = g.beta(orig);
    const int inv_orig = g.inverse_arc(orig);
    if (inv_orig >= 0)
      a.inverse[static_cast<std::size_t>(pos)] =
          ord.to_canonical[static_cast<std::size_t>(inv_orig)];
  }

  a.K = Eigen::MatrixXd::Zero(n, m);
  a.L = Eigen::MatrixXd::Zero(n, m);
  a.J = Eigen::MatrixXd::Zero(m, m);
  a.H = Eigen::MatrixXd::Zero(m, m);
  a.b_diag.resize(m);
  a.d1_diag.resize(m);
  a.d2_diag.resize(m);
  a.weighted_adjacency = Eigen::MatrixXd::Zero(n, n);

  for (int e = 0; e < m; ++e) {
    const Arc& arc = a.arcs[static_cast<std::size_t>(e)];
    a.K(arc.to, e) = 1.0;
    a.L(arc.from, e) = 1.0;
    a.b_diag[e] = a.beta[e];
    a.d1_diag[e] = a.delta[arc.from];
    a.d2_diag[e] = a.delta[arc.to];
    a.weighted_adjacency(arc.from, arc.to) = a.beta[e];
    if (a.inverse[static_cast<std::size_t>(e)] >= 0)
      a.J(e, a.inverse[static_cast<std::size_t>(e)]) = 1.0;
  }
  a.C = a.K - a.L;
  a.e_diag = a.b_diag + a.d1_diag + a.d2_diag;

  // H straight from its definition; the K^T L - J factorization is kept as a
  // cross-check, not used here.
  for (int e = 0; e < m; ++e)
    for (int f = 0; f < m; ++f)
      if (f != a.inverse[static_cast<std::size_t>(e)] &&
          a.arcs[static_cast<std::size_t>(e)].to == a.arcs[static_cast<std::size_t>(f)].from)
        a.H(e, f) = 1.0;

  a.matrix = Eigen::MatrixXd::Zero(n + m, n + m);
  a.matrix.topLeftCorner(n, n) = (-a.delta).asDiagonal();
  a.matrix.topRightCorner(n, m) = a.K * a.b_diag.asDiagonal();
  a.matrix.bottomLeftCorner(m, n) = a.d2_diag.asDiagonal() * a.L.transpose();
  a.matrix.bottomRightCorner(m, m) =
      a.H.transpose() * a.b_diag.asDiagonal();
  a.matrix.bottomRightCorner(m, m) -=
      Eigen::MatrixXd(a.e_diag.asDiagonal());

  if (!a.matrix.allFinite())
    throw InternalError("assemble: non-finite entry in the Metzler matrix");
  return a;
}

inline MetzlerAssembly assemble(const Digraph& g) {
  return assemble(g, arc_partition(g));
}

/// Smallest off-diagonal entry of the assembled matrix; >= 0 iff Metzler.
inline double min_offdiagonal(const Eigen::MatrixXd& x) {
  double lo = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      if (i != j) lo = std::min(lo, x(i, j));
  return std::isfinite(lo) ? lo : 0.0;
}

}  // namespace metzler
