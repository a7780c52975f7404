#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "metzler/errors.hpp"
#include "metzler/rng.hpp"

namespace metzler {

struct Arc {
  int from = 0;
  int to = 0;

  friend bool operator==(const Arc& a, const Arc& b) {
    return a.from == b.from && a.to == b.to;
  }
  friend bool operator<(const Arc& a, const Arc& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  }
};

/// A finite digraph with per-arc infection rates and per-vertex recovery
/// rates. Simple (no self-loops, no duplicate arcs), weakly connected,
/// all rates strictly positive. Immutable after construction.
class Digraph {
 public:
  Digraph(int n_vertices, std::vector<Arc> arcs, std::vector<double> beta,
          std::vector<double> delta)
      : n_(n_vertices),
        arcs_(std::move(arcs)),
        beta_(std::move(beta)),
        delta_(std::move(delta)) {
    validate();
    for (int e = 0; e < static_cast<int>(arcs_.size()); ++e) {
      index_[{arcs_[e].from, arcs_[e].to}] = e;
    }
  }

  Digraph(int n_vertices, std::vector<Arc> arcs, double beta, double delta)
      : Digraph(n_vertices, arcs, std::vector<double>(arcs.size(), beta),
                std::vector<double>(static_cast<std::size_t>(
                                        n_vertices > 0 ? n_vertices : 0),
                                    delta)) {}

  int num_vertices() const { return n_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }

  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int e) const { return arcs_[static_cast<std::size_t>(e)]; }

  double beta(int e) const { return beta_[static_cast<std::size_t>(e)]; }
  double delta(int v) const { return delta_[static_cast<std::size_t>(v)]; }
  const std::vector<double>& betas() const { return beta_; }
  const std::vector<double>& deltas() const { return delta_; }

  /// Index of arc (from, to), or -1 when absent.
  int find_arc(int from, int to) const {
    auto it = index_.find({from, to});
    return it == index_.end() ? -1 : it->second;
  }

  /// Index of the inverse arc of e, or -1 when absent.
  int inverse_arc(int e) const { return find_arc(arc(e).to, arc(e).from); }

  int out_degree(int v) const {
    int d = 0;
    for (const Arc& a : arcs_) d += (a.from == v);
    return d;
  }

  int in_degree(int v) const {
    int d = 0;
    for (const Arc& a : arcs_) d += (a.to == v);
    return d;
  }

  /// True when every arc has its inverse (the digraph is symmetric).
  bool is_symmetric() const {
    for (int e = 0; e < num_arcs(); ++e)
      if (inverse_arc(e) < 0) return false;
    return true;
  }

  bool has_constant_rates() const {
    for (double b : beta_)
      if (b != beta_.front()) return false;
    for (double d : delta_)
      if (d != delta_.front()) return false;
    return true;
  }

  /// Degree when the symmetric digraph underlies a regular graph, else -1.
  int regular_degree() const {
    if (!is_symmetric()) return -1;
    const int d0 = out_degree(0);
    for (int v = 1; v < n_; ++v)
      if (out_degree(v) != d0) return -1;
    return d0;
  }

 private:
  void validate() const {
    if (n_ < 1) throw ParseError("digraph: vertex count must be positive");
    if (beta_.size() != arcs_.size())
      throw ParseError("digraph: one beta per arc required");
    if (delta_.size() != static_cast<std::size_t>(n_))
      throw ParseError("digraph: one delta per vertex required");
    std::map<std::pair<int, int>, int> seen;
    for (const Arc& a : arcs_) {
      if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_)
        throw ParseError("digraph: arc endpoint out of range");
      if (a.from == a.to)
        throw SelfLoopError("digraph: self-loop at vertex " +
                            std::to_string(a.from));
      if (!seen.emplace(std::make_pair(a.from, a.to), 1).second)
        throw DuplicateArcError("digraph: duplicate arc (" +
                                std::to_string(a.from) + "," +
                                std::to_string(a.to) + ")");
    }
    for (double b : beta_)
      if (!(b > 0.0) || !std::isfinite(b))
        throw NonpositiveRateError("digraph: beta must be positive and finite");
    for (double d : delta_)
      if (!(d > 0.0) || !std::isfinite(d))
        throw NonpositiveRateError("digraph: delta must be positive and finite");
    if (!underlying_connected())
      throw DisconnectedError("digraph: underlying graph is not connected");
  }

  bool underlying_connected() const {
    if (n_ == 1) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    for (const Arc& a : arcs_) {
      adj[static_cast<std::size_t>(a.from)].push_back(a.to);
      adj[static_cast<std::size_t>(a.to)].push_back(a.from);
    }
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          q.push(w);
        }
      }
    }
    return reached == n_;
  }

  int n_;
  std::vector<Arc> arcs_;
  std::vector<double> beta_;
  std::vector<double> delta_;
  std::map<std::pair<int, int>, int> index_;
};

namespace detail {

inline void check_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  std::map<std::pair<int, int>, int> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge list: endpoint out of range");
    if (u == v) throw SelfLoopError("edge list: self-loop at " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.emplace(std::make_pair(key.first, key.second), 1).second)
      throw DuplicateArcError("edge list: duplicate edge {" + std::to_string(u) +
                              "," + std::to_string(v) + "}");
  }
}

}  // namespace detail

/// Symmetric digraph of a simple undirected graph: both orientations of
/// every edge, so M = 2 |edges|.
inline Digraph symmetrize(int n, const std::vector<std::pair<int, int>>& edges,
                          double beta, double delta) {
  detail::check_edge_list(n, edges);
  std::vector<Arc> arcs;
  arcs.reserve(2 * edges.size());
  for (auto [u, v] : edges) {
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  }
  return Digraph(n, std::move(arcs), beta, delta);
}

/// Undirected edges of the d-dimensional torus with given side, vertices
/// indexed row-major over (x_1, ..., x_d).
inline std::vector<std::pair<int, int>> torus_edges(int d, int side) {
  if (d < 1) throw ParseError("torus: dimension must be >= 1");
  if (side < 3)
    throw ParseError("torus: side must be >= 3 (side 2 would create parallel edges)");
  int nv = 1;
  for (int j = 0; j < d; ++j) nv *= side;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(nv));
  std::vector<int> x(static_cast<std::size_t>(d), 0);
  for (int idx = 0; idx < nv; ++idx) {
    int rem = idx;
    for (int j = d - 1; j >= 0; --j) {
      x[static_cast<std::size_t>(j)] = rem % side;
      rem /= side;
    }
    int stride = 1;
    for (int j = d - 1; j >= 0; --j) {
      const int xj = x[static_cast<std::size_t>(j)];
      const int nbr = idx + ((xj + 1) % side - xj) * stride;
      edges.emplace_back(idx, nbr);
      stride *= side;
    }
  }
  return edges;
}

/// Symmetric digraph of the finite torus T^d_side: side^d vertices,
/// 2 d side^d arcs.
inline Digraph build_torus(int d, int side, double beta, double delta) {
  auto edges = torus_edges(d, side);
  int nv = 1;
  for (int j = 0; j < d; ++j) nv *= side;
  return symmetrize(nv, edges, beta, delta);
}

inline Digraph single_arc(double beta, double delta) {
  return Digraph(2, {{0, 1}}, beta, delta);
}

inline Digraph directed_cycle(int n, double beta, double delta) {
  if (n < 3) throw ParseError("directed cycle: need n >= 3");
  std::vector<Arc> arcs;
  for (int v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
  return Digraph(n, std::move(arcs), beta, delta);
}

inline Digraph cycle_graph(int n, double beta, double delta) {
  if (n < 3) throw ParseError("cycle: need n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return symmetrize(n, edges, beta, delta);
}

inline Digraph complete_graph(int n, double beta, double delta) {
  if (n < 2) throw ParseError("complete graph: need n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return symmetrize(n, edges, beta, delta);
}

/// Petersen graph: outer 5-cycle, spokes, inner pentagram. 3-regular, N=10.
inline Digraph petersen_graph(double beta, double delta) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return symmetrize(10, edges, beta, delta);
}

struct RateRange {
  double lo = 0.1;
  double hi = 2.0;
};

/// Random weakly connected digraph on n vertices: a random arborescence with
/// random orientations guarantees connectivity; extra arcs (some of them
/// inverses of existing arcs) give a mix of paired and unpaired arcs.
inline Digraph random_connected_digraph(int n, std::uint64_t seed,
                                        const RateRange& beta_range,
                                        const RateRange& delta_range) {
  if (n < 2) throw ParseError("random digraph: need n >= 2");
  SplitMix64 rng(derive_stream(seed, 0x67726170));
  std::map<std::pair<int, int>, int> have;
  std::vector<Arc> arcs;
  auto add = [&](int u, int v) {
    if (u == v) return;
    if (have.emplace(std::make_pair(u, v), 1).second) arcs.push_back({u, v});
  };
  for (int v = 1; v < n; ++v) {
    const int p = rng.uniform_int(v);
    if (rng.uniform01() < 0.5)
      add(p, v);
    else
      add(v, p);
  }
  const double extra_prob = 1.5 / n;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng.uniform01() < extra_prob) add(u, v);
  // Pair up a fraction of arcs so both ordering classes are exercised.
  const std::size_t base = arcs.size();
  for (std::size_t e = 0; e < base; ++e)
    if (rng.uniform01() < 0.4) add(arcs[e].to, arcs[e].from);
  std::vector<double> beta(arcs.size()), delta(static_cast<std::size_t>(n));
  for (double& b : beta) b = rng.uniform(beta_range.lo, beta_range.hi);
  for (double& d : delta) d = rng.uniform(delta_range.lo, delta_range.hi);
  return Digraph(n, std::move(arcs), std::move(beta), std::move(delta));
}

inline Digraph random_connected_digraph(int n, std::uint64_t seed, double beta,
                                        double delta) {
  Digraph g = random_connected_digraph(n, seed, RateRange{1.0, 1.0},
                                       RateRange{1.0, 1.0});
  return Digraph(n, g.arcs(), beta, delta);
}

/// Parses the graph file schema:
///   { "n": int,
///     "arcs": [{"from": i, "to": j, "beta"?: x}, ...]   (xor "edges")
///     "edges": [{"u": i, "v": j, "beta"?: x}, ...],
///     "beta": global default, "delta": scalar or per-vertex list }
/// Edges expand to both orientations. Indices are 0-based.
inline Digraph load_digraph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph document: top level must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("graph document: integer field 'n' required");
  const int n = doc["n"].get<int>();
  const bool has_arcs = doc.contains("arcs");
  const bool has_edges = doc.contains("edges");
  if (has_arcs == has_edges)
    throw ParseError("graph document: exactly one of 'arcs'/'edges' required");
  const bool has_global_beta = doc.contains("beta");
  double global_beta = 0.0;
  if (has_global_beta) {
    if (!doc["beta"].is_number())
      throw ParseError("graph document: 'beta' must be a number");
    global_beta = doc["beta"].get<double>();
  }
  std::vector<Arc> arcs;
  std::vector<double> beta;
  auto item_beta = [&](const nlohmann::json& item) {
    if (item.contains("beta")) {
      if (!item["beta"].is_number())
        throw ParseError("graph document: per-element 'beta' must be a number");
      return item["beta"].get<double>();
    }
    if (!has_global_beta)
      throw ParseError("graph document: element without 'beta' and no global default");
    return global_beta;
  };
  if (has_arcs) {
    if (!doc["arcs"].is_array()) throw ParseError("graph document: 'arcs' must be a list");
    for (const auto& item : doc["arcs"]) {
      if (!item.is_object() || !item.contains("from") || !item.contains("to"))
        throw ParseError("graph document: arc needs 'from' and 'to'");
      arcs.push_back({item["from"].get<int>(), item["to"].get<int>()});
      beta.push_back(item_beta(item));
    }
  } else {
    if (!doc["edges"].is_array()) throw ParseError("graph document: 'edges' must be a list");
    for (const auto& item : doc["edges"]) {
      if (!item.is_object() || !item.contains("u") || !item.contains("v"))
        throw ParseError("graph document: edge needs 'u' and 'v'");
      const double b = item_beta(item);
      arcs.push_back({item["u"].get<int>(), item["v"].get<int>()});
      beta.push_back(b);
      arcs.push_back({item["v"].get<int>(), item["u"].get<int>()});
      beta.push_back(b);
    }
  }
  if (!doc.contains("delta"))
    throw ParseError("graph document: field 'delta' required");
  std::vector<double> delta;
  if (doc["delta"].is_number()) {
    delta.assign(static_cast<std::size_t>(n > 0 ? n : 0), doc["delta"].get<double>());
  } else if (doc["delta"].is_array()) {
    for (const auto& d : doc["delta"]) {
      if (!d.is_number()) throw ParseError("graph document: 'delta' list must be numeric");
      delta.push_back(d.get<double>());
    }
  } else {
    throw ParseError("graph document: 'delta' must be a number or a list");
  }
  return Digraph(n, std::move(arcs), std::move(beta), std::move(delta));
}

inline Digraph load_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_digraph(ss.str());
}

}  // namespace metzler
