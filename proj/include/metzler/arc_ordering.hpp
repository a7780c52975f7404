#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "metzler/digraph.hpp"
#include "metzler/errors.hpp"

namespace metzler {

/// Canonical arc order: first the M0 arcs without an inverse, then the M1
/// pair representatives f_1..f_M1, then their inverses in matching order.
/// Within a class, ties break lexicographically by (origin, terminus); the
/// representative of a pair is its lexicographically smaller arc.
struct ArcOrdering {
  std::vector<int> singles;                 // original arc indices, M0 of them
  std::vector<std::pair<int, int>> pairs;   // (f, f_inverse) original indices
  std::vector<int> to_canonical;            // original index -> canonical position
  std::vector<int> from_canonical;          // canonical position -> original index

  int single_count() const { return static_cast<int>(singles.size()); }
  int pair_count() const { return static_cast<int>(pairs.size()); }
};

inline ArcOrdering arc_partition(const Digraph& g) {
  const int m = g.num_arcs();
  ArcOrdering ord;
  for (int e = 0; e < m; ++e) {
    const int inv = g.inverse_arc(e);
    if (inv < 0) {
      ord.singles.push_back(e);
    } else if (g.arc(e) < g.arc(inv)) {
      ord.pairs.emplace_back(e, inv);
    }
  }
  auto by_arc = [&](int a, int b) { return g.arc(a) < g.arc(b); };
  std::sort(ord.singles.begin(), ord.singles.end(), by_arc);
  std::sort(ord.pairs.begin(), ord.pairs.end(),
            [&](const auto& a, const auto& b) { return g.arc(a.first) < g.arc(b.first); });

  ord.from_canonical.reserve(static_cast<std::size_t>(m));
  for (int e : ord.singles) ord.from_canonical.push_back(e);
  for (const auto& p : ord.pairs) ord.from_canonical.push_back(p.first);
  for (const auto& p : ord.pairs) ord.from_canonical.push_back(p.second);
  ord.to_canonical.assign(static_cast<std::size_t>(m), -1);
  for (int pos = 0; pos < m; ++pos)
    ord.to_canonical[static_cast<std::size_t>(ord.from_canonical[static_cast<std::size_t>(pos)])] = pos;
  if (ord.single_count() + 2 * ord.pair_count() != m)
    throw InternalError("arc_partition: M != M0 + 2 M1");
  return ord;
}

}  // namespace metzler
