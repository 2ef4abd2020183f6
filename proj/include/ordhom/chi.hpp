#pragma once

#include "ordhom/ordered_graph.hpp"

namespace ordhom {

/// Ordered chromatic number: the minimum number of disjoint independent
/// intervals partitioning V(G), equivalently the least k with G -> K_k.
/// Left-to-right greedy: a new interval starts at v exactly when v has a
/// neighbor inside the current interval. Returns 0 for the empty graph.
inline int ordered_chromatic_number(const OrderedGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  int intervals = 1;
  int start = 1;  // first vertex of the current interval
  for (int v = 2; v <= n; ++v) {
    bool conflict = false;
    for (int u : g.neighbors(v)) {
      if (u >= v) break;
      if (u >= start) {
        conflict = true;
        break;
      }
    }
    if (conflict) {
      ++intervals;
      start = v;
    }
  }
  return intervals;
}

}  // namespace ordhom
