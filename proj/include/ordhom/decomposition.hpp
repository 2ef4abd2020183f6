#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordhom/ordered_graph.hpp"

namespace ordhom {

/// A partition of V(H) into consecutive segments V_1 < ... < V_k, stored as
/// the end position of each segment (increasing, last entry = h). A valid
/// decomposition has every segment inducing a clique and, within every
/// segment after the first, back-neighborhoods nested downward: for u < u'
/// in the same segment, N(u') among earlier-segment vertices is a subset of
/// N(u) there.
struct ShiftedDecomposition {
  std::vector<int> segment_ends;

  int segments() const { return static_cast<int>(segment_ends.size()); }

  int segment_start(int k) const {  // k is 1-based
    return k == 1 ? 1 : segment_ends[k - 2] + 1;
  }
  int segment_end(int k) const { return segment_ends[k - 1]; }
};

namespace detail {

// Incremental feasibility: vertex e may be appended to the already-feasible
// segment [s, e-1] with prefix [1, s-1]. Nesting only needs checking on the
// consecutive pair (e-1, e); subset-ness is transitive along the segment.
inline bool can_append(const OrderedGraph& h, int s, int e) {
  for (int u = s; u < e; ++u)
    if (!h.adjacent(u, e)) return false;  // clique check against new end
  if (s > 1 && e > s) {
    for (int w = 1; w < s; ++w)
      if (h.adjacent(e, w) && !h.adjacent(e - 1, w)) return false;
  }
  return true;
}

}  // namespace detail

/// Empty string when valid, otherwise a description of the violated
/// condition (used verbatim in error messages).
inline std::string check_shifted_decomposition(const OrderedGraph& h,
                                               const ShiftedDecomposition& d) {
  const int hn = h.vertex_count();
  int prev_end = 0;
  for (int end : d.segment_ends) {
    if (end <= prev_end || end > hn) return "segment boundaries out of order";
    prev_end = end;
  }
  if (prev_end != hn) return "segments do not cover all vertices";

  for (int k = 1; k <= d.segments(); ++k) {
    int s = d.segment_start(k), e = d.segment_end(k);
    for (int u = s; u <= e; ++u)
      for (int v = u + 1; v <= e; ++v)
        if (!h.adjacent(u, v))
          return "segment " + std::to_string(k) + " (vertices " +
                 std::to_string(s) + ".." + std::to_string(e) +
                 ") does not induce a clique";
    if (k > 1) {
      for (int u = s; u <= e; ++u)
        for (int v = u + 1; v <= e; ++v)
          for (int w = 1; w < s; ++w)
            if (h.adjacent(v, w) && !h.adjacent(u, w))
              return "nesting violated in segment " + std::to_string(k) +
                     ": vertex " + std::to_string(v) +
                     " has earlier neighbor " + std::to_string(w) +
                     " that vertex " + std::to_string(u) + " lacks";
    }
  }
  return "";
}

inline bool is_valid_shifted_decomposition(const OrderedGraph& h,
                                           const ShiftedDecomposition& d) {
  return check_shifted_decomposition(h, d).empty();
}

/// Finds a decomposition with the minimum number of segments. Greedy
/// longest-feasible-prefix: segment feasibility only depends on its
/// endpoints, is closed under shortening from the right, and is stable
/// under shortening from the left (any dropped vertex joins the prefix as a
/// common clique neighbor), so maximal extension is optimal. Singleton
/// segments are always feasible, hence a decomposition always exists; the
/// optional return is kept for interface totality.
inline std::optional<ShiftedDecomposition> find_shifted_decomposition(
    const OrderedGraph& h) {
  const int hn = h.vertex_count();
  ShiftedDecomposition d;
  int s = 1;
  while (s <= hn) {
    int e = s;
    while (e + 1 <= hn && detail::can_append(h, s, e + 1)) ++e;
    d.segment_ends.push_back(e);
    s = e + 1;
  }
  return d;
}

}  // namespace ordhom
