#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ordhom/ordered_graph.hpp"

namespace ordhom {

/// Cut data of a target graph H over every prefix position i in [1, h]:
///   A[i]: prefix vertices with a neighbor after position i,
///   B[i]: prefix vertices with a non-neighbor after position i,
///   width = max_i min(|A_i|, |B_i|),
///   stable_a[i] = least j >= i with |A_j| <= width (always exists since
///   A_h is empty), stable_b analogous,
///   A_trim[i] = A[stable_a[i]] restricted to the prefix, B_trim likewise.
/// Invariants |A_trim[i]| <= width, |B_trim[i]| <= width and
/// (A[i] == A_trim[i] or B[i] == B_trim[i]) are checked at construction.
struct CutProfile {
  int width = 0;
  std::vector<std::vector<int>> A, B;           // index i-1 holds position i
  std::vector<int> stable_a, stable_b;
  std::vector<std::vector<int>> A_trim, B_trim;
};

inline CutProfile compute_cut_profile(const OrderedGraph& h) {
  const int hn = h.vertex_count();
  CutProfile p;
  p.A.assign(hn, {});
  p.B.assign(hn, {});
  p.stable_a.assign(hn, 0);
  p.stable_b.assign(hn, 0);
  p.A_trim.assign(hn, {});
  p.B_trim.assign(hn, {});

  for (int i = 1; i <= hn; ++i) {
    for (int v = 1; v <= i; ++v) {
      const auto& nb = h.neighbors(v);
      int later_neighbors =
          static_cast<int>(nb.end() -
                           std::upper_bound(nb.begin(), nb.end(), i));
      if (later_neighbors > 0) p.A[i - 1].push_back(v);
      if (later_neighbors < hn - i) p.B[i - 1].push_back(v);
    }
  }
  for (int i = 1; i <= hn; ++i)
    p.width = std::max(p.width,
                       static_cast<int>(std::min(p.A[i - 1].size(),
                                                 p.B[i - 1].size())));

  for (int i = 1; i <= hn; ++i) {
    int ja = i, jb = i;
    while (ja <= hn && static_cast<int>(p.A[ja - 1].size()) > p.width) ++ja;
    while (jb <= hn && static_cast<int>(p.B[jb - 1].size()) > p.width) ++jb;
    // A_h and B_h are empty, so both indices exist for every i.
    if (ja > hn || jb > hn)
      throw std::logic_error("cut profile: stabilization index missing");
    p.stable_a[i - 1] = ja;
    p.stable_b[i - 1] = jb;
    for (int v : p.A[ja - 1])
      if (v <= i) p.A_trim[i - 1].push_back(v);
    for (int v : p.B[jb - 1])
      if (v <= i) p.B_trim[i - 1].push_back(v);
  }

  for (int i = 1; i <= hn; ++i) {
    if (static_cast<int>(p.A_trim[i - 1].size()) > p.width ||
        static_cast<int>(p.B_trim[i - 1].size()) > p.width)
      throw std::logic_error("cut profile: trimmed set exceeds width");
    if (p.A[i - 1] != p.A_trim[i - 1] && p.B[i - 1] != p.B_trim[i - 1])
      throw std::logic_error("cut profile: neither side stabilized");
  }
  return p;
}

/// The width parameter alone.
inline int cut_width(const OrderedGraph& h) {
  return compute_cut_profile(h).width;
}

}  // namespace ordhom
