#pragma once

#include <optional>
#include <vector>

#include "ordhom/constraints.hpp"
#include "ordhom/ordered_graph.hpp"
#include "ordhom/solve_result.hpp"

namespace ordhom {

namespace detail {

// Minimum monotone proper mapping of g[vLo..vHi] into the clique on target
// indices [tLo..tHi], further restricted per vertex by `allowed`
// (allowed[v-1][t-1] over global targets; pass nullptr for no restriction).
// Only edges inside [vLo..vHi] are enforced. Single left-to-right pass:
// each vertex takes the least admissible target at least the previous
// vertex's value and strictly above every earlier in-range neighbor's
// value; this reaches the same fixpoint as exhaustively applying the
// edge/order update rules, in O(n + m) bound updates.
inline std::optional<std::vector<int>> clique_min_on_range(
    const OrderedGraph& g, int v_lo, int v_hi, int t_lo, int t_hi,
    const std::vector<std::vector<char>>* allowed) {
  if (v_lo > v_hi) return std::vector<int>{};
  std::vector<int> value(v_hi - v_lo + 1, 0);
  int prev = t_lo;
  for (int v = v_lo; v <= v_hi; ++v) {
    int floor = prev;
    for (int u : g.neighbors(v)) {
      if (u >= v) break;
      if (u >= v_lo && value[u - v_lo] >= floor) floor = value[u - v_lo] + 1;
    }
    int t = floor;
    if (allowed) {
      const auto& mask = (*allowed)[v - 1];
      while (t <= t_hi && !mask[t - 1]) ++t;
    }
    if (t > t_hi) return std::nullopt;
    value[v - v_lo] = t;
    prev = t;
  }
  return value;
}

inline std::vector<std::vector<char>> masks_from_bounds(
    const BoundsAssignment& bounds, int h) {
  std::vector<std::vector<char>> masks(bounds.size(),
                                       std::vector<char>(h, 0));
  for (int v = 1; v <= bounds.size(); ++v) {
    int lo = std::max(1, bounds.low[v - 1]);
    int hi = std::min(h, bounds.up[v - 1]);
    for (int t = lo; t <= hi; ++t) masks[v - 1][t - 1] = 1;
  }
  return masks;
}

}  // namespace detail

/// Solves the bounded problem with target K_h (every pair of distinct
/// targets adjacent). When feasible the witness is the pointwise-minimum
/// solution: f(v) <= f'(v) for every solution f' and every v.
inline SolveResult clique_min_solve(const OrderedGraph& g, int h,
                                    const BoundsAssignment& bounds) {
  if (bounds.size() != g.vertex_count())
    throw std::invalid_argument("bounds size does not match |V(G)|");
  auto masks = detail::masks_from_bounds(bounds, h);
  auto value =
      detail::clique_min_on_range(g, 1, g.vertex_count(), 1, h, &masks);
  if (!value) return SolveResult::none(Algorithm::CliqueMin);
  return SolveResult::found(OrderedMapping(std::move(*value)),
                            Algorithm::CliqueMin);
}

}  // namespace ordhom
