#pragma once

#include <optional>
#include <vector>

#include "ordhom/clique_lists.hpp"
#include "ordhom/constraints.hpp"
#include "ordhom/decomposition.hpp"
#include "ordhom/ordered_graph.hpp"
#include "ordhom/solve_result.hpp"

namespace ordhom {

namespace detail {

// Recursion over the segments of a shifted-clique decomposition. Works on
// prefixes of G (the guessed suffix X is always consumed by a direct clique
// solve) and carries per-vertex allowed-target masks over the global target
// indices. Cross edges from a prefix vertex to the suffix X are folded into
// the prefix masks by intersecting with the exact neighborhoods of the
// chosen suffix images; a lower bound alone is not sound here, because a
// segment vertex's neighborhood among earlier segments need not be a
// contiguous range.
class ShiftedSolver {
 public:
  ShiftedSolver(const OrderedGraph& g, const OrderedGraph& h,
                const ShiftedDecomposition& d)
      : g_(g), h_(h), d_(d) {
    const int hn = h.vertex_count();
    hadj_.assign(hn, std::vector<char>(hn, 0));
    for (const auto& [u, v] : h.edges()) {
      hadj_[u - 1][v - 1] = 1;
      hadj_[v - 1][u - 1] = 1;
    }
  }

  std::optional<std::vector<int>> run(
      const std::vector<std::vector<char>>& allowed, SolveStats& stats) {
    return solve_prefix(g_.vertex_count(), d_.segments(), allowed, stats);
  }

 private:
  // Solves G[1..v_hi] against the first t segments of H.
  std::optional<std::vector<int>> solve_prefix(
      int v_hi, int t, const std::vector<std::vector<char>>& allowed,
      SolveStats& stats) {
    if (v_hi == 0) return std::vector<int>{};
    if (t == 0) return std::nullopt;
    const int seg_lo = d_.segment_start(t);
    const int seg_hi = d_.segment_end(t);
    if (t == 1)
      return clique_min_on_range(g_, 1, v_hi, seg_lo, seg_hi, &allowed);

    // First try a solution that avoids the last segment entirely.
    {
      auto capped = allowed;
      cap_targets(capped, 1, v_hi, seg_lo - 1);
      if (auto res = solve_prefix(v_hi, t - 1, capped, stats)) return res;
    }

    // Guess the first vertex v mapped into the last segment; X is v and all
    // its successors. Candidates in increasing order, first success wins.
    for (int v = 1; v <= v_hi; ++v) {
      ++stats.recursion_branches;
      auto suffix =
          clique_min_on_range(g_, v, v_hi, seg_lo, seg_hi, &allowed);
      if (!suffix) continue;

      auto prefix_allowed = allowed;
      cap_targets(prefix_allowed, 1, v - 1, seg_lo - 1);
      for (int u = 1; u < v; ++u) {
        for (int w : g_.neighbors(u)) {
          if (w < v) continue;
          if (w > v_hi) break;
          const auto& nbr_mask = hadj_[(*suffix)[w - v] - 1];
          auto& mask = prefix_allowed[u - 1];
          for (int x = 0; x < seg_lo - 1; ++x) mask[x] &= nbr_mask[x];
        }
      }
      auto prefix = solve_prefix(v - 1, t - 1, prefix_allowed, stats);
      if (!prefix) continue;
      prefix->insert(prefix->end(), suffix->begin(), suffix->end());
      return prefix;
    }
    return std::nullopt;
  }

  static void cap_targets(std::vector<std::vector<char>>& allowed, int v_lo,
                          int v_hi, int max_target) {
    for (int v = v_lo; v <= v_hi; ++v)
      for (int x = max_target; x < static_cast<int>(allowed[v - 1].size());
           ++x)
        allowed[v - 1][x] = 0;
  }

  const OrderedGraph& g_;
  const OrderedGraph& h_;
  const ShiftedDecomposition& d_;
  std::vector<std::vector<char>> hadj_;
};

}  // namespace detail

/// Solves the bounded problem for a shifted-clique target. The
/// decomposition must be valid for H (input error otherwise). Runs in
/// n^O(k) * poly(h); with a single segment the returned witness is exactly
/// the clique_min_solve one.
inline SolveResult shifted_solve(const OrderedGraph& g, const OrderedGraph& h,
                                 const ShiftedDecomposition& d,
                                 const BoundsAssignment& bounds) {
  if (auto reason = check_shifted_decomposition(h, d); !reason.empty())
    throw std::invalid_argument("invalid shifted decomposition: " + reason);
  if (bounds.size() != g.vertex_count())
    throw std::invalid_argument("bounds size does not match |V(G)|");

  SolveStats stats;
  detail::ShiftedSolver solver(g, h, d);
  auto masks = detail::masks_from_bounds(bounds, h.vertex_count());
  auto result = solver.run(masks, stats);
  if (!result) return SolveResult::none(Algorithm::Shifted, stats);
  return SolveResult::found(OrderedMapping(std::move(*result)),
                            Algorithm::Shifted, stats);
}

}  // namespace ordhom
