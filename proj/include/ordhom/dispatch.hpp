#pragma once

#include <stdexcept>

#include "ordhom/brute_force.hpp"
#include "ordhom/decomposition.hpp"
#include "ordhom/dp.hpp"
#include "ordhom/pathwidth.hpp"
#include "ordhom/shifted.hpp"
#include "ordhom/solve_result.hpp"

namespace ordhom {

enum class AlgoChoice { Auto, Brute, Shifted, Dp };

namespace detail {

// Dispatch thresholds for Auto: the shifted recursion costs n^O(k), the
// dynamic program n^O(width).
inline constexpr int kAutoShiftedMaxSegments = 3;
inline constexpr int kAutoDpMaxWidth = 2;

}  // namespace detail

/// Front door for all solvers. Auto picks the shifted recursion when the
/// target decomposes into few segments and only bound constraints are
/// present, the dynamic program when the cut width is small and no
/// constraints are present, and otherwise falls back to exhaustive search.
/// Every returned witness is re-validated before returning.
inline SolveResult solve(const OrderedGraph& g, const OrderedGraph& h,
                         const ListAssignment* lists = nullptr,
                         const BoundsAssignment* bounds = nullptr,
                         AlgoChoice algo = AlgoChoice::Auto) {
  SolveResult result;
  switch (algo) {
    case AlgoChoice::Brute:
      result = brute_force_solve(g, h, lists, bounds);
      break;
    case AlgoChoice::Shifted: {
      if (lists)
        throw std::invalid_argument(
            "shifted solver supports bounds, not lists");
      auto d = find_shifted_decomposition(h);
      if (!d)
        throw std::invalid_argument(
            "target admits no shifted-clique decomposition");
      auto b = bounds ? *bounds
                      : BoundsAssignment::full(g.vertex_count(),
                                               h.vertex_count());
      result = shifted_solve(g, h, *d, b);
      break;
    }
    case AlgoChoice::Dp: {
      if (lists || bounds)
        throw std::invalid_argument(
            "dp solver supports neither lists nor bounds");
      result = dp_solve(g, h, compute_cut_profile(h));
      break;
    }
    case AlgoChoice::Auto: {
      if (!lists) {
        auto d = find_shifted_decomposition(h);
        if (d && d->segments() <= detail::kAutoShiftedMaxSegments) {
          auto b = bounds ? *bounds
                          : BoundsAssignment::full(g.vertex_count(),
                                                   h.vertex_count());
          result = shifted_solve(g, h, *d, b);
          break;
        }
        if (!bounds) {
          auto profile = compute_cut_profile(h);
          if (profile.width <= detail::kAutoDpMaxWidth) {
            result = dp_solve(g, h, profile);
            break;
          }
        }
      }
      result = brute_force_solve(g, h, lists, bounds);
      break;
    }
  }
  if (result.feasible !=
      (result.witness.has_value() &&
       is_valid_homomorphism(g, h, *result.witness, lists, bounds)))
    throw std::logic_error("solver returned an inconsistent result");
  return result;
}

}  // namespace ordhom
