#pragma once

#include <vector>

#include "ordhom/constraints.hpp"
#include "ordhom/enumerate.hpp"
#include "ordhom/mapping.hpp"
#include "ordhom/ordered_graph.hpp"
#include "ordhom/solve_result.hpp"

namespace ordhom {

namespace detail {

// Depth-first walk over all monotone maps in lexicographic order of the
// target vector, pruning prefixes that already violate an edge, list or
// bound constraint. Over an unconstrained instance this visits exactly the
// C(n+h-1, h-1) complete assignments, so the worst case matches plain
// enumeration (count times O(m) edge checks).
class HomomorphismSearch {
 public:
  HomomorphismSearch(const OrderedGraph& g, const OrderedGraph& h,
                     const ListAssignment* lists,
                     const BoundsAssignment* bounds)
      : g_(g), h_(h), lists_(lists), bounds_(bounds) {
    if (lists_ && lists_->size() != g_.vertex_count())
      throw std::invalid_argument(
          "list assignment size does not match |V(G)|");
    if (bounds_ && bounds_->size() != g_.vertex_count())
      throw std::invalid_argument("bounds size does not match |V(G)|");
    targets_.assign(g_.vertex_count(), 0);
  }

  // visit(targets) -> bool; return false to stop the search.
  template <typename Visitor>
  void run(Visitor&& visit) {
    if (g_.vertex_count() == 0) {
      ++nodes_;
      visit(targets_);
      return;
    }
    descend(1, 1, visit);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  template <typename Visitor>
  bool descend(int v, int floor, Visitor&& visit) {
    for (int t = floor; t <= h_.vertex_count(); ++t) {
      if (!admissible(v, t)) continue;
      ++nodes_;
      targets_[v - 1] = t;
      if (v == g_.vertex_count()) {
        if (!visit(targets_)) return false;
      } else if (!descend(v + 1, t, visit)) {
        return false;
      }
    }
    return true;
  }

  bool admissible(int v, int t) const {
    if (bounds_ && (t < bounds_->low[v - 1] || t > bounds_->up[v - 1]))
      return false;
    if (lists_ && !lists_->allows(v, t)) return false;
    for (int u : g_.neighbors(v)) {
      if (u >= v) break;  // later neighbors are checked when assigned
      if (!h_.adjacent(targets_[u - 1], t)) return false;
    }
    return true;
  }

  const OrderedGraph& g_;
  const OrderedGraph& h_;
  const ListAssignment* lists_;
  const BoundsAssignment* bounds_;
  std::vector<int> targets_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Ground-truth solver: exhaustive search over monotone maps. Feasible iff
/// some monotone map preserves edges and satisfies all constraints; the
/// witness is the lexicographically smallest such target vector.
inline SolveResult brute_force_solve(const OrderedGraph& g,
                                     const OrderedGraph& h,
                                     const ListAssignment* lists = nullptr,
                                     const BoundsAssignment* bounds = nullptr) {
  detail::HomomorphismSearch search(g, h, lists, bounds);
  std::optional<OrderedMapping> witness;
  search.run([&](const std::vector<int>& targets) {
    witness = OrderedMapping(targets);
    return false;
  });
  SolveStats stats;
  stats.candidates_enumerated = search.nodes();
  if (witness) return SolveResult::found(std::move(*witness),
                                         Algorithm::BruteForce, stats);
  return SolveResult::none(Algorithm::BruteForce, stats);
}

/// Visits every feasible mapping in lexicographic order; visit returns
/// false to stop early. Used by minimality and agreement tests.
template <typename Visitor>
void for_each_homomorphism(const OrderedGraph& g, const OrderedGraph& h,
                           const ListAssignment* lists,
                           const BoundsAssignment* bounds, Visitor&& visit) {
  detail::HomomorphismSearch search(g, h, lists, bounds);
  search.run([&](const std::vector<int>& targets) {
    return visit(OrderedMapping(targets));
  });
}

}  // namespace ordhom
