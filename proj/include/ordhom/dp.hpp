#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "ordhom/ordered_graph.hpp"
#include "ordhom/pathwidth.hpp"
#include "ordhom/solve_result.hpp"

namespace ordhom {

namespace detail {

// Table-driven search for an ordered homomorphism, parameterized by the cut
// profile of H. An entry (u, i, xi) states: some monotone edge-preserving
// map f of the prefix G[1..u] has f(u) = v_i, and xi records f^{-1} of the
// tracked targets (the trimmed sets of layer i) as at most 2*width
// intervals, one per tracked target. Transitions append a whole
// independent interval of G mapped to a strictly later target, so the
// same-target case never needs unmemoized adjacency information: a
// preceding neighbor not recorded in xi either has no neighbors after
// layer j (A side trimmed exactly) and kills the transition, or is
// adjacent to everything after layer j (B side trimmed exactly) and
// passes.
class CutProfileSolver {
 public:
  // (g_lo, g_hi, target): interval of G vertices mapped to a tracked target
  using IntervalMap = std::vector<std::tuple<int, int, int>>;

  CutProfileSolver(const OrderedGraph& g, const OrderedGraph& h,
                   const CutProfile& profile)
      : g_(g), h_(h) {
    const int hn = h_.vertex_count();
    tracked_.assign(hn, std::vector<char>(hn, 0));
    a_exact_.assign(hn, 0);
    b_exact_.assign(hn, 0);
    for (int i = 1; i <= hn; ++i) {
      for (int v : profile.A_trim[i - 1]) tracked_[i - 1][v - 1] = 1;
      for (int v : profile.B_trim[i - 1]) tracked_[i - 1][v - 1] = 1;
      a_exact_[i - 1] = profile.A[i - 1] == profile.A_trim[i - 1];
      b_exact_[i - 1] = profile.B[i - 1] == profile.B_trim[i - 1];
    }
  }

  SolveResult solve() {
    const int n = g_.vertex_count();
    const int hn = h_.vertex_count();
    SolveStats stats;
    if (n == 0) {
      stats.dp_entries = 0;
      return SolveResult::found(OrderedMapping(std::vector<int>{}),
                                Algorithm::DynamicProgram, stats);
    }
    layers_.assign(n + 1, {});
    arena_.clear();

    // Base entries: the whole first interval [1..e] maps to v_i.
    for (int e = 1; e <= n && !has_neighbor_in(e, 1, e - 1); ++e)
      for (int i = 1; i <= hn; ++i)
        insert_entry(e, i, make_interval_map({}, 1, e, i), -1, 1);

    for (int u = 1; u < n; ++u) {
      for (const auto& [key, idx] : layers_[u]) {
        const auto& [j, xi] = key;
        for (int i = j + 1; i <= hn; ++i) {
          IntervalMap kept;
          for (const auto& iv : xi)
            if (tracked_[i - 1][std::get<2>(iv) - 1]) kept.push_back(iv);
          for (int e = u + 1; e <= n; ++e) {
            if (has_neighbor_in(e, u + 1, e - 1)) break;
            if (!back_edges_ok(e, u, j, xi, i)) break;
            insert_entry(e, i, make_interval_map(kept, u + 1, e, i), idx,
                         u + 1);
          }
        }
      }
    }

    stats.dp_entries = arena_.size();
    if (layers_[n].empty())
      return SolveResult::none(Algorithm::DynamicProgram, stats);
    int idx = layers_[n].begin()->second;
    std::vector<int> targets(n, 0);
    while (idx >= 0) {
      const Entry& entry = arena_[idx];
      for (int v = entry.interval_start; v <= entry.u; ++v)
        targets[v - 1] = entry.i;
      idx = entry.parent;
    }
    return SolveResult::found(OrderedMapping(std::move(targets)),
                              Algorithm::DynamicProgram, stats);
  }

 private:
  struct Entry {
    int u = 0;
    int i = 0;
    int parent = -1;
    int interval_start = 0;
  };

  bool has_neighbor_in(int v, int lo, int hi) const {
    for (int w : g_.neighbors(v)) {
      if (w > hi) break;
      if (w >= lo) return true;
    }
    return false;
  }

  // Edge constraints from vertex e (to be mapped to v_i) back into the
  // settled prefix [1..u] whose entry sits at layer j with map xi.
  bool back_edges_ok(int e, int u, int j, const IntervalMap& xi,
                     int i) const {
    for (int w : g_.neighbors(e)) {
      if (w > u) break;
      int tw = lookup(xi, w);
      if (tw != 0) {
        if (!h_.adjacent(tw, i)) return false;
      } else if (a_exact_[j - 1]) {
        // w's image has no neighbors after layer j, and i > j.
        return false;
      }
      // Otherwise B is trimmed exactly: w's image is adjacent to every
      // vertex after layer j, including v_i.
    }
    return true;
  }

  static int lookup(const IntervalMap& xi, int v) {
    for (const auto& [lo, hi, t] : xi)
      if (lo <= v && v <= hi) return t;
    return 0;
  }

  IntervalMap make_interval_map(IntervalMap kept, int lo, int hi,
                                int target) const {
    if (tracked_[target - 1][target - 1]) kept.emplace_back(lo, hi, target);
    return kept;
  }

  void insert_entry(int u, int i, IntervalMap xi, int parent,
                    int interval_start) {
    auto key = std::make_pair(i, std::move(xi));
    auto [it, inserted] = layers_[u].try_emplace(std::move(key), -1);
    if (!inserted) return;  // first derivation wins; fill order is fixed
    Entry entry;
    entry.u = u;
    entry.i = i;
    entry.parent = parent;
    entry.interval_start = interval_start;
    arena_.push_back(entry);
    it->second = static_cast<int>(arena_.size()) - 1;
  }

  const OrderedGraph& g_;
  const OrderedGraph& h_;
  std::vector<std::vector<char>> tracked_;  // per layer: membership in trim
  std::vector<char> a_exact_, b_exact_;
  std::vector<std::map<std::pair<int, IntervalMap>, int>> layers_;
  std::vector<Entry> arena_;
};

}  // namespace detail

/// Decides the plain problem via the cut-profile dynamic program. Agrees
/// with brute_force_solve on every input.
inline SolveResult dp_solve(const OrderedGraph& g, const OrderedGraph& h,
                            const CutProfile& profile) {
  if (static_cast<int>(profile.A.size()) != h.vertex_count())
    throw std::invalid_argument("profile does not match |V(H)|");
  detail::CutProfileSolver solver(g, h, profile);
  return solver.solve();
}

}  // namespace ordhom
