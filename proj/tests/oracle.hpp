#pragma once

// Independent reference implementations used only by tests. Each one is
// written against the definitions directly, with no code shared with the
// library paths it checks.

#include <algorithm>
#include <optional>
#include <vector>

#include "ordhom/constraints.hpp"
#include "ordhom/decomposition.hpp"
#include "ordhom/enumerate.hpp"
#include "ordhom/mapping.hpp"
#include "ordhom/mis.hpp"
#include "ordhom/ordered_graph.hpp"
#include "ordhom/rng.hpp"
#include "ordhom/structure.hpp"

namespace oracle {

using namespace ordhom;

// Direct restatement of the homomorphism conditions, checked pairwise.
inline bool reference_valid(const OrderedGraph& g, const OrderedGraph& h,
                            const std::vector<int>& f,
                            const ListAssignment* lists = nullptr,
                            const BoundsAssignment* bounds = nullptr) {
  const int n = g.vertex_count();
  for (int v = 1; v <= n; ++v)
    if (f[v - 1] < 1 || f[v - 1] > h.vertex_count()) return false;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      if (u <= v && f[u - 1] > f[v - 1]) return false;
      if (g.adjacent(u, v) && !h.adjacent(f[u - 1], f[v - 1])) return false;
    }
  if (lists)
    for (int v = 1; v <= n; ++v) {
      bool ok = false;
      for (int t : lists->lists[v - 1]) ok = ok || t == f[v - 1];
      if (!ok) return false;
    }
  if (bounds)
    for (int v = 1; v <= n; ++v)
      if (f[v - 1] < bounds->low[v - 1] || f[v - 1] > bounds->up[v - 1])
        return false;
  return true;
}

// Plain-enumeration solver: filter the full monotone-map stream.
inline std::optional<std::vector<int>> enumeration_solve(
    const OrderedGraph& g, const OrderedGraph& h,
    const ListAssignment* lists = nullptr,
    const BoundsAssignment* bounds = nullptr) {
  std::optional<std::vector<int>> best;
  MonotoneMapEnumerator en(g.vertex_count(), h.vertex_count());
  while (const auto* f = en.next()) {
    if (reference_valid(g, h, *f, lists, bounds)) {
      best = *f;
      break;
    }
  }
  return best;
}

// All valid shifted decompositions by trying every cut set; returns the
// minimum segment count, or nullopt if none validates.
inline std::optional<int> exhaustive_min_segments(const OrderedGraph& h) {
  const int hn = h.vertex_count();
  if (hn == 0) return 0;
  std::optional<int> best;
  for (unsigned cuts = 0; cuts < (1u << (hn - 1)); ++cuts) {
    ShiftedDecomposition d;
    for (int pos = 1; pos < hn; ++pos)
      if (cuts & (1u << (pos - 1))) d.segment_ends.push_back(pos);
    d.segment_ends.push_back(hn);
    if (is_valid_shifted_decomposition(h, d))
      if (!best || d.segments() < *best) best = d.segments();
  }
  return best;
}

// Longest path whose vertices strictly increase in the order (vertex count).
inline int longest_forward_path(const OrderedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> best(n + 1, 0);
  int overall = 0;
  for (int v = 1; v <= n; ++v) {
    best[v] = n > 0 ? 1 : 0;
    for (int u : g.neighbors(v)) {
      if (u >= v) break;
      best[v] = std::max(best[v], best[u] + 1);
    }
    overall = std::max(overall, best[v]);
  }
  return overall;
}

// All maximal cliques (Bron-Kerbosch, no pivoting; fine at gadget sizes).
inline void maximal_cliques(const OrderedGraph& g, std::vector<int>& r,
                            std::vector<int> p, std::vector<int> x,
                            std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  auto p_copy = p;
  for (int v : p_copy) {
    std::vector<int> p2, x2;
    for (int u : p)
      if (g.adjacent(u, v)) p2.push_back(u);
    for (int u : x)
      if (g.adjacent(u, v)) x2.push_back(u);
    r.push_back(v);
    maximal_cliques(g, r, p2, x2, out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

inline std::vector<std::vector<int>> maximum_cliques(const OrderedGraph& g) {
  std::vector<int> r, p, x;
  for (int v = 1; v <= g.vertex_count(); ++v) p.push_back(v);
  std::vector<std::vector<int>> maximal;
  maximal_cliques(g, r, p, x, maximal);
  std::size_t best = 0;
  for (const auto& c : maximal) best = std::max(best, c.size());
  std::vector<std::vector<int>> out;
  for (auto& c : maximal)
    if (c.size() == best) {
      std::sort(c.begin(), c.end());
      out.push_back(c);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Proper two-sided layout check: some split point m with every edge
// crossing [1..m] x [m+1..n].
inline bool bipartite_with_split(const OrderedGraph& g, int split) {
  for (const auto& [u, v] : g.edges())
    if ((u <= split) == (v <= split)) return false;
  return true;
}

// Recursive backtracking structure homomorphism, element by element.
inline bool backtracking_struct_hom(const RelationalStructure& gs,
                                    const RelationalStructure& hs,
                                    std::vector<int>& partial, int at) {
  if (at > gs.universe_size()) {
    StructureMapping m{partial};
    return is_structure_homomorphism(gs, hs, m);
  }
  for (int u = 1; u <= hs.universe_size(); ++u) {
    partial[at - 1] = u;
    // prune: any fully-assigned tuple must already map correctly
    bool ok = true;
    for (std::size_t r = 0; r < gs.relations().size() && ok; ++r)
      for (const auto& tuple : gs.relations()[r].tuples) {
        bool complete = true;
        for (int e : tuple) complete = complete && e <= at;
        if (!complete) continue;
        std::vector<int> image;
        for (int e : tuple) image.push_back(partial[e - 1]);
        bool found = false;
        for (const auto& cand : hs.relations()[r].tuples)
          found = found || cand == image;
        if (!found) {
          ok = false;
          break;
        }
      }
    if (ok && backtracking_struct_hom(gs, hs, partial, at + 1)) return true;
  }
  return false;
}

inline bool struct_hom_exists_backtracking(const RelationalStructure& gs,
                                           const RelationalStructure& hs) {
  if (gs.universe_size() == 0) return true;
  if (hs.universe_size() == 0) return false;
  std::vector<int> partial(gs.universe_size(), 0);
  return backtracking_struct_hom(gs, hs, partial, 1);
}

// Independent-transversal check written recursively.
inline bool mis_recursive(const PartitionedGraph& pg, std::vector<int>& pick,
                          int part) {
  if (part > pg.parts()) return true;
  for (int j = 1; j <= pg.part_size(); ++j) {
    bool ok = true;
    for (int earlier = 1; earlier < part && ok; ++earlier)
      if (pg.graph().adjacent(pg.vertex(earlier, pick[earlier - 1]),
                              pg.vertex(part, j)))
        ok = false;
    if (!ok) continue;
    pick[part - 1] = j;
    if (mis_recursive(pg, pick, part + 1)) return true;
  }
  return false;
}

inline bool mis_exists_recursive(const PartitionedGraph& pg) {
  std::vector<int> pick(pg.parts(), 0);
  return mis_recursive(pg, pick, 1);
}

// Random structure with a single binary relation "E". Pass distinct_entries
// when the structure will feed the source side of a reduction.
inline RelationalStructure random_binary_structure(
    int universe, int max_tuples, int min_tuples, SplitMix64& rng,
    bool distinct_entries = false) {
  Relation rel{"E", 2, {}};
  int count = min_tuples + static_cast<int>(rng.below(
                               static_cast<std::uint64_t>(max_tuples - min_tuples) + 1));
  std::vector<std::vector<int>> pool;
  for (int a = 1; a <= universe; ++a)
    for (int b = 1; b <= universe; ++b)
      if (!distinct_entries || a != b) pool.push_back({a, b});
  for (int t = 0; t < count && !pool.empty(); ++t) {
    std::size_t at = rng.below(pool.size());
    rel.tuples.push_back(pool[at]);
    pool.erase(pool.begin() + static_cast<long>(at));
  }
  return RelationalStructure(universe, {std::move(rel)});
}

}  // namespace oracle
