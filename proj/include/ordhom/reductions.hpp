#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordhom/constraints.hpp"
#include "ordhom/ordered_graph.hpp"
#include "ordhom/structure.hpp"

namespace ordhom {

/// Result of the structures-to-ordered-graphs construction. Provenance
/// strings record, for every produced vertex, the source object it encodes
/// (universe element, tuple pair, or path vertex).
struct StructReductionOutput {
  OrderedGraph g;
  OrderedGraph h;
  std::optional<ListAssignment> lists;  // engaged for the list variant
  std::vector<std::string> g_provenance;
  std::vector<std::string> h_provenance;
};

/// Exhaustive oracle: smallest structure homomorphism in lexicographic
/// order of the target vector, or nullopt. Exponential by design.
inline std::optional<StructureMapping> find_structure_homomorphism(
    const RelationalStructure& gs, const RelationalStructure& hs) {
  if (!gs.same_signature(hs))
    throw std::invalid_argument("signature mismatch");
  const int p = gs.universe_size();
  const int s = hs.universe_size();
  StructureMapping map;
  map.targets.assign(p, 1);
  if (p == 0) {
    if (is_structure_homomorphism(gs, hs, map)) return map;
    return std::nullopt;
  }
  if (s == 0) return std::nullopt;
  while (true) {
    if (is_structure_homomorphism(gs, hs, map)) return map;
    int pos = p - 1;
    while (pos >= 0 && map.targets[pos] == s) {
      map.targets[pos] = 1;
      --pos;
    }
    if (pos < 0) return std::nullopt;
    ++map.targets[pos];
  }
}

namespace detail {

struct StructReductionPlan {
  std::vector<int> kept;                      // non-isolated elements, in order
  std::vector<std::pair<int, int>> g_tuples;  // (relation idx, tuple idx)
  std::vector<int> kept_index;                // element -> 1-based kept pos, 0 if dropped
};

inline StructReductionPlan plan_struct_reduction(
    const RelationalStructure& gs, const RelationalStructure& hs) {
  if (!gs.same_signature(hs))
    throw std::invalid_argument("signature mismatch");
  StructReductionPlan plan;
  plan.kept_index.assign(gs.universe_size(), 0);
  for (int v = 1; v <= gs.universe_size(); ++v)
    if (!gs.element_isolated(v)) {
      plan.kept.push_back(v);
      plan.kept_index[v - 1] = static_cast<int>(plan.kept.size());
    }
  for (std::size_t r = 0; r < gs.relations().size(); ++r)
    for (std::size_t t = 0; t < gs.relations()[r].tuples.size(); ++t) {
      // A repeated element inside a source tuple cannot be pinned by the
      // pairwise adjacency rule: the gadget would accept images that give
      // the two positions different values. Target-side repeats are fine.
      const auto& tuple = gs.relations()[r].tuples[t];
      for (std::size_t a = 0; a < tuple.size(); ++a)
        for (std::size_t b = a + 1; b < tuple.size(); ++b)
          if (tuple[a] == tuple[b])
            throw std::invalid_argument(
                "source tuple " + std::to_string(t + 1) + " of relation '" +
                gs.relations()[r].name +
                "' repeats an element; the construction needs distinct "
                "entries per source tuple");
      plan.g_tuples.emplace_back(static_cast<int>(r), static_cast<int>(t));
    }
  if (!plan.kept.empty() && hs.universe_size() == 0)
    throw std::invalid_argument(
        "target structure has an empty universe but the source is nonempty");
  return plan;
}

}  // namespace detail

/// List variant: G is the incidence graph of the (normalized) source
/// structure, H pairs every source object with every compatible target
/// object, and the lists tie each G vertex to its own block of H. A
/// list-respecting ordered homomorphism G -> H exists iff the source
/// structure maps homomorphically to the target. Isolated universe
/// elements of the source are dropped first; they constrain nothing.
inline StructReductionOutput reduce_structures_list(
    const RelationalStructure& gs, const RelationalStructure& hs) {
  auto plan = detail::plan_struct_reduction(gs, hs);
  const int p = static_cast<int>(plan.kept.size());
  const int q = static_cast<int>(plan.g_tuples.size());
  const int s = hs.universe_size();

  StructReductionOutput out;

  // --- H: block of (v, u) pairs, then a block of (R, x, y) triples, both in
  // lexicographic order of their components.
  std::vector<std::pair<int, int>> h_edges;
  std::vector<std::string> h_prov;
  for (int vi = 0; vi < p; ++vi)
    for (int u = 1; u <= s; ++u)
      h_prov.push_back("AH " + std::to_string(plan.kept[vi]) + " " +
                       std::to_string(u));
  // start position (0-based) of each (R, x) list block inside B_H
  std::vector<int> block_start(q, 0);
  {
    int at = p * s;
    for (int b = 0; b < q; ++b) {
      block_start[b] = at;
      const auto& [r, t] = plan.g_tuples[b];
      const auto& rel_g = gs.relations()[r];
      const auto& rel_h = hs.relations()[r];
      for (std::size_t y = 0; y < rel_h.tuples.size(); ++y)
        h_prov.push_back("BH " + rel_g.name + " " + std::to_string(t + 1) +
                         " " + std::to_string(y + 1));
      at += static_cast<int>(rel_h.tuples.size());
    }
  }
  const int h_n = static_cast<int>(h_prov.size());
  for (int b = 0; b < q; ++b) {
    const auto& [r, t] = plan.g_tuples[b];
    const auto& x = gs.relations()[r].tuples[t];
    const auto& target_tuples = hs.relations()[r].tuples;
    for (std::size_t y = 0; y < target_tuples.size(); ++y) {
      int bh = block_start[b] + static_cast<int>(y) + 1;
      for (std::size_t pos = 0; pos < x.size(); ++pos) {
        int vi = plan.kept_index[x[pos] - 1];  // kept by construction
        int ah = (vi - 1) * s + target_tuples[y][pos];
        h_edges.emplace_back(ah, bh);
      }
    }
  }
  // positions may repeat when several coordinates agree
  std::sort(h_edges.begin(), h_edges.end());
  h_edges.erase(std::unique(h_edges.begin(), h_edges.end()), h_edges.end());

  // --- G: incidence graph; universe elements first, tuple vertices after.
  std::vector<std::pair<int, int>> g_edges;
  std::vector<std::string> g_prov;
  for (int v : plan.kept) g_prov.push_back("AG " + std::to_string(v));
  for (int b = 0; b < q; ++b) {
    const auto& [r, t] = plan.g_tuples[b];
    g_prov.push_back("BG " + gs.relations()[r].name + " " +
                     std::to_string(t + 1));
    for (int x : gs.relations()[r].tuples[t])
      g_edges.emplace_back(plan.kept_index[x - 1], p + b + 1);
  }
  std::sort(g_edges.begin(), g_edges.end());
  g_edges.erase(std::unique(g_edges.begin(), g_edges.end()), g_edges.end());

  // --- Lists.
  std::vector<std::vector<int>> lists(p + q);
  for (int vi = 1; vi <= p; ++vi)
    for (int u = 1; u <= s; ++u) lists[vi - 1].push_back((vi - 1) * s + u);
  for (int b = 0; b < q; ++b) {
    int count = static_cast<int>(
        hs.relations()[plan.g_tuples[b].first].tuples.size());
    for (int y = 1; y <= count; ++y)
      lists[p + b].push_back(block_start[b] + y);
  }

  out.g = OrderedGraph(p + q, std::move(g_edges));
  out.h = OrderedGraph(h_n, std::move(h_edges));
  out.lists = ListAssignment(std::move(lists));
  out.g_provenance = std::move(g_prov);
  out.h_provenance = std::move(h_prov);

  // Size identities of the construction.
  long long expect_h = static_cast<long long>(p) * s;
  for (std::size_t r = 0; r < gs.relations().size(); ++r)
    expect_h += static_cast<long long>(gs.relations()[r].tuples.size()) *
                hs.relations()[r].tuples.size();
  if (out.g.vertex_count() != p + q || out.h.vertex_count() != expect_h)
    throw std::logic_error("structure reduction size mismatch");
  return out;
}

/// Non-list variant: augments both sides with an interleaved path whose
/// rigidity pins every original vertex inside its own list block, so the
/// plain ordered-homomorphism question on (G', H') matches the
/// list-respecting one on (G, H). Rejects targets where some needed list
/// block would be empty (the path insertion point would be undefined).
inline StructReductionOutput reduce_structures_nolist(
    const RelationalStructure& gs, const RelationalStructure& hs) {
  auto plan = detail::plan_struct_reduction(gs, hs);
  const int p = static_cast<int>(plan.kept.size());
  const int q = static_cast<int>(plan.g_tuples.size());
  const int s = hs.universe_size();
  for (const auto& [r, t] : plan.g_tuples)
    if (hs.relations()[r].tuples.empty())
      throw std::invalid_argument(
          "relation '" + hs.relations()[r].name +
          "' is empty in the target but populated in the source");

  StructReductionOutput out;

  // --- G': x_0, a_1, x_1, ..., a_p, x_p, y, z_0, b_1, z_1, ..., b_q, z_q.
  const int g_n = 2 * p + 2 * q + 3;
  auto gx = [](int i) { return 2 * i + 1; };          // x_i
  auto ga = [](int i) { return 2 * i; };              // i-th element vertex
  const int gy = 2 * p + 2;
  auto gz = [p](int i) { return 2 * p + 3 + 2 * i; };  // z_i
  auto gb = [p](int i) { return 2 * p + 2 + 2 * i; };  // i-th tuple vertex

  std::vector<std::string> g_prov(g_n);
  g_prov[gx(0) - 1] = "PX 0";
  for (int i = 1; i <= p; ++i) {
    g_prov[ga(i) - 1] = "AG " + std::to_string(plan.kept[i - 1]);
    g_prov[gx(i) - 1] = "PX " + std::to_string(i);
  }
  g_prov[gy - 1] = "PY";
  g_prov[gz(0) - 1] = "PZ 0";
  for (int i = 1; i <= q; ++i) {
    const auto& [r, t] = plan.g_tuples[i - 1];
    g_prov[gb(i) - 1] =
        "BG " + gs.relations()[r].name + " " + std::to_string(t + 1);
    g_prov[gz(i) - 1] = "PZ " + std::to_string(i);
  }

  std::vector<std::pair<int, int>> g_edges;
  for (int b = 0; b < q; ++b) {
    const auto& [r, t] = plan.g_tuples[b];
    for (int x : gs.relations()[r].tuples[t])
      g_edges.emplace_back(ga(plan.kept_index[x - 1]), gb(b + 1));
  }
  std::sort(g_edges.begin(), g_edges.end());
  g_edges.erase(std::unique(g_edges.begin(), g_edges.end()), g_edges.end());
  for (int i = 1; i <= p; ++i) g_edges.emplace_back(gx(i - 1), gx(i));
  g_edges.emplace_back(gx(p), gy);
  g_edges.emplace_back(gy, gz(0));
  for (int i = 1; i <= q; ++i) g_edges.emplace_back(gz(i - 1), gz(i));

  // --- H': x'_0, then each (v, u) block followed by its x'_i, then y',
  // z'_0, then each (R, x, y) block followed by its z'_i.
  std::vector<std::string> h_prov;
  std::vector<int> hx(p + 1, 0), hz(q + 1, 0);
  std::vector<int> a_block(p, 0), b_block(q, 0);  // 0-based start offsets
  hx[0] = 1;
  h_prov.push_back("PXp 0");
  for (int i = 1; i <= p; ++i) {
    a_block[i - 1] = static_cast<int>(h_prov.size());
    for (int u = 1; u <= s; ++u)
      h_prov.push_back("AH " + std::to_string(plan.kept[i - 1]) + " " +
                       std::to_string(u));
    hx[i] = static_cast<int>(h_prov.size()) + 1;
    h_prov.push_back("PXp " + std::to_string(i));
  }
  const int hy = static_cast<int>(h_prov.size()) + 1;
  h_prov.push_back("PYp");
  hz[0] = static_cast<int>(h_prov.size()) + 1;
  h_prov.push_back("PZp 0");
  for (int b = 0; b < q; ++b) {
    const auto& [r, t] = plan.g_tuples[b];
    b_block[b] = static_cast<int>(h_prov.size());
    const auto& rel_h = hs.relations()[r];
    for (std::size_t y = 0; y < rel_h.tuples.size(); ++y)
      h_prov.push_back("BH " + gs.relations()[r].name + " " +
                       std::to_string(t + 1) + " " + std::to_string(y + 1));
    hz[b + 1] = static_cast<int>(h_prov.size()) + 1;
    h_prov.push_back("PZp " + std::to_string(b + 1));
  }
  const int h_n = static_cast<int>(h_prov.size());

  std::vector<std::pair<int, int>> h_edges;
  for (int b = 0; b < q; ++b) {
    const auto& [r, t] = plan.g_tuples[b];
    const auto& x = gs.relations()[r].tuples[t];
    const auto& target_tuples = hs.relations()[r].tuples;
    for (std::size_t y = 0; y < target_tuples.size(); ++y) {
      int bh = b_block[b] + static_cast<int>(y) + 1;
      for (std::size_t pos = 0; pos < x.size(); ++pos) {
        int vi = plan.kept_index[x[pos] - 1];
        int ah = a_block[vi - 1] + target_tuples[y][pos];
        h_edges.emplace_back(ah, bh);
      }
    }
  }
  std::sort(h_edges.begin(), h_edges.end());
  h_edges.erase(std::unique(h_edges.begin(), h_edges.end()), h_edges.end());
  for (int i = 1; i <= p; ++i) h_edges.emplace_back(hx[i - 1], hx[i]);
  h_edges.emplace_back(hx[p], hy);
  h_edges.emplace_back(hy, hz[0]);
  for (int i = 1; i <= q; ++i) h_edges.emplace_back(hz[i - 1], hz[i]);

  out.g = OrderedGraph(g_n, std::move(g_edges));
  out.h = OrderedGraph(h_n, std::move(h_edges));
  out.g_provenance = std::move(g_prov);
  out.h_provenance = std::move(h_prov);

  long long expect_h = static_cast<long long>(p) * s;
  for (std::size_t r = 0; r < gs.relations().size(); ++r)
    expect_h += static_cast<long long>(gs.relations()[r].tuples.size()) *
                hs.relations()[r].tuples.size();
  expect_h += p + q + 3;
  if (out.g.vertex_count() != p + q + (p + 1) + 1 + (q + 1) ||
      out.h.vertex_count() != expect_h)
    throw std::logic_error("structure reduction size mismatch");
  return out;
}

/// Encodes proper c-coloring as a structure-homomorphism instance with a
/// single binary relation: one tuple per edge (oriented low -> high), and a
/// target relation holding all ordered pairs of distinct colors.
inline std::pair<RelationalStructure, RelationalStructure>
coloring_to_structures(const OrderedGraph& f, int colors) {
  if (colors < 1) throw std::invalid_argument("colors must be >= 1");
  Relation source_rel{"E", 2, {}};
  for (const auto& [i, j] : f.edges()) source_rel.tuples.push_back({i, j});
  Relation target_rel{"E", 2, {}};
  for (int a = 1; a <= colors; ++a)
    for (int b = 1; b <= colors; ++b)
      if (a != b) target_rel.tuples.push_back({a, b});
  return {RelationalStructure(f.vertex_count(), {std::move(source_rel)}),
          RelationalStructure(colors, {std::move(target_rel)})};
}

/// Provenance sidecar format: one `prov <vertex> <tag...>` line per vertex.
inline std::string serialize_provenance(const std::vector<std::string>& prov) {
  std::string out;
  for (std::size_t v = 0; v < prov.size(); ++v)
    out += "prov " + std::to_string(v + 1) + " " + prov[v] + "\n";
  return out;
}

}  // namespace ordhom
