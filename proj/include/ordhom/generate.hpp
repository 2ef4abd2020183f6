#pragma once

#include <cstdint>
#include <vector>

#include "ordhom/decomposition.hpp"
#include "ordhom/mis.hpp"
#include "ordhom/ordered_graph.hpp"
#include "ordhom/rng.hpp"

namespace ordhom {

/// Every pair becomes an edge independently with probability edge_prob, on
/// the fixed vertex order. Deterministic per seed.
inline OrderedGraph gen_random_graph(int n, double edge_prob,
                                     std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng.bernoulli(edge_prob)) edges.emplace_back(i, j);
  return OrderedGraph(n, std::move(edges));
}

/// Random target consistent with the given segment sizes: each segment is a
/// clique, and back-neighborhoods inside a segment nest by giving every
/// earlier vertex a random threshold — it connects to the first t vertices
/// of the segment. The produced graph always validates against the
/// decomposition with these segment ends.
inline OrderedGraph gen_shifted_graph(const std::vector<int>& segment_sizes,
                                      std::uint64_t seed,
                                      ShiftedDecomposition* decomposition_out =
                                          nullptr) {
  SplitMix64 rng(seed);
  std::vector<int> ends;
  int h = 0;
  for (int size : segment_sizes) {
    if (size < 1) throw std::invalid_argument("segment sizes must be >= 1");
    h += size;
    ends.push_back(h);
  }
  std::vector<std::pair<int, int>> edges;
  int start = 1;
  for (int end : ends) {
    for (int u = start; u <= end; ++u)
      for (int v = u + 1; v <= end; ++v) edges.emplace_back(u, v);
    int size = end - start + 1;
    for (int w = 1; w < start; ++w) {
      int threshold = rng.range(0, size);
      for (int t = 0; t < threshold; ++t) edges.emplace_back(w, start + t);
    }
    start = end + 1;
  }
  OrderedGraph out(h, std::move(edges));
  ShiftedDecomposition d{ends};
  if (auto reason = check_shifted_decomposition(out, d); !reason.empty())
    throw std::logic_error("generated graph fails its own decomposition: " +
                           reason);
  if (decomposition_out) *decomposition_out = d;
  return out;
}

/// Source instance for the independent-transversal reduction: k parts of
/// size l, cross-part edges with probability edge_prob, no edges inside a
/// part.
inline PartitionedGraph gen_partitioned_graph(int k, int l, double edge_prob,
                                              std::uint64_t seed) {
  if (k < 1 || l < 1) throw std::invalid_argument("need k >= 1 and l >= 1");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= k * l; ++i)
    for (int j = i + 1; j <= k * l; ++j)
      if ((i - 1) / l != (j - 1) / l && rng.bernoulli(edge_prob))
        edges.emplace_back(i, j);
  return PartitionedGraph(OrderedGraph(k * l, std::move(edges)), k, l);
}

}  // namespace ordhom
