#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordhom/constraints.hpp"
#include "ordhom/ordered_graph.hpp"

namespace ordhom {

/// A graph whose vertex order is split into k contiguous parts of equal
/// size l. Construct directly when the parts already have equal sizes, or
/// through with_padding, which copies the last vertex of short parts (with
/// its incident edges) until all parts match the largest one.
class PartitionedGraph {
 public:
  PartitionedGraph(OrderedGraph f, int k, int l)
      : f_(std::move(f)), k_(k), l_(l) {
    if (k < 1 || l < 1)
      throw std::invalid_argument("partition needs k >= 1 and l >= 1");
    if (f_.vertex_count() != k * l)
      throw std::invalid_argument("|V(F)| must equal k*l");
    origin_.resize(k * l);
    for (int v = 1; v <= k * l; ++v) origin_[v - 1] = v;
  }

  static PartitionedGraph with_padding(const OrderedGraph& f,
                                       const std::vector<int>& part_sizes) {
    if (part_sizes.empty())
      throw std::invalid_argument("partition needs k >= 1 parts");
    long long total = 0;
    int l = 0;
    for (int size : part_sizes) {
      if (size < 1) throw std::invalid_argument("empty part");
      total += size;
      l = std::max(l, size);
    }
    if (total != f.vertex_count())
      throw std::invalid_argument("part sizes must cover all vertices");

    const int k = static_cast<int>(part_sizes.size());
    // new index layout: part i occupies l slots; original vertices first,
    // then copies of the part's last vertex
    std::vector<int> new_index(f.vertex_count(), 0);
    std::vector<int> origin(static_cast<std::size_t>(k) * l, 0);
    int old_at = 1;
    for (int part = 0; part < k; ++part) {
      int base = part * l;
      for (int slot = 0; slot < part_sizes[part]; ++slot) {
        new_index[old_at - 1] = base + slot + 1;
        origin[base + slot] = old_at;
        ++old_at;
      }
      for (int slot = part_sizes[part]; slot < l; ++slot)
        origin[base + slot] = old_at - 1;  // copy of the part's last vertex
    }

    std::vector<std::pair<int, int>> edges;
    auto add_edge = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      edges.emplace_back(a, b);
    };
    for (int v = 0; v < k * l; ++v)
      for (int w = v + 1; w < k * l; ++w)
        if (origin[v] != origin[w] && f.adjacent(origin[v], origin[w]))
          add_edge(v + 1, w + 1);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    PartitionedGraph out(OrderedGraph(k * l, std::move(edges)), k, l);
    out.origin_ = std::move(origin);
    return out;
  }

  const OrderedGraph& graph() const { return f_; }
  int parts() const { return k_; }
  int part_size() const { return l_; }
  /// The j-th vertex of part i (both 1-based).
  int vertex(int i, int j) const { return (i - 1) * l_ + j; }
  /// Pre-padding source vertex of each vertex.
  const std::vector<int>& origin() const { return origin_; }

 private:
  OrderedGraph f_;
  int k_;
  int l_;
  std::vector<int> origin_;
};

/// Brute-force check for an independent transversal: one vertex per part,
/// pairwise nonadjacent across parts (edges inside a part never matter,
/// since a transversal takes a single vertex from it).
inline bool has_multicolored_independent_set(const PartitionedGraph& p) {
  const int k = p.parts();
  const int l = p.part_size();
  std::vector<int> pick(k, 1);
  while (true) {
    bool independent = true;
    for (int a = 0; a < k && independent; ++a)
      for (int b = a + 1; b < k && independent; ++b)
        if (p.graph().adjacent(p.vertex(a + 1, pick[a]),
                               p.vertex(b + 1, pick[b])))
          independent = false;
    if (independent) return true;
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == l) {
      pick[pos] = 1;
      --pos;
    }
    if (pos < 0) return false;
    ++pick[pos];
  }
}

/// Result of the independent-set-to-homomorphism construction.
struct MisReductionOutput {
  OrderedGraph g;
  OrderedGraph h;
  std::optional<ListAssignment> lists;
  std::vector<std::string> g_provenance;
  std::vector<std::string> h_provenance;
};

namespace detail {

struct MisLayout {
  // H side (list variant): a_i, b_i interleaved, then x_i, y_i, z_i blocks.
  int k = 0, l = 0;
  int a(int i) const { return 2 * i - 1; }
  int b(int i) const { return 2 * i; }
  int x(int i) const { return 2 * k + 3 * (i - 1) + 1; }
  int y(int i) const { return 2 * k + 3 * (i - 1) + 2; }
  int z(int i) const { return 2 * k + 3 * (i - 1) + 3; }
  // G side: blocks P^1..P^k (l+1 vertices) then Q^1..Q^k (l+2 vertices);
  // p/q take j = 0-based offset within the block.
  int p(int i, int j) const { return (i - 1) * (l + 1) + j + 1; }
  int q(int i, int j) const { return k * (l + 1) + (i - 1) * (l + 2) + j + 1; }
};

inline void build_mis_h_edges(const MisLayout& lay,
                              std::vector<std::pair<int, int>>& edges) {
  const int k = lay.k;
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(lay.a(i), lay.x(i));
    edges.emplace_back(lay.a(i), lay.y(i));
    edges.emplace_back(lay.b(i), lay.y(i));
    edges.emplace_back(lay.b(i), lay.z(i));
  }
  // all edges inside the x/y/z block except y_i y_j
  std::vector<int> block;
  for (int i = 1; i <= k; ++i) {
    block.push_back(lay.x(i));
    block.push_back(lay.y(i));
    block.push_back(lay.z(i));
  }
  std::vector<char> is_y(3 * k + 2 * k + 1, 0);
  for (int i = 1; i <= k; ++i) is_y[lay.y(i)] = 1;
  for (std::size_t a = 0; a < block.size(); ++a)
    for (std::size_t b = a + 1; b < block.size(); ++b)
      if (!(is_y[block[a]] && is_y[block[b]]))
        edges.emplace_back(std::min(block[a], block[b]),
                           std::max(block[a], block[b]));
}

}  // namespace detail

/// List variant of the independent-transversal construction: H encodes a
/// selector pair (a_i, b_i) plus a triple (x_i, y_i, z_i) per part; the
/// P^i / Q^i ladders of G force exactly one y_i choice per part, and cross
/// edges copy the source adjacency. A list-respecting ordered homomorphism
/// exists iff the source graph has an independent transversal.
inline MisReductionOutput reduce_mis_list(const PartitionedGraph& part) {
  const int k = part.parts();
  const int l = part.part_size();
  detail::MisLayout lay{k, l};

  std::vector<std::pair<int, int>> h_edges;
  detail::build_mis_h_edges(lay, h_edges);
  std::vector<std::string> h_prov(5 * k);
  for (int i = 1; i <= k; ++i) {
    h_prov[lay.a(i) - 1] = "A " + std::to_string(i);
    h_prov[lay.b(i) - 1] = "B " + std::to_string(i);
    h_prov[lay.x(i) - 1] = "X " + std::to_string(i);
    h_prov[lay.y(i) - 1] = "Y " + std::to_string(i);
    h_prov[lay.z(i) - 1] = "Z " + std::to_string(i);
  }

  const int g_n = k * (l + 1) + k * (l + 2);
  std::vector<std::pair<int, int>> g_edges;
  std::vector<std::string> g_prov(g_n);
  std::vector<std::vector<int>> lists(g_n);
  for (int i = 1; i <= k; ++i) {
    for (int j = 0; j <= l; ++j) {
      int v = lay.p(i, j);
      g_prov[v - 1] = "P " + std::to_string(i) + " " + std::to_string(j);
      if (j == 0)
        lists[v - 1] = {lay.a(i)};
      else if (j == l)
        lists[v - 1] = {lay.b(i)};
      else
        lists[v - 1] = {lay.a(i), lay.b(i)};
    }
    for (int j = 0; j <= l + 1; ++j) {
      int v = lay.q(i, j);
      g_prov[v - 1] = "Q " + std::to_string(i) + " " + std::to_string(j);
      if (j == 0)
        lists[v - 1] = {lay.x(i)};
      else if (j == l + 1)
        lists[v - 1] = {lay.z(i)};
      else
        lists[v - 1] = {lay.x(i), lay.y(i), lay.z(i)};
    }
    for (int j = 1; j <= l; ++j) {
      g_edges.emplace_back(lay.p(i, j - 1), lay.q(i, j));
      g_edges.emplace_back(lay.p(i, j), lay.q(i, j));
    }
  }
  for (int i = 1; i <= k; ++i)
    for (int i2 = i + 1; i2 <= k; ++i2)
      for (int j = 1; j <= l; ++j)
        for (int j2 = 1; j2 <= l; ++j2)
          if (part.graph().adjacent(part.vertex(i, j), part.vertex(i2, j2)))
            g_edges.emplace_back(lay.q(i, j), lay.q(i2, j2));

  MisReductionOutput out;
  out.g = OrderedGraph(g_n, std::move(g_edges));
  out.h = OrderedGraph(5 * k, std::move(h_edges));
  out.lists = ListAssignment(std::move(lists));
  out.g_provenance = std::move(g_prov);
  out.h_provenance = std::move(h_prov);
  if (out.g.vertex_count() != 2 * k * l + 3 * k || out.h.vertex_count() != 5 * k)
    throw std::logic_error("mis reduction size mismatch");
  return out;
}

/// Non-list variant: both sides gain a clique on 2k+2 fresh vertices with
/// pendant edges into the gadget endpoints. The clique is the unique
/// maximum clique of H', which forces the fresh G' clique onto it in
/// order, and that in turn pins every original vertex into its list.
inline MisReductionOutput reduce_mis_nolist(const PartitionedGraph& part) {
  const int k = part.parts();
  const int l = part.part_size();
  detail::MisLayout lay{k, l};

  // H' order: c_1 a_1 b_1 ... c_k a_k b_k c_{k+1} x_1 y_1 z_1 c_{k+2} ...
  //           c_{2k} x_k y_k z_k c_{2k+1} c_{2k+2}
  const int h_n = 7 * k + 2;
  std::vector<int> hc(2 * k + 3, 0), hmap(5 * k + 1, 0);
  std::vector<std::string> h_prov(h_n);
  {
    int at = 0;
    for (int i = 1; i <= k; ++i) {
      hc[i] = ++at;
      h_prov[at - 1] = "C " + std::to_string(i);
      hmap[lay.a(i)] = ++at;
      h_prov[at - 1] = "A " + std::to_string(i);
      hmap[lay.b(i)] = ++at;
      h_prov[at - 1] = "B " + std::to_string(i);
    }
    for (int i = 1; i <= k; ++i) {
      hc[k + i] = ++at;
      h_prov[at - 1] = "C " + std::to_string(k + i);
      hmap[lay.x(i)] = ++at;
      h_prov[at - 1] = "X " + std::to_string(i);
      hmap[lay.y(i)] = ++at;
      h_prov[at - 1] = "Y " + std::to_string(i);
      hmap[lay.z(i)] = ++at;
      h_prov[at - 1] = "Z " + std::to_string(i);
    }
    hc[2 * k + 1] = ++at;
    h_prov[at - 1] = "C " + std::to_string(2 * k + 1);
    hc[2 * k + 2] = ++at;
    h_prov[at - 1] = "C " + std::to_string(2 * k + 2);
  }

  std::vector<std::pair<int, int>> base_h;
  detail::build_mis_h_edges(lay, base_h);
  std::vector<std::pair<int, int>> h_edges;
  auto add = [](std::vector<std::pair<int, int>>& edges, int a, int b) {
    edges.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (const auto& [u, v] : base_h) add(h_edges, hmap[u], hmap[v]);
  for (int i = 1; i <= 2 * k + 2; ++i)
    for (int j = i + 1; j <= 2 * k + 2; ++j) add(h_edges, hc[i], hc[j]);
  for (int i = 1; i <= k; ++i) {
    add(h_edges, hc[i], hmap[lay.a(i)]);
    add(h_edges, hc[i + 1], hmap[lay.b(i)]);
    add(h_edges, hc[k + i], hmap[lay.x(i)]);
    add(h_edges, hc[k + i + 1], hmap[lay.z(i)]);
  }

  // G' order: r_1 P^1 r_2 P^2 ... r_k P^k r_{k+1} Q^1 ... r_{2k} Q^k
  //           r_{2k+1} r_{2k+2}
  const int g_n = 2 * k * l + 5 * k + 2;
  std::vector<int> gr(2 * k + 3, 0), gmap(k * (l + 1) + k * (l + 2) + 1, 0);
  std::vector<std::string> g_prov(g_n);
  {
    int at = 0;
    for (int i = 1; i <= k; ++i) {
      gr[i] = ++at;
      g_prov[at - 1] = "R " + std::to_string(i);
      for (int j = 0; j <= l; ++j) {
        gmap[lay.p(i, j)] = ++at;
        g_prov[at - 1] = "P " + std::to_string(i) + " " + std::to_string(j);
      }
    }
    for (int i = 1; i <= k; ++i) {
      gr[k + i] = ++at;
      g_prov[at - 1] = "R " + std::to_string(k + i);
      for (int j = 0; j <= l + 1; ++j) {
        gmap[lay.q(i, j)] = ++at;
        g_prov[at - 1] = "Q " + std::to_string(i) + " " + std::to_string(j);
      }
    }
    gr[2 * k + 1] = ++at;
    g_prov[at - 1] = "R " + std::to_string(2 * k + 1);
    gr[2 * k + 2] = ++at;
    g_prov[at - 1] = "R " + std::to_string(2 * k + 2);
  }

  std::vector<std::pair<int, int>> g_edges;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j) {
      add(g_edges, gmap[lay.p(i, j - 1)], gmap[lay.q(i, j)]);
      add(g_edges, gmap[lay.p(i, j)], gmap[lay.q(i, j)]);
    }
  for (int i = 1; i <= k; ++i)
    for (int i2 = i + 1; i2 <= k; ++i2)
      for (int j = 1; j <= l; ++j)
        for (int j2 = 1; j2 <= l; ++j2)
          if (part.graph().adjacent(part.vertex(i, j), part.vertex(i2, j2)))
            add(g_edges, gmap[lay.q(i, j)], gmap[lay.q(i2, j2)]);
  for (int i = 1; i <= 2 * k + 2; ++i)
    for (int j = i + 1; j <= 2 * k + 2; ++j) add(g_edges, gr[i], gr[j]);
  for (int i = 1; i <= k; ++i) {
    add(g_edges, gr[i], gmap[lay.p(i, 0)]);
    add(g_edges, gr[i + 1], gmap[lay.p(i, l)]);
    add(g_edges, gr[k + i], gmap[lay.q(i, 0)]);
    add(g_edges, gr[k + i + 1], gmap[lay.q(i, l + 1)]);
  }

  MisReductionOutput out;
  out.g = OrderedGraph(g_n, std::move(g_edges));
  out.h = OrderedGraph(h_n, std::move(h_edges));
  out.g_provenance = std::move(g_prov);
  out.h_provenance = std::move(h_prov);
  if (out.g.vertex_count() != 2 * k * l + 5 * k + 2 ||
      out.h.vertex_count() != 7 * k + 2)
    throw std::logic_error("mis reduction size mismatch");
  return out;
}

}  // namespace ordhom
