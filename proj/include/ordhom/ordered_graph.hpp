#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ordhom/text_io.hpp"

namespace ordhom {

/// A graph with a fixed total order on its vertices. Vertices are the
/// integers 1..n and the vertex order is the numeric order; edges are
/// undirected {i,j} pairs stored with i < j, with no loops or duplicates.
/// Instances are immutable once constructed.
class OrderedGraph {
 public:
  OrderedGraph() = default;

  explicit OrderedGraph(int n) { reset(n, {}); }

  OrderedGraph(int n, std::vector<std::pair<int, int>> edges) {
    reset(n, std::move(edges));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool adjacent(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj_[u - 1];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Neighbors of v in increasing order.
  const std::vector<int>& neighbors(int v) const { return adj_[v - 1]; }

  bool operator==(const OrderedGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }
  bool operator!=(const OrderedGraph& other) const { return !(*this == other); }

  static OrderedGraph clique(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return OrderedGraph(n, std::move(edges));
  }

  /// Parses the line-oriented text format:
  ///   og <n> <m>
  ///   e <i> <j>      (m lines, 1 <= i < j <= n)
  static OrderedGraph parse(const std::string& text) {
    auto lines = detail::tokenize_lines(text);
    if (lines.empty()) throw ParseError(1, "missing 'og' header");
    const auto& head = lines.front();
    if (head.tokens[0] != "og")
      throw ParseError(head.number, "expected 'og' header");
    detail::expect_token_count(head, 3);
    long long n = detail::parse_int_token(head.tokens[1], head.number);
    long long m = detail::parse_int_token(head.tokens[2], head.number);
    if (n < 0) throw ParseError(head.number, "vertex count must be >= 0");
    if (m < 0) throw ParseError(head.number, "edge count must be >= 0");
    if (lines.size() - 1 != static_cast<std::size_t>(m)) {
      int where = lines.size() > 1 ? lines.back().number : head.number;
      throw ParseError(where, "edge count mismatch: header declares " +
                                  std::to_string(m) + ", found " +
                                  std::to_string(lines.size() - 1));
    }
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 1; k < lines.size(); ++k) {
      const auto& line = lines[k];
      if (line.tokens[0] != "e")
        throw ParseError(line.number, "expected 'e' line");
      detail::expect_token_count(line, 3);
      long long i = detail::parse_int_token(line.tokens[1], line.number);
      long long j = detail::parse_int_token(line.tokens[2], line.number);
      if (i < 1 || i > n || j < 1 || j > n)
        throw ParseError(line.number, "edge endpoint out of range [1, " +
                                          std::to_string(n) + "]");
      if (i >= j)
        throw ParseError(line.number, "edge must satisfy i < j");
      auto e = std::make_pair(static_cast<int>(i), static_cast<int>(j));
      if (!seen.insert(e).second)
        throw ParseError(line.number, "duplicate edge");
      edges.push_back(e);
    }
    return OrderedGraph(static_cast<int>(n), std::move(edges));
  }

  /// Canonical serialization; parse(serialize(g)) == g and the output is
  /// byte-stable (edges sorted, no comments).
  std::string serialize() const {
    std::string out = "og " + std::to_string(n_) + " " +
                      std::to_string(edges_.size()) + "\n";
    for (const auto& [i, j] : edges_)
      out += "e " + std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
  }

 private:
  void reset(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    n_ = n;
    for (auto& [i, j] : edges) {
      if (i > j) std::swap(i, j);
      if (i == j) throw std::invalid_argument("self-loop on vertex " +
                                              std::to_string(i));
      if (i < 1 || j > n)
        throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [i, j] : edges_) {
      adj_[i - 1].push_back(j);
      adj_[j - 1].push_back(i);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace ordhom
