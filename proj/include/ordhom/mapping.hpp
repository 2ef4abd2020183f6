#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ordhom/constraints.hpp"
#include "ordhom/ordered_graph.hpp"
#include "ordhom/text_io.hpp"

namespace ordhom {

/// A candidate mapping f : V(G) -> V(H), stored as the target vector
/// (f(1), ..., f(n)). Equivalently described by the count vector
/// (a_1, ..., a_h) where a_t = |f^{-1}(t)|.
class OrderedMapping {
 public:
  OrderedMapping() = default;
  explicit OrderedMapping(std::vector<int> targets)
      : targets_(std::move(targets)) {}

  int size() const { return static_cast<int>(targets_.size()); }
  int target_of(int v) const { return targets_[v - 1]; }
  const std::vector<int>& targets() const { return targets_; }

  bool is_monotone() const {
    for (std::size_t k = 1; k < targets_.size(); ++k)
      if (targets_[k - 1] > targets_[k]) return false;
    return true;
  }

  /// Count vector over h targets; sums to n. Requires all targets in [1,h].
  std::vector<std::int64_t> counts(int h) const {
    std::vector<std::int64_t> out(h, 0);
    for (int t : targets_) {
      if (t < 1 || t > h)
        throw std::invalid_argument("target out of range [1, " +
                                    std::to_string(h) + "]");
      ++out[t - 1];
    }
    return out;
  }

  static OrderedMapping from_counts(const std::vector<std::int64_t>& counts) {
    std::vector<int> targets;
    for (std::size_t t = 0; t < counts.size(); ++t) {
      if (counts[t] < 0) throw std::invalid_argument("negative count");
      for (std::int64_t k = 0; k < counts[t]; ++k)
        targets.push_back(static_cast<int>(t) + 1);
    }
    return OrderedMapping(std::move(targets));
  }

  bool operator==(const OrderedMapping&) const = default;

  /// Output format: `map <n>` then `f <v> <target>` lines.
  std::string serialize() const {
    std::string out = "map " + std::to_string(size()) + "\n";
    for (int v = 1; v <= size(); ++v)
      out += "f " + std::to_string(v) + " " + std::to_string(targets_[v - 1]) +
             "\n";
    return out;
  }

  static OrderedMapping parse(const std::string& text) {
    auto lines = detail::tokenize_lines(text);
    if (lines.empty()) throw ParseError(1, "missing 'map' header");
    const auto& head = lines.front();
    if (head.tokens[0] != "map")
      throw ParseError(head.number, "expected 'map' header");
    detail::expect_token_count(head, 2);
    long long n = detail::parse_int_token(head.tokens[1], head.number);
    if (n < 0 || lines.size() - 1 != static_cast<std::size_t>(n))
      throw ParseError(head.number, "entry count mismatch");
    std::vector<int> targets(n, 0);
    std::vector<char> seen(n, 0);
    for (std::size_t k = 1; k < lines.size(); ++k) {
      const auto& line = lines[k];
      if (line.tokens[0] != "f")
        throw ParseError(line.number, "expected 'f' line");
      detail::expect_token_count(line, 3);
      long long v = detail::parse_int_token(line.tokens[1], line.number);
      long long t = detail::parse_int_token(line.tokens[2], line.number);
      if (v < 1 || v > n) throw ParseError(line.number, "vertex out of range");
      if (seen[v - 1]) throw ParseError(line.number, "duplicate vertex");
      if (t < 1) throw ParseError(line.number, "target must be >= 1");
      seen[v - 1] = 1;
      targets[v - 1] = static_cast<int>(t);
    }
    return OrderedMapping(std::move(targets));
  }

 private:
  std::vector<int> targets_;
};

/// Checks whether f is an ordered homomorphism G -> H that also satisfies
/// the optional list and bound constraints: f must be monotone, every edge
/// of G must map to an edge of H, and every supplied constraint must hold.
/// Shape mismatches (wrong vector lengths) are input errors.
inline bool is_valid_homomorphism(const OrderedGraph& g, const OrderedGraph& h,
                                  const OrderedMapping& f,
                                  const ListAssignment* lists = nullptr,
                                  const BoundsAssignment* bounds = nullptr) {
  const int n = g.vertex_count();
  if (f.size() != n)
    throw std::invalid_argument("mapping size does not match |V(G)|");
  if (lists && lists->size() != n)
    throw std::invalid_argument("list assignment size does not match |V(G)|");
  if (bounds && bounds->size() != n)
    throw std::invalid_argument("bounds size does not match |V(G)|");

  for (int v = 1; v <= n; ++v) {
    int t = f.target_of(v);
    if (t < 1 || t > h.vertex_count()) return false;
    if (v > 1 && f.target_of(v - 1) > t) return false;
    if (lists && !lists->allows(v, t)) return false;
    if (bounds && (t < bounds->low[v - 1] || t > bounds->up[v - 1]))
      return false;
  }
  for (const auto& [u, v] : g.edges())
    if (!h.adjacent(f.target_of(u), f.target_of(v))) return false;
  return true;
}

}  // namespace ordhom
