#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ordhom/text_io.hpp"

namespace ordhom {

/// Per-vertex interval bounds on the image: low(v) <= f(v) <= up(v).
/// low(v) > up(v) is allowed at construction; solvers report infeasibility.
struct BoundsAssignment {
  std::vector<int> low;
  std::vector<int> up;

  BoundsAssignment() = default;
  BoundsAssignment(std::vector<int> lo, std::vector<int> hi)
      : low(std::move(lo)), up(std::move(hi)) {
    if (low.size() != up.size())
      throw std::invalid_argument("low/up size mismatch");
  }

  int size() const { return static_cast<int>(low.size()); }

  /// Trivial bounds 1..h on every vertex.
  static BoundsAssignment full(int n, int h) {
    return BoundsAssignment(std::vector<int>(n, 1), std::vector<int>(n, h));
  }

  /// File format: n lines `b <v> <low> <up>`, one per vertex, any order.
  static BoundsAssignment parse(const std::string& text, int n, int h) {
    auto lines = detail::tokenize_lines(text);
    BoundsAssignment out(std::vector<int>(n, 0), std::vector<int>(n, 0));
    std::vector<char> seen(n, 0);
    for (const auto& line : lines) {
      if (line.tokens[0] != "b")
        throw ParseError(line.number, "expected 'b' line");
      detail::expect_token_count(line, 4);
      long long v = detail::parse_int_token(line.tokens[1], line.number);
      long long lo = detail::parse_int_token(line.tokens[2], line.number);
      long long hi = detail::parse_int_token(line.tokens[3], line.number);
      if (v < 1 || v > n)
        throw ParseError(line.number, "vertex out of range [1, " +
                                          std::to_string(n) + "]");
      if (seen[v - 1])
        throw ParseError(line.number, "duplicate bounds for vertex " +
                                          std::to_string(v));
      if (lo < 1 || lo > h || hi < 1 || hi > h)
        throw ParseError(line.number, "bound out of range [1, " +
                                          std::to_string(h) + "]");
      seen[v - 1] = 1;
      out.low[v - 1] = static_cast<int>(lo);
      out.up[v - 1] = static_cast<int>(hi);
    }
    for (int v = 1; v <= n; ++v)
      if (!seen[v - 1])
        throw ParseError(lines.empty() ? 1 : lines.back().number,
                         "missing bounds for vertex " + std::to_string(v));
    return out;
  }

  std::string serialize() const {
    std::string out;
    for (int v = 1; v <= size(); ++v)
      out += "b " + std::to_string(v) + " " + std::to_string(low[v - 1]) +
             " " + std::to_string(up[v - 1]) + "\n";
    return out;
  }
};

/// Per-vertex sets of allowed images. An empty list is permitted and makes
/// that vertex (and hence the instance) infeasible.
struct ListAssignment {
  std::vector<std::vector<int>> lists;  // sorted, unique entries

  ListAssignment() = default;
  explicit ListAssignment(std::vector<std::vector<int>> ls)
      : lists(std::move(ls)) {
    for (auto& list : lists) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  int size() const { return static_cast<int>(lists.size()); }

  bool allows(int v, int target) const {
    const auto& list = lists[v - 1];
    return std::binary_search(list.begin(), list.end(), target);
  }

  /// File format: n lines `l <v> <t1> ... <tk>`; a bare `l <v>` denotes the
  /// empty list.
  static ListAssignment parse(const std::string& text, int n, int h) {
    auto lines = detail::tokenize_lines(text);
    std::vector<std::vector<int>> lists(n);
    std::vector<char> seen(n, 0);
    for (const auto& line : lines) {
      if (line.tokens[0] != "l")
        throw ParseError(line.number, "expected 'l' line");
      if (line.tokens.size() < 2)
        throw ParseError(line.number, "missing vertex field");
      long long v = detail::parse_int_token(line.tokens[1], line.number);
      if (v < 1 || v > n)
        throw ParseError(line.number, "vertex out of range [1, " +
                                          std::to_string(n) + "]");
      if (seen[v - 1])
        throw ParseError(line.number, "duplicate list for vertex " +
                                          std::to_string(v));
      seen[v - 1] = 1;
      for (std::size_t c = 2; c < line.tokens.size(); ++c) {
        long long t = detail::parse_int_token(line.tokens[c], line.number);
        if (t < 1 || t > h)
          throw ParseError(line.number, "list target out of range [1, " +
                                            std::to_string(h) + "]");
        lists[v - 1].push_back(static_cast<int>(t));
      }
    }
    for (int v = 1; v <= n; ++v)
      if (!seen[v - 1])
        throw ParseError(lines.empty() ? 1 : lines.back().number,
                         "missing list for vertex " + std::to_string(v));
    return ListAssignment(std::move(lists));
  }

  std::string serialize() const {
    std::string out;
    for (int v = 1; v <= size(); ++v) {
      out += "l " + std::to_string(v);
      for (int t : lists[v - 1]) out += " " + std::to_string(t);
      out += "\n";
    }
    return out;
  }
};

}  // namespace ordhom
