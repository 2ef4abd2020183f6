#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ordhom/text_io.hpp"

namespace ordhom {

struct Relation {
  std::string name;
  int arity = 0;
  std::vector<std::vector<int>> tuples;

  bool operator==(const Relation&) const = default;
};

/// A relational structure: a universe 1..|V| plus an ordered list of named
/// relations of fixed arity. The list order of relations and tuples is kept
/// exactly as given; constructions that need "an arbitrary but fixed
/// ordering" use it.
class RelationalStructure {
 public:
  RelationalStructure() = default;

  RelationalStructure(int universe_size, std::vector<Relation> relations)
      : universe_size_(universe_size), relations_(std::move(relations)) {
    if (universe_size_ < 0)
      throw std::invalid_argument("universe size must be >= 0");
    std::set<std::string> names;
    for (const auto& rel : relations_) {
      if (rel.arity < 1)
        throw std::invalid_argument("relation '" + rel.name +
                                    "' must have arity >= 1");
      if (!names.insert(rel.name).second)
        throw std::invalid_argument("duplicate relation name '" + rel.name +
                                    "'");
      for (const auto& tuple : rel.tuples) {
        if (static_cast<int>(tuple.size()) != rel.arity)
          throw std::invalid_argument("tuple length does not match arity of '" +
                                      rel.name + "'");
        for (int x : tuple)
          if (x < 1 || x > universe_size_)
            throw std::invalid_argument("tuple entry out of universe range");
      }
    }
  }

  int universe_size() const { return universe_size_; }
  const std::vector<Relation>& relations() const { return relations_; }

  /// True iff both structures declare the same sequence of relation names
  /// and arities.
  bool same_signature(const RelationalStructure& other) const {
    if (relations_.size() != other.relations_.size()) return false;
    for (std::size_t r = 0; r < relations_.size(); ++r)
      if (relations_[r].name != other.relations_[r].name ||
          relations_[r].arity != other.relations_[r].arity)
        return false;
    return true;
  }

  /// True iff the element appears in no tuple of any relation.
  bool element_isolated(int v) const {
    for (const auto& rel : relations_)
      for (const auto& tuple : rel.tuples)
        for (int x : tuple)
          if (x == v) return false;
    return true;
  }

  bool operator==(const RelationalStructure&) const = default;

  /// Text format:
  ///   struct <universeSize> <numRelations>
  ///   rel <name> <arity> <numTuples>
  ///   t <x1> ... <x_arity>
  static RelationalStructure parse(const std::string& text) {
    auto lines = detail::tokenize_lines(text);
    if (lines.empty()) throw ParseError(1, "missing 'struct' header");
    std::size_t at = 0;
    const auto& head = lines[at++];
    if (head.tokens[0] != "struct")
      throw ParseError(head.number, "expected 'struct' header");
    detail::expect_token_count(head, 3);
    long long universe = detail::parse_int_token(head.tokens[1], head.number);
    long long num_rels = detail::parse_int_token(head.tokens[2], head.number);
    if (universe < 0) throw ParseError(head.number, "universe must be >= 0");
    if (num_rels < 0)
      throw ParseError(head.number, "relation count must be >= 0");

    std::vector<Relation> relations;
    for (long long r = 0; r < num_rels; ++r) {
      if (at >= lines.size())
        throw ParseError(lines.back().number + 1, "missing 'rel' line");
      const auto& rl = lines[at++];
      if (rl.tokens[0] != "rel")
        throw ParseError(rl.number, "expected 'rel' line");
      detail::expect_token_count(rl, 4);
      Relation rel;
      rel.name = rl.tokens[1];
      long long arity = detail::parse_int_token(rl.tokens[2], rl.number);
      long long num_tuples = detail::parse_int_token(rl.tokens[3], rl.number);
      if (arity < 1)
        throw ParseError(rl.number, "relation arity must be >= 1");
      if (num_tuples < 0)
        throw ParseError(rl.number, "tuple count must be >= 0");
      rel.arity = static_cast<int>(arity);
      for (long long t = 0; t < num_tuples; ++t) {
        if (at >= lines.size())
          throw ParseError(lines.back().number + 1, "missing 't' line");
        const auto& tl = lines[at++];
        if (tl.tokens[0] != "t")
          throw ParseError(tl.number, "expected 't' line");
        detail::expect_token_count(tl, 1 + rel.arity);
        std::vector<int> tuple;
        for (int c = 0; c < rel.arity; ++c) {
          long long x = detail::parse_int_token(tl.tokens[1 + c], tl.number);
          if (x < 1 || x > universe)
            throw ParseError(tl.number, "tuple entry out of universe range");
          tuple.push_back(static_cast<int>(x));
        }
        rel.tuples.push_back(std::move(tuple));
      }
      relations.push_back(std::move(rel));
    }
    if (at != lines.size())
      throw ParseError(lines[at].number, "unexpected trailing line");
    return RelationalStructure(static_cast<int>(universe),
                               std::move(relations));
  }

  std::string serialize() const {
    std::string out = "struct " + std::to_string(universe_size_) + " " +
                      std::to_string(relations_.size()) + "\n";
    for (const auto& rel : relations_) {
      out += "rel " + rel.name + " " + std::to_string(rel.arity) + " " +
             std::to_string(rel.tuples.size()) + "\n";
      for (const auto& tuple : rel.tuples) {
        out += "t";
        for (int x : tuple) out += " " + std::to_string(x);
        out += "\n";
      }
    }
    return out;
  }

 private:
  int universe_size_ = 0;
  std::vector<Relation> relations_;
};

/// A map between structure universes, entry k is the image of element k.
struct StructureMapping {
  std::vector<int> targets;

  bool operator==(const StructureMapping&) const = default;
};

/// True iff `map` carries every tuple of every relation of `gs` onto a tuple
/// present in the corresponding relation of `hs`.
inline bool is_structure_homomorphism(const RelationalStructure& gs,
                                      const RelationalStructure& hs,
                                      const StructureMapping& map) {
  if (!gs.same_signature(hs))
    throw std::invalid_argument("signature mismatch");
  if (static_cast<int>(map.targets.size()) != gs.universe_size())
    throw std::invalid_argument("mapping size does not match universe");
  for (int t : map.targets)
    if (t < 1 || t > hs.universe_size()) return false;
  std::vector<int> image;
  for (std::size_t r = 0; r < gs.relations().size(); ++r) {
    const auto& target_tuples = hs.relations()[r].tuples;
    for (const auto& tuple : gs.relations()[r].tuples) {
      image.clear();
      for (int x : tuple) image.push_back(map.targets[x - 1]);
      bool found = false;
      for (const auto& cand : target_tuples)
        if (cand == image) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace ordhom
