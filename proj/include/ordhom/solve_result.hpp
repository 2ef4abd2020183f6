#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ordhom/mapping.hpp"

namespace ordhom {

enum class Algorithm { BruteForce, CliqueMin, Shifted, DynamicProgram };

inline const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::BruteForce: return "brute";
    case Algorithm::CliqueMin: return "clique-min";
    case Algorithm::Shifted: return "shifted";
    case Algorithm::DynamicProgram: return "dp";
  }
  return "unknown";
}

struct SolveStats {
  std::uint64_t candidates_enumerated = 0;  // search nodes / assignments tried
  std::uint64_t dp_entries = 0;
  std::uint64_t recursion_branches = 0;
};

/// Outcome of any solver. feasible == witness.has_value(), and every
/// witness satisfies is_valid_homomorphism for the inputs it was produced
/// from.
struct SolveResult {
  bool feasible = false;
  std::optional<OrderedMapping> witness;
  Algorithm algorithm = Algorithm::BruteForce;
  SolveStats stats;

  static SolveResult found(OrderedMapping f, Algorithm a, SolveStats s = {}) {
    SolveResult r;
    r.feasible = true;
    r.witness = std::move(f);
    r.algorithm = a;
    r.stats = s;
    return r;
  }

  static SolveResult none(Algorithm a, SolveStats s = {}) {
    SolveResult r;
    r.feasible = false;
    r.algorithm = a;
    r.stats = s;
    return r;
  }
};

}  // namespace ordhom
