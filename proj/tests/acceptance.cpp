// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything is exact (combinatorial equalities and oracle agreement); no
// tolerances apply.

#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ordhom/ordhom.hpp"
#include "oracle.hpp"

using namespace ordhom;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::string&)> run;
};

bool counting_law(std::string& detail) {
  for (int n = 0; n <= 10; ++n)
    for (int h = 1; h <= 6; ++h) {
      std::set<std::vector<int>> seen;
      std::uint64_t count = 0;
      bool all_monotone = true;
      for_each_monotone_map(n, h, [&](const std::vector<int>& f) {
        ++count;
        all_monotone = all_monotone && std::is_sorted(f.begin(), f.end());
        seen.insert(f);
      });
      std::uint64_t expect = binomial(n + h - 1, h - 1);
      if (count != expect || seen.size() != count || !all_monotone) {
        detail = "n=" + std::to_string(n) + " h=" + std::to_string(h) +
                 " produced " + std::to_string(count) + " maps, expected " +
                 std::to_string(expect);
        return false;
      }
    }
  detail = "all 66 (n,h) pairs match C(n+h-1,h-1), monotone, duplicate-free";
  return true;
}

bool solver_soundness(std::string& detail) {
  SplitMix64 rng(1001);
  int witnesses = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.range(0, 7), hn = rng.range(1, 5);
    auto g = gen_random_graph(n, 0.4, rng.next());
    auto h = gen_random_graph(hn, 0.5, rng.next());
    std::vector<int> lo(n), up(n);
    for (int v = 0; v < n; ++v) {
      int a = rng.range(1, hn), b = rng.range(1, hn);
      lo[v] = std::min(a, b);
      up[v] = std::max(a, b);
    }
    BoundsAssignment bounds(lo, up);

    auto check = [&](const SolveResult& r, const BoundsAssignment* b,
                     const OrderedGraph& target) {
      if (!r.feasible) return true;
      ++witnesses;
      return is_valid_homomorphism(g, target, *r.witness, nullptr, b);
    };

    if (!check(brute_force_solve(g, h, nullptr, &bounds), &bounds, h) ||
        !check(dp_solve(g, h, compute_cut_profile(h)), nullptr, h) ||
        !check(solve(g, h), nullptr, h)) {
      detail = "invalid witness at trial " + std::to_string(trial);
      return false;
    }
    auto d = find_shifted_decomposition(h);
    if (!check(shifted_solve(g, h, *d, bounds), &bounds, h)) {
      detail = "invalid shifted witness at trial " + std::to_string(trial);
      return false;
    }
    auto kh = OrderedGraph::clique(hn);
    if (!check(clique_min_solve(g, hn, bounds), &bounds, kh)) {
      detail = "invalid clique-min witness at trial " + std::to_string(trial);
      return false;
    }
  }
  detail = std::to_string(witnesses) + " witnesses validated";
  return true;
}

bool dp_equivalence(std::string& detail) {
  SplitMix64 rng(30303);
  int checked = 0;
  // exhaustive targets up to 4 vertices, 50 seeded sources each
  for (int hn = 1; hn <= 4; ++hn) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 1; i <= hn; ++i)
      for (int j = i + 1; j <= hn; ++j) all_pairs.emplace_back(i, j);
    for (unsigned mask = 0; mask < (1u << all_pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t b = 0; b < all_pairs.size(); ++b)
        if (mask & (1u << b)) edges.push_back(all_pairs[b]);
      OrderedGraph h(hn, edges);
      auto profile = compute_cut_profile(h);
      for (int rep = 0; rep < 50; ++rep) {
        auto g = gen_random_graph(rng.range(0, 6), 0.45, rng.next());
        ++checked;
        if (dp_solve(g, h, profile).feasible !=
            brute_force_solve(g, h).feasible) {
          detail = "disagreement on exhaustive sweep (h=" +
                   std::to_string(hn) + ", mask=" + std::to_string(mask) + ")";
          return false;
        }
      }
    }
  }
  for (int trial = 0; trial < 500; ++trial) {
    auto g = gen_random_graph(rng.range(0, 8), 0.4, rng.next());
    auto h = gen_random_graph(rng.range(1, 5), 0.5, rng.next());
    ++checked;
    if (dp_solve(g, h, compute_cut_profile(h)).feasible !=
        brute_force_solve(g, h).feasible) {
      detail = "disagreement on random pair " + std::to_string(trial);
      return false;
    }
  }
  detail = std::to_string(checked) + " instances, zero disagreements";
  return true;
}

bool shifted_equivalence(std::string& detail) {
  SplitMix64 rng(40404);
  for (int trial = 0; trial < 500; ++trial) {
    int k = rng.range(1, 3);
    std::vector<int> sizes(k);
    int h = 0;
    for (auto& s : sizes) {
      s = rng.range(1, 8 / k > 0 ? 8 / k : 1);
      h += s;
    }
    ShiftedDecomposition d;
    auto target = gen_shifted_graph(sizes, rng.next(), &d);
    int n = rng.range(0, 8);
    auto g = gen_random_graph(n, 0.4, rng.next());
    std::vector<int> lo(n, 1), up(n, h);
    if (rng.bernoulli(0.5))
      for (int v = 0; v < n; ++v) {
        int a = rng.range(1, h), b = rng.range(1, h);
        lo[v] = std::min(a, b);
        up[v] = std::max(a, b);
      }
    BoundsAssignment bounds(lo, up);
    auto fast = shifted_solve(g, target, d, bounds);
    auto ground = brute_force_solve(g, target, nullptr, &bounds);
    if (fast.feasible != ground.feasible) {
      detail = "disagreement at trial " + std::to_string(trial) +
               " (k=" + std::to_string(k) + ", h=" + std::to_string(h) + ")";
      return false;
    }
  }
  detail = "500 generated instances with bounds, zero disagreements";
  return true;
}

bool clique_minimality(std::string& detail) {
  SplitMix64 rng(50505);
  int feasible = 0;
  int attempts = 0;
  while (feasible < 300 && attempts < 5000) {
    ++attempts;
    int n = rng.range(0, 7), h = rng.range(1, 5);
    auto g = gen_random_graph(n, 0.35, rng.next());
    std::vector<int> lo(n), up(n);
    for (int v = 0; v < n; ++v) {
      int a = rng.range(1, h), b = rng.range(1, h);
      lo[v] = std::min(a, b);
      up[v] = std::max(a, b);
    }
    BoundsAssignment bounds(lo, up);
    auto r = clique_min_solve(g, h, bounds);
    if (!r.feasible) continue;
    ++feasible;
    bool minimal = true;
    for_each_homomorphism(g, OrderedGraph::clique(h), nullptr, &bounds,
                          [&](const OrderedMapping& other) {
                            for (int v = 1; v <= n; ++v)
                              if (r.witness->target_of(v) > other.target_of(v))
                                minimal = false;
                            return minimal;
                          });
    if (!minimal) {
      detail = "non-minimal witness at attempt " + std::to_string(attempts);
      return false;
    }
  }
  if (feasible < 300) {
    detail = "only " + std::to_string(feasible) + " feasible instances drawn";
    return false;
  }
  detail = "300 feasible instances, witness pointwise minimal on all";
  return true;
}

bool chi_correctness(std::string& detail) {
  SplitMix64 rng(60606);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = gen_random_graph(rng.range(0, 8), 0.4, rng.next());
    int chi = ordered_chromatic_number(g);
    int least = 0;
    for (int k = 1; k <= std::max(1, g.vertex_count()); ++k)
      if (brute_force_solve(g, OrderedGraph::clique(k)).feasible) {
        least = k;
        break;
      }
    if (g.vertex_count() == 0) least = 0;
    if (chi != least) {
      detail = "mismatch at trial " + std::to_string(trial) + ": greedy " +
               std::to_string(chi) + ", brute " + std::to_string(least);
      return false;
    }
  }
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    if (ordered_chromatic_number(OrderedGraph(n, edges)) != n) {
      detail = "monotone path on " + std::to_string(n) + " vertices";
      return false;
    }
    if (ordered_chromatic_number(OrderedGraph::clique(n)) != n) {
      detail = "clique on " + std::to_string(n) + " vertices";
      return false;
    }
  }
  detail = "200 random graphs, paths and cliques all match";
  return true;
}

bool structure_reduction_equivalence(std::string& detail) {
  SplitMix64 rng(70707);
  for (int trial = 0; trial < 100; ++trial) {
    auto gs = oracle::random_binary_structure(rng.range(1, 3), 4, 0, rng, true);
    auto hs = oracle::random_binary_structure(rng.range(1, 3), 4, 1, rng);
    bool source = find_structure_homomorphism(gs, hs).has_value();

    auto listed = reduce_structures_list(gs, hs);
    auto plain = reduce_structures_nolist(gs, hs);

    // size identities, on the normalized (isolated elements dropped) source
    int p = 0;
    for (int v = 1; v <= gs.universe_size(); ++v)
      if (!gs.element_isolated(v)) ++p;
    long long tuples_g = 0, cross = 0;
    for (std::size_t r = 0; r < gs.relations().size(); ++r) {
      tuples_g += static_cast<long long>(gs.relations()[r].tuples.size());
      cross += static_cast<long long>(gs.relations()[r].tuples.size()) *
               hs.relations()[r].tuples.size();
    }
    if (listed.g.vertex_count() != p + tuples_g ||
        listed.h.vertex_count() !=
            static_cast<long long>(p) * hs.universe_size() + cross) {
      detail = "size formula violated at trial " + std::to_string(trial);
      return false;
    }

    bool listed_feasible =
        brute_force_solve(listed.g, listed.h, &*listed.lists, nullptr)
            .feasible;
    bool plain_feasible = brute_force_solve(plain.g, plain.h).feasible;
    if (listed_feasible != source || plain_feasible != source) {
      detail = "equivalence broken at trial " + std::to_string(trial) +
               " (source=" + std::to_string(source) +
               ", list=" + std::to_string(listed_feasible) +
               ", plain=" + std::to_string(plain_feasible) + ")";
      return false;
    }
  }
  detail = "100 structure pairs: equivalence and size formulas exact";
  return true;
}

bool mis_reduction_equivalence(std::string& detail) {
  const int k = 2, l = 2;
  std::vector<std::pair<int, int>> all_cross;
  for (int a = 1; a <= 2; ++a)
    for (int b = 3; b <= 4; ++b) all_cross.emplace_back(a, b);
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<std::pair<int, int>> cross;
    for (std::size_t b = 0; b < all_cross.size(); ++b)
      if (mask & (1u << b)) cross.push_back(all_cross[b]);
    PartitionedGraph pg(OrderedGraph(4, cross), k, l);
    bool expect = has_multicolored_independent_set(pg);

    auto listed = reduce_mis_list(pg);
    auto plain = reduce_mis_nolist(pg);
    if (listed.h.vertex_count() != 5 * k ||
        listed.g.vertex_count() != 2 * k * l + 3 * k ||
        plain.h.vertex_count() != 7 * k + 2 ||
        plain.g.vertex_count() != 2 * k * l + 5 * k + 2) {
      detail = "size formula violated at mask " + std::to_string(mask);
      return false;
    }
    if (brute_force_solve(listed.g, listed.h, &*listed.lists, nullptr)
            .feasible != expect ||
        brute_force_solve(plain.g, plain.h).feasible != expect) {
      detail = "equivalence broken at mask " + std::to_string(mask);
      return false;
    }
  }
  detail = "all 16 cross-edge subsets: equivalence and sizes exact";
  return true;
}

bool structural_assertions(std::string& detail) {
  SplitMix64 rng(90909);
  // independent selector vertices in every transversal target
  for (int trial = 0; trial < 40; ++trial) {
    int k = rng.range(1, 3), l = rng.range(1, 3);
    auto pg = gen_partitioned_graph(k, l, 0.5, rng.next());
    auto listed = reduce_mis_list(pg);
    std::vector<int> ys;
    for (int v = 1; v <= listed.h.vertex_count(); ++v)
      if (listed.h_provenance[v - 1].rfind("Y", 0) == 0) ys.push_back(v);
    for (std::size_t a = 0; a < ys.size(); ++a)
      for (std::size_t b = a + 1; b < ys.size(); ++b)
        if (listed.h.adjacent(ys[a], ys[b])) {
          detail = "selector vertices adjacent at trial " +
                   std::to_string(trial);
          return false;
        }
  }
  // bipartite layout and forward-path bound in list-variant targets
  for (int trial = 0; trial < 60; ++trial) {
    auto gs = oracle::random_binary_structure(rng.range(1, 3), 4, 0, rng, true);
    auto hs = oracle::random_binary_structure(rng.range(1, 3), 4, 1, rng);
    auto listed = reduce_structures_list(gs, hs);
    int h_split = 0, g_split = 0;
    for (int v = 1; v <= listed.h.vertex_count(); ++v)
      if (listed.h_provenance[v - 1].rfind("AH", 0) == 0) h_split = v;
    for (int v = 1; v <= listed.g.vertex_count(); ++v)
      if (listed.g_provenance[v - 1].rfind("AG", 0) == 0) g_split = v;
    if (!oracle::bipartite_with_split(listed.h, h_split) ||
        !oracle::bipartite_with_split(listed.g, g_split)) {
      detail = "bipartite layout broken at trial " + std::to_string(trial);
      return false;
    }
    int fwd = oracle::longest_forward_path(listed.h);
    if (fwd > 2 || (listed.h.edge_count() > 0 && fwd != 2)) {
      detail = "forward path bound broken at trial " + std::to_string(trial);
      return false;
    }
  }
  // unique maximum clique in the augmented transversal target
  for (int k = 1; k <= 3; ++k) {
    auto pg = gen_partitioned_graph(k, 2, 0.5, 1000 + k);
    auto plain = reduce_mis_nolist(pg);
    auto best = oracle::maximum_cliques(plain.h);
    if (best.size() != 1 || static_cast<int>(best[0].size()) != 2 * k + 2) {
      detail = "augmented clique not the unique maximum for k=" +
               std::to_string(k);
      return false;
    }
  }
  detail = "selector independence, bipartite layout, forward-path bound, "
           "unique maximum clique all hold";
  return true;
}

bool recognition(std::string& detail) {
  SplitMix64 rng(11111);
  for (int trial = 0; trial < 300; ++trial) {
    auto h = gen_random_graph(rng.range(0, 9), 0.45, rng.next());
    auto greedy = find_shifted_decomposition(h);
    auto best = oracle::exhaustive_min_segments(h);
    if (greedy.has_value() != best.has_value()) {
      detail = "existence mismatch at trial " + std::to_string(trial);
      return false;
    }
    if (greedy &&
        (!is_valid_shifted_decomposition(h, *greedy) ||
         greedy->segments() != *best)) {
      detail = "segment count mismatch at trial " + std::to_string(trial) +
               ": greedy " + std::to_string(greedy->segments()) + ", best " +
               std::to_string(*best);
      return false;
    }
  }
  for (int h = 1; h <= 10; ++h)
    if (cut_width(OrderedGraph::clique(h)) != 0 ||
        cut_width(OrderedGraph(h)) != 0) {
      detail = "nonzero width for clique or edgeless on " +
               std::to_string(h) + " vertices";
      return false;
    }
  detail = "300 targets match exhaustive segmentation; width facts hold";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "counting-law", counting_law},
      {2, "solver-soundness", solver_soundness},
      {3, "dp-oracle-equivalence", dp_equivalence},
      {4, "shifted-oracle-equivalence", shifted_equivalence},
      {5, "clique-min-minimality", clique_minimality},
      {6, "chi-correctness", chi_correctness},
      {7, "structure-reduction-equivalence", structure_reduction_equivalence},
      {8, "mis-reduction-equivalence", mis_reduction_equivalence},
      {9, "structural-assertions", structural_assertions},
      {10, "recognition", recognition},
  };

  int failures = 0;
  for (auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("%s %2d %-34s %s\n", ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), detail.c_str());
  }
  if (failures == 0)
    std::printf("all %zu criteria passed\n", criteria.size());
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
