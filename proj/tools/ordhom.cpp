// Command-line front end: solve / chi / recognize / reduce / gen.
// Exit codes: 0 feasible (or success), 1 infeasible, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ordhom/ordhom.hpp"

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

// Optional cap on internal parallelism; the solvers currently run on a
// single thread, so any positive value is honored trivially.
void check_thread_env() {
  const char* raw = std::getenv("ORDHOM_THREADS");
  if (!raw) return;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1)
    std::cerr << "warning: ignoring invalid ORDHOM_THREADS='" << raw << "'\n";
}

struct SolveOptions {
  std::string g_path, h_path, lists_path, bounds_path;
  std::string algo = "auto";
  bool stats = false;
  bool json = false;
};

int run_solve(const SolveOptions& opt) {
  auto g = ordhom::OrderedGraph::parse(read_file(opt.g_path));
  auto h = ordhom::OrderedGraph::parse(read_file(opt.h_path));

  std::optional<ordhom::ListAssignment> lists;
  if (!opt.lists_path.empty())
    lists = ordhom::ListAssignment::parse(read_file(opt.lists_path),
                                          g.vertex_count(), h.vertex_count());
  std::optional<ordhom::BoundsAssignment> bounds;
  if (!opt.bounds_path.empty())
    bounds = ordhom::BoundsAssignment::parse(
        read_file(opt.bounds_path), g.vertex_count(), h.vertex_count());

  ordhom::AlgoChoice algo = ordhom::AlgoChoice::Auto;
  if (opt.algo == "brute") algo = ordhom::AlgoChoice::Brute;
  else if (opt.algo == "shifted") algo = ordhom::AlgoChoice::Shifted;
  else if (opt.algo == "dp") algo = ordhom::AlgoChoice::Dp;
  else if (opt.algo != "auto")
    throw std::runtime_error("unknown algorithm: " + opt.algo);

  auto result = ordhom::solve(g, h, lists ? &*lists : nullptr,
                              bounds ? &*bounds : nullptr, algo);

  if (opt.json) {
    nlohmann::json out;
    out["feasible"] = result.feasible;
    if (result.witness)
      out["witness"] = result.witness->targets();
    else
      out["witness"] = nullptr;
    out["algorithm"] = ordhom::algorithm_name(result.algorithm);
    out["stats"] = {
        {"candidates", result.stats.candidates_enumerated},
        {"dp_entries", result.stats.dp_entries},
        {"branches", result.stats.recursion_branches},
    };
    std::cout << out.dump() << "\n";
  } else {
    if (result.feasible) {
      std::cout << "YES\n" << result.witness->serialize();
    } else {
      std::cout << "NO\n";
    }
    if (opt.stats)
      std::cout << "stats algorithm=" << ordhom::algorithm_name(result.algorithm)
                << " candidates=" << result.stats.candidates_enumerated
                << " dp_entries=" << result.stats.dp_entries
                << " branches=" << result.stats.recursion_branches << "\n";
  }
  return result.feasible ? kExitFeasible : kExitInfeasible;
}

int run_chi(const std::string& g_path) {
  auto g = ordhom::OrderedGraph::parse(read_file(g_path));
  std::cout << ordhom::ordered_chromatic_number(g) << "\n";
  return kExitFeasible;
}

int run_recognize(const std::string& h_path) {
  auto h = ordhom::OrderedGraph::parse(read_file(h_path));
  auto d = ordhom::find_shifted_decomposition(h);
  if (d)
    std::cout << "shifted k=" << d->segments() << "\n";
  else
    std::cout << "shifted none\n";
  std::cout << "c=" << ordhom::cut_width(h) << "\n";
  return kExitFeasible;
}

struct ReduceCommon {
  std::string out_prefix;
  bool with_lists = false;
};

void emit_struct_reduction(const ordhom::StructReductionOutput& out,
                           const ReduceCommon& common) {
  write_file(common.out_prefix + ".g.og", out.g.serialize());
  write_file(common.out_prefix + ".h.og", out.h.serialize());
  if (out.lists)
    write_file(common.out_prefix + ".g.lists", out.lists->serialize());
  write_file(common.out_prefix + ".g.prov",
             ordhom::serialize_provenance(out.g_provenance));
  write_file(common.out_prefix + ".h.prov",
             ordhom::serialize_provenance(out.h_provenance));
  std::cout << "|V(G)|=" << out.g.vertex_count()
            << " |E(G)|=" << out.g.edge_count()
            << " |V(H)|=" << out.h.vertex_count()
            << " |E(H)|=" << out.h.edge_count()
            << " lists=" << (out.lists ? "yes" : "no") << "\n";
}

void emit_mis_reduction(const ordhom::MisReductionOutput& out,
                        const ReduceCommon& common) {
  write_file(common.out_prefix + ".g.og", out.g.serialize());
  write_file(common.out_prefix + ".h.og", out.h.serialize());
  if (out.lists)
    write_file(common.out_prefix + ".g.lists", out.lists->serialize());
  write_file(common.out_prefix + ".g.prov",
             ordhom::serialize_provenance(out.g_provenance));
  write_file(common.out_prefix + ".h.prov",
             ordhom::serialize_provenance(out.h_provenance));
  std::cout << "|V(G)|=" << out.g.vertex_count()
            << " |E(G)|=" << out.g.edge_count()
            << " |V(H)|=" << out.h.vertex_count()
            << " |E(H)|=" << out.h.edge_count()
            << " lists=" << (out.lists ? "yes" : "no") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordered-graph homomorphism toolkit"};
  app.require_subcommand(1);
  check_thread_env();

  // solve
  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "decide G -> H");
  solve->add_option("G", solve_opt.g_path, "source graph file")->required();
  solve->add_option("H", solve_opt.h_path, "target graph file")->required();
  solve->add_option("--lists", solve_opt.lists_path, "list constraints file");
  solve->add_option("--bounds", solve_opt.bounds_path, "bound constraints file");
  solve->add_option("--algo", solve_opt.algo, "auto|brute|shifted|dp");
  solve->add_flag("--stats", solve_opt.stats, "print search statistics");
  solve->add_flag("--json", solve_opt.json, "machine-readable output");

  // chi
  std::string chi_path;
  auto* chi = app.add_subcommand("chi", "ordered chromatic number of G");
  chi->add_option("G", chi_path, "graph file")->required();

  // recognize
  std::string rec_path;
  auto* rec = app.add_subcommand("recognize", "analyze a target graph");
  rec->add_option("H", rec_path, "graph file")->required();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "build hardness instances");
  reduce->require_subcommand(1);
  ReduceCommon reduce_common;

  std::string struct_g_path, struct_h_path;
  auto* red_struct =
      reduce->add_subcommand("struct", "structure pair -> ordered graphs");
  red_struct->add_option("GS", struct_g_path, "source structure file")
      ->required();
  red_struct->add_option("HS", struct_h_path, "target structure file")
      ->required();
  red_struct->add_option("--out", reduce_common.out_prefix, "output prefix")
      ->required();
  red_struct->add_flag("--lists", reduce_common.with_lists,
                       "emit the list variant");

  std::string coloring_path;
  int coloring_colors = 3;
  auto* red_coloring =
      reduce->add_subcommand("coloring", "c-coloring -> ordered graphs");
  red_coloring->add_option("F", coloring_path, "graph file")->required();
  red_coloring->add_option("--colors", coloring_colors, "color count")
      ->required();
  red_coloring->add_option("--out", reduce_common.out_prefix, "output prefix")
      ->required();
  red_coloring->add_flag("--lists", reduce_common.with_lists,
                         "emit the list variant");

  std::string mis_path;
  int mis_parts = 0;
  auto* red_mis = reduce->add_subcommand(
      "mis", "independent transversal -> ordered graphs");
  red_mis->add_option("F", mis_path, "partitioned graph file")->required();
  red_mis->add_option("--parts", mis_parts, "number of parts")->required();
  red_mis->add_option("--out", reduce_common.out_prefix, "output prefix")
      ->required();
  red_mis->add_flag("--lists", reduce_common.with_lists,
                    "emit the list variant");

  // gen
  auto* gen = app.add_subcommand("gen", "seeded instance generators");
  gen->require_subcommand(1);
  std::string gen_out;
  std::uint64_t gen_seed = 0;
  int gen_n = 0, gen_k = 0, gen_l = 0;
  double gen_p = 0.0;
  std::string gen_segments;

  auto* gen_random = gen->add_subcommand("random", "uniform random graph");
  gen_random->add_option("--n", gen_n, "vertex count")->required();
  gen_random->add_option("--p", gen_p, "edge probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--seed", gen_seed, "seed")->required();
  gen_random->add_option("--out", gen_out, "output file")->required();

  auto* gen_clique = gen->add_subcommand("clique", "complete graph");
  gen_clique->add_option("--n", gen_n, "vertex count")->required();
  gen_clique->add_option("--out", gen_out, "output file")->required();

  auto* gen_shifted =
      gen->add_subcommand("shifted", "random graph over given segments");
  gen_shifted->add_option("--segments", gen_segments, "sizes, e.g. 2,3,1")
      ->required();
  gen_shifted->add_option("--seed", gen_seed, "seed")->required();
  gen_shifted->add_option("--out", gen_out, "output file")->required();

  auto* gen_part =
      gen->add_subcommand("partitioned", "random transversal source");
  gen_part->add_option("--k", gen_k, "parts")->required();
  gen_part->add_option("--l", gen_l, "part size")->required();
  gen_part->add_option("--p", gen_p, "cross-edge probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gen_part->add_option("--seed", gen_seed, "seed")->required();
  gen_part->add_option("--out", gen_out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitError;
  }

  try {
    if (*solve) return run_solve(solve_opt);
    if (*chi) return run_chi(chi_path);
    if (*rec) return run_recognize(rec_path);

    if (*red_struct) {
      auto gs = ordhom::RelationalStructure::parse(read_file(struct_g_path));
      auto hs = ordhom::RelationalStructure::parse(read_file(struct_h_path));
      auto out = reduce_common.with_lists
                     ? ordhom::reduce_structures_list(gs, hs)
                     : ordhom::reduce_structures_nolist(gs, hs);
      emit_struct_reduction(out, reduce_common);
      return kExitFeasible;
    }
    if (*red_coloring) {
      auto f = ordhom::OrderedGraph::parse(read_file(coloring_path));
      auto [gs, hs] = ordhom::coloring_to_structures(f, coloring_colors);
      auto out = reduce_common.with_lists
                     ? ordhom::reduce_structures_list(gs, hs)
                     : ordhom::reduce_structures_nolist(gs, hs);
      emit_struct_reduction(out, reduce_common);
      return kExitFeasible;
    }
    if (*red_mis) {
      auto f = ordhom::OrderedGraph::parse(read_file(mis_path));
      if (mis_parts < 1) throw std::runtime_error("--parts must be >= 1");
      if (f.vertex_count() == 0)
        throw std::runtime_error("partitioned graph must be nonempty");
      // contiguous parts, as equal as possible, padded up to the largest
      int k = mis_parts;
      if (k > f.vertex_count())
        throw std::runtime_error("more parts than vertices");
      std::vector<int> sizes(k, f.vertex_count() / k);
      for (int r = 0; r < f.vertex_count() % k; ++r) ++sizes[r];
      auto pg = ordhom::PartitionedGraph::with_padding(f, sizes);
      auto out = reduce_common.with_lists ? ordhom::reduce_mis_list(pg)
                                          : ordhom::reduce_mis_nolist(pg);
      emit_mis_reduction(out, reduce_common);
      return kExitFeasible;
    }

    if (*gen_random) {
      auto g = ordhom::gen_random_graph(gen_n, gen_p, gen_seed);
      write_file(gen_out, g.serialize());
      std::cout << "wrote " << gen_out << " n=" << g.vertex_count()
                << " m=" << g.edge_count() << "\n";
      return kExitFeasible;
    }
    if (*gen_clique) {
      auto g = ordhom::OrderedGraph::clique(gen_n);
      write_file(gen_out, g.serialize());
      std::cout << "wrote " << gen_out << " n=" << g.vertex_count()
                << " m=" << g.edge_count() << "\n";
      return kExitFeasible;
    }
    if (*gen_shifted) {
      std::vector<int> sizes;
      std::stringstream ss(gen_segments);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int value = std::stoi(item, &pos);
        if (pos != item.size())
          throw std::runtime_error("bad segment size: '" + item + "'");
        sizes.push_back(value);
      }
      if (sizes.empty()) throw std::runtime_error("empty segment list");
      ordhom::ShiftedDecomposition d;
      auto g = ordhom::gen_shifted_graph(sizes, gen_seed, &d);
      write_file(gen_out, g.serialize());
      std::cout << "wrote " << gen_out << " n=" << g.vertex_count()
                << " m=" << g.edge_count() << " k=" << d.segments() << "\n";
      return kExitFeasible;
    }
    if (*gen_part) {
      auto pg = ordhom::gen_partitioned_graph(gen_k, gen_l, gen_p, gen_seed);
      write_file(gen_out, pg.graph().serialize());
      std::cout << "wrote " << gen_out << " n=" << pg.graph().vertex_count()
                << " m=" << pg.graph().edge_count() << "\n";
      return kExitFeasible;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
