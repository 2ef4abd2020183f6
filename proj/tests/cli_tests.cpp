// End-to-end checks of the command-line tool: exit codes, output grammar,
// generator determinism, reduce -> solve round trips.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(ORDHOM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof(buf), pipe))
    r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path temp_dir() {
  auto dir = fs::temp_directory_path() / "ordhom_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& content) {
  auto path = temp_dir() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("solve exit codes and output") {
  auto k2 = write("k2.og", "og 2 1\ne 1 2\n");
  auto k1 = write("k1.og", "og 1 0\n");

  auto yes = run("solve " + k2 + " " + k2);
  CHECK(yes.exit_code == 0);
  CHECK(yes.out == "YES\nmap 2\nf 1 1\nf 2 2\n");

  auto no = run("solve " + k2 + " " + k1);
  CHECK(no.exit_code == 1);
  CHECK(no.out == "NO\n");

  auto bad = run("solve " + k2 + " does_not_exist.og");
  CHECK(bad.exit_code == 2);

  auto malformed = write("bad.og", "og 2 1\ne 2 1\n");
  auto parse_fail = run("solve " + malformed + " " + k2);
  CHECK(parse_fail.exit_code == 2);
  CHECK(parse_fail.out.find("line 2") != std::string::npos);

  auto usage = run("solve");
  CHECK(usage.exit_code == 2);

  SUBCASE("every algorithm agrees on the exit code") {
    for (const std::string algo : {"auto", "brute", "shifted", "dp"}) {
      CHECK(run("solve " + k2 + " " + k2 + " --algo " + algo).exit_code == 0);
      CHECK(run("solve " + k2 + " " + k1 + " --algo " + algo).exit_code == 1);
    }
    CHECK(run("solve " + k2 + " " + k2 + " --algo wat").exit_code == 2);
  }

  SUBCASE("constraint files") {
    auto bounds = write("b.txt", "b 1 1 2\nb 2 2 2\n");
    CHECK(run("solve " + k2 + " " + k2 + " --bounds " + bounds).exit_code ==
          0);
    auto tight = write("tight.txt", "b 1 1 1\nb 2 1 1\n");
    CHECK(run("solve " + k2 + " " + k2 + " --bounds " + tight).exit_code == 1);
    auto lists = write("l.txt", "l 1 1\nl 2 2\n");
    CHECK(run("solve " + k2 + " " + k2 + " --lists " + lists).exit_code == 0);
    // lists are not supported by the shifted recursion
    CHECK(run("solve " + k2 + " " + k2 + " --lists " + lists +
              " --algo shifted")
              .exit_code == 2);
  }

  SUBCASE("json output") {
    auto r = run("solve " + k2 + " " + k2 + " --json");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["feasible"] == true);
    CHECK(parsed["witness"] == nlohmann::json::array({1, 2}));
    CHECK(parsed["stats"].contains("candidates"));
    CHECK(parsed.contains("algorithm"));
  }

  SUBCASE("stats line") {
    auto r = run("solve " + k2 + " " + k2 + " --stats --algo brute");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("stats algorithm=brute") != std::string::npos);
  }
}

TEST_CASE("chi and recognize") {
  auto edgeless = write("e5.og", "og 5 0\n");
  auto chi = run("chi " + edgeless);
  CHECK(chi.exit_code == 0);
  CHECK(chi.out == "1\n");

  auto k4 =
      write("k4.og", "og 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
  auto rec = run("recognize " + k4);
  CHECK(rec.exit_code == 0);
  CHECK(rec.out == "shifted k=1\nc=0\n");

  auto gap = write("gap.og", "og 3 1\ne 1 3\n");
  auto rec2 = run("recognize " + gap);
  CHECK(rec2.exit_code == 0);
  CHECK(rec2.out.find("shifted k=") != std::string::npos);
  CHECK(rec2.out.find("c=1") != std::string::npos);

  CHECK(run("chi missing.og").exit_code == 2);
}

TEST_CASE("generators") {
  auto dir = temp_dir();
  auto out1 = (dir / "g1.og").string();
  auto out2 = (dir / "g2.og").string();

  CHECK(run("gen clique --n 4 --out " + out1).exit_code == 0);
  CHECK(slurp(out1).substr(0, 7) == "og 4 6\n");

  CHECK(run("gen random --n 6 --p 0 --seed 7 --out " + out1).exit_code == 0);
  CHECK(slurp(out1) == "og 6 0\n");

  CHECK(run("gen random --n 8 --p 0.5 --seed 11 --out " + out1).exit_code ==
        0);
  CHECK(run("gen random --n 8 --p 0.5 --seed 11 --out " + out2).exit_code ==
        0);
  CHECK(slurp(out1) == slurp(out2));  // deterministic per seed

  CHECK(run("gen random --n 8 --p 0.5 --out " + out1).exit_code == 2);

  CHECK(run("gen shifted --segments 2,3 --seed 5 --out " + out1).exit_code ==
        0);
  CHECK(run("gen partitioned --k 2 --l 2 --p 0.4 --seed 3 --out " + out1)
            .exit_code == 0);
}

TEST_CASE("reduce commands") {
  auto dir = temp_dir();
  auto k3 = write("k3.og", "og 3 3\ne 1 2\ne 1 3\ne 2 3\n");

  SUBCASE("coloring, then solve the produced pair") {
    auto prefix = (dir / "col").string();
    auto r = run("reduce coloring " + k3 + " --colors 3 --out " + prefix);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("|V(G)|=") != std::string::npos);
    auto solved = run("solve " + prefix + ".g.og " + prefix + ".h.og");
    CHECK(solved.exit_code == 0);
    CHECK(solved.out.substr(0, 4) == "YES\n");

    auto r2 = run("reduce coloring " + k3 + " --colors 2 --out " + prefix);
    CHECK(r2.exit_code == 0);
    CHECK(run("solve " + prefix + ".g.og " + prefix + ".h.og").exit_code ==
          1);
  }

  SUBCASE("mis sizes appear in the summary") {
    auto f = write("f4.og", "og 4 1\ne 1 3\n");
    auto prefix = (dir / "mis").string();
    auto r = run("reduce mis " + f + " --parts 2 --out " + prefix);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("|V(H)|=16") != std::string::npos);
    CHECK(r.out.find("|V(G)|=20") != std::string::npos);
    CHECK(fs::exists(prefix + ".g.prov"));
    CHECK(fs::exists(prefix + ".h.prov"));

    auto listed = run("reduce mis " + f + " --parts 2 --lists --out " + prefix);
    CHECK(listed.exit_code == 0);
    CHECK(listed.out.find("|V(H)|=10") != std::string::npos);
    CHECK(listed.out.find("|V(G)|=14") != std::string::npos);
    auto solved = run("solve " + prefix + ".g.og " + prefix + ".h.og --lists " +
                      prefix + ".g.lists");
    CHECK(solved.exit_code == 0);
  }

  SUBCASE("struct reduction summary") {
    auto gs = write("edge.st", "struct 2 1\nrel E 2 1\nt 1 2\n");
    auto hs = write("c3.st",
                    "struct 3 1\nrel E 2 6\nt 1 2\nt 1 3\nt 2 1\nt 2 3\n"
                    "t 3 1\nt 3 2\n");
    auto prefix = (dir / "st").string();
    auto r = run("reduce struct " + gs + " " + hs + " --lists --out " + prefix);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("|V(H)|=12") != std::string::npos);
    CHECK(fs::exists(prefix + ".g.lists"));

    // signature mismatch is a usage error
    auto other = write("other.st", "struct 2 1\nrel F 2 1\nt 1 2\n");
    CHECK(run("reduce struct " + gs + " " + other + " --out " + prefix)
              .exit_code == 2);
  }
}
