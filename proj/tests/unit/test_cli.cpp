#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "helpers.hpp"
#include "srdg/backend.hpp"
#include "srdg/io.hpp"
#include "srdg_tools/bench.hpp"
#include "srdg_tools/cli.hpp"

using namespace srdg;
using namespace srdg::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "srdg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = tools::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("srdg-cli-test-" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("usage errors exit 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"solve"}).code == 2);
    CHECK(cli({"solve", "/nonexistent.json"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
  }

  TEST_CASE("solve dispatches by shape and round-trips through validate") {
    TempDir dir;
    const Instance star = make_instance({{"c", 2}, {"x", 1}, {"y", 1}, {"z", 1}},
                                        {{"x", "c", ConnectionKind::edge, 0, 3}, {"c", "y", ConnectionKind::edge, 1, 3},
                                         {"z", "c", ConnectionKind::arc, 0, 2}},
                                        3, {{"x", "c", "y"}, {"z", "c"}});
    write_text_file(dir.file("star.json"), instance_to_json(star));
    const Run solved = cli({"solve", dir.file("star.json"), "--schedule-out", dir.file("s.json")});
    CHECK(solved.code == 0);
    CHECK(solved.out.find("engine: star") != std::string::npos);
    const Run valid = cli({"validate", dir.file("star.json"), dir.file("s.json")});
    CHECK(valid.code == 0);
    CHECK(valid.out.rfind("VALID", 0) == 0);
    CHECK(cli({"solve", dir.file("star.json"), "--engine", "dp"}).code == 2);
  }

  TEST_CASE("min-slack on an infeasible instance") {
    TempDir dir;
    write_text_file(dir.file("twins.json"), instance_to_json(twin_edge(0, 1, 3)));
    const Run r = cli({"solve", dir.file("twins.json"), "--engine", "brute", "--min-slack", "--json", "--schedule-out",
                       dir.file("s.json")});
    CHECK(r.code == 1);
    CHECK(r.out.find("\"d_star\": 2") != std::string::npos);
    CHECK(cli({"validate", dir.file("twins.json"), dir.file("s.json"), "--slack", "2"}).code == 0);
    CHECK(cli({"validate", dir.file("twins.json"), dir.file("s.json")}).code == 1);
    if (default_backend()) {
      const Run milp = cli({"solve", dir.file("twins.json"), "--engine", "milp", "--min-slack", "--time-indexed"});
      CHECK(milp.code == 1);
      CHECK(milp.out.find("d* = 2") != std::string::npos);
    }
  }

  TEST_CASE("validate names a head-on clash") {
    TempDir dir;
    const Instance headon = make_instance({{"u", 2}, {"v", 2}}, {{"u", "v", ConnectionKind::edge, 1, 2}}, 2,
                                          {{"u", "v"}, {"v", "u"}});
    write_text_file(dir.file("i.json"), instance_to_json(headon));
    write_text_file(dir.file("s.json"), schedule_to_json(Temporalization{2, {{1}, {1}}}));
    const Run r = cli({"validate", dir.file("i.json"), dir.file("s.json"), "--json"});
    CHECK(r.code == 1);
    CHECK(r.out.find("head-on-clash") != std::string::npos);
  }

  TEST_CASE("generate, reduce and export-lp") {
    TempDir dir;
    CHECK(cli({"generate", "path", "--n", "8", "--seed", "4", "--out", dir.file("p.json")}).code == 0);
    CHECK(parse_instance(read_text_file(dir.file("p.json"))).path_count() == 8);
    const Run grid = cli({"generate", "star", "--grid", "--n", "8", "--p-star", "1", "--c-star", "1", "--d-star", "1,0.47",
                          "--replicates", "3", "--out", dir.file("grid")});
    CHECK(grid.code == 0);
    CHECK(tools::corpus_files(dir.file("grid")).size() == 6);
    CHECK(fs::exists(dir.file("grid/I_8_1_1_0.47_2.json")));

    write_text_file(dir.file("tri.col"), "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(cli({"reduce", "vc", dir.file("tri.col"), "--k", "2", "--out", dir.file("vc.json")}).code == 0);
    CHECK(read_text_file(dir.file("vc.expected.json")).find("\"yes\"") != std::string::npos);
    CHECK(cli({"reduce", "vc", dir.file("tri.col"), "--out", dir.file("vc.json")}).code == 2);

    const Run lp = cli({"export-lp", dir.file("vc.json"), "--mode", "feasibility"});
    CHECK(lp.code == 0);
    CHECK(lp.out.find("Subject To") != std::string::npos);
  }

  TEST_CASE("bench on an empty corpus writes the header only") {
    TempDir dir;
    const Run r = cli({"bench", dir.path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "instance,constellation,engine,repetition,status,verdict,d_star,seconds,relaxed_d_star,ratio,error\n");
  }

  TEST_CASE("constellation names and summary statistics") {
    CHECK(tools::constellation_of("I_8_1_0.4_0.2_0.33_7") == "I_8_1_0.4_0.2_0.33");
    CHECK(tools::constellation_of("custom") == "custom");
    const tools::Stats s = tools::describe_sample({1, 2, 3, 10});
    CHECK(s.mean == doctest::Approx(4));
    CHECK(s.median == doctest::Approx(2.5));
  }
}
