#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nodalq/cli.hpp"
#include "nodalq/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace nodalq;
using io::json;

namespace {

const std::string kFixtures = NODALQ_FIXTURE_DIR;

struct Outcome {
  int code;
  json report;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "nodalq");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  json report;
  if (!out.str().empty() && out.str().front() == '{') report = json::parse(out.str());
  return {code, report, err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

json without_timing(json j) {
  j.erase("timing");
  return j;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("severi on the Kummer fixture") {
  const auto o = run({"severi", "--surface", fixture("kummer_012345.surface.json"), "--nodes",
                      fixture("kummer_012345.nodes.json")});
  CHECK(o.code == 0);
  CHECK(o.report["command"] == "severi");
  CHECK(o.report["outputs"]["ideal_dim"] == 19);
  CHECK(o.report["outputs"]["eval_rank"] == 16);
  CHECK(o.report["outputs"]["independent"] == true);
  CHECK(o.report["inputs"]["surface"]["sha256"].get<std::string>().size() == 64);
  CHECK(o.report["versions"]["format"] == io::kFormatVersion);
  CHECK(o.report["timing"]["wall_ms"].is_number());
}

TEST_CASE("seventeen points exceed the bound") {
  const auto o = run({"severi", "--nodes", fixture("seventeen.nodes.json")});
  CHECK(o.code == cli::kExitViolation);
  CHECK(o.report["outputs"]["bound_ok"] == false);
  CHECK(o.report["outputs"]["delta"] == 17);
}

TEST_CASE("severi refuses points that are not nodes") {
  const auto o = run({"severi", "--surface", fixture("fermat.surface.json"), "--nodes",
                      fixture("one_node.nodes.json")});
  CHECK(o.code == cli::kExitInputError);
  CHECK(o.err.find("NotANode") != std::string::npos);
}

TEST_CASE("stalk in nodal mode") {
  const auto o = run({"stalk", "--delta", "16"});
  CHECK(o.code == 0);
  CHECK(o.report["outputs"]["dims"] == json::parse("[6,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]"));
  CHECK(o.report["outputs"]["euler"] == 6);
  const auto zero = run({"stalk", "--delta", "0"});
  CHECK(zero.report["outputs"]["dims"] == json::parse("[22]"));
}

TEST_CASE("stalk in family mode") {
  const auto o = run({"stalk", "--family", fixture("jordan_pair.family.json")});
  CHECK(o.code == 0);
  CHECK(o.report["outputs"]["dims"] == json::parse("[1,1,0]"));
  CHECK(o.report["outputs"]["label"] == "jordan-pair");

  const auto nc = temp_file("nodalq_cli_noncommuting.json",
                            R"({"dim": 2, "operators": [[[0, 1], [0, 0]], [[0, 0], [1, 0]]]})");
  const auto bad = run({"stalk", "--family", nc.string()});
  CHECK(bad.code == cli::kExitViolation);
  CHECK(bad.report["outputs"]["commuting"] == false);
  CHECK(bad.report["outputs"]["dims"].is_null());
  std::filesystem::remove(nc);
}

TEST_CASE("certify is deterministic across worker counts") {
  const std::vector<std::string> base{"certify", "--surface", fixture("kummer_012345.surface.json"), "--nodes",
                                      fixture("kummer_012345.nodes.json")};
  auto one = base, four = base;
  one.insert(one.end(), {"--workers", "1"});
  four.insert(four.end(), {"--workers", "4"});
  const auto a = run(one), b = run(four);
  CHECK(a.code == 0);
  CHECK(a.report["outputs"]["node_count"] == 16);
  CHECK(without_timing(a.report).dump() == without_timing(b.report).dump());
}

TEST_CASE("find-singular is reproducible for a fixed seed") {
  const auto a = run({"find-singular", "--surface", fixture("one_node.surface.json"), "--seed", "7"});
  const auto b = run({"find-singular", "--surface", fixture("one_node.surface.json"), "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(without_timing(a.report).dump() == without_timing(b.report).dump());
  CHECK(a.report["outputs"]["exact_nodes"] == json::parse(R"([{"coords": ["0","0","0","1"]}])"));
}

TEST_CASE("betti and lattice") {
  const auto b = run({"betti", "--delta", "16"});
  CHECK(b.report["outputs"]["betti"] == json::parse("[1,0,6,0,1]"));
  const auto l = run({"lattice", "--config", fixture("nodal16.config.json")});
  CHECK(l.code == 0);
  CHECK(l.report["outputs"]["sigma"] == 16);
  CHECK(l.report["outputs"]["sigma_perp_prim"] == 5);
  CHECK(l.report["outputs"]["rank_check"] == true);
  CHECK(run({"lattice", "--delta", "3"}).report["outputs"]["sigma_perp"] == 19);
}

TEST_CASE("kummer writes its artifacts") {
  const auto prefix = (std::filesystem::temp_directory_path() / "nodalq_cli_kummer").string();
  const auto o = run({"kummer", "--roots", "0,1,2,3,4,5", "--out", prefix});
  CHECK(o.code == 0);
  CHECK(o.report["outputs"]["severi"]["ideal_dim"] == 19);
  for (const char* suffix : {".surface.json", ".nodes.json", ".severi.json"}) {
    CHECK(std::filesystem::exists(prefix + suffix));
    std::filesystem::remove(prefix + suffix);
  }
  const auto fixture_surface = io::read_json_file(fixture("kummer_012345.surface.json"));
  CHECK(o.report["outputs"]["surface"] == fixture_surface);

  CHECK(run({"kummer", "--roots", "0,1,2,3,4"}).code == cli::kExitInputError);
  CHECK(run({"kummer", "--roots", "0,1,2,3,4,4"}).code == cli::kExitInputError);
  CHECK(run({"kummer", "--roots", "0,1,2,3,4,x"}).code == cli::kExitInputError);
}

TEST_CASE("--out writes the report") {
  const auto path = std::filesystem::temp_directory_path() / "nodalq_cli_betti.json";
  const auto o = run({"betti", "--delta", "2", "--out", path.string()});
  CHECK(o.code == 0);
  CHECK(without_timing(io::read_json_file(path)) == without_timing(o.report));
  std::filesystem::remove(path);
}

TEST_CASE("input and usage errors exit 1") {
  const auto bad = temp_file("nodalq_cli_malformed.json", "{\"degree\": 4, \"terms\": [");
  CHECK(run({"certify", "--surface", bad.string(), "--nodes", fixture("one_node.nodes.json")}).code ==
        cli::kExitInputError);
  std::filesystem::remove(bad);
  CHECK(run({"certify", "--surface", "/nonexistent.json", "--nodes", fixture("one_node.nodes.json")}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"stalk"}).code == 1);
  CHECK(run({"stalk", "--delta", "3", "--family", fixture("jordan_pair.family.json")}).code == 1);
  CHECK(run({"stalk", "--delta", "17"}).code == 1);
  CHECK(run({"betti"}).code == 1);
  CHECK(run({"certify", "--surface", fixture("fermat.surface.json"), "--nodes", fixture("one_node.nodes.json"),
             "--workers", "0"})
            .code == 1);
  CHECK(run({"--help"}).code == 0);
}
