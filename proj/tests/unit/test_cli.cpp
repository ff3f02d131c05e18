#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "homquot/io.hpp"

using homquot::io::json;
using homquot::test::data_path;

namespace {

struct Run {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = homquot::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("homquot-cli-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Cli, Components) {
  auto r = run({"components", data_path("split_pair_graph.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc(), json::parse(R"({"c":2,"blocks":[["1a","3"],["1b","2"]]})"));
  EXPECT_EQ(run({"components", data_path("point.json")}).doc()["c"], 1);
  EXPECT_EQ(run({"components", data_path("pc_ce_graph.json")}).doc()["c"], 2);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"components", "/nonexistent.json"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);

  auto dir = scratch("bad");
  std::filesystem::create_directories(dir);
  homquot::io::write_json_file(dir / "g.json", json::parse(R"({"vertices":["a"],"edges":[["a","z"]]})"));
  auto r = run({"components", (dir / "g.json").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("not a declared vertex"), std::string::npos) << r.err;
}

TEST(Cli, QuotientToStdoutAndFiles) {
  auto r = run({"quotient", data_path("split_pair_graph.json"), data_path("split_pair_partition.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["quotient"]["vertices"].size(), 3u);
  EXPECT_EQ(r.doc()["quotient"]["edges"].size(), 2u);

  auto dir = scratch("quotient");
  ASSERT_EQ(run({"quotient", data_path("split_pair_graph.json"), data_path("split_pair_partition.json"), "--out", dir.string()}).code,
            0);
  auto q = homquot::io::read_json_file(dir / "quotient.json");
  auto p = homquot::io::read_json_file(dir / "projection.json");
  EXPECT_EQ(q, r.doc()["quotient"]);
  EXPECT_EQ(p["map"], r.doc()["projection"]);
}

TEST(Cli, Classify) {
  auto r = run({"classify", data_path("pc_ce_graph.json"), data_path("yz.json"), data_path("pc_ce_map.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.doc()["pseudo_covering"]);
  EXPECT_TRUE(r.doc()["component_equitable"]);
  EXPECT_FALSE(r.doc()["equitable"]);
  EXPECT_FALSE(r.doc().contains("orbit"));

  auto r_pc = run({"classify", data_path("pc_only_graph.json"), data_path("yz.json"), data_path("pc_only_map.json")});
  EXPECT_TRUE(r_pc.doc()["pseudo_covering"]);
  EXPECT_FALSE(r_pc.doc()["component_equitable"]);
  EXPECT_FALSE(r_pc.doc()["equitable"]);

  auto g = run({"classify", data_path("two_triangles.json"), data_path("two_triangles.json"),
                data_path("two_triangles_identity.json"), "--group", data_path("two_triangles_swap.json")});
  ASSERT_EQ(g.code, 0) << g.err;
  const json report = g.doc();
  for (auto& [key, value] : report.items())
    if (key != "orbit") EXPECT_TRUE(value.get<bool>()) << key;
  EXPECT_FALSE(report["orbit"]);  // the swap group does not fix the identity's fibres

  // edge mapped onto a non-edge
  EXPECT_EQ(run({"classify", data_path("ab.json"), data_path("two_points.json"), data_path("ab_identity.json")}).code,
            2);
}

TEST(Cli, Count) {
  auto tri = run({"count", data_path("two_triangles.json"), data_path("two_triangles_partition.json"), "--group",
                  data_path("two_triangles_swap.json"), "--method", "B"});
  ASSERT_EQ(tri.code, 0) << tri.err;
  EXPECT_EQ(tri.doc()["total"], 2);

  auto hex = run({"count", data_path("hexagon.json"), data_path("hexagon_partition.json"), "--group",
                  data_path("hexagon_antipodal.json"), "--method", "B"});
  ASSERT_EQ(hex.code, 0) << hex.err;
  EXPECT_EQ(hex.doc()["total"], 1);
  EXPECT_EQ(hex.doc()["terms"][0]["kX"], 2);
  EXPECT_EQ(hex.doc()["terms"][0]["kC"], 2);

  for (const char* method : {"auto", "A", "B", "ce"}) {
    auto r = run({"count", data_path("split_pair_graph.json"), data_path("split_pair_partition.json"), "--method", method});
    EXPECT_EQ(r.code, method == std::string("B") ? 1 : 2) << method << r.err;
  }
  auto split_pair = run({"count", data_path("split_pair_graph.json"), data_path("split_pair_partition.json")});
  EXPECT_NE(split_pair.err.find("hypotheses not satisfied: locally_surjective"), std::string::npos) << split_pair.err;

  EXPECT_EQ(run({"count", data_path("pc_ce_graph.json"), data_path("pc_ce_partition.json")}).doc()["method"], "ce");
  EXPECT_EQ(run({"count", data_path("pc_only_graph.json"), data_path("pc_only_partition.json")}).doc()["method"], "A");
  EXPECT_EQ(run({"count", data_path("equitable_complete_graph.json"), data_path("equitable_complete_partition.json"), "--method", "ce"}).code, 2);
  EXPECT_EQ(run({"count", data_path("pc_ce_graph.json"), data_path("pc_ce_partition.json"), "--method", "Z"}).code, 1);
}

TEST(Cli, Orbits) {
  auto r = run({"orbits", data_path("hexagon.json"), data_path("hexagon_antipodal.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["orbits"], json::parse(R"([["0","3"],["1","4"],["2","5"]])"));
  auto full = run({"orbits", data_path("hexagon.json")});
  ASSERT_EQ(full.code, 0);
  EXPECT_EQ(full.doc()["orbits"].size(), 1u);
}

TEST(Cli, PowerGraph) {
  auto c3 = run({"powergraph", "--group", "cyclic:3", "--proper"});
  ASSERT_EQ(c3.code, 0) << c3.err;
  EXPECT_EQ(c3.doc()["graph"]["vertices"].size(), 2u);
  EXPECT_EQ(c3.doc()["graph"]["edges"].size(), 1u);
  EXPECT_EQ(run({"powergraph", "--group", "symmetric:3", "--proper"}).doc()["graph"]["vertices"].size(), 5u);
  EXPECT_EQ(run({"powergraph", "--group", "cyclic:1", "--proper"}).code, 1);
  EXPECT_EQ(run({"powergraph", "--group", "cyclic:x"}).code, 1);
  EXPECT_EQ(run({"powergraph", "--group", "dihedral:4"}).code, 1);

  auto dir = scratch("power");
  ASSERT_EQ(run({"powergraph", "--group", "klein", "--proper", "--out", dir.string()}).code, 0);
  EXPECT_EQ(homquot::io::read_json_file(dir / "graph.json")["vertices"].size(), 3u);
  EXPECT_TRUE(std::filesystem::exists(dir / "group.json"));

  homquot::io::write_json_file(dir / "klein_table.json", homquot::io::to_json(homquot::make_klein_four()));
  auto cayley = run({"powergraph", "--group", "cayley:" + (dir / "klein_table.json").string()});
  ASSERT_EQ(cayley.code, 0) << cayley.err;
  EXPECT_EQ(cayley.doc()["graph"]["vertices"].size(), 4u);
}

TEST(Cli, PowerGraphFeedsCount) {
  auto dir = scratch("feed");
  ASSERT_EQ(run({"powergraph", "--group", "symmetric:4", "--proper", "--out", dir.string()}).code, 0);
  auto orbits = run({"orbits", (dir / "graph.json").string(), (dir / "group.json").string()});
  ASSERT_EQ(orbits.code, 0) << orbits.err;
  homquot::io::write_json_file(dir / "partition.json", json{{"blocks", orbits.doc()["orbits"]}});
  auto count = run({"count", (dir / "graph.json").string(), (dir / "partition.json").string(), "--group",
                    (dir / "group.json").string()});
  ASSERT_EQ(count.code, 0) << count.err;
  EXPECT_EQ(count.doc()["method"], "B");
  auto comps = run({"components", (dir / "graph.json").string()});
  EXPECT_EQ(count.doc()["total"], comps.doc()["c"]);
}

TEST(Cli, Verify) {
  auto tiny = run({"verify", "--max-vertices", "1", "--max-target", "1", "--random", "0"});
  EXPECT_EQ(tiny.code, 0) << tiny.err;
  EXPECT_TRUE(tiny.doc()["pass"]);

  auto a = run({"verify", "--max-vertices", "3", "--random", "20", "--seed", "5"});
  auto b = run({"verify", "--max-vertices", "3", "--random", "20", "--seed", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);

  auto mutated = run({"verify", "--max-vertices", "3", "--random", "0", "--inject-fault", "locally_strong"});
  EXPECT_NE(mutated.code, 0);
  EXPECT_FALSE(mutated.doc()["pass"]);
  EXPECT_EQ(run({"verify", "--max-vertices", "0"}).code, 1);
  EXPECT_EQ(run({"verify", "--inject-fault", "nonsense"}).code, 1);
}
