#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "homquot/count.hpp"
#include "homquot/error.hpp"
#include "homquot/hom.hpp"
#include "homquot/oracle.hpp"

using namespace homquot;
using homquot::test::data_graph;
using homquot::test::data_map;
using homquot::test::graph;
using homquot::test::numbered;
using homquot::test::yz;

namespace {

HomMap example(const std::string& name) {
  auto x = data_graph(name + "_graph.json");
  return data_map(name + "_map.json", x, yz());
}

GraphPtr two_triangles() { return data_graph("two_triangles.json"); }

PermGroup swap_group(const Graph& g) {
  return io::group_from_json(io::read_json_file(homquot::test::data_path("two_triangles_swap.json")), g);
}

HomMap collapsed_triangles() {
  auto g = two_triangles();
  return quotient(g, Partition::from_labels(*g, {{"a1", "b1"}, {"a2", "b2"}, {"a3", "b3"}})).projection;
}

GraphPtr hexagon() { return data_graph("hexagon.json"); }

PermGroup antipodal(const Graph& g) {
  return io::group_from_json(io::read_json_file(homquot::test::data_path("hexagon_antipodal.json")), g);
}

HomMap hexagon_projection() {
  auto g = hexagon();
  return quotient(g, orbit_partition(antipodal(*g))).projection;
}

HomMap identity(const GraphPtr& g) {
  VertexMap id(g->order());
  for (Vertex v = 0; v < g->order(); ++v) id[v] = v;
  return HomMap(g, g, id);
}

}  // namespace

TEST(Count, Multiplicity) {
  auto m = example("pc_ce");
  const auto& x = m.source();
  const Vertex y = m.target().index_of("y");
  const VertexSet c{x.index_of("1"), x.index_of("2"), x.index_of("5"), x.index_of("6")};
  EXPECT_EQ(multiplicity(m, c, y), 2u);
  VertexSet all(x.order());
  for (Vertex v = 0; v < x.order(); ++v) all[v] = v;
  EXPECT_EQ(multiplicity(m, all, y), 4u);
  EXPECT_EQ(multiplicity(m, VertexSet{x.index_of("5")}, y), 0u);
  EXPECT_THROW(multiplicity(m, all, 7), InputError);
}

TEST(Count, AdmissibleComponents) {
  EXPECT_EQ(admissible_components(example("pc_ce"), 0).size(), 2u);
  EXPECT_EQ(admissible_components(example("pc_only"), 0).size(), 2u);
  auto m = HomMap::from_labels(graph({"1"}, {}), graph({"a", "b"}, {{"a", "b"}}), {{"1", "a"}});
  EXPECT_TRUE(admissible_components(m, 1).empty());
}

TEST(Count, ImageOfComponent) {
  auto m = example("pc_ce");
  EXPECT_EQ(image_of_component(m, 0), (VertexSet{0, 1}));
  auto g = numbered(4, {{1, 2}, {3, 4}});
  auto id = identity(g);
  EXPECT_EQ(image_of_component(id, 1), (VertexSet{2, 3}));

  auto s = data_graph("split_pair_graph.json");
  auto pi = quotient(s, Partition::from_labels(*s, {{"1a", "1b"}, {"2"}, {"3"}})).projection;
  EXPECT_THROW(image_of_component(pi, 0), HypothesisError);
}

TEST(Count, PreimageOfComponentVertices) {
  EXPECT_EQ(preimage_of_component_vertices(example("pc_ce"), 0).size(), 8u);
  auto g = numbered(4, {{1, 2}, {3, 4}});
  EXPECT_EQ(preimage_of_component_vertices(identity(g), 1), (VertexSet{2, 3}));
  EXPECT_EQ(preimage_of_component_vertices(collapsed_triangles(), 0).size(), 6u);
}

TEST(Count, FormulaA) {
  auto b65 = count_theorem_A(example("pc_only"));
  ASSERT_EQ(b65.terms.size(), 1u);
  EXPECT_EQ(b65.terms[0].value, 2u);
  EXPECT_EQ(b65.total, 2u);

  auto g = numbered(6, {{1, 2}, {3, 4}});
  auto bid = count_theorem_A(identity(g));
  EXPECT_EQ(bid.terms.size(), 4u);
  for (const auto& t : bid.terms) EXPECT_EQ(t.value, 1u);
  EXPECT_EQ(bid.total, 4u);

  auto b66 = count_theorem_A(example("equitable_complete"));
  ASSERT_EQ(b66.terms.size(), 1u);
  EXPECT_EQ(b66.total, 2u);

  auto s = data_graph("split_pair_graph.json");
  auto pi = quotient(s, Partition::from_labels(*s, {{"1a", "1b"}, {"2"}, {"3"}})).projection;
  EXPECT_THROW(count_theorem_A(pi), HypothesisError);
}

TEST(Count, FormulaAToleratesZeroTerms) {
  // an isolated point sent into a target with an unreached component
  auto src = graph({"1"}, {});
  auto tgt = graph({"a", "b"}, {});
  auto b = count_theorem_A(HomMap(src, tgt, {0}));
  ASSERT_EQ(b.terms.size(), 2u);
  EXPECT_EQ(b.terms[1].value, 0u);
  EXPECT_EQ(b.total, 1u);
}

TEST(Count, ProcedureB) {
  auto m = collapsed_triangles();
  auto b = count_theorem_B(m, swap_group(m.source()));
  ASSERT_EQ(b.terms.size(), 1u);
  EXPECT_EQ(b.terms[0].k_x, 2u);
  EXPECT_EQ(b.terms[0].k_c, 1u);
  EXPECT_EQ(b.total, 2u);

  auto h = hexagon_projection();
  auto bh = count_theorem_B(h, antipodal(h.source()));
  ASSERT_EQ(bh.terms.size(), 1u);
  EXPECT_EQ(bh.terms[0].k_x, 2u);
  EXPECT_EQ(bh.terms[0].k_c, 2u);
  EXPECT_EQ(bh.total, 1u);

  auto g = numbered(5, {{1, 2}, {4, 5}});
  auto single = quotient(g, Partition::singletons(5)).projection;
  auto bs = count_theorem_B(single, PermGroup::trivial(5));
  EXPECT_EQ(bs.terms.size(), 3u);
  for (const auto& t : bs.terms) EXPECT_EQ(t.value, 1u);
  EXPECT_EQ(bs.total, 3u);
}

TEST(Count, ProcedureBRejectsBrokenHypotheses) {
  auto m = collapsed_triangles();
  try {
    count_theorem_B(m, PermGroup::trivial(6));
    FAIL() << "expected HypothesisError";
  } catch (const HypothesisError& e) {
    EXPECT_NE(std::string(e.what()).find("hypotheses not satisfied"), std::string::npos);
  }
  // (1 3) is not an automorphism of the path 1-2-3
  auto path = numbered(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}});
  auto q = quotient(path, Partition::singletons(6)).projection;
  EXPECT_THROW(count_theorem_B(q, PermGroup(6, {Permutation({2, 1, 0, 3, 4, 5})})), HypothesisError);
}

TEST(Count, ProcedureBIsChoiceIndependent) {
  auto m = collapsed_triangles();
  std::mt19937_64 rng(7);
  Chooser random = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  for (int i = 0; i < 20; ++i) EXPECT_EQ(count_theorem_B(m, swap_group(m.source()), random).total, 2u);
}

TEST(Count, ComponentEquitableCount) {
  auto b = count_ce(example("pc_ce"));
  ASSERT_EQ(b.terms.size(), 1u);
  EXPECT_EQ(b.terms[0].k_x, 4u);
  EXPECT_EQ(b.terms[0].k_c, 2u);
  EXPECT_EQ(b.total, 2u);

  auto g = numbered(3, {{1, 2}});
  for (const auto& t : count_ce(identity(g)).terms) EXPECT_EQ(t.k_x, t.k_c);

  auto c = count_ce(collapsed_triangles());
  EXPECT_EQ(c.terms[0].k_x, 2u);
  EXPECT_EQ(c.total, 2u);
  EXPECT_THROW(count_ce(example("pc_only")), HypothesisError);
}

TEST(Count, ComponentIsoCheck) {
  auto m = collapsed_triangles();
  EXPECT_TRUE(component_iso_check(m, 0));
  EXPECT_TRUE(component_iso_check(m, 1));
  EXPECT_FALSE(component_iso_check(hexagon_projection(), 0));
  auto g = numbered(4, {{1, 2}, {3, 4}});
  EXPECT_TRUE(component_iso_check(identity(g), 0));
}

TEST(Count, ConnectednessCriterion) {
  auto h = hexagon();
  EXPECT_TRUE(connectedness_criterion(h, orbit_partition(antipodal(*h))));
  auto t = two_triangles();
  EXPECT_FALSE(connectedness_criterion(t, Partition::from_labels(*t, {{"a1", "b1"}, {"a2", "b2"}, {"a3", "b3"}})));
  auto path = numbered(4, {{1, 2}, {2, 3}, {3, 4}});
  EXPECT_TRUE(connectedness_criterion(path, Partition::singletons(4)));
  auto split = numbered(4, {{1, 2}});
  EXPECT_THROW(connectedness_criterion(split, Partition::singletons(4)), HypothesisError);
}

// Both quotient formulas agree with union-find on every small quotient.
TEST(Count, FormulasMatchUnionFind) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto parts = oracle::set_partitions(n);
    for (const auto& g : oracle::labeled_graphs(n))
      for (const auto& p : parts) {
        auto pi = quotient(g, p).projection;
        const std::size_t truth = oracle::component_count(*g);
        if (is_locally_surjective(pi)) ASSERT_EQ(count_theorem_A(pi).total, truth);
        if (is_locally_surjective(pi) && is_component_equitable(pi)) ASSERT_EQ(count_ce(pi).total, truth);
      }
  }
}
