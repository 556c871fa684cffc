#include <random>
#include <set>

#include <gtest/gtest.h>

#include "imd/errors.hpp"
#include "imd/generators.hpp"
#include "imd/graph_io.hpp"
#include "imd/oracle.hpp"
#include "imd/windmill.hpp"

using namespace imd;

namespace {

Graph minimal_windmill(bool drop_one = false) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {8, 1}, {8, 2}, {8, 5}};
  if (!drop_one) e.emplace_back(8, 6);
  return Graph::from_edges(9, e);
}

bool hub_free_by_scan(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    int heavy = 0;
    for (int w = 0; w < g.order(); ++w)
      if (w != v && g.adjacent(v, w) && g.degree(w) >= 3) ++heavy;
    if (heavy >= 3) return false;
  }
  return true;
}

bool pendants_induced_and_apart(const WindmillReduction& r) {
  const Graph& g = r.graph;
  for (int i = 0; i < 4; ++i) {
    if (!is_induced_path(g, Path{r.pendants[i]})) return false;
    for (int j = i + 1; j < 4; ++j)
      if (!are_mutually_induced(g, Path{r.pendants[i]}, Path{r.pendants[j]})) return false;
  }
  return true;
}

}  // namespace

TEST(WindmillTest, Params) {
  auto p = WindmillParams::parse("1,2,1,2");
  EXPECT_EQ(p.a, 1);
  EXPECT_EQ(p.b, 2);
  EXPECT_EQ(p.str(), "1,2,1,2");
  EXPECT_THROW(WindmillParams::parse("1,2,1"), InputError);
  EXPECT_THROW(WindmillParams::parse("0,1,1,1"), InputError);
  EXPECT_THROW(WindmillParams::parse("a,1,1,1"), InputError);
}

TEST(WindmillTest, VerifyExamples) {
  WindmillParams p{1, 1, 1, 1};
  Path a{{0, 1, 2, 3}};
  Path b{{4, 5, 6, 7}};
  EXPECT_TRUE(verify_windmill(minimal_windmill(), p, a, b, 8));
  EXPECT_FALSE(verify_windmill(minimal_windmill(true), p, a, b, 8));
  EXPECT_FALSE(verify_windmill(minimal_windmill(), WindmillParams{2, 1, 1, 1}, a, b, 8));
  EXPECT_FALSE(verify_windmill(minimal_windmill(), p, a, Path{{4, 5, 6}}, 8));
  EXPECT_FALSE(verify_windmill(minimal_windmill(), p, a, a, 8));
}

TEST(WindmillTest, CentreHasDegreeFourOnWitnesses) {
  std::mt19937_64 rng(89);
  for (int i = 0; i < 100; ++i) {
    Graph g = gnp_graph(10 + i % 3, 0.4, rng());
    auto r = brute_force_windmill(g, WindmillParams{1, 1, 1, 1});
    if (r.verdict != Verdict::Yes) continue;
    VertexSet arms = r.witness->p.as_set(g.order()) | r.witness->q.as_set(g.order());
    EXPECT_GE((g.neighbors(r.witness->centre) & arms).count(), 4);
  }
}

TEST(WindmillTest, HubFree) {
  EXPECT_TRUE(is_hub_free(cycle_graph(7)));
  EXPECT_FALSE(is_hub_free(clique_graph(4)));
  std::mt19937_64 rng(97);
  for (int i = 0; i < 300; ++i) {
    Graph g = gnp_graph(4 + i % 9, 0.2 + 0.5 * unit_draw(rng), rng());
    EXPECT_EQ(is_hub_free(g), hub_free_by_scan(g)) << to_graph6(g);
  }
}

TEST(WindmillTest, TwoInAHoleOnSixCycle) {
  TwoInAHoleInstance inst{cycle_graph(6), 0, 3};
  auto r = reduce_2iah_to_windmill(inst, WindmillParams{1, 2, 1, 2});
  EXPECT_EQ(r.graph.order(), 11);
  EXPECT_EQ(r.graph.degree(r.centre), 6 - 2);
  EXPECT_EQ(r.source_to_output[0], -1);
  EXPECT_EQ(r.source_to_output[3], -1);
  // x' = 1, y' = 2, x'' = 5, y'' = 4.
  EXPECT_EQ(r.terminals, (std::array<int, 4>{1, 2, 5, 4}));
  const std::array<int, 4> lengths{1, 2, 1, 2};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(static_cast<int>(r.pendants[i].size()), lengths[i]);
    EXPECT_TRUE(r.graph.adjacent(r.pendants[i].back(), r.source_to_output[r.terminals[i]]));
    for (int v : r.pendants[i]) EXPECT_FALSE(r.graph.adjacent(v, r.centre));
  }
  EXPECT_TRUE(pendants_induced_and_apart(r));
  EXPECT_TRUE(r.source_hub_free);
  EXPECT_EQ(brute_force_windmill(r.graph, WindmillParams{1, 2, 1, 2}).verdict, Verdict::Yes);
  EXPECT_EQ(brute_force_hole_through(cycle_graph(6), 0, 3).verdict, Verdict::Yes);
}

TEST(WindmillTest, TwoInAHoleRejectsBadInput) {
  EXPECT_THROW(reduce_2iah_to_windmill({star_graph(3), 0, 1}, WindmillParams{1, 2, 1, 2}), InputError);
  EXPECT_THROW(reduce_2iah_to_windmill({cycle_graph(6), 0, 3}, WindmillParams{1, 1, 1, 2}), InputError);
  EXPECT_THROW(reduce_2iah_to_windmill({cycle_graph(6), 0, 1}, WindmillParams{1, 2, 1, 2}), InputError);
  EXPECT_THROW(reduce_2iah_to_windmill({cycle_graph(6), 0, 2}, WindmillParams{1, 2, 1, 2}), InputError);
  EXPECT_THROW(reduce_2iah_to_windmill({cycle_graph(6), 0, 0}, WindmillParams{1, 2, 1, 2}), InputError);
}

TEST(WindmillTest, GenericBuilderRejectsThreeEqual) {
  Graph g = path_graph(6);
  EXPECT_THROW(reduce_to_windmill(g, VertexSet(6), {0, 1, 2, 3}, WindmillParams{1, 1, 1, 2}), InputError);
  EXPECT_THROW(reduce_to_windmill(g, VertexSet(6), {0, 1, 2, 2}, WindmillParams{1, 2, 1, 2}), InputError);
  EXPECT_THROW(reduce_to_windmill(g, VertexSet(6, {0}), {0, 1, 2, 3}, WindmillParams{1, 2, 1, 2}), InputError);
  auto r = reduce_to_windmill(g, VertexSet(6), {0, 5, 2, 3}, WindmillParams{2, 2, 1, 3});
  EXPECT_EQ(r.graph.order(), 6 + 1 + 8);
  EXPECT_TRUE(pendants_induced_and_apart(r));
}

TEST(WindmillTest, InducedTwoPathsExample) {
  // x' = 0 .. y' = 2 and x'' = 3 .. y'' = 5 as two separate paths.
  Graph g = disjoint_union(path_graph(3), path_graph(3));
  I2dpInstance inst{g, 0, 3, 2, 5};
  auto r = reduce_i2dp_to_windmill(inst, WindmillParams{2, 2, 1, 1});
  EXPECT_EQ(r.graph.order(), 6 + 1 + 6);
  EXPECT_TRUE(pendants_induced_and_apart(r));
  EXPECT_EQ(brute_force_i2dp(g, 0, 2, 3, 5).verdict, Verdict::Yes);
  auto w = brute_force_windmill(r.graph, WindmillParams{2, 2, 1, 1});
  ASSERT_EQ(w.verdict, Verdict::Yes);
  EXPECT_EQ(w.witness->centre, r.centre);
  EXPECT_THROW(reduce_i2dp_to_windmill(I2dpInstance{g, 0, 3, 0, 5}, WindmillParams{2, 2, 1, 1}), InputError);
  EXPECT_THROW(reduce_i2dp_to_windmill(inst, WindmillParams{1, 2, 1, 2}), InputError);
}

TEST(WindmillTest, GeneratorsGiveValidHubFreeInstances) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto inst = random_hub_free_2iah(8 + s % 5, 0.3 + 0.1 * (s % 4), s);
    EXPECT_TRUE(is_hub_free(inst.graph));
    EXPECT_EQ(inst.graph.degree(inst.x), 2);
    EXPECT_EQ(inst.graph.degree(inst.y), 2);
    auto d = bfs_distances(inst.graph, inst.graph.all_vertices(), inst.x);
    EXPECT_TRUE(d[inst.y] < 0 || d[inst.y] >= 3);
    EXPECT_EQ(random_hub_free_2iah(8 + s % 5, 0.3 + 0.1 * (s % 4), s).graph, inst.graph);
    auto pi = random_hub_free_i2dp(8 + s % 5, 0.4, s);
    EXPECT_TRUE(is_hub_free(pi.graph));
    std::set<int> t{pi.x1, pi.x2, pi.y1, pi.y2};
    EXPECT_EQ(t.size(), 4u);
  }
}

TEST(WindmillTest, ReductionsPreserveAnswers) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    auto inst = random_hub_free_2iah(8 + s % 5, 0.3 + 0.1 * (s % 4), 200 + s);
    auto r = reduce_2iah_to_windmill(inst, WindmillParams{1, 2, 1, 2});
    EXPECT_TRUE(pendants_induced_and_apart(r));
    EXPECT_EQ(r.graph.degree(r.centre), inst.graph.order() - 2);
    EXPECT_EQ(brute_force_hole_through(inst.graph, inst.x, inst.y).verdict,
              brute_force_windmill(r.graph, WindmillParams{1, 2, 1, 2}).verdict)
        << to_graph6(inst.graph);
    auto pi = random_hub_free_i2dp(8 + s % 5, 0.4, 300 + s);
    auto q = reduce_i2dp_to_windmill(pi, WindmillParams{2, 2, 1, 1});
    EXPECT_EQ(brute_force_i2dp(pi.graph, pi.x1, pi.y1, pi.x2, pi.y2).verdict,
              brute_force_windmill(q.graph, WindmillParams{2, 2, 1, 1}).verdict)
        << to_graph6(pi.graph);
  }
}
