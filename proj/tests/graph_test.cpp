#include <random>

#include <gtest/gtest.h>

#include "imd/errors.hpp"
#include "imd/generators.hpp"
#include "imd/graph.hpp"
#include "imd/graph_io.hpp"
#include "imd/harness.hpp"
#include "oracles.hpp"

using namespace imd;

namespace {

VertexSet set_of(int n, std::initializer_list<int> vs) { return VertexSet(n, vs); }

Path path_of(std::vector<int> vs) { return Path{std::move(vs)}; }

std::vector<Graph> random_graphs(int count, int max_n, std::uint64_t seed) {
  std::vector<Graph> out;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    int n = 1 + static_cast<int>(unit_draw(rng) * max_n);
    double p = 0.15 + 0.7 * unit_draw(rng);
    out.push_back(gnp_graph(n, p, rng()));
  }
  return out;
}

}  // namespace

TEST(VertexSetTest, BasicOperations) {
  VertexSet s(130, {0, 64, 129});
  EXPECT_EQ(s.count(), 3);
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.next(0), 64);
  EXPECT_EQ(s.next(64), 129);
  EXPECT_EQ(s.next(129), VertexSet::npos);
  EXPECT_EQ(VertexSet::full(130).count(), 130);
  EXPECT_EQ(s.complement().count(), 127);
  EXPECT_EQ((s - VertexSet(130, {64})).to_vector(), (std::vector<int>{0, 129}));
  EXPECT_LT(VertexSet(5, {0, 3}), VertexSet(5, {0, 4}));
  EXPECT_LT(VertexSet(5, {0}), VertexSet(5, {0, 1}));
}

TEST(GraphTest, NeighborsExamples) {
  EXPECT_EQ(clique_graph(3).neighbors(0), set_of(3, {1, 2}));
  EXPECT_TRUE(Graph(3).neighbors(0).empty());
  EXPECT_EQ(path_graph(4).neighbors(1), set_of(4, {0, 2}));
  EXPECT_THROW(path_graph(4).neighbors(4), InputError);
  EXPECT_THROW(path_graph(4).neighbors(-1), InputError);
}

TEST(GraphTest, FromEdgesRejectsLoopsAndRange) {
  std::vector<Edge> loop{{1, 1}};
  std::vector<Edge> range{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, loop), InputError);
  EXPECT_THROW(Graph::from_edges(3, range), InputError);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_EQ(Graph::from_edges(2, dup).edge_count(), 1u);
}

TEST(GraphTest, ClosedNeighborhoodExamples) {
  EXPECT_EQ(closed_neighborhood(path_graph(4), set_of(4, {1})), set_of(4, {0, 1, 2}));
  EXPECT_TRUE(closed_neighborhood(path_graph(4), VertexSet(4)).empty());
  EXPECT_EQ(closed_neighborhood(clique_graph(4), set_of(4, {0})), VertexSet::full(4));
  EXPECT_EQ(open_neighborhood(path_graph(4), set_of(4, {1, 2})), set_of(4, {0, 3}));
  EXPECT_THROW(closed_neighborhood(path_graph(4), VertexSet(5)), InputError);
}

TEST(GraphTest, InducedSubgraphExamples) {
  auto p = induced_subgraph(cycle_graph(5), set_of(5, {1, 2, 3}));
  EXPECT_EQ(p.graph, path_graph(3));
  EXPECT_EQ(p.to_host, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(p.from_host[0], -1);
  EXPECT_EQ(induced_subgraph(clique_graph(5), set_of(5, {0, 2, 4})).graph, clique_graph(3));
}

TEST(GraphTest, InducedSubgraphMatchesEdgeFilter) {
  std::mt19937_64 rng(11);
  for (const Graph& g : random_graphs(200, 8, 3)) {
    VertexSet s(g.order());
    for (int v = 0; v < g.order(); ++v)
      if (unit_draw(rng) < 0.5) s.insert(v);
    auto sub = induced_subgraph(g, s);
    ASSERT_EQ(sub.graph.order(), s.count());
    std::vector<Edge> expected;
    for (auto [u, v] : g.edges())
      if (s.contains(u) && s.contains(v)) expected.emplace_back(u, v);
    std::vector<Edge> mapped;
    for (auto [u, v] : sub.graph.edges()) mapped.emplace_back(sub.to_host[u], sub.to_host[v]);
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(mapped, expected);
    for (int i = 0; i < sub.graph.order(); ++i) EXPECT_EQ(sub.from_host[sub.to_host[i]], i);
  }
}

TEST(GraphTest, RemoveVertices) {
  auto r = remove_vertices(path_graph(5), set_of(5, {2}));
  EXPECT_EQ(r.graph.order(), 4);
  EXPECT_EQ(r.graph.edge_count(), 2u);
  EXPECT_EQ(r.to_host, (std::vector<int>{0, 1, 3, 4}));
}

TEST(GraphTest, ContractEdgeExamples) {
  EXPECT_EQ(contract_edge(path_graph(3), 0, 1), path_graph(2));
  EXPECT_EQ(contract_edge(clique_graph(3), 1, 2), clique_graph(2));
  EXPECT_EQ(canonical_form(contract_edge(cycle_graph(5), 2, 3)), canonical_form(cycle_graph(4)));
  EXPECT_THROW(contract_edge(path_graph(3), 0, 2), InputError);
}

TEST(GraphTest, ContractEdgeKeepsIdConvention) {
  // Star centre 0 with leaves 1..3, contracting 0-2: the merged vertex is 0
  // and old ids 3 becomes 2.
  Graph g = contract_edge(star_graph(3), 0, 2);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.neighbors(0), set_of(3, {1, 2}));
}

TEST(GraphTest, ContractEdgeShrinksOrder) {
  for (const Graph& g : random_graphs(100, 8, 5)) {
    for (auto [u, v] : g.edges()) {
      Graph c = contract_edge(g, u, v);
      ASSERT_EQ(c.order(), g.order() - 1);
      for (int w = 0; w < c.order(); ++w) EXPECT_FALSE(c.neighbors(w).contains(w));
      auto merged = (g.neighbors(u) | g.neighbors(v)) - set_of(g.order(), {u, v});
      EXPECT_EQ(c.degree(std::min(u, v)), merged.count());
    }
  }
}

TEST(GraphTest, ComponentsExamples) {
  std::vector<Edge> two{{0, 1}, {2, 3}};
  auto cs = connected_components(Graph::from_edges(4, two));
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0], set_of(4, {0, 1}));
  EXPECT_EQ(cs[1], set_of(4, {2, 3}));
  EXPECT_EQ(connected_components(cycle_graph(6)).size(), 1u);
  EXPECT_TRUE(connected_components(Graph(0)).empty());
}

TEST(GraphTest, ComponentsMatchUnionFind) {
  for (const Graph& g : random_graphs(300, 10, 7)) {
    auto ours = connected_components(g);
    auto ref = oracle::components(g);
    ASSERT_EQ(ours.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(ours[i].to_vector(), ref[i]);
  }
}

TEST(GraphTest, ShortestPathExamples) {
  auto p = shortest_path(path_graph(5), 0, 4);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->vertices, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(shortest_path(Graph(2), 0, 1));
  EXPECT_EQ(shortest_path(cycle_graph(4), 0, 2)->vertices, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(shortest_path(path_graph(3), 1, 1)->vertices, (std::vector<int>{1}));
}

TEST(GraphTest, ShortestPathMatchesFloydWarshall) {
  for (const Graph& g : random_graphs(200, 10, 9)) {
    auto d = oracle::floyd_warshall(g);
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) {
        auto p = shortest_path(g, a, b);
        if (d[a][b] >= oracle::kInf) {
          EXPECT_FALSE(p);
          continue;
        }
        ASSERT_TRUE(p);
        EXPECT_EQ(static_cast<int>(p->size()) - 1, d[a][b]);
        EXPECT_TRUE(is_path(g, *p));
        EXPECT_EQ(p->front(), a);
        EXPECT_EQ(p->back(), b);
      }
  }
}

TEST(GraphTest, ShortestPathIsLexicographicallySmallest) {
  // Two shortest routes 0-2-5 and 0-3-5, plus 0-1-4-5 of greater length.
  std::vector<Edge> e{{0, 2}, {0, 3}, {2, 5}, {3, 5}, {0, 1}, {1, 4}, {4, 5}};
  Graph g = Graph::from_edges(6, e);
  EXPECT_EQ(shortest_path(g, 0, 5)->vertices, (std::vector<int>{0, 2, 5}));
  EXPECT_EQ(shortest_path(g, 5, 0)->vertices, (std::vector<int>{5, 2, 0}));
  VertexSet allowed = g.all_vertices() - set_of(6, {2});
  EXPECT_EQ(shortest_path_within(g, allowed, 0, 5)->vertices, (std::vector<int>{0, 3, 5}));
}

TEST(GraphTest, InducedPathChecks) {
  Graph c = cycle_graph(5);
  EXPECT_TRUE(is_induced_path(c, path_of({0, 1, 2})));
  EXPECT_FALSE(is_induced_path(c, path_of({0, 1, 2, 3, 4})));
  EXPECT_TRUE(is_path(c, path_of({0, 1, 2, 3, 4})));
  EXPECT_FALSE(is_path(c, path_of({0, 2})));
  EXPECT_FALSE(is_path(c, path_of({})));
}

TEST(GraphTest, MutuallyInducedExamples) {
  std::vector<Edge> e{{0, 1}, {2, 3}};
  Graph g = Graph::from_edges(4, e);
  EXPECT_TRUE(are_mutually_induced(g, path_of({0, 1}), path_of({2, 3})));
  Graph p = path_graph(5);
  EXPECT_FALSE(are_mutually_induced(p, path_of({0, 1, 2}), path_of({2, 3})));
  EXPECT_FALSE(are_mutually_induced(p, path_of({0, 1}), path_of({2, 3})));
  EXPECT_TRUE(are_mutually_induced(p, path_of({0, 1}), path_of({3, 4})));
  EXPECT_THROW(are_mutually_induced(p, path_of({0, 2}), path_of({4})), InputError);
}

TEST(GraphTest, MutuallyInducedMatchesScanAndIsSymmetric) {
  std::mt19937_64 rng(13);
  for (const Graph& g : random_graphs(300, 10, 15)) {
    if (g.order() < 2) continue;
    int a = static_cast<int>(unit_draw(rng) * g.order());
    int b = static_cast<int>(unit_draw(rng) * g.order());
    int c = static_cast<int>(unit_draw(rng) * g.order());
    int d = static_cast<int>(unit_draw(rng) * g.order());
    auto p = shortest_path(g, a, b);
    auto q = shortest_path(g, c, d);
    if (!p || !q) continue;
    bool scan = true;
    for (int x : p->vertices)
      for (int y : q->vertices)
        if (x == y || g.adjacent(x, y)) scan = false;
    EXPECT_EQ(are_mutually_induced(g, *p, *q), scan);
    EXPECT_EQ(are_mutually_induced(g, *q, *p), scan);
  }
}

TEST(GraphTest, ContractSets) {
  Graph g = cycle_graph(6);
  std::vector<VertexSet> parts{set_of(6, {1, 2}), set_of(6, {4, 5})};
  auto q = contract_sets(g, parts);
  EXPECT_EQ(q.graph.order(), 4);
  EXPECT_EQ(canonical_form(q.graph), canonical_form(cycle_graph(4)));
  EXPECT_EQ(q.host_to_quotient[2], q.host_to_quotient[1]);
  std::vector<VertexSet> bad{set_of(6, {1, 3})};
  EXPECT_THROW(contract_sets(g, bad), InputError);
}

TEST(GraphTest, DisjointUnionAndRelabel) {
  Graph u = disjoint_union(path_graph(2), cycle_graph(3));
  EXPECT_EQ(u.order(), 5);
  EXPECT_EQ(u.edge_count(), 4u);
  std::vector<int> perm{2, 0, 1};
  Graph r = relabel(path_graph(3), perm);
  EXPECT_EQ(r.neighbors(0), set_of(3, {1, 2}));
  std::vector<int> bad{0, 0, 1};
  EXPECT_THROW(relabel(path_graph(3), bad), InputError);
}

TEST(GraphIoTest, Graph6Examples) {
  Graph g = parse_graph6("D?{");
  EXPECT_EQ(g.order(), 5);
  auto m = oracle::decode_graph6("D?{");
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) EXPECT_EQ(g.adjacent(i, j), static_cast<bool>(m[i][j]));
  EXPECT_EQ(parse_graph6("@"), Graph(1));
  EXPECT_EQ(parse_graph6(">>graph6<<@\n"), Graph(1));
  EXPECT_EQ(parse_graph6("?"), Graph(0));
  EXPECT_EQ(to_graph6(Graph(0)), "?");
}

TEST(GraphIoTest, EdgelistExamples) {
  EXPECT_EQ(parse_edgelist("3\n0 1\n1 2\n"), path_graph(3));
  EXPECT_EQ(parse_edgelist("# comment\n3\n\n0 1\n# more\n1 2"), path_graph(3));
  EXPECT_EQ(to_edgelist(path_graph(3)), "3\n0 1\n1 2\n");
}

TEST(GraphIoTest, LargeGraph6Header) {
  Graph g = path_graph(100);
  std::string s = to_graph6(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(parse_graph6(s), g);
}

TEST(GraphIoTest, ParseErrorsCarryOffsets) {
  try {
    parse_graph6("D?");
    FAIL() << "truncated graph6 accepted";
  } catch (const ParseError& e) {
    EXPECT_GE(e.offset(), 1u);
  }
  try {
    parse_graph6("D\x20{");
    FAIL() << "bad byte accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW(parse_graph6("D?{{"), ParseError);
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_edgelist("3\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edgelist("3\n1 0\n"), ParseError);
  EXPECT_THROW(parse_edgelist("3\n0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edgelist("x\n"), ParseError);
  try {
    parse_edgelist("3\n0 1\n1 7\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 8u);
  }
}

TEST(GraphIoTest, RoundTripAllSmallGraphs) {
  for (const Graph& g : all_graphs_up_to(7)) {
    std::string g6 = to_graph6(g);
    ASSERT_EQ(parse_graph6(g6), g);
    ASSERT_EQ(parse_edgelist(to_edgelist(g)), g);
    auto m = oracle::decode_graph6(g6);
    for (auto [u, v] : g.edges()) ASSERT_TRUE(m[u][v]);
    int count = 0;
    for (int i = 0; i < g.order(); ++i)
      for (int j = i + 1; j < g.order(); ++j) count += m[i][j];
    ASSERT_EQ(static_cast<std::size_t>(count), g.edge_count());
  }
  for (const Graph& g : random_graphs(500, 8, 17)) {
    ASSERT_EQ(parse_graph(encode_graph(g, GraphFormat::Graph6), GraphFormat::Graph6), g);
    ASSERT_EQ(parse_graph(encode_graph(g, GraphFormat::EdgeList), GraphFormat::EdgeList), g);
  }
}

TEST(GraphIoTest, MultiLineGraph6) {
  auto gs = parse_graph6_lines("@\n\nA_\nBw\n");
  ASSERT_EQ(gs.size(), 3u);
  EXPECT_EQ(gs[1], path_graph(2));
  EXPECT_EQ(gs[2], clique_graph(3));
}

TEST(GraphIoTest, FormatNames) {
  EXPECT_EQ(parse_format_name("G6"), GraphFormat::Graph6);
  EXPECT_EQ(parse_format_name("edgelist"), GraphFormat::EdgeList);
  EXPECT_THROW(parse_format_name("dot"), InputError);
  EXPECT_EQ(format_for_path("x/host.g6"), GraphFormat::Graph6);
  EXPECT_EQ(format_for_path("host.txt"), GraphFormat::EdgeList);
}

TEST(GeneratorTest, Shapes) {
  EXPECT_EQ(path_graph(5).order(), 5);
  EXPECT_EQ(path_graph(5).edge_count(), 4u);
  EXPECT_EQ(cycle_graph(6).edge_count(), 6u);
  EXPECT_EQ(clique_graph(5).edge_count(), 10u);
  EXPECT_EQ(star_graph(6).degree(0), 6);
  EXPECT_EQ(pattern_graph(PatternId::H2).order(), 7);
  EXPECT_EQ(pattern_graph(PatternId::H2).edge_count(), 6u);
  EXPECT_EQ(gnp_graph(8, 0.5, 1), gnp_graph(8, 0.5, 1));
  EXPECT_EQ(gnp_graph(8, 0.0, 1).edge_count(), 0u);
  EXPECT_EQ(gnp_graph(8, 1.0, 1), clique_graph(8));
}
