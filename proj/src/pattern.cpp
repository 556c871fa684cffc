#include "imd/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "imd/errors.hpp"

namespace imd {
namespace {

struct LabelEdge {
  int a;
  int b;
};

PatternGraph build(PatternId id, std::string name, int order, std::initializer_list<LabelEdge> label_edges) {
  std::vector<Edge> edges;
  for (auto e : label_edges) edges.emplace_back(PatternGraph::vertex(e.a), PatternGraph::vertex(e.b));
  return PatternGraph{id, std::move(name), Graph::from_edges(order, edges)};
}

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("pattern catalog invariant violated: ") + what);
}

bool is_clique(const Graph& g, std::initializer_list<int> labels) {
  for (int a : labels)
    for (int b : labels)
      if (a < b && !g.adjacent(PatternGraph::vertex(a), PatternGraph::vertex(b))) return false;
  return true;
}

std::array<PatternGraph, 4> build_catalog() {
  std::array<PatternGraph, 4> c{
      build(PatternId::Kite, "kite", 5, {{1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}),
      build(PatternId::F1, "f1", 5, {{1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}),
      build(PatternId::F2, "f2", 5, {{1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}),
      build(PatternId::H2, "h2", 7, {{1, 2}, {2, 3}, {2, 4}, {4, 6}, {5, 6}, {6, 7}}),
  };
  for (const auto& p : c) require(is_connected_set(p.graph, p.graph.all_vertices()), "pattern not connected");
  const Graph& kite = c[0].graph;
  require(kite.degree(0) == 1 && !kite.adjacent(1, 4), "kite: 1 pendant on 2, 2 and 5 non-adjacent");
  require(is_clique(c[1].graph, {2, 3, 4, 5}), "f1: 2345 is a clique");
  require(c[2].graph.neighbors(0) == VertexSet(5, {1, 4}), "f2: neighbours of 1 are 2 and 5");
  require(c[3].graph.edge_count() == 6 && c[3].graph.order() == 7, "h2 is a tree on 7 vertices");
  return c;
}

const std::array<PatternGraph, 4>& catalog() {
  static const std::array<PatternGraph, 4> c = build_catalog();
  return c;
}

}  // namespace

const PatternGraph& pattern(PatternId id) { return catalog()[static_cast<std::size_t>(id)]; }

std::string_view pattern_name(PatternId id) {
  switch (id) {
    case PatternId::Kite: return "kite";
    case PatternId::F1: return "f1";
    case PatternId::F2: return "f2";
    case PatternId::H2: return "h2";
  }
  return "?";
}

PatternId parse_pattern_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  for (PatternId id : kAllPatterns)
    if (lower == pattern_name(id)) return id;
  throw InputError("unknown pattern '" + std::string(name) + "' (expected kite|f1|f2|h2)");
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<int> degree_sequence(const PatternGraph& p) { return degree_sequence(p.graph); }

}  // namespace imd
