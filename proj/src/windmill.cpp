#include "imd/windmill.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "imd/errors.hpp"
#include "imd/generators.hpp"

namespace imd {

void WindmillParams::validate() const {
  if (a < 1 || b < 1 || c < 1 || d < 1) throw InputError("windmill parameters must be positive");
}

WindmillParams WindmillParams::parse(const std::string& text) {
  std::vector<int> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      vals.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("bad windmill parameter '" + item + "'");
    }
  }
  if (vals.size() != 4) throw InputError("windmill parameters need four values a,b,c,d");
  WindmillParams p{vals[0], vals[1], vals[2], vals[3]};
  p.validate();
  return p;
}

std::string WindmillParams::str() const {
  return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d);
}

bool verify_windmill(const Graph& g, const WindmillParams& params, const Path& p, const Path& q, int centre) {
  params.validate();
  if (centre < 0 || centre >= g.order()) return false;
  if (!is_induced_path(g, p) || !is_induced_path(g, q)) return false;
  int k = static_cast<int>(p.size());
  int l = static_cast<int>(q.size());
  if (k < params.a + params.b + 2 || l < params.c + params.d + 2) return false;
  if (!are_mutually_induced(g, p, q)) return false;
  if (p.as_set(g.order()).contains(centre) || q.as_set(g.order()).contains(centre)) return false;
  const VertexSet& nz = g.neighbors(centre);
  for (int i = 0; i < k; ++i) {
    bool end = i < params.a || i >= k - params.b;
    if (nz.contains(p.vertices[i]) == end) return false;
  }
  for (int i = 0; i < l; ++i) {
    bool end = i < params.c || i >= l - params.d;
    if (nz.contains(q.vertices[i]) == end) return false;
  }
  return true;
}

bool is_hub_free(const Graph& g) {
  VertexSet big(g.order());
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 3) big.insert(v);
  for (int v = 0; v < g.order(); ++v)
    if ((g.neighbors(v) & big).count() >= 3) return false;
  return true;
}

WindmillReduction reduce_to_windmill(const Graph& source, const VertexSet& removed, std::array<int, 4> terminals,
                                     const WindmillParams& params) {
  params.validate();
  source.check_set(removed);
  std::array<int, 4> lens{params.a, params.b, params.c, params.d};
  for (int v : lens)
    if (std::count(lens.begin(), lens.end(), v) >= 3)
      throw InputError("windmill parameters " + params.str() + " have three equal values");
  for (int i = 0; i < 4; ++i) {
    source.check_vertex(terminals[i]);
    if (removed.contains(terminals[i])) throw InputError("terminal vertex is removed by the reduction");
    for (int j = 0; j < i; ++j)
      if (terminals[i] == terminals[j]) throw InputError("terminal vertices must be distinct");
  }

  WindmillReduction out;
  out.terminals = terminals;
  out.source_hub_free = is_hub_free(source);
  out.source_to_output.assign(static_cast<std::size_t>(source.order()), -1);
  int next = 0;
  for (int v = 0; v < source.order(); ++v)
    if (!removed.contains(v)) out.source_to_output[v] = next++;
  const int kept = next;
  out.centre = next++;

  std::vector<Edge> edges;
  for (auto [u, v] : source.edges())
    if (out.source_to_output[u] >= 0 && out.source_to_output[v] >= 0)
      edges.emplace_back(out.source_to_output[u], out.source_to_output[v]);
  for (int v = 0; v < kept; ++v) edges.emplace_back(out.centre, v);
  for (int i = 0; i < 4; ++i) {
    auto& path = out.pendants[i];
    for (int j = 0; j < lens[i]; ++j) {
      path.push_back(next++);
      if (j > 0) edges.emplace_back(path[j - 1], path[j]);
    }
    edges.emplace_back(path.back(), out.source_to_output[terminals[i]]);
  }
  out.graph = Graph::from_edges(next, edges);
  out.pairing = "P runs pendant 0 to pendant 1, Q runs pendant 2 to pendant 3 (lengths " + params.str() + ")";
  return out;
}

WindmillReduction reduce_2iah_to_windmill(const TwoInAHoleInstance& inst, const WindmillParams& params) {
  params.validate();
  const Graph& h = inst.graph;
  h.check_vertex(inst.x);
  h.check_vertex(inst.y);
  if (inst.x == inst.y) throw InputError("2-in-a-hole needs x != y");
  if (h.degree(inst.x) != 2 || h.degree(inst.y) != 2) throw InputError("2-in-a-hole needs x and y of degree 2");
  if (!(params.a == params.c && params.b == params.d && params.a != params.b))
    throw InputError("2-in-a-hole reduction needs a = c, b = d and a != b");
  auto nx = h.neighbors(inst.x).to_vector();
  auto ny = h.neighbors(inst.y).to_vector();
  VertexSet removed(h.order(), {inst.x, inst.y});
  for (int t : {nx[0], nx[1], ny[0], ny[1]})
    if (removed.contains(t)) throw InputError("x and y must not be adjacent");
  if (nx[0] == ny[0] || nx[0] == ny[1] || nx[1] == ny[0] || nx[1] == ny[1])
    throw InputError("x and y must not share a neighbour");
  auto out = reduce_to_windmill(h, removed, {nx[0], ny[0], nx[1], ny[1]}, params);
  out.pairing = "pendants on x', y', x'', y''; a hole through x and y gives arms x'..y' and x''..y'' or x'..y'' and x''..y'";
  return out;
}

WindmillReduction reduce_i2dp_to_windmill(const I2dpInstance& inst, const WindmillParams& params) {
  params.validate();
  const Graph& h = inst.graph;
  std::array<int, 4> t{inst.x1, inst.y1, inst.x2, inst.y2};
  for (int v : t) h.check_vertex(v);
  if (!(params.a == params.b && params.c == params.d && params.a != params.c))
    throw InputError("induced 2-disjoint-paths reduction needs a = b, c = d and a != c");
  auto out = reduce_to_windmill(h, VertexSet(h.order()), t, params);
  out.pairing = "pendants on x', y', x'', y''; arms run x'..y' and x''..y''";
  return out;
}

namespace {

Graph drop_hubs(Graph g, std::mt19937_64& rng) {
  while (true) {
    VertexSet big(g.order());
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) >= 3) big.insert(v);
    int hub = -1;
    for (int v = 0; v < g.order() && hub < 0; ++v)
      if ((g.neighbors(v) & big).count() >= 3) hub = v;
    if (hub < 0) return g;
    auto heavy = (g.neighbors(hub) & big).to_vector();
    int w = heavy[static_cast<std::size_t>(unit_draw(rng) * static_cast<double>(heavy.size()))];
    std::vector<Edge> edges;
    for (auto e : g.edges())
      if (e != Edge{std::min(hub, w), std::max(hub, w)}) edges.push_back(e);
    g = Graph::from_edges(g.order(), edges);
  }
}

}  // namespace

TwoInAHoleInstance random_hub_free_2iah(int n, double p, std::uint64_t seed) {
  if (n < 6) throw InputError("2-in-a-hole generator needs n >= 6");
  std::mt19937_64 rng(seed ^ 0x2a2a2a2aULL);
  Graph base = drop_hubs(gnp_graph(n - 2, p, seed), rng);
  std::vector<Edge> edges = base.edges();
  std::vector<std::pair<Edge, Edge>> choices;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a != c && a != d && b != c && b != d) choices.emplace_back(edges[i], edges[j]);
    }
  if (choices.empty()) {
    // Too sparse to subdivide: fall back to a path through all base vertices.
    edges.clear();
    for (int v = 0; v + 1 < n - 2; ++v) edges.emplace_back(v, v + 1);
    choices.emplace_back(edges.front(), edges.back());
  }
  auto [e, f] = choices[static_cast<std::size_t>(unit_draw(rng) * static_cast<double>(choices.size()))];
  const int x = n - 2;
  const int y = n - 1;
  std::vector<Edge> out;
  for (auto g : edges)
    if (g != e && g != f) out.push_back(g);
  out.insert(out.end(), {{e.first, x}, {e.second, x}, {f.first, y}, {f.second, y}});
  return {Graph::from_edges(n, out), x, y};
}

I2dpInstance random_hub_free_i2dp(int n, double p, std::uint64_t seed) {
  if (n < 4) throw InputError("induced 2-disjoint-paths generator needs n >= 4");
  std::mt19937_64 rng(seed ^ 0x12d912d9ULL);
  Graph g = drop_hubs(gnp_graph(n, p, seed), rng);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[v] = v;
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[static_cast<std::size_t>(unit_draw(rng) * (i + 1))]);
  // Each terminal pair is taken from one component when possible.
  std::vector<int> picked;
  auto take = [&](int partner) {
    int fallback = -1;
    for (int v : order) {
      if (std::find(picked.begin(), picked.end(), v) != picked.end()) continue;
      if (fallback < 0) fallback = v;
      if (partner < 0 || reachable_within(g, g.all_vertices(), VertexSet(n, {partner})).contains(v)) {
        picked.push_back(v);
        return v;
      }
    }
    picked.push_back(fallback);
    return fallback;
  };
  int x1 = take(-1);
  int y1 = take(x1);
  int x2 = take(-1);
  int y2 = take(x2);
  return {std::move(g), x1, x2, y1, y2};
}

}  // namespace imd
