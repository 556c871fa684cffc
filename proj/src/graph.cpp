#include "imd/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "imd/errors.hpp"

namespace imd {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)) {
  if (n < 0) throw InputError("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                       std::to_string(n));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (!g.adj_[u].contains(v)) ++g.m_;
    g.adj_[u].insert(v);
    g.adj_[v].insert(u);
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

void Graph::check_set(const VertexSet& s) const {
  if (s.universe() != n_)
    throw InputError("vertex set universe " + std::to_string(s.universe()) + " does not match n=" +
                     std::to_string(n_));
}

const VertexSet& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[static_cast<std::size_t>(u)].contains(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (v > u) out.emplace_back(u, v);
  return out;
}

VertexSet neighbors(const Graph& g, int v) { return g.neighbors(v); }

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  VertexSet out = s;
  for (int v : s) out |= g.neighbors(v);
  return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) { return closed_neighborhood(g, s) - s; }

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  Subgraph out;
  out.from_host.assign(static_cast<std::size_t>(g.order()), -1);
  for (int v : s) {
    out.from_host[static_cast<std::size_t>(v)] = static_cast<int>(out.to_host.size());
    out.to_host.push_back(v);
  }
  std::vector<Edge> edges;
  for (int v : s)
    for (int w : g.neighbors(v) & s)
      if (w > v) edges.emplace_back(out.from_host[v], out.from_host[w]);
  out.graph = Graph::from_edges(static_cast<int>(out.to_host.size()), edges);
  return out;
}

Subgraph remove_vertices(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  return induced_subgraph(g, s.complement());
}

Graph contract_edge(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v))
    throw InputError("cannot contract non-edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  VertexSet part(g.order(), {u, v});
  return contract_sets(g, std::span<const VertexSet>(&part, 1)).graph;
}

Quotient contract_sets(const Graph& g, std::span<const VertexSet> parts) {
  const int n = g.order();
  std::vector<int> rep(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rep[v] = v;
  VertexSet seen(n);
  for (const auto& p : parts) {
    g.check_set(p);
    if (p.empty()) throw InputError("cannot contract an empty set");
    if (p.intersects(seen)) throw InputError("contracted sets must be disjoint");
    if (!is_connected_set(g, p)) throw InputError("contracted set is not connected");
    seen |= p;
    int r = p.first();
    for (int v : p) rep[v] = r;
  }
  Quotient q;
  q.host_to_quotient.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> rep_id(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (rep[v] == v) rep_id[v] = next++;
  q.quotient_to_host.assign(static_cast<std::size_t>(next), VertexSet(n));
  for (int v = 0; v < n; ++v) {
    q.host_to_quotient[v] = rep_id[rep[v]];
    q.quotient_to_host[rep_id[rep[v]]].insert(v);
  }
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    int x = q.host_to_quotient[a];
    int y = q.host_to_quotient[b];
    if (x != y) edges.emplace_back(x, y);
  }
  q.graph = Graph::from_edges(next, edges);
  return q;
}

VertexSet reachable_within(const Graph& g, const VertexSet& allowed, const VertexSet& sources) {
  VertexSet seen = sources & allowed;
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet grow(g.order());
    for (int v : frontier) grow |= g.neighbors(v);
    grow &= allowed;
    grow -= seen;
    seen |= grow;
    frontier = std::move(grow);
  }
  return seen;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& allowed) {
  g.check_set(allowed);
  std::vector<VertexSet> out;
  VertexSet rest = allowed;
  while (!rest.empty()) {
    VertexSet src(g.order());
    src.insert(rest.first());
    VertexSet comp = reachable_within(g, rest, src);
    rest -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) { return components_within(g, g.all_vertices()); }

bool is_connected_set(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  if (s.empty()) return false;
  VertexSet src(g.order());
  src.insert(s.first());
  return reachable_within(g, s, src) == s;
}

std::vector<int> bfs_distances(const Graph& g, const VertexSet& allowed, int source) {
  g.check_vertex(source);
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  if (!allowed.contains(source)) return dist;
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v) & allowed) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::optional<Path> shortest_path_within(const Graph& g, const VertexSet& allowed, int a, int b) {
  g.check_vertex(a);
  g.check_vertex(b);
  g.check_set(allowed);
  if (!allowed.contains(a) || !allowed.contains(b)) return std::nullopt;
  // Distances to b, then a greedy walk from a taking the smallest id that
  // stays on a shortest route: this yields the lexicographically least path.
  auto dist = bfs_distances(g, allowed, b);
  if (dist[a] < 0) return std::nullopt;
  Path p;
  int cur = a;
  p.vertices.push_back(cur);
  while (cur != b) {
    for (int w : g.neighbors(cur) & allowed) {
      if (dist[w] == dist[cur] - 1) {
        cur = w;
        break;
      }
    }
    p.vertices.push_back(cur);
  }
  return p;
}

std::optional<Path> shortest_path(const Graph& g, int a, int b) {
  return shortest_path_within(g, g.all_vertices(), a, b);
}

bool is_path(const Graph& g, const Path& p) {
  if (p.empty()) return false;
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < p.size(); ++i) {
    int v = p.vertices[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool is_induced_path(const Graph& g, const Path& p) {
  if (!is_path(g, p)) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 2; j < p.size(); ++j)
      if (g.adjacent(p.vertices[i], p.vertices[j])) return false;
  return true;
}

bool are_mutually_induced(const Graph& g, const Path& p, const Path& q) {
  if (!is_path(g, p) || !is_path(g, q)) throw InputError("are_mutually_induced: argument is not a path");
  VertexSet sp = p.as_set(g.order());
  VertexSet sq = q.as_set(g.order());
  if (sp.intersects(sq)) return false;
  return !open_neighborhood(g, sp).intersects(sq);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edges(a.order() + b.order(), edges);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) throw InputError("relabel: permutation size mismatch");
  std::vector<int> check(perm.begin(), perm.end());
  std::sort(check.begin(), check.end());
  for (int i = 0; i < g.order(); ++i)
    if (check[i] != i) throw InputError("relabel: not a permutation");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), edges);
}

}  // namespace imd
