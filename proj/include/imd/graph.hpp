#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "imd/vertex_set.hpp"

namespace imd {

using Edge = std::pair<int, int>;

/// Ordered sequence of distinct vertices; consecutive vertices are expected
/// to be adjacent in whatever host graph the path is checked against.
struct Path {
  std::vector<int> vertices;

  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  VertexSet as_set(int universe) const { return VertexSet::of(universe, vertices); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Immutable simple undirected graph on dense vertex ids 0..order()-1.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Builds a graph from an edge list. Parallel edges are merged; loops and
  /// out-of-range endpoints are rejected with InputError.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return m_; }

  /// Neighbourhood of v. Throws InputError for an out-of-range id.
  const VertexSet& neighbors(int v) const;
  bool adjacent(int u, int v) const;
  int degree(int v) const { return neighbors(v).count(); }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  VertexSet all_vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  void check_vertex(int v) const;
  void check_set(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
};

/// A subgraph together with the vertex correspondence to its host.
struct Subgraph {
  Graph graph;
  std::vector<int> to_host;    // subgraph id -> host id
  std::vector<int> from_host;  // host id -> subgraph id, or -1
};

/// Result of contracting disjoint connected vertex sets to single vertices.
struct Quotient {
  Graph graph;
  std::vector<int> host_to_quotient;
  std::vector<VertexSet> quotient_to_host;
};

VertexSet neighbors(const Graph& g, int v);

/// S together with every neighbour of a member of S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
/// Vertices outside S with a neighbour in S.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);
/// Graph minus the given vertices (ids compacted, order preserved).
Subgraph remove_vertices(const Graph& g, const VertexSet& s);

/// Contracts edge uv. The merged vertex takes id min(u, v); ids above the
/// removed max(u, v) shift down by one.
Graph contract_edge(const Graph& g, int u, int v);

/// Contracts each of the given disjoint, connected sets to one vertex. Each
/// contracted vertex sits at the position of its smallest member; remaining
/// ids are compacted preserving order.
Quotient contract_sets(const Graph& g, std::span<const VertexSet> parts);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of G[allowed], ordered by smallest member.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& allowed);
/// Vertices of `allowed` reachable from `sources` inside G[allowed]. Sources
/// outside `allowed` are ignored.
VertexSet reachable_within(const Graph& g, const VertexSet& allowed, const VertexSet& sources);
bool is_connected_set(const Graph& g, const VertexSet& s);

/// Lexicographically smallest shortest a-b path, or nullopt if disconnected.
std::optional<Path> shortest_path(const Graph& g, int a, int b);
/// As shortest_path, restricted to G[allowed]; a and b must lie in allowed.
std::optional<Path> shortest_path_within(const Graph& g, const VertexSet& allowed, int a, int b);
/// BFS distances from `source` inside G[allowed]; -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, const VertexSet& allowed, int source);

bool is_path(const Graph& g, const Path& p);
bool is_induced_path(const Graph& g, const Path& p);

/// True iff p and q are vertex-disjoint with no edge between them. Throws
/// InputError if either argument is not a path of g.
bool are_mutually_induced(const Graph& g, const Path& p, const Path& q);

Graph disjoint_union(const Graph& a, const Graph& b);
/// perm[old] = new.
Graph relabel(const Graph& g, std::span<const int> perm);

}  // namespace imd
