#include "imd/generators.hpp"

#include "imd/errors.hpp"

namespace imd {

Graph path_graph(int k) {
  if (k < 0) throw InputError("path_graph: negative size");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(k, edges);
}

Graph cycle_graph(int k) {
  if (k < 3) return path_graph(k);
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph::from_edges(k, edges);
}

Graph clique_graph(int k) {
  if (k < 0) throw InputError("clique_graph: negative size");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(k, edges);
}

Graph star_graph(int k) {
  if (k < 0) throw InputError("star_graph: negative size");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(k + 1, edges);
}

Graph pattern_graph(PatternId id) { return pattern(id).graph; }

Graph gnp_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InputError("gnp_graph: negative size");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("gnp_graph: p outside [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (unit_draw(rng) < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

}  // namespace imd
