#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "imd/graph.hpp"

namespace imd {

/// k-Disjoint Connected Subgraphs: grow each terminal set Z_i into a
/// connected S_i, all S_i pairwise disjoint.
struct DcsInstance {
  Graph graph;
  std::vector<VertexSet> terminals;

  /// k >= 2, every Z_i non-empty and in range, pairwise disjoint.
  void validate() const;
};

struct DcsSolution {
  std::vector<VertexSet> sets;
};

struct DcsOptions {
  /// Search nodes before ResourceLimitError is thrown.
  std::uint64_t node_limit = 200'000'000ULL;
};

std::optional<DcsSolution> solve_dcs(const DcsInstance& inst, const DcsOptions& opts = {});
/// As solve_dcs, then drops non-terminal vertices (id order, repeated to a
/// fixed point) while every set stays connected.
std::optional<DcsSolution> solve_dcs_minimal(const DcsInstance& inst, const DcsOptions& opts = {});

/// Core search on G[allowed]. Empty terminal groups are allowed and get an
/// empty set; terminals must lie inside `allowed`.
std::optional<std::vector<VertexSet>> solve_dcs_within(const Graph& g, const VertexSet& allowed,
                                                       const std::vector<VertexSet>& terminals,
                                                       const DcsOptions& opts = {});

bool is_dcs_solution(const DcsInstance& inst, const DcsSolution& sol);

/// Shrinks each set to a fixed point of single non-terminal removals that
/// keep it connected.
std::vector<VertexSet> prune_dcs_sets(const Graph& g, const std::vector<VertexSet>& terminals,
                                      std::vector<VertexSet> sets);

struct LinkedStats {
  std::uint64_t dcs_calls = 0;
  std::uint64_t memo_hits = 0;
};

/// Disjoint, non-empty, connected S_i ⊇ Z_i inside G[allowed] such that S_i
/// and S_j are adjacent for every required pair (i, j). For each pair not
/// already joined by the terminals, an edge pq with p in S_i and q in S_j is
/// guessed and its ends added to the terminals; after every guess the
/// terminal sets must still admit a plain DCS solution, and failed terminal
/// tuples are remembered.
std::optional<std::vector<VertexSet>> solve_linked_dcs(const Graph& g, const VertexSet& allowed,
                                                       std::vector<VertexSet> terminals,
                                                       const std::vector<std::pair<int, int>>& pairs,
                                                       const DcsOptions& opts = {}, LinkedStats* stats = nullptr);

}  // namespace imd
