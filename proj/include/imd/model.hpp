#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "imd/graph.hpp"
#include "imd/pattern.hpp"

namespace imd {

/// Induced-minor model of a pattern H in a host G: one bag per pattern
/// vertex, indexed by pattern vertex (label - 1).
struct Model {
  std::string pattern_name;
  Graph pattern;
  std::vector<VertexSet> bags;

  static Model for_pattern(PatternId id, std::vector<VertexSet> bags);
  /// Empty bags over a host with n vertices.
  static Model empty(PatternId id, int n);

  int total_size() const;
  const VertexSet& bag_of_label(int label) const { return bags.at(static_cast<std::size_t>(label - 1)); }

  friend bool operator==(const Model&, const Model&) = default;
};

struct ModelReport {
  enum class Clause { None, Empty, Overlap, Disconnected, MissingEdge, ExtraEdge };

  Clause clause = Clause::None;
  int y = -1;  // pattern vertex (0-based)
  int z = -1;
  int witness = -1;  // host vertex, when one exists
  std::string message;

  bool ok() const { return clause == Clause::None; }
  explicit operator bool() const { return ok(); }
};

/// Checks (i) non-empty bags, (ii) pairwise disjointness, connectivity of
/// each bag and (iii) exact adjacency correspondence, in that order.
/// Throws InputError if the bag count does not match the pattern or a bag
/// is over the wrong universe.
ModelReport verify_model(const Graph& g, const Model& m);

/// Greedy fixed point of single-vertex removals. Throws InputError if the
/// input does not verify.
Model minimize_model(const Graph& g, const Model& m);
bool is_bag_minimal(const Graph& g, const Model& m);

/// Pattern-sized graph with an edge yz iff bags y and z are adjacent.
Graph bag_quotient(const Graph& g, const Model& m);

struct LemmaReport {
  bool ok = true;
  int y = -1;
  int witness = -1;
  std::string message;
  explicit operator bool() const { return ok; }
};

/// Every leaf of the BFS spanning tree (rooted at the smallest vertex) of
/// each bag is the unique attachment towards some neighbouring bag, and
/// there are at most deg_H(y) leaves. Throws PreconditionError if the model
/// is not bag-minimal.
LemmaReport check_leaf_lemma(const Graph& g, const Model& m);
/// Bags of pattern vertices of degree 2 induce paths whose ends are the
/// unique attachments to the two neighbouring bags.
LemmaReport check_degree2_bag_is_path(const Graph& g, const Model& m);
/// Bags of pattern vertices of degree 1 are singletons.
LemmaReport check_degree1_singleton(const Graph& g, const Model& m);

/// Vertices of bag y with a neighbour in bag z.
VertexSet attachments(const Graph& g, const Model& m, int y, int z);

nlohmann::json model_to_json(const Model& m);
/// Accepts catalog pattern names, or "custom" with a "pattern_graph6" field.
Model model_from_json(const nlohmann::json& j, int host_order);

}  // namespace imd
