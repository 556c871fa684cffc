#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "imd/graph.hpp"

namespace imd {

enum class PatternId { Kite, F1, F2, H2 };

inline constexpr std::array<PatternId, 4> kAllPatterns{PatternId::Kite, PatternId::F1, PatternId::F2,
                                                       PatternId::H2};

/// One of the fixed target graphs. Pattern label L (1-based, as used when
/// printing bags) is vertex L-1 of `graph`.
struct PatternGraph {
  PatternId id;
  std::string name;
  Graph graph;

  int order() const { return graph.order(); }
  static int vertex(int label) { return label - 1; }
  static int label(int vertex) { return vertex + 1; }
};

/// The compiled-in pattern. Edge sets (labels):
///   kite: 12 23 24 34 35 45   (diamond 2345 with a pendant 1 on 2)
///   f1:   12 23 24 25 34 35 45 (K4 on 2345 with a pendant 1 on 2)
///   f2:   12 15 23 24 34 35 45 (K4 on 2345 with edge 25 subdivided by 1)
///   h2:   12 23 24 46 56 67    (path 1-2-4-6-7 with pendants 3 on 2, 5 on 6)
const PatternGraph& pattern(PatternId id);

std::string_view pattern_name(PatternId id);
/// Case-insensitive kite | f1 | f2 | h2.
PatternId parse_pattern_name(std::string_view name);

/// Degrees sorted ascending.
std::vector<int> degree_sequence(const Graph& g);
std::vector<int> degree_sequence(const PatternGraph& p);

}  // namespace imd
