#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "imd/graph.hpp"

namespace imd {

struct WindmillParams {
  int a = 1;
  int b = 1;
  int c = 1;
  int d = 1;

  void validate() const;
  /// "a,b,c,d"
  static WindmillParams parse(const std::string& text);
  std::string str() const;
};

struct WindmillWitness {
  Path p;
  Path q;
  int centre = -1;
};

/// Full definition check: both paths induced and mutually induced,
/// |p| >= a+b+2, |q| >= c+d+2, and the centre is anti-complete to the end
/// segments (first a and last b vertices of p, first c and last d of q) and
/// complete to every other path vertex.
bool verify_windmill(const Graph& g, const WindmillParams& params, const Path& p, const Path& q, int centre);

/// No vertex has three or more neighbours of degree at least 3.
bool is_hub_free(const Graph& g);

struct TwoInAHoleInstance {
  Graph graph;
  int x = -1;
  int y = -1;
};

struct I2dpInstance {
  Graph graph;
  int x1 = -1;  // x'
  int x2 = -1;  // x''
  int y1 = -1;  // y'
  int y2 = -1;  // y''
};

/// Output of a windmill reduction with the positions of all landmarks.
struct WindmillReduction {
  Graph graph;
  int centre = -1;
  /// Source vertices carrying the pendant paths, in parameter order
  /// (lengths a, b, c, d).
  std::array<int, 4> terminals{};
  /// Output ids of the four pendant paths; element 0 is the far end and the
  /// last element is the vertex joined to its terminal.
  std::array<std::vector<int>, 4> pendants;
  /// Source id -> output id, or -1 for removed source vertices.
  std::vector<int> source_to_output;
  std::string pairing;
  bool source_hub_free = false;
};

/// Generic builder: deletes `removed` from the source, adds a centre adjacent
/// to every remaining source vertex, and hangs a pendant path of length
/// params.a, .b, .c, .d off terminals[0..3]. Rejects parameter multisets
/// with three equal values.
WindmillReduction reduce_to_windmill(const Graph& source, const VertexSet& removed, std::array<int, 4> terminals,
                                     const WindmillParams& params);

/// Case a = c, b = d, a != b. x and y must have degree exactly 2; x' < x''
/// are the neighbours of x and y' < y'' those of y. Pendants of length a, b,
/// c, d go on x', y', x'', y''.
WindmillReduction reduce_2iah_to_windmill(const TwoInAHoleInstance& inst, const WindmillParams& params);

/// Case a = b, c = d, a != c. Pendants of length a, b, c, d go on x', y',
/// x'', y''; no source vertex is removed.
WindmillReduction reduce_i2dp_to_windmill(const I2dpInstance& inst, const WindmillParams& params);

/// Hub-free host on n vertices: gnp(n - 2, p, seed) with edges at hubs
/// deleted until none is left, then two vertex-disjoint edges subdivided by
/// x = n - 2 and y = n - 1. x and y have degree 2, no common neighbour and
/// are at distance at least 3.
TwoInAHoleInstance random_hub_free_2iah(int n, double p, std::uint64_t seed);
/// Hub-free gnp(n, p, seed) as above with four distinct random terminals.
I2dpInstance random_hub_free_i2dp(int n, double p, std::uint64_t seed);

}  // namespace imd
