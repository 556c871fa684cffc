#pragma once

#include <cstdint>
#include <random>

#include "imd/graph.hpp"
#include "imd/pattern.hpp"

namespace imd {

Graph path_graph(int k);
/// C_k for k >= 3; smaller k fall back to path_graph(k).
Graph cycle_graph(int k);
Graph clique_graph(int k);
/// K_{1,k}: centre 0 and leaves 1..k.
Graph star_graph(int k);
Graph pattern_graph(PatternId id);

/// Erdos-Renyi G(n, p). Pairs (i, j), i < j, are visited column by column
/// (j outer) and each draws one 64-bit value from mt19937_64(seed); the edge
/// is present iff (draw >> 11) * 2^-53 < p.
Graph gnp_graph(int n, double p, std::uint64_t seed);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace imd
