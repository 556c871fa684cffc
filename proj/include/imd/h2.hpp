#pragma once

#include <array>
#include <optional>

#include "imd/detectors.hpp"
#include "imd/graph.hpp"
#include "imd/model.hpp"

namespace imd {

/// Ends and inner neighbours of two mutually induced paths
/// P = x1 a1 ... a2 x3 and Q = x5 b1 ... b2 x7.
struct Frame {
  int x1, a1, a2, x3, x5, b1, b2, x7;

  std::array<int, 8> as_array() const { return {x1, a1, a2, x3, x5, b1, b2, x7}; }
  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Eight distinct vertices inducing exactly the edges x1a1, a2x3, x5b1, b2x7.
bool is_valid_frame(const Graph& g, const Frame& f);

/// V(G) - (N[x1, x3, x5, b1, b2, x7] - {a1, a2}). Throws InputError for an
/// invalid frame.
VertexSet f_reduced_vertices(const Graph& g, const Frame& f);
/// V(G) - (N[x1, x3, x5, a1, a2, x7] - {b1, b2}).
VertexSet reversed_f_reduced_vertices(const Graph& g, const Frame& f);
Subgraph f_reduced(const Graph& g, const Frame& f);
Subgraph reversed_f_reduced(const Graph& g, const Frame& f);

/// Least vertex outside P and Q complete to their interiors and
/// anti-complete to their four ends. Throws InputError unless p and q are
/// mutually induced induced paths on at least five vertices each.
std::optional<int> find_centre(const Graph& g, const Path& p, const Path& q);

/// Models with |X_2| <= 2 or |X_6| <= 2, returned with X_1, X_3, X_4, X_5,
/// X_7 singletons and |X_2| <= 2.
std::optional<Model> detect_small_h2_model(const Graph& g, const DetectOptions& opts = {},
                                           DetectStats* stats = nullptr);

/// The second stage alone: frames, shortest paths in the reduced graphs and
/// a vertex seeing both paths.
std::optional<Model> detect_h2_frames(const Graph& g, const DetectOptions& opts = {}, DetectStats* stats = nullptr);

}  // namespace imd
