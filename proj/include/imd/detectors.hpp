#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>

#include "imd/dcs.hpp"
#include "imd/graph.hpp"
#include "imd/model.hpp"
#include "imd/pattern.hpp"

namespace imd {

enum class H2Stage { Small, Full };

struct DetectOptions {
  /// false: enumerate the literal guess tuples of the correctness proofs and
  /// solve one DCS instance per tuple.
  bool prune = true;
  int jobs = 1;
  H2Stage h2_stage = H2Stage::Full;
  DcsOptions dcs;
};

struct DetectStats {
  std::atomic<std::uint64_t> guesses{0};
  std::atomic<std::uint64_t> dcs_calls{0};
  /// 1 or 2 for H2 yes-answers: the stage that produced the model.
  std::atomic<int> h2_stage_hit{0};
};

/// Each detector returns a model that passed verify_model, or nullopt.
std::optional<Model> detect_kite(const Graph& g, const DetectOptions& opts = {}, DetectStats* stats = nullptr);
std::optional<Model> detect_f1(const Graph& g, const DetectOptions& opts = {}, DetectStats* stats = nullptr);
std::optional<Model> detect_f2(const Graph& g, const DetectOptions& opts = {}, DetectStats* stats = nullptr);
std::optional<Model> detect_h2(const Graph& g, const DetectOptions& opts = {}, DetectStats* stats = nullptr);

std::optional<Model> detect(PatternId id, const Graph& g, const DetectOptions& opts = {},
                            DetectStats* stats = nullptr);

using BaseDetector = std::function<bool(const Graph&)>;

/// Decides (H + P_t) by trying every vertex set S inducing a path on t
/// vertices and asking `base` about G - N[S]. The first such S found (in
/// lexicographic order of its sorted members) is stored in `witness`.
bool detect_h_plus_path(const Graph& g, const BaseDetector& base, int t, VertexSet* witness = nullptr);

/// Subsets of `pool` with between lo and hi members, by size and then
/// lexicographically.
std::vector<VertexSet> subsets_between(const VertexSet& pool, int lo, int hi);

}  // namespace imd
