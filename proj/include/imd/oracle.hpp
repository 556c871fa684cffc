#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "imd/graph.hpp"
#include "imd/model.hpp"
#include "imd/pattern.hpp"
#include "imd/windmill.hpp"

namespace imd {

struct OracleBudget {
  int max_host_vertices = 12;
  std::uint64_t node_limit = 2'000'000'000ULL;
};

/// Windmill searches run on reduction outputs, which are larger than the
/// sources they come from.
inline constexpr OracleBudget kWindmillBudget{32, 2'000'000'000ULL};

enum class Verdict { Yes, No, BudgetExceeded };

const char* verdict_name(Verdict v);

struct OracleResult {
  Verdict verdict = Verdict::No;
  std::optional<Model> model;
  std::uint64_t nodes = 0;
};

/// Exhaustive induced-minor decision. Host vertices are assigned in id
/// order to a bag or to "deleted". `bag_size_cap[y]` > 0 bounds |X_y|.
/// Throws ResourceLimitError if the host exceeds max_host_vertices; running
/// out of nodes yields BudgetExceeded.
OracleResult brute_force_induced_minor(const Graph& g, const Graph& h, const OracleBudget& budget = {},
                                       const std::vector<int>& bag_size_cap = {});
OracleResult brute_force_induced_minor(const Graph& g, PatternId id, const OracleBudget& budget = {},
                                       const std::vector<int>& bag_size_cap = {});

/// Small H2 models only: |X_2| <= 2 or |X_6| <= 2.
OracleResult brute_force_small_h2(const Graph& g, const OracleBudget& budget = {});

struct WindmillResult {
  Verdict verdict = Verdict::No;
  std::optional<WindmillWitness> witness;
};

WindmillResult brute_force_windmill(const Graph& g, const WindmillParams& params,
                                    const OracleBudget& budget = kWindmillBudget);

struct HoleResult {
  Verdict verdict = Verdict::No;
  /// Cycle vertices in order, starting at x.
  std::optional<Path> cycle;
};

/// Induced cycle containing both x and y.
HoleResult brute_force_hole_through(const Graph& g, int x, int y, const OracleBudget& budget = {});

struct PathPairResult {
  Verdict verdict = Verdict::No;
  std::optional<Path> p;
  std::optional<Path> q;
};

/// Mutually induced paths x1 -> y1 and x2 -> y2 (each path induced).
PathPairResult brute_force_i2dp(const Graph& g, int x1, int y1, int x2, int y2, const OracleBudget& budget = {});

bool is_induced_cycle(const Graph& g, const Path& cycle);

}  // namespace imd
