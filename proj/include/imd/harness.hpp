#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "imd/dcs.hpp"
#include "imd/detectors.hpp"
#include "imd/graph.hpp"
#include "imd/model.hpp"
#include "imd/oracle.hpp"
#include "imd/pattern.hpp"

namespace imd {

/// Canonical relabeling by colour refinement plus individualisation; two
/// graphs are isomorphic iff their canonical forms are equal.
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

/// One representative per isomorphism class on exactly n vertices, sorted
/// by canonical graph6. Built by adding a vertex to every class on n-1
/// vertices in all possible ways.
std::vector<Graph> all_graphs(int n);
/// Classes on 0..max_n vertices, smallest first.
std::vector<Graph> all_graphs_up_to(int max_n);

/// Deterministic Fisher-Yates shuffle driven by unit_draw.
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

struct PlantSpec {
  PatternId pattern = PatternId::Kite;
  int n = 0;
  /// One target per pattern vertex; empty means all singletons.
  std::vector<int> bag_sizes;
  double noise = 0.0;
  std::uint64_t seed = 0;
  /// H2 only: X4 must be a singleton and is joined to every vertex of X2
  /// and X6, and the leaves sit on the ends of the X2 and X6 paths. This is
  /// the shape of models that have no small counterpart.
  bool complete_centre = false;
};

/// Host graph with a planted model: path-shaped bags, one random edge per
/// pattern edge, spare vertices hung off random earlier vertices, then
/// noise edges only where they cannot join bags of non-adjacent pattern
/// vertices. Vertex ids are shuffled.
std::pair<Graph, Model> plant_model(const PlantSpec& spec);

/// Random DCS instance: gnp host on 4..max_n vertices, k in {2, 3, 4} and
/// terminal sets of 1..5 vertices drawn from a shuffled vertex order.
DcsInstance random_dcs_instance(std::uint64_t seed, int max_n = 10);

struct RunRecord {
  std::size_t index = 0;
  std::string graph6;
  std::string detector;  // yes | no
  std::string oracle;    // yes | no | budget_exceeded | skipped
  std::string status;    // pass | fail | skip
  std::string note;
  double seconds = 0.0;
};

struct RunReport {
  std::string name;
  std::vector<RunRecord> records;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;

  void add(RunRecord r);
  std::size_t total() const { return records.size(); }
  /// Line-delimited records followed by a summary line. Timings are only
  /// written when requested, so the default text is reproducible.
  std::string to_jsonl(bool with_timing = false) const;
};

struct DiffOptions {
  DetectOptions detect;
  OracleBudget budget;
  /// Also run minimize_model and the lemma checks on every yes model.
  bool lemma_checks = false;
};

/// Runs the detector and the oracle on every graph; budget-exceeded oracle
/// calls are recorded as skips.
RunReport run_differential(PatternId id, const std::vector<Graph>& corpus, const DiffOptions& opts,
                           const std::string& name);

/// Empty string when every lemma check passes on minimize_model(m).
std::string lemma_violations(const Graph& g, const Model& m);

}  // namespace imd
