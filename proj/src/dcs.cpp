#include "imd/dcs.hpp"

#include <set>

#include "imd/errors.hpp"

namespace imd {
namespace {

class DcsSearch {
 public:
  DcsSearch(const Graph& g, const VertexSet& allowed, const std::vector<VertexSet>& terminals, const DcsOptions& opts)
      : g_(g), allowed_(allowed), sets_(terminals), opts_(opts), used_(g.order()),
        forbidden_(terminals.size(), VertexSet(g.order())) {
    for (const auto& z : terminals) used_ |= z;
  }

  std::optional<std::vector<VertexSet>> run() {
    if (search()) return sets_;
    return std::nullopt;
  }

 private:
  bool search() {
    if (++nodes_ > opts_.node_limit)
      throw ResourceLimitError("disjoint connected subgraphs search exceeded " + std::to_string(opts_.node_limit) +
                               " nodes");
    const VertexSet free = allowed_ - used_;
    int best = -1;
    VertexSet best_cand;
    int best_size = 0;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      const VertexSet& s = sets_[i];
      if (s.empty()) continue;
      VertexSet src(g_.order());
      src.insert(s.first());
      VertexSet piece = reachable_within(g_, s, src);
      if (piece == s) continue;
      VertexSet avail = free - forbidden_[i];
      if (!s.is_subset_of(reachable_within(g_, s | avail, src))) return false;
      VertexSet cand = open_neighborhood(g_, piece) & avail;
      int size = cand.count();
      if (best < 0 || size < best_size) {
        best = static_cast<int>(i);
        best_cand = std::move(cand);
        best_size = size;
      }
    }
    if (best < 0) return true;
    VertexSet& forb = forbidden_[best];
    std::vector<int> tried;
    bool found = false;
    for (int w : best_cand) {
      sets_[best].insert(w);
      used_.insert(w);
      if (search()) {
        found = true;
        break;
      }
      sets_[best].erase(w);
      used_.erase(w);
      forb.insert(w);
      tried.push_back(w);
    }
    for (int w : tried) forb.erase(w);
    return found;
  }

  const Graph& g_;
  const VertexSet& allowed_;
  std::vector<VertexSet> sets_;
  DcsOptions opts_;
  VertexSet used_;
  std::vector<VertexSet> forbidden_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

void DcsInstance::validate() const {
  if (terminals.size() < 2) throw InputError("disjoint connected subgraphs needs at least two terminal sets");
  VertexSet seen(graph.order());
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    const auto& z = terminals[i];
    if (z.universe() != graph.order()) throw InputError("terminal set universe does not match the graph");
    if (z.empty()) throw InputError("terminal set " + std::to_string(i + 1) + " is empty");
    if (z.intersects(seen)) throw InputError("terminal sets overlap at vertex " + std::to_string((z & seen).first()));
    seen |= z;
  }
}

std::optional<std::vector<VertexSet>> solve_dcs_within(const Graph& g, const VertexSet& allowed,
                                                       const std::vector<VertexSet>& terminals,
                                                       const DcsOptions& opts) {
  g.check_set(allowed);
  VertexSet seen(g.order());
  for (const auto& z : terminals) {
    g.check_set(z);
    if (!z.is_subset_of(allowed)) throw InputError("terminal outside the allowed vertex set");
    if (z.intersects(seen)) throw InputError("terminal sets overlap");
    seen |= z;
  }
  return DcsSearch(g, allowed, terminals, opts).run();
}

std::vector<VertexSet> prune_dcs_sets(const Graph& g, const std::vector<VertexSet>& terminals,
                                      std::vector<VertexSet> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v : sets[i].to_vector()) {
        if (terminals[i].contains(v)) continue;
        sets[i].erase(v);
        if (is_connected_set(g, sets[i])) {
          changed = true;
        } else {
          sets[i].insert(v);
        }
      }
    }
  }
  return sets;
}

std::optional<DcsSolution> solve_dcs(const DcsInstance& inst, const DcsOptions& opts) {
  inst.validate();
  auto sets = solve_dcs_within(inst.graph, inst.graph.all_vertices(), inst.terminals, opts);
  if (!sets) return std::nullopt;
  return DcsSolution{std::move(*sets)};
}

std::optional<DcsSolution> solve_dcs_minimal(const DcsInstance& inst, const DcsOptions& opts) {
  auto sol = solve_dcs(inst, opts);
  if (!sol) return sol;
  sol->sets = prune_dcs_sets(inst.graph, inst.terminals, std::move(sol->sets));
  return sol;
}

bool is_dcs_solution(const DcsInstance& inst, const DcsSolution& sol) {
  if (sol.sets.size() != inst.terminals.size()) return false;
  VertexSet seen(inst.graph.order());
  for (std::size_t i = 0; i < sol.sets.size(); ++i) {
    const auto& s = sol.sets[i];
    if (s.universe() != inst.graph.order()) return false;
    if (!inst.terminals[i].is_subset_of(s)) return false;
    if (!is_connected_set(inst.graph, s)) return false;
    if (s.intersects(seen)) return false;
    seen |= s;
  }
  return true;
}

namespace {

class LinkedSearch {
 public:
  LinkedSearch(const Graph& g, const VertexSet& allowed, const std::vector<std::pair<int, int>>& pairs,
               const DcsOptions& opts, LinkedStats* stats)
      : g_(g), allowed_(allowed), pairs_(pairs), opts_(opts), stats_(stats) {}

  std::optional<std::vector<VertexSet>> run(std::vector<VertexSet> z) {
    if (!relaxed(z)) return std::nullopt;
    return level(0, z);
  }

 private:
  bool relaxed(const std::vector<VertexSet>& z) {
    if (stats_) ++stats_->dcs_calls;
    return solve_dcs_within(g_, allowed_, z, opts_).has_value();
  }

  std::optional<std::vector<VertexSet>> level(std::size_t idx, std::vector<VertexSet>& z) {
    if (idx == pairs_.size()) {
      for (const auto& s : z)
        if (s.empty()) return std::nullopt;
      if (stats_) ++stats_->dcs_calls;
      return solve_dcs_within(g_, allowed_, z, opts_);
    }
    auto [i, j] = pairs_[idx];
    if (!z[i].empty() && open_neighborhood(g_, z[i]).intersects(z[j])) return level(idx + 1, z);

    VertexSet others_i(g_.order());
    VertexSet others_j(g_.order());
    for (std::size_t l = 0; l < z.size(); ++l) {
      if (static_cast<int>(l) != i) others_i |= z[l];
      if (static_cast<int>(l) != j) others_j |= z[l];
    }
    VertexSet room_i = allowed_ - others_i;
    VertexSet room_j = allowed_ - others_j;
    if (!z[i].empty()) room_i = reachable_within(g_, room_i, z[i]);
    if (!z[j].empty()) room_j = reachable_within(g_, room_j, z[j]);

    for (int p : room_i) {
      for (int q : g_.neighbors(p) & room_j) {
        if (z[i].contains(p) && z[j].contains(q)) continue;
        std::vector<VertexSet> next = z;
        next[i].insert(p);
        next[j].insert(q);
        auto key = std::make_pair(idx, next);
        if (failed_.count(key)) {
          if (stats_) ++stats_->memo_hits;
          continue;
        }
        if (relaxed(next)) {
          if (auto sol = level(idx + 1, next)) return sol;
        }
        failed_.insert(std::move(key));
      }
    }
    return std::nullopt;
  }

  const Graph& g_;
  const VertexSet& allowed_;
  const std::vector<std::pair<int, int>>& pairs_;
  DcsOptions opts_;
  LinkedStats* stats_;
  std::set<std::pair<std::size_t, std::vector<VertexSet>>> failed_;
};

}  // namespace

std::optional<std::vector<VertexSet>> solve_linked_dcs(const Graph& g, const VertexSet& allowed,
                                                       std::vector<VertexSet> terminals,
                                                       const std::vector<std::pair<int, int>>& pairs,
                                                       const DcsOptions& opts, LinkedStats* stats) {
  g.check_set(allowed);
  for (auto [i, j] : pairs)
    if (i < 0 || j < 0 || i == j || i >= static_cast<int>(terminals.size()) || j >= static_cast<int>(terminals.size()))
      throw InputError("bad required pair");
  return LinkedSearch(g, allowed, pairs, opts, stats).run(std::move(terminals));
}

}  // namespace imd
