#include "imd/oracle.hpp"

#include <functional>

#include "imd/errors.hpp"

namespace imd {
namespace {

struct OutOfNodes {};

void check_host(const Graph& g, const OracleBudget& budget) {
  if (g.order() > budget.max_host_vertices)
    throw ResourceLimitError("host has " + std::to_string(g.order()) + " vertices, oracle cap is " +
                             std::to_string(budget.max_host_vertices));
}

class MinorSearch {
 public:
  MinorSearch(const Graph& g, const Graph& h, const OracleBudget& budget, const std::vector<int>& caps)
      : g_(g), h_(h), n_(g.order()), k_(h.order()), budget_(budget), caps_(caps),
        bags_(static_cast<std::size_t>(k_), VertexSet(n_)), bag_nbhd_(bags_), unassigned_(VertexSet::full(n_)) {
    caps_.resize(static_cast<std::size_t>(k_), 0);
    for (int y = 0; y < k_; ++y) {
      VertexSet non(k_);
      for (int z = 0; z < k_; ++z)
        if (z != y && !h_.adjacent(y, z)) non.insert(z);
      non_adjacent_.push_back(non);
    }
    // Interchangeable pattern vertices (same neighbourhood apart from each
    // other): the smaller label must be opened first.
    must_precede_.assign(static_cast<std::size_t>(k_), -1);
    for (int z = 0; z < k_; ++z)
      for (int y = 0; y < z; ++y) {
        VertexSet ny = h_.neighbors(y);
        VertexSet nz = h_.neighbors(z);
        ny.erase(z);
        nz.erase(y);
        if (ny == nz) {
          must_precede_[z] = y;
          break;
        }
      }
  }

  OracleResult run() {
    OracleResult r;
    if (k_ == 0) {
      r.verdict = Verdict::Yes;
      r.model = Model{"custom", h_, {}};
      return r;
    }
    if (k_ > n_) {
      r.verdict = Verdict::No;
      return r;
    }
    try {
      r.verdict = dfs(0) ? Verdict::Yes : Verdict::No;
    } catch (const OutOfNodes&) {
      r.verdict = Verdict::BudgetExceeded;
    }
    r.nodes = nodes_;
    if (r.verdict == Verdict::Yes) r.model = Model{"custom", h_, bags_};
    return r;
  }

 private:
  bool feasible() const {
    int empty_bags = 0;
    std::vector<VertexSet> reach(static_cast<std::size_t>(k_));
    for (int y = 0; y < k_; ++y) {
      VertexSet allowed = unassigned_;
      for (int z : non_adjacent_[y]) allowed -= bag_nbhd_[z];
      if (bags_[y].empty()) {
        ++empty_bags;
        if (allowed.empty()) return false;
        reach[y] = allowed;
        continue;
      }
      if (caps_[y] > 0 && bags_[y].count() >= caps_[y]) allowed.clear();
      VertexSet src(n_);
      src.insert(bags_[y].first());
      reach[y] = reachable_within(g_, allowed | bags_[y], src);
      if (!bags_[y].is_subset_of(reach[y])) return false;
    }
    if (empty_bags > unassigned_.count()) return false;
    for (int y = 0; y < k_; ++y) {
      if (bags_[y].empty()) continue;
      VertexSet around = closed_neighborhood(g_, reach[y]);
      for (int z : h_.neighbors(y))
        if (z > y && !bags_[z].empty() && !around.intersects(reach[z])) return false;
    }
    return true;
  }

  bool complete() const {
    Model m{"custom", h_, bags_};
    return static_cast<bool>(verify_model(g_, m));
  }

  bool dfs(int v) {
    if (++nodes_ > budget_.node_limit) throw OutOfNodes{};
    if (v == n_) return complete();
    if (!feasible()) return false;
    unassigned_.erase(v);
    const VertexSet& nv = g_.neighbors(v);
    for (int y = 0; y < k_; ++y) {
      if (caps_[y] > 0 && bags_[y].count() >= caps_[y]) continue;
      if (must_precede_[y] >= 0 && bags_[y].empty() && bags_[must_precede_[y]].empty()) continue;
      bool clash = false;
      for (int z : non_adjacent_[y])
        if (nv.intersects(bags_[z])) clash = true;
      if (clash) continue;
      bags_[y].insert(v);
      VertexSet saved = bag_nbhd_[y];
      bag_nbhd_[y] |= nv;
      bag_nbhd_[y] -= bags_[y];
      if (dfs(v + 1)) return true;
      bag_nbhd_[y] = std::move(saved);
      bags_[y].erase(v);
    }
    if (dfs(v + 1)) return true;
    unassigned_.insert(v);
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
  int k_;
  OracleBudget budget_;
  std::vector<int> caps_;
  std::vector<VertexSet> bags_;
  std::vector<VertexSet> bag_nbhd_;  // open neighbourhood of each bag
  std::vector<VertexSet> non_adjacent_;
  std::vector<int> must_precede_;
  VertexSet unassigned_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

OracleResult brute_force_induced_minor(const Graph& g, const Graph& h, const OracleBudget& budget,
                                       const std::vector<int>& bag_size_cap) {
  check_host(g, budget);
  if (!bag_size_cap.empty() && bag_size_cap.size() != static_cast<std::size_t>(h.order()))
    throw InputError("bag size caps must match the pattern order");
  return MinorSearch(g, h, budget, bag_size_cap).run();
}

OracleResult brute_force_induced_minor(const Graph& g, PatternId id, const OracleBudget& budget,
                                       const std::vector<int>& bag_size_cap) {
  auto r = brute_force_induced_minor(g, pattern(id).graph, budget, bag_size_cap);
  if (r.model) r.model->pattern_name = pattern(id).name;
  return r;
}

OracleResult brute_force_small_h2(const Graph& g, const OracleBudget& budget) {
  std::vector<int> caps(7, 0);
  caps[1] = 2;
  auto first = brute_force_induced_minor(g, PatternId::H2, budget, caps);
  if (first.verdict == Verdict::Yes) return first;
  caps[1] = 0;
  caps[5] = 2;
  auto second = brute_force_induced_minor(g, PatternId::H2, budget, caps);
  second.nodes += first.nodes;
  if (second.verdict == Verdict::No && first.verdict == Verdict::BudgetExceeded)
    second.verdict = Verdict::BudgetExceeded;
  return second;
}

namespace {

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++count_ > limit_) throw OutOfNodes{};
  }

 private:
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
};

using PathVisitor = std::function<bool(const Path&)>;

// Induced paths of G - blocked whose vertices read: exactly `head`
// non-neighbours of the centre, at least two neighbours, then exactly
// `tail` non-neighbours. The visitor returns true to stop.
class ArmSearch {
 public:
  ArmSearch(const Graph& g, int centre, int head, int tail, NodeCounter& counter)
      : g_(g), nz_(g.neighbors(centre)), centre_(centre), head_(head), tail_(tail), counter_(counter) {}

  bool run(const VertexSet& blocked, const PathVisitor& visit) {
    visit_ = &visit;
    blocked_ = blocked;
    blocked_.insert(centre_);
    path_.vertices.clear();
    for (int s = 0; s < g_.order(); ++s) {
      if (blocked_.contains(s) || nz_.contains(s)) continue;
      if (extend(s, VertexSet(g_.order()), 0, 0)) return true;
    }
    return false;
  }

 private:
  // `forbid` is the closed neighbourhood of every path vertex but the last.
  bool extend(int v, const VertexSet& forbid, int middle, int tail) {
    counter_.tick();
    path_.vertices.push_back(v);
    const int len = static_cast<int>(path_.size());
    if (len > head_) {
      if (nz_.contains(v)) {
        ++middle;
      } else {
        ++tail;
      }
    }
    bool stop = false;
    if (tail == tail_) {
      stop = (*visit_)(path_);
    } else {
      VertexSet next_forbid = forbid | g_.neighbors(v);
      next_forbid.insert(v);
      VertexSet cand = g_.neighbors(v) - blocked_ - forbid;
      for (int w : cand) {
        bool want_nbr;
        if (len < head_) {
          want_nbr = false;
        } else if (tail > 0) {
          want_nbr = false;
        } else if (middle < 2) {
          want_nbr = true;
        } else {
          want_nbr = nz_.contains(w);
        }
        if (nz_.contains(w) != want_nbr) continue;
        if (extend(w, next_forbid, middle, tail)) {
          stop = true;
          break;
        }
      }
    }
    path_.vertices.pop_back();
    return stop;
  }

  const Graph& g_;
  const VertexSet& nz_;
  int centre_;
  int head_;
  int tail_;
  NodeCounter& counter_;
  VertexSet blocked_;
  Path path_;
  const PathVisitor* visit_ = nullptr;
};

// Induced paths from s to t inside G - blocked.
bool induced_paths(const Graph& g, int s, int t, const VertexSet& blocked, NodeCounter& counter,
                   const PathVisitor& visit) {
  if (blocked.contains(s) || blocked.contains(t)) return false;
  Path path;
  std::function<bool(int, const VertexSet&)> go = [&](int v, const VertexSet& forbid) -> bool {
    counter.tick();
    path.vertices.push_back(v);
    bool stop = false;
    if (v == t) {
      stop = visit(path);
    } else {
      VertexSet next_forbid = forbid | g.neighbors(v);
      next_forbid.insert(v);
      for (int w : g.neighbors(v) - blocked - forbid) {
        if (go(w, next_forbid)) {
          stop = true;
          break;
        }
      }
    }
    path.vertices.pop_back();
    return stop;
  };
  return go(s, VertexSet(g.order()));
}

}  // namespace

WindmillResult brute_force_windmill(const Graph& g, const WindmillParams& params, const OracleBudget& budget) {
  params.validate();
  check_host(g, budget);
  NodeCounter counter(budget.node_limit);
  WindmillResult r;
  try {
    for (int z = 0; z < g.order(); ++z) {
      if (g.degree(z) < 4) continue;
      ArmSearch p_arms(g, z, params.a, params.b, counter);
      ArmSearch q_arms(g, z, params.c, params.d, counter);
      std::optional<Path> found_p;
      std::optional<Path> found_q;
      bool hit = p_arms.run(g.empty_set(), [&](const Path& p) {
        VertexSet blocked = closed_neighborhood(g, p.as_set(g.order()));
        bool ok = q_arms.run(blocked, [&](const Path& q) {
          found_q = q;
          return true;
        });
        if (ok) found_p = p;
        return ok;
      });
      if (hit) {
        r.verdict = Verdict::Yes;
        r.witness = WindmillWitness{*found_p, *found_q, z};
        return r;
      }
    }
  } catch (const OutOfNodes&) {
    r.verdict = Verdict::BudgetExceeded;
    return r;
  }
  r.verdict = Verdict::No;
  return r;
}

bool is_induced_cycle(const Graph& g, const Path& cycle) {
  const std::size_t k = cycle.size();
  if (k < 3 || !is_path(g, cycle)) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle.vertices[i], cycle.vertices[j]) != consecutive) return false;
    }
  return true;
}

HoleResult brute_force_hole_through(const Graph& g, int x, int y, const OracleBudget& budget) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) throw InputError("hole search needs two distinct vertices");
  check_host(g, budget);
  NodeCounter counter(budget.node_limit);
  HoleResult r;
  // A hole through x is x followed by an induced path between two
  // non-adjacent neighbours of x (or an edge, for a triangle) avoiding the
  // other neighbours of x.
  VertexSet nx = g.neighbors(x);
  try {
    for (int s : nx)
      for (int t : nx) {
        if (t <= s) continue;
        VertexSet blocked = nx;
        blocked.erase(s);
        blocked.erase(t);
        blocked.insert(x);
        bool hit = induced_paths(g, s, t, blocked, counter, [&](const Path& p) {
          if (!p.as_set(g.order()).contains(y)) return false;
          Path c;
          c.vertices.push_back(x);
          c.vertices.insert(c.vertices.end(), p.vertices.begin(), p.vertices.end());
          r.cycle = c;
          return true;
        });
        if (hit) {
          r.verdict = Verdict::Yes;
          return r;
        }
      }
  } catch (const OutOfNodes&) {
    r.verdict = Verdict::BudgetExceeded;
    return r;
  }
  r.verdict = Verdict::No;
  return r;
}

PathPairResult brute_force_i2dp(const Graph& g, int x1, int y1, int x2, int y2, const OracleBudget& budget) {
  for (int v : {x1, y1, x2, y2}) g.check_vertex(v);
  if (x1 == y1 || x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2 || x2 == y2)
    throw InputError("induced disjoint paths need four distinct terminals");
  check_host(g, budget);
  NodeCounter counter(budget.node_limit);
  PathPairResult r;
  VertexSet other = closed_neighborhood(g, VertexSet(g.order(), {x2, y2}));
  try {
    bool hit = induced_paths(g, x1, y1, other, counter, [&](const Path& p) {
      VertexSet allowed = g.all_vertices() - closed_neighborhood(g, p.as_set(g.order()));
      auto q = shortest_path_within(g, allowed, x2, y2);
      if (!q) return false;
      r.p = p;
      r.q = *q;
      return true;
    });
    r.verdict = hit ? Verdict::Yes : Verdict::No;
  } catch (const OutOfNodes&) {
    r.verdict = Verdict::BudgetExceeded;
  }
  return r;
}

}  // namespace imd
