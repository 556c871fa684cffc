#include "imd/detectors.hpp"

#include <algorithm>
#include <set>

#include "imd/errors.hpp"
#include "imd/parallel.hpp"

namespace imd {

std::vector<VertexSet> subsets_between(const VertexSet& pool, int lo, int hi) {
  std::vector<int> items = pool.to_vector();
  std::vector<VertexSet> out;
  const int n = static_cast<int>(items.size());
  std::vector<int> idx;
  std::function<void(int, int)> rec = [&](int start, int size) {
    if (static_cast<int>(idx.size()) == size) {
      VertexSet s(pool.universe());
      for (int i : idx) s.insert(items[i]);
      out.push_back(std::move(s));
      return;
    }
    for (int i = start; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1, size);
      idx.pop_back();
    }
  };
  for (int size = std::max(lo, 0); size <= std::min(hi, n); ++size) rec(0, size);
  return out;
}

namespace {

using Groups = std::vector<VertexSet>;
using Leaf = std::function<std::optional<Groups>(const Groups&)>;

void count_guess(DetectStats* stats) {
  if (stats) stats->guesses.fetch_add(1, std::memory_order_relaxed);
}
void count_dcs(DetectStats* stats, std::uint64_t k = 1) {
  if (stats) stats->dcs_calls.fetch_add(k, std::memory_order_relaxed);
}

std::optional<Groups> linked(const Graph& g, const VertexSet& allowed, Groups z,
                             const std::vector<std::pair<int, int>>& pairs, const DetectOptions& opts,
                             DetectStats* stats) {
  // The groups are pairwise required to touch, so they share a component.
  VertexSet all(g.order());
  for (const auto& s : z) all |= s;
  if (!all.empty()) {
    VertexSet src(g.order());
    src.insert(all.first());
    if (!all.is_subset_of(reachable_within(g, allowed, src))) return std::nullopt;
  }
  LinkedStats ls;
  auto sol = solve_linked_dcs(g, allowed, std::move(z), pairs, opts.dcs, &ls);
  count_dcs(stats, ls.dcs_calls);
  return sol;
}

// One guessed edge: p joins group gi, q joins group gj.
struct EdgeSlot {
  int gi;
  int gj;
  VertexSet pool_i;
  VertexSet pool_j;
};

// Literal enumeration of guessed edges; duplicates within a group are
// allowed, groups must stay pairwise disjoint.
std::optional<Groups> literal_edges(const Graph& g, const std::vector<EdgeSlot>& slots, std::size_t idx,
                                    Groups& groups, const Leaf& leaf) {
  if (idx == slots.size()) return leaf(groups);
  const EdgeSlot& s = slots[idx];
  auto owned_elsewhere = [&](int v, int own) {
    for (std::size_t l = 0; l < groups.size(); ++l)
      if (static_cast<int>(l) != own && groups[l].contains(v)) return true;
    return false;
  };
  for (int p : s.pool_i) {
    if (owned_elsewhere(p, s.gi)) continue;
    for (int q : g.neighbors(p) & s.pool_j) {
      if (owned_elsewhere(q, s.gj)) continue;
      bool had_p = groups[s.gi].contains(p);
      bool had_q = groups[s.gj].contains(q);
      groups[s.gi].insert(p);
      groups[s.gj].insert(q);
      auto r = literal_edges(g, slots, idx + 1, groups, leaf);
      if (!had_p) groups[s.gi].erase(p);
      if (!had_q) groups[s.gj].erase(q);
      if (r) return r;
    }
  }
  return std::nullopt;
}

VertexSet union_of(const Groups& groups, int n) {
  VertexSet u(n);
  for (const auto& s : groups) u |= s;
  return u;
}

std::optional<Model> accept(const Graph& g, Model m) {
  if (verify_model(g, m)) return m;
  return std::nullopt;
}

const std::vector<std::pair<int, int>> kTriangle{{0, 1}, {0, 2}, {1, 2}};
const std::vector<std::pair<int, int>> kK4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

// ---- kite -----------------------------------------------------------------

std::optional<Model> kite_at(const Graph& g, int u, const DetectOptions& opts, DetectStats* stats) {
  const int n = g.order();
  const VertexSet& nu = g.neighbors(u);
  for (int v = 0; v < n; ++v) {
    if (v == u || nu.contains(v)) continue;
    const VertexSet& nv = g.neighbors(v);
    VertexSet pool_a = nu - nv;
    VertexSet pool_b = nv - nu;
    if (pool_a.empty() || pool_b.count() < 2) continue;
    VertexSet closed = closed_neighborhood(g, VertexSet(n, {u, v}));
    VertexSet anchors(n, {u, v});
    auto make_model = [&](const Groups& s) {
      return Model::for_pattern(PatternId::Kite, {VertexSet(n, {u}), s[0], s[1], s[2], VertexSet(n, {v})});
    };
    auto a_sets = subsets_between(pool_a, 1, 3);
    auto b_sets = subsets_between(pool_b, 1, 2);
    for (const auto& A : a_sets)
      for (const auto& B : b_sets)
        for (const auto& C : b_sets) {
          if (B.intersects(C)) continue;
          if (opts.prune && !(B.first() < C.first())) continue;
          count_guess(stats);
          if (opts.prune) {
            VertexSet allowed = (g.all_vertices() - closed) | A | B | C;
            auto sol = linked(g, allowed, {A, B, C}, kTriangle, opts, stats);
            if (sol)
              if (auto m = accept(g, make_model(*sol))) return m;
            continue;
          }
          VertexSet rest = g.all_vertices() - anchors;
          std::vector<EdgeSlot> slots{
              {0, 1, rest - nv, rest - nu},
              {0, 2, rest - nv, rest - nu},
              {1, 2, rest - nu, rest - nu},
          };
          Groups groups{A, B, C};
          Leaf leaf = [&](const Groups& z) -> std::optional<Groups> {
            count_dcs(stats);
            VertexSet allowed = g.all_vertices() - (closed - union_of(z, n)) - anchors;
            auto sol = solve_dcs_within(g, allowed, z, opts.dcs);
            if (sol && verify_model(g, make_model(*sol))) return sol;
            return std::nullopt;
          };
          if (auto sol = literal_edges(g, slots, 0, groups, leaf)) return make_model(*sol);
        }
  }
  return std::nullopt;
}

// ---- F1 -------------------------------------------------------------------

std::optional<Model> f1_at(const Graph& g, int u, const DetectOptions& opts, DetectStats* stats) {
  const int n = g.order();
  const VertexSet& nu = g.neighbors(u);
  auto comps = components_within(g, nu);
  const int c = static_cast<int>(comps.size());
  VertexSet comp_ids(std::max(c, 1));
  for (int i = 0; i < c; ++i) comp_ids.insert(i);
  for (const auto& chosen : subsets_between(comp_ids, 1, std::min(c, 7))) {
    std::vector<VertexSet> parts;
    for (int i : chosen) parts.push_back(comps[i]);
    Quotient q = contract_sets(g, parts);
    const Graph& h = q.graph;
    const int qn = h.order();
    const int qu = q.host_to_quotient[u];
    VertexSet f(qn);
    for (const auto& p : parts) f.insert(q.host_to_quotient[p.first()]);
    const VertexSet& qnu = h.neighbors(qu);

    auto lift = [&](const VertexSet& s) {
      VertexSet out(n);
      for (int x : s) out |= q.quotient_to_host[x];
      return out;
    };
    auto make_model = [&](const Groups& s) {
      return Model::for_pattern(PatternId::F1, {VertexSet(n, {u}), lift(s[0]), lift(s[1]), lift(s[2]), lift(s[3])});
    };

    count_guess(stats);
    if (opts.prune) {
      VertexSet allowed = h.all_vertices() - qnu;
      allowed.erase(qu);
      allowed |= f;
      auto sol = linked(h, allowed, {f, VertexSet(qn), VertexSet(qn), VertexSet(qn)}, kK4, opts, stats);
      if (sol)
        if (auto m = accept(g, make_model(*sol))) return m;
      continue;
    }
    VertexSet rest = h.all_vertices();
    rest.erase(qu);
    VertexSet outside = rest - qnu;
    std::vector<EdgeSlot> slots{
        {0, 1, rest, outside},    {0, 2, rest, outside},    {0, 3, rest, outside},
        {1, 2, outside, outside}, {1, 3, outside, outside}, {2, 3, outside, outside},
    };
    Groups groups{f, VertexSet(qn), VertexSet(qn), VertexSet(qn)};
    Leaf leaf = [&](const Groups& z) -> std::optional<Groups> {
      count_dcs(stats);
      VertexSet allowed = rest - (qnu - union_of(z, qn));
      auto sol = solve_dcs_within(h, allowed, z, opts.dcs);
      if (sol && verify_model(g, make_model(*sol))) return sol;
      return std::nullopt;
    };
    if (auto sol = literal_edges(h, slots, 0, groups, leaf)) return make_model(*sol);
  }
  return std::nullopt;
}

// ---- F2 -------------------------------------------------------------------

std::optional<Model> f2_at(const Graph& g, int u, const DetectOptions& opts, DetectStats* stats) {
  const int n = g.order();
  const VertexSet& nu = g.neighbors(u);
  for (int r : nu) {
    const VertexSet& nr = g.neighbors(r);
    VertexSet anchors(n, {u, r});
    VertexSet pool_s = nu - nr - anchors;
    VertexSet pool_ab = nr - nu - anchors;
    if (pool_s.empty() || pool_ab.count() < 2) continue;
    VertexSet closed = closed_neighborhood(g, anchors);
    auto make_model = [&](const Groups& s) {
      return Model::for_pattern(PatternId::F2, {VertexSet(n, {u}), VertexSet(n, {r}), s[0], s[1], s[2]});
    };
    auto s_sets = subsets_between(pool_s, 1, 2);
    auto ab_sets = subsets_between(pool_ab, 1, 2);
    for (const auto& S : s_sets)
      for (const auto& A : ab_sets)
        for (const auto& B : ab_sets) {
          if (A.intersects(B)) continue;
          if (opts.prune && !(A.first() < B.first())) continue;
          count_guess(stats);
          if (opts.prune) {
            VertexSet allowed = (g.all_vertices() - closed) | S | A | B;
            auto sol = linked(g, allowed, {A, B, S}, kTriangle, opts, stats);
            if (sol)
              if (auto m = accept(g, make_model(*sol))) return m;
            continue;
          }
          VertexSet rest = g.all_vertices() - anchors;
          std::vector<EdgeSlot> slots{
              {0, 2, rest - nu, rest - nr},
              {1, 2, rest - nu, rest - nr},
              {0, 1, rest - nu, rest - nu},
          };
          Groups groups{A, B, S};
          Leaf leaf = [&](const Groups& z) -> std::optional<Groups> {
            count_dcs(stats);
            VertexSet allowed = g.all_vertices() - (closed - union_of(z, n)) - anchors;
            auto sol = solve_dcs_within(g, allowed, z, opts.dcs);
            if (sol && verify_model(g, make_model(*sol))) return sol;
            return std::nullopt;
          };
          if (auto sol = literal_edges(g, slots, 0, groups, leaf)) return make_model(*sol);
        }
  }
  return std::nullopt;
}

using AnchorFn = std::optional<Model> (*)(const Graph&, int, const DetectOptions&, DetectStats*);

std::optional<Model> over_anchors(const Graph& g, AnchorFn fn, const DetectOptions& opts, DetectStats* stats) {
  std::function<std::optional<Model>(int)> task = [&](int u) { return fn(g, u, opts, stats); };
  return first_success<Model>(g.order(), opts.jobs, task);
}

}  // namespace

std::optional<Model> detect_kite(const Graph& g, const DetectOptions& opts, DetectStats* stats) {
  return over_anchors(g, kite_at, opts, stats);
}

std::optional<Model> detect_f1(const Graph& g, const DetectOptions& opts, DetectStats* stats) {
  return over_anchors(g, f1_at, opts, stats);
}

std::optional<Model> detect_f2(const Graph& g, const DetectOptions& opts, DetectStats* stats) {
  return over_anchors(g, f2_at, opts, stats);
}

std::optional<Model> detect(PatternId id, const Graph& g, const DetectOptions& opts, DetectStats* stats) {
  switch (id) {
    case PatternId::Kite: return detect_kite(g, opts, stats);
    case PatternId::F1: return detect_f1(g, opts, stats);
    case PatternId::F2: return detect_f2(g, opts, stats);
    case PatternId::H2: return detect_h2(g, opts, stats);
  }
  throw InputError("unknown pattern");
}

bool detect_h_plus_path(const Graph& g, const BaseDetector& base, int t, VertexSet* witness) {
  if (t < 1) throw InputError("path length t must be positive");
  std::set<VertexSet> found;
  std::vector<int> path;
  std::function<void(int, const VertexSet&)> grow = [&](int v, const VertexSet& forbid) {
    path.push_back(v);
    if (static_cast<int>(path.size()) == t) {
      if (path.front() <= path.back()) found.insert(VertexSet::of(g.order(), path));
    } else {
      VertexSet next = forbid | g.neighbors(v);
      next.insert(v);
      for (int w : g.neighbors(v) - forbid) grow(w, next);
    }
    path.pop_back();
  };
  for (int s = 0; s < g.order(); ++s) grow(s, VertexSet(g.order()));
  for (const auto& s : found) {
    Subgraph rest = remove_vertices(g, closed_neighborhood(g, s));
    if (base(rest.graph)) {
      if (witness) *witness = s;
      return true;
    }
  }
  return false;
}

}  // namespace imd
