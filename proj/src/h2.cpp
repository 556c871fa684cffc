#include "imd/h2.hpp"

#include <functional>

#include "imd/errors.hpp"
#include "imd/parallel.hpp"

namespace imd {

bool is_valid_frame(const Graph& g, const Frame& f) {
  auto v = f.as_array();
  for (int x : v)
    if (x < 0 || x >= g.order()) return false;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      if (v[i] == v[j]) return false;
      bool want = (i == 0 && j == 1) || (i == 2 && j == 3) || (i == 4 && j == 5) || (i == 6 && j == 7);
      if (g.adjacent(v[i], v[j]) != want) return false;
    }
  return true;
}

VertexSet f_reduced_vertices(const Graph& g, const Frame& f) {
  if (!is_valid_frame(g, f)) throw InputError("invalid frame");
  const int n = g.order();
  VertexSet gone = closed_neighborhood(g, VertexSet(n, {f.x1, f.x3, f.x5, f.b1, f.b2, f.x7}));
  gone.erase(f.a1);
  gone.erase(f.a2);
  return g.all_vertices() - gone;
}

VertexSet reversed_f_reduced_vertices(const Graph& g, const Frame& f) {
  if (!is_valid_frame(g, f)) throw InputError("invalid frame");
  const int n = g.order();
  VertexSet gone = closed_neighborhood(g, VertexSet(n, {f.x1, f.x3, f.x5, f.a1, f.a2, f.x7}));
  gone.erase(f.b1);
  gone.erase(f.b2);
  return g.all_vertices() - gone;
}

Subgraph f_reduced(const Graph& g, const Frame& f) { return induced_subgraph(g, f_reduced_vertices(g, f)); }

Subgraph reversed_f_reduced(const Graph& g, const Frame& f) {
  return induced_subgraph(g, reversed_f_reduced_vertices(g, f));
}

std::optional<int> find_centre(const Graph& g, const Path& p, const Path& q) {
  if (!is_induced_path(g, p) || !is_induced_path(g, q)) throw InputError("find_centre needs induced paths");
  if (p.size() < 5 || q.size() < 5) throw InputError("find_centre needs paths on at least five vertices");
  if (!are_mutually_induced(g, p, q)) throw InputError("find_centre needs mutually induced paths");
  const int n = g.order();
  VertexSet ends(n, {p.front(), p.back(), q.front(), q.back()});
  VertexSet both = p.as_set(n) | q.as_set(n);
  VertexSet inner = both - ends;
  for (int c = 0; c < n; ++c) {
    if (both.contains(c)) continue;
    const VertexSet& nc = g.neighbors(c);
    if (inner.is_subset_of(nc) && !nc.intersects(ends)) return c;
  }
  return std::nullopt;
}

namespace {

Model h2_model(int n, int x1, const VertexSet& x2, int x3, const VertexSet& x4, int x5, const VertexSet& x6, int x7) {
  return Model::for_pattern(PatternId::H2,
                            {VertexSet(n, {x1}), x2, VertexSet(n, {x3}), x4, VertexSet(n, {x5}), x6, VertexSet(n, {x7})});
}

// Component of G[avail - {x5, x7}] seeing x4, x5 and x7, lowest first.
std::optional<VertexSet> sixth_bag(const Graph& g, const VertexSet& avail, int x4, int x5, int x7) {
  VertexSet rest = avail;
  rest.erase(x5);
  rest.erase(x7);
  rest &= reachable_within(g, rest, g.neighbors(x4));
  for (const auto& d : components_within(g, rest)) {
    VertexSet around = open_neighborhood(g, d);
    if (around.contains(x4) && around.contains(x5) && around.contains(x7)) return d;
  }
  return std::nullopt;
}

std::optional<Model> small_pruned_at(const Graph& g, int a1, const DetectOptions&, DetectStats* stats) {
  const int n = g.order();
  std::vector<VertexSet> x2_options{VertexSet(n, {a1})};
  for (int a2 : g.neighbors(a1))
    if (a2 > a1) x2_options.push_back(VertexSet(n, {a1, a2}));
  for (const auto& x2 : x2_options) {
    VertexSet n2 = open_neighborhood(g, x2);
    for (int x4 : n2) {
      VertexSet far4 = g.all_vertices() - closed_neighborhood(g, VertexSet(n, {x4}));
      VertexSet pool1 = n2 & far4;
      for (int x1 : pool1) {
        for (int x3 : pool1 - g.neighbors(x1)) {
          if (x3 <= x1) continue;
          if (stats) stats->guesses.fetch_add(1, std::memory_order_relaxed);
          VertexSet avail = g.all_vertices() - closed_neighborhood(g, x2 | VertexSet(n, {x1, x3}));
          VertexSet reach = reachable_within(g, avail, g.neighbors(x4));
          VertexSet pool5 = reach & far4;
          for (int x5 : pool5)
            for (int x7 : pool5 - g.neighbors(x5)) {
              if (x7 <= x5) continue;
              if (auto d = sixth_bag(g, avail, x4, x5, x7)) {
                Model m = h2_model(n, x1, x2, x3, VertexSet(n, {x4}), x5, *d, x7);
                if (verify_model(g, m)) return m;
              }
            }
        }
      }
    }
  }
  return std::nullopt;
}

// Literal enumeration: x1, x3, x4, x5, x7, then X2 = {a1} or an edge a1a2.
std::optional<Model> small_literal_at(const Graph& g, int x1, const DetectOptions&, DetectStats* stats) {
  const int n = g.order();
  for (int x3 = 0; x3 < n; ++x3)
    for (int x4 = 0; x4 < n; ++x4)
      for (int x5 = 0; x5 < n; ++x5)
        for (int x7 = 0; x7 < n; ++x7) {
          VertexSet singles = VertexSet::of(n, std::array<int, 5>{x1, x3, x4, x5, x7});
          if (singles.count() != 5) continue;
          // Among the singleton bags no pair is adjacent in the pattern.
          bool clash = false;
          for (int v : singles)
            if (g.neighbors(v).intersects(singles)) clash = true;
          if (clash) continue;
          for (int a1 = 0; a1 < n; ++a1)
            for (int a2 = a1; a2 < n; ++a2) {
              if (a2 != a1 && !g.adjacent(a1, a2)) continue;
              VertexSet x2(n, {a1, a2});
              if (x2.intersects(singles)) continue;
              if (stats) stats->guesses.fetch_add(1, std::memory_order_relaxed);
              VertexSet n2 = open_neighborhood(g, x2);
              if (!n2.contains(x1) || !n2.contains(x3) || !n2.contains(x4) || n2.contains(x5) || n2.contains(x7))
                continue;
              VertexSet guessed = singles | x2;
              VertexSet gone = closed_neighborhood(g, VertexSet(n, {x1, x3, a1, a2})) - guessed;
              VertexSet avail = g.all_vertices() - gone - guessed;
              for (const auto& d : components_within(g, avail)) {
                VertexSet around = open_neighborhood(g, d);
                if (!around.contains(x4) || !around.contains(x5) || !around.contains(x7)) continue;
                Model m = h2_model(n, x1, x2, x3, VertexSet(n, {x4}), x5, d, x7);
                if (verify_model(g, m)) return m;
              }
            }
        }
  return std::nullopt;
}

std::optional<Model> try_frame(const Graph& g, const Frame& f, DetectStats* stats) {
  const int n = g.order();
  if (stats) stats->guesses.fetch_add(1, std::memory_order_relaxed);
  auto r = shortest_path_within(g, f_reduced_vertices(g, f), f.a1, f.a2);
  if (!r) return std::nullopt;
  auto rr = shortest_path_within(g, reversed_f_reduced_vertices(g, f), f.b1, f.b2);
  if (!rr) return std::nullopt;
  Path p{{f.x1}};
  p.vertices.insert(p.vertices.end(), r->vertices.begin(), r->vertices.end());
  p.vertices.push_back(f.x3);
  Path q{{f.x5}};
  q.vertices.insert(q.vertices.end(), rr->vertices.begin(), rr->vertices.end());
  q.vertices.push_back(f.x7);
  if (!are_mutually_induced(g, p, q)) return std::nullopt;
  VertexSet rs = r->as_set(n);
  VertexSet rrs = rr->as_set(n);
  VertexSet cand = open_neighborhood(g, rs) & open_neighborhood(g, rrs);
  cand -= closed_neighborhood(g, VertexSet(n, {f.x1, f.x3, f.x5, f.x7}));
  cand -= rs | rrs;
  for (int c : cand) {
    Model m = h2_model(n, f.x1, rs, f.x3, VertexSet(n, {c}), f.x5, rrs, f.x7);
    if (verify_model(g, m)) return m;
  }
  return std::nullopt;
}

std::optional<Model> frames_pruned_at(const Graph& g, int x1, const DetectOptions&, DetectStats* stats) {
  const int n = g.order();
  std::vector<Edge> oriented;
  for (auto [u, v] : g.edges()) {
    oriented.emplace_back(u, v);
    oriented.emplace_back(v, u);
  }
  std::sort(oriented.begin(), oriented.end());
  auto closed = [&](std::initializer_list<int> vs) { return closed_neighborhood(g, VertexSet(n, vs)); };
  for (int a1 : g.neighbors(x1)) {
    VertexSet block1 = closed({x1, a1});
    for (auto [a2, x3] : oriented) {
      if (x3 <= x1 || block1.contains(a2) || block1.contains(x3)) continue;
      VertexSet p_side = g.all_vertices() - (closed({x1, x3}) - VertexSet(n, {a1, a2}));
      if (!reachable_within(g, p_side, VertexSet(n, {a1})).contains(a2)) continue;
      VertexSet block2 = block1 | closed({a2, x3});
      for (auto [x5, b1] : oriented) {
        if (x5 <= x1 || block2.contains(x5) || block2.contains(b1)) continue;
        VertexSet block3 = block2 | closed({x5, b1});
        for (auto [b2, x7] : oriented) {
          if (x7 <= x5 || block3.contains(b2) || block3.contains(x7)) continue;
          if (auto m = try_frame(g, Frame{x1, a1, a2, x3, x5, b1, b2, x7}, stats)) return m;
        }
      }
    }
  }
  return std::nullopt;
}

// Raw 8-tuples with exactly the four frame edges.
std::optional<Model> frames_literal_at(const Graph& g, int x1, const DetectOptions&, DetectStats* stats) {
  const int n = g.order();
  std::array<int, 8> t{};
  t[0] = x1;
  // Position i must be adjacent to exactly its frame partner among 0..i-1.
  std::function<std::optional<Model>(int)> rec = [&](int i) -> std::optional<Model> {
    if (i == 8) return try_frame(g, Frame{t[0], t[1], t[2], t[3], t[4], t[5], t[6], t[7]}, stats);
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (t[j] == v) ok = false;
        bool want = (i % 2 == 1) && j == i - 1;
        if (ok && g.adjacent(t[j], v) != want) ok = false;
      }
      if (!ok) continue;
      t[i] = v;
      if (auto m = rec(i + 1)) return m;
    }
    return std::nullopt;
  };
  return rec(1);
}

using AnchorFn = std::optional<Model> (*)(const Graph&, int, const DetectOptions&, DetectStats*);

std::optional<Model> over_anchors(const Graph& g, AnchorFn fn, const DetectOptions& opts, DetectStats* stats) {
  std::function<std::optional<Model>(int)> task = [&](int v) { return fn(g, v, opts, stats); };
  return first_success<Model>(g.order(), opts.jobs, task);
}

}  // namespace

std::optional<Model> detect_small_h2_model(const Graph& g, const DetectOptions& opts, DetectStats* stats) {
  return over_anchors(g, opts.prune ? small_pruned_at : small_literal_at, opts, stats);
}

std::optional<Model> detect_h2_frames(const Graph& g, const DetectOptions& opts, DetectStats* stats) {
  return over_anchors(g, opts.prune ? frames_pruned_at : frames_literal_at, opts, stats);
}

std::optional<Model> detect_h2(const Graph& g, const DetectOptions& opts, DetectStats* stats) {
  if (auto m = detect_small_h2_model(g, opts, stats)) {
    if (stats) stats->h2_stage_hit = 1;
    return m;
  }
  if (opts.h2_stage == H2Stage::Small) return std::nullopt;
  if (auto m = detect_h2_frames(g, opts, stats)) {
    if (stats) stats->h2_stage_hit = 2;
    return m;
  }
  return std::nullopt;
}

}  // namespace imd
