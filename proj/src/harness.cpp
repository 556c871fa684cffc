#include "imd/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "imd/errors.hpp"
#include "imd/generators.hpp"
#include "imd/graph_io.hpp"

namespace imd {
namespace {

std::vector<int> refine(const Graph& g, std::vector<int> colors) {
  const int n = g.order();
  int classes = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].first = colors[v];
      for (int w : g.neighbors(v)) sig[v].second.push_back(colors[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    int now = static_cast<int>(sorted.size());
    if (now == classes) return colors;
    classes = now;
  }
}

void search(const Graph& g, const std::vector<int>& colors, std::string& best, std::vector<int>& best_perm) {
  const int n = g.order();
  std::vector<int> size(static_cast<std::size_t>(n), 0);
  for (int c : colors) ++size[c];
  int target = -1;
  for (int c = 0; c < n; ++c)
    if (size[c] > 1) {
      target = c;
      break;
    }
  if (target < 0) {
    std::string code = to_graph6(relabel(g, colors));
    if (best.empty() || code > best) {
      best = code;
      best_perm = colors;
    }
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) next[w] = 2 * colors[w] + 1;
    next[v] = 2 * colors[v];
    search(g, refine(g, next), best, best_perm);
  }
}

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() == 0) return g;
  std::string best;
  std::vector<int> perm;
  search(g, refine(g, std::vector<int>(static_cast<std::size_t>(g.order()), 0)), best, perm);
  return relabel(g, perm);
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

namespace {

std::vector<Graph> next_level(const std::vector<Graph>& level, int n) {
  std::map<std::string, Graph> found;
  for (const Graph& base : level) {
    auto old_edges = base.edges();
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<Edge> edges = old_edges;
      for (int v = 0; v < n - 1; ++v)
        if (mask & (1u << v)) edges.emplace_back(v, n - 1);
      Graph c = canonical_form(Graph::from_edges(n, edges));
      found.emplace(to_graph6(c), std::move(c));
    }
  }
  std::vector<Graph> out;
  for (auto& [code, gr] : found) out.push_back(std::move(gr));
  return out;
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  if (n < 0) throw InputError("negative order");
  std::vector<Graph> level{Graph(0)};
  for (int i = 1; i <= n; ++i) level = next_level(level, i);
  return level;
}

std::vector<Graph> all_graphs_up_to(int max_n) {
  std::vector<Graph> out{Graph(0)};
  std::vector<Graph> level{Graph(0)};
  for (int n = 1; n <= max_n; ++n) {
    level = next_level(level, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(unit_draw(rng) * (i + 1));
    std::swap(p[i], p[j]);
  }
  return p;
}

std::pair<Graph, Model> plant_model(const PlantSpec& spec) {
  const PatternGraph& pat = pattern(spec.pattern);
  const int k = pat.order();
  std::vector<int> sizes = spec.bag_sizes.empty() ? std::vector<int>(static_cast<std::size_t>(k), 1) : spec.bag_sizes;
  if (static_cast<int>(sizes.size()) != k) throw InputError("plant: need one bag size per pattern vertex");
  int total = 0;
  for (int s : sizes) {
    if (s < 1) throw InputError("plant: bag sizes must be at least 1");
    total += s;
  }
  if (total > spec.n) throw InputError("plant: bags need " + std::to_string(total) + " vertices but n = " +
                                       std::to_string(spec.n));
  if (!(spec.noise >= 0.0 && spec.noise <= 1.0)) throw InputError("plant: noise outside [0, 1]");
  if (spec.complete_centre && (spec.pattern != PatternId::H2 || sizes[3] != 1))
    throw InputError("plant: a complete centre needs pattern h2 with |X4| = 1");

  std::mt19937_64 rng(spec.seed);
  const int n = spec.n;
  auto pick = [&](int bound) { return static_cast<int>(unit_draw(rng) * bound); };

  // Work in "slot" ids: bags first (in label order), then spare vertices.
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> slots(static_cast<std::size_t>(k));
  int next = 0;
  for (int y = 0; y < k; ++y)
    for (int i = 0; i < sizes[y]; ++i) {
      owner[next] = y;
      slots[y].push_back(next++);
    }
  std::set<Edge> edges;
  auto add = [&](int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); };
  for (int y = 0; y < k; ++y)
    for (std::size_t i = 1; i < slots[y].size(); ++i) add(slots[y][i - 1], slots[y][i]);
  if (spec.complete_centre) {
    // Leaves 1, 3 on the ends of X2 and 5, 7 on the ends of X6.
    add(slots[0][0], slots[1].front());
    add(slots[2][0], slots[1].back());
    add(slots[4][0], slots[5].front());
    add(slots[6][0], slots[5].back());
    for (int y : {1, 5})
      for (int v : slots[y]) add(slots[3][0], v);
  } else {
    for (auto [y, z] : pat.graph.edges()) add(slots[y][pick(sizes[y])], slots[z][pick(sizes[z])]);
  }
  for (int v = total; v < n; ++v) add(v, pick(v));
  auto allowed = [&](int a, int b) {
    int oa = owner[a];
    int ob = owner[b];
    return oa < 0 || ob < 0 || oa == ob || pat.graph.adjacent(oa, ob);
  };
  if (spec.noise > 0.0)
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (unit_draw(rng) < spec.noise && allowed(i, j)) add(i, j);

  std::vector<int> perm = random_permutation(n, rng);
  std::vector<Edge> out_edges;
  for (auto [a, b] : edges) out_edges.emplace_back(perm[a], perm[b]);
  Graph g = Graph::from_edges(n, out_edges);
  std::vector<VertexSet> bags(static_cast<std::size_t>(k), VertexSet(n));
  for (int y = 0; y < k; ++y)
    for (int v : slots[y]) bags[y].insert(perm[v]);
  Model m = Model::for_pattern(spec.pattern, std::move(bags));
  if (auto r = verify_model(g, m); !r) throw std::logic_error("planted model does not verify: " + r.message);
  return {std::move(g), std::move(m)};
}

DcsInstance random_dcs_instance(std::uint64_t seed, int max_n) {
  if (max_n < 4) throw InputError("random DCS instances need max_n >= 4");
  std::mt19937_64 rng(seed);
  auto pick = [&](int bound) { return static_cast<int>(unit_draw(rng) * bound); };
  const int n = 4 + pick(max_n - 3);
  const int k = 2 + pick(3);
  const double p = 0.2 + 0.5 * unit_draw(rng);
  DcsInstance inst{gnp_graph(n, p, rng()), {}};
  auto order = random_permutation(n, rng);
  int used = 0;
  for (int i = 0; i < k; ++i) {
    int cap = std::min(5, n - used - (k - i - 1));
    int size = 1 + pick(cap);
    VertexSet z(n);
    for (int j = 0; j < size; ++j) z.insert(order[used++]);
    inst.terminals.push_back(std::move(z));
  }
  return inst;
}

void RunReport::add(RunRecord r) {
  if (r.status == "pass") {
    ++pass;
  } else if (r.status == "fail") {
    ++fail;
  } else {
    ++skip;
  }
  records.push_back(std::move(r));
}

std::string RunReport::to_jsonl(bool with_timing) const {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["run"] = name;
    j["index"] = r.index;
    j["graph6"] = r.graph6;
    j["detector"] = r.detector;
    j["oracle"] = r.oracle;
    j["status"] = r.status;
    if (!r.note.empty()) j["note"] = r.note;
    if (with_timing) j["seconds"] = r.seconds;
    out += j.dump() + "\n";
  }
  nlohmann::ordered_json s;
  s["run"] = name;
  s["summary"] = {{"total", total()}, {"pass", pass}, {"fail", fail}, {"skip", skip}};
  out += s.dump() + "\n";
  return out;
}

std::string lemma_violations(const Graph& g, const Model& m) {
  Model mm = minimize_model(g, m);
  std::string out;
  if (auto r = check_leaf_lemma(g, mm); !r) out += "leaf: " + r.message + "; ";
  if (auto r = check_degree2_bag_is_path(g, mm); !r) out += "degree2: " + r.message + "; ";
  if (auto r = check_degree1_singleton(g, mm); !r) out += "degree1: " + r.message + "; ";
  return out;
}

RunReport run_differential(PatternId id, const std::vector<Graph>& corpus, const DiffOptions& opts,
                           const std::string& name) {
  RunReport report;
  report.name = name;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    RunRecord rec;
    rec.index = i;
    rec.graph6 = to_graph6(g);
    auto start = std::chrono::steady_clock::now();
    auto model = detect(id, g, opts.detect);
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rec.detector = model ? "yes" : "no";
    if (model && !verify_model(g, *model)) rec.note += "model does not verify; ";
    if (model && opts.lemma_checks) rec.note += lemma_violations(g, *model);
    auto oracle = brute_force_induced_minor(g, id, opts.budget);
    rec.oracle = verdict_name(oracle.verdict);
    if (oracle.verdict == Verdict::BudgetExceeded) {
      rec.status = "skip";
    } else {
      bool agree = (oracle.verdict == Verdict::Yes) == model.has_value();
      rec.status = agree && rec.note.empty() ? "pass" : "fail";
    }
    report.add(std::move(rec));
  }
  return report;
}

}  // namespace imd
