#include "imd/model.hpp"

#include <algorithm>
#include <deque>

#include "imd/errors.hpp"
#include "imd/graph_io.hpp"

namespace imd {
namespace {

std::string label_str(int y) { return std::to_string(y + 1); }

void check_shape(const Graph& g, const Model& m) {
  if (m.bags.size() != static_cast<std::size_t>(m.pattern.order()))
    throw InputError("model has " + std::to_string(m.bags.size()) + " bags but pattern has " +
                     std::to_string(m.pattern.order()) + " vertices");
  for (const auto& b : m.bags) g.check_set(b);
}

void require_minimal(const Graph& g, const Model& m) {
  if (!verify_model(g, m)) throw PreconditionError("lemma check needs a valid model");
  if (!is_bag_minimal(g, m)) throw PreconditionError("lemma check needs a bag-minimal model");
}

LemmaReport fail(int y, int witness, std::string msg) { return {false, y, witness, std::move(msg)}; }

bool is_attachment_unique(const Graph& g, const Model& m, int y, int z, int v) {
  VertexSet att = attachments(g, m, y, z);
  return att.count() == 1 && att.contains(v);
}

}  // namespace

Model Model::for_pattern(PatternId id, std::vector<VertexSet> bags) {
  const auto& p = imd::pattern(id);
  return Model{p.name, p.graph, std::move(bags)};
}

Model Model::empty(PatternId id, int n) {
  const auto& p = imd::pattern(id);
  return Model{p.name, p.graph, std::vector<VertexSet>(static_cast<std::size_t>(p.order()), VertexSet(n))};
}

int Model::total_size() const {
  int t = 0;
  for (const auto& b : bags) t += b.count();
  return t;
}

ModelReport verify_model(const Graph& g, const Model& m) {
  check_shape(g, m);
  using C = ModelReport::Clause;
  const int k = m.pattern.order();
  for (int y = 0; y < k; ++y)
    if (m.bags[y].empty()) return {C::Empty, y, -1, -1, "bag " + label_str(y) + " is empty"};
  for (int y = 0; y < k; ++y)
    for (int z = y + 1; z < k; ++z)
      if (m.bags[y].intersects(m.bags[z])) {
        int w = (m.bags[y] & m.bags[z]).first();
        return {C::Overlap, y, z, w,
                "bags " + label_str(y) + " and " + label_str(z) + " share vertex " + std::to_string(w)};
      }
  for (int y = 0; y < k; ++y)
    if (!is_connected_set(g, m.bags[y])) return {C::Disconnected, y, -1, -1, "bag " + label_str(y) + " is not connected"};
  for (int y = 0; y < k; ++y) {
    VertexSet reach = closed_neighborhood(g, m.bags[y]);
    for (int z = y + 1; z < k; ++z) {
      bool adj = reach.intersects(m.bags[z]);
      bool want = m.pattern.adjacent(y, z);
      if (adj == want) continue;
      if (want)
        return {C::MissingEdge, y, z, -1,
                "bags " + label_str(y) + " and " + label_str(z) + " are not adjacent but " + label_str(y) +
                    label_str(z) + " is a pattern edge"};
      int w = (reach & m.bags[z]).first();
      return {C::ExtraEdge, y, z, w,
              "bags " + label_str(y) + " and " + label_str(z) + " are adjacent (via " + std::to_string(w) +
                  ") but " + label_str(y) + label_str(z) + " is not a pattern edge"};
    }
  }
  return {};
}

Model minimize_model(const Graph& g, const Model& m) {
  if (auto r = verify_model(g, m); !r) throw InputError("cannot minimize an invalid model: " + r.message);
  Model cur = m;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t y = 0; y < cur.bags.size(); ++y) {
      for (int v : cur.bags[y].to_vector()) {
        if (cur.bags[y].count() == 1) break;
        cur.bags[y].erase(v);
        if (verify_model(g, cur)) {
          changed = true;
        } else {
          cur.bags[y].insert(v);
        }
      }
    }
  }
  return cur;
}

bool is_bag_minimal(const Graph& g, const Model& m) {
  Model cur = m;
  for (std::size_t y = 0; y < cur.bags.size(); ++y) {
    if (cur.bags[y].count() == 1) continue;
    for (int v : m.bags[y]) {
      cur.bags[y].erase(v);
      bool ok = static_cast<bool>(verify_model(g, cur));
      cur.bags[y].insert(v);
      if (ok) return false;
    }
  }
  return true;
}

Graph bag_quotient(const Graph& g, const Model& m) {
  check_shape(g, m);
  const int k = m.pattern.order();
  std::vector<Edge> edges;
  for (int y = 0; y < k; ++y) {
    VertexSet reach = closed_neighborhood(g, m.bags[y]);
    for (int z = y + 1; z < k; ++z)
      if (reach.intersects(m.bags[z])) edges.emplace_back(y, z);
  }
  return Graph::from_edges(k, edges);
}

VertexSet attachments(const Graph& g, const Model& m, int y, int z) {
  VertexSet out(g.order());
  for (int v : m.bags.at(y))
    if (g.neighbors(v).intersects(m.bags.at(z))) out.insert(v);
  return out;
}

LemmaReport check_leaf_lemma(const Graph& g, const Model& m) {
  require_minimal(g, m);
  const int k = m.pattern.order();
  for (int y = 0; y < k; ++y) {
    const VertexSet& bag = m.bags[y];
    if (bag.count() == 1) continue;
    std::vector<int> tree_degree(static_cast<std::size_t>(g.order()), 0);
    VertexSet seen(g.order());
    std::deque<int> queue{bag.first()};
    seen.insert(bag.first());
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v) & bag) {
        if (seen.contains(w)) continue;
        seen.insert(w);
        ++tree_degree[v];
        ++tree_degree[w];
        queue.push_back(w);
      }
    }
    VertexSet nh = m.pattern.neighbors(y);
    int leaves = 0;
    for (int v : bag) {
      if (tree_degree[v] != 1) continue;
      ++leaves;
      bool unique_somewhere = false;
      for (int z : nh)
        if (is_attachment_unique(g, m, y, z, v)) unique_somewhere = true;
      if (!unique_somewhere)
        return fail(y, v, "leaf " + std::to_string(v) + " of bag " + label_str(y) + " is not a unique attachment");
    }
    if (leaves > nh.count())
      return fail(y, -1, "bag " + label_str(y) + " spanning tree has " + std::to_string(leaves) + " leaves");
  }
  return {};
}

LemmaReport check_degree2_bag_is_path(const Graph& g, const Model& m) {
  require_minimal(g, m);
  const int k = m.pattern.order();
  for (int y = 0; y < k; ++y) {
    if (m.pattern.degree(y) != 2) continue;
    const VertexSet& bag = m.bags[y];
    if (bag.count() == 1) continue;
    std::vector<int> ends;
    int edge_twice = 0;
    for (int v : bag) {
      int d = (g.neighbors(v) & bag).count();
      if (d > 2) return fail(y, v, "bag " + label_str(y) + " has a vertex of degree " + std::to_string(d));
      if (d == 1) ends.push_back(v);
      edge_twice += d;
    }
    if (edge_twice / 2 != bag.count() - 1 || ends.size() != 2)
      return fail(y, -1, "bag " + label_str(y) + " does not induce a path");
    auto nh = m.pattern.neighbors(y).to_vector();
    bool straight = is_attachment_unique(g, m, y, nh[0], ends[0]) && is_attachment_unique(g, m, y, nh[1], ends[1]);
    bool crossed = is_attachment_unique(g, m, y, nh[0], ends[1]) && is_attachment_unique(g, m, y, nh[1], ends[0]);
    if (!straight && !crossed)
      return fail(y, -1, "ends of bag " + label_str(y) + " are not the unique attachments");
  }
  return {};
}

LemmaReport check_degree1_singleton(const Graph& g, const Model& m) {
  require_minimal(g, m);
  for (int y = 0; y < m.pattern.order(); ++y)
    if (m.pattern.degree(y) == 1 && m.bags[y].count() != 1)
      return fail(y, -1, "bag " + label_str(y) + " of a degree-1 pattern vertex has " +
                             std::to_string(m.bags[y].count()) + " vertices");
  return {};
}

nlohmann::json model_to_json(const Model& m) {
  nlohmann::json j;
  j["pattern"] = m.pattern_name;
  bool custom = true;
  for (PatternId id : kAllPatterns)
    if (pattern(id).name == m.pattern_name && pattern(id).graph == m.pattern) custom = false;
  if (custom) {
    j["pattern"] = "custom";
    j["pattern_graph6"] = to_graph6(m.pattern);
  }
  nlohmann::json bags = nlohmann::json::object();
  for (std::size_t y = 0; y < m.bags.size(); ++y) bags[std::to_string(y + 1)] = m.bags[y].to_vector();
  j["bags"] = std::move(bags);
  return j;
}

Model model_from_json(const nlohmann::json& j, int host_order) {
  if (!j.is_object() || !j.contains("pattern") || !j.contains("bags") || !j["bags"].is_object())
    throw InputError("model JSON needs \"pattern\" and an object \"bags\"");
  Model m;
  std::string name = j["pattern"].get<std::string>();
  if (name == "custom") {
    if (!j.contains("pattern_graph6")) throw InputError("custom model needs \"pattern_graph6\"");
    m.pattern_name = "custom";
    m.pattern = parse_graph6(j["pattern_graph6"].get<std::string>());
  } else {
    const auto& p = pattern(parse_pattern_name(name));
    m.pattern_name = p.name;
    m.pattern = p.graph;
  }
  const int k = m.pattern.order();
  m.bags.assign(static_cast<std::size_t>(k), VertexSet(host_order));
  for (auto it = j["bags"].begin(); it != j["bags"].end(); ++it) {
    int label = 0;
    try {
      std::size_t used = 0;
      label = std::stoi(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("bag key '" + it.key() + "' is not a pattern label");
    }
    if (label < 1 || label > k) throw InputError("unknown pattern vertex " + it.key());
    for (const auto& v : it.value()) {
      int x = v.get<int>();
      if (x < 0 || x >= host_order)
        throw InputError("bag " + it.key() + " vertex " + std::to_string(x) + " out of range");
      m.bags[label - 1].insert(x);
    }
  }
  return m;
}

}  // namespace imd
