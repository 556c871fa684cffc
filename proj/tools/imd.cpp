#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "imd/dcs.hpp"
#include "imd/detectors.hpp"
#include "imd/errors.hpp"
#include "imd/generators.hpp"
#include "imd/graph_io.hpp"
#include "imd/harness.hpp"
#include "imd/model.hpp"
#include "imd/oracle.hpp"
#include "imd/windmill.hpp"

using namespace imd;
using nlohmann::json;

namespace {

enum Exit { kFound = 0, kNotFound = 1, kUsage = 2, kLimit = 3 };

struct Globals {
  std::string format = "auto";
  std::uint64_t seed = 1;
  int jobs = 1;
  bool json = false;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

GraphFormat format_of(const Globals& gl, const std::string& path) {
  if (gl.format != "auto") return parse_format_name(gl.format);
  return path == "-" ? GraphFormat::Graph6 : format_for_path(path);
}

Graph load(const Globals& gl, const std::string& path) { return parse_graph(slurp(path), format_of(gl, path)); }

std::string encode_line(const Graph& g, GraphFormat f) {
  std::string text = encode_graph(g, f);
  if (text.empty() || text.back() != '\n') text += '\n';
  return text;
}

void save(const Globals& gl, const std::string& path, const Graph& g) { spit(path, encode_line(g, format_of(gl, path))); }

json path_json(const Path& p) { return p.vertices; }

// "0,3|5|7,9" -> {{0,3},{5},{7,9}}
std::vector<VertexSet> parse_terminals(const std::string& text, int n) {
  std::vector<VertexSet> out;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, '|')) {
    VertexSet z(n);
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) continue;
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size()) throw InputError("bad terminal '" + item + "'");
      if (v < 0 || v >= n) throw InputError("terminal " + item + " out of range");
      z.insert(v);
    }
    out.push_back(z);
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoi(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InputError("bad integer list '" + text + "'");
  }
  return out;
}

void print(const Globals& gl, const json& j, const std::string& plain) {
  if (gl.json) std::cout << j.dump() << "\n";
  else std::cout << plain << "\n";
}

struct DetectArgs {
  std::string pattern;
  std::string input = "-";
  std::string emit_model;
  std::string stage = "full";
  bool no_prune = false;
};

int run_detect(const Globals& gl, const DetectArgs& a) {
  PatternId id = parse_pattern_name(a.pattern);
  Graph g = load(gl, a.input);
  DetectOptions opts;
  opts.prune = !a.no_prune;
  opts.jobs = gl.jobs;
  opts.h2_stage = a.stage == "small" ? H2Stage::Small : H2Stage::Full;
  DetectStats stats;
  auto m = detect(id, g, opts, &stats);
  json j{{"pattern", pattern_name(id)}, {"answer", m ? "yes" : "no"}, {"guesses", stats.guesses.load()},
         {"dcs_calls", stats.dcs_calls.load()}};
  if (m) {
    j["model"] = model_to_json(*m);
    if (id == PatternId::H2) j["h2_stage"] = stats.h2_stage_hit.load();
    if (!a.emit_model.empty()) spit(a.emit_model, model_to_json(*m).dump(2) + "\n");
  }
  print(gl, j, m ? "yes" : "no");
  return m ? kFound : kNotFound;
}

struct OracleArgs {
  std::string host = "-";
  std::string pattern;
  std::string pattern_file;
  int max_n = 12;
};

int run_oracle(const Globals& gl, const OracleArgs& a) {
  Graph g = load(gl, a.host);
  OracleBudget budget;
  budget.max_host_vertices = a.max_n;
  OracleResult r;
  if (!a.pattern_file.empty()) r = brute_force_induced_minor(g, load(gl, a.pattern_file), budget);
  else r = brute_force_induced_minor(g, parse_pattern_name(a.pattern), budget);
  json j{{"answer", verdict_name(r.verdict)}, {"nodes", r.nodes}};
  if (r.model) j["model"] = model_to_json(*r.model);
  print(gl, j, verdict_name(r.verdict));
  if (r.verdict == Verdict::BudgetExceeded) return kLimit;
  return r.verdict == Verdict::Yes ? kFound : kNotFound;
}

int run_verify(const Globals& gl, const std::string& input, const std::string& model_path) {
  Graph g = load(gl, input);
  json mj;
  try {
    mj = json::parse(slurp(model_path));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("model file: ") + e.what());
  }
  Model m = model_from_json(mj, g.order());
  ModelReport r = verify_model(g, m);
  json j{{"valid", static_cast<bool>(r)}};
  if (!r) j["reason"] = r.message;
  print(gl, j, r ? "valid" : "invalid: " + r.message);
  return r ? kFound : kNotFound;
}

int run_solve_dcs(const Globals& gl, const std::string& graph, const std::string& terminals, bool minimal) {
  Graph g = load(gl, graph);
  DcsInstance inst{g, parse_terminals(terminals, g.order())};
  auto sol = minimal ? solve_dcs_minimal(inst) : solve_dcs(inst);
  if (!sol) {
    print(gl, json{{"answer", "infeasible"}}, "infeasible");
    return kNotFound;
  }
  json sets = json::array();
  std::string plain;
  for (const auto& s : sol->sets) {
    std::vector<int> vs(s.begin(), s.end());
    sets.push_back(vs);
    std::string part;
    for (int v : vs) part += (part.empty() ? "" : ",") + std::to_string(v);
    plain += (plain.empty() ? "" : "|") + part;
  }
  print(gl, json{{"answer", "feasible"}, {"sets", sets}}, plain);
  return kFound;
}

int run_windmill(const Globals& gl, const std::string& input, const std::string& params) {
  Graph g = load(gl, input);
  auto r = brute_force_windmill(g, WindmillParams::parse(params));
  json j{{"answer", verdict_name(r.verdict)}};
  if (r.witness) {
    j["centre"] = r.witness->centre;
    j["p"] = path_json(r.witness->p);
    j["q"] = path_json(r.witness->q);
  }
  print(gl, j, verdict_name(r.verdict));
  if (r.verdict == Verdict::BudgetExceeded) return kLimit;
  return r.verdict == Verdict::Yes ? kFound : kNotFound;
}

struct ReduceArgs {
  std::string from;
  std::string input = "-";
  std::string x;
  std::string y;
  std::string params;
  std::string out = "-";
};

int run_reduce(const Globals& gl, const ReduceArgs& a) {
  Graph src = load(gl, a.input);
  auto xs = parse_ints(a.x);
  auto ys = parse_ints(a.y);
  WindmillParams params = WindmillParams::parse(a.params);
  WindmillReduction r;
  if (a.from == "2iah") {
    if (xs.size() != 1 || ys.size() != 1) throw InputError("2iah takes one x and one y");
    r = reduce_2iah_to_windmill({src, xs[0], ys[0]}, params);
  } else {
    if (xs.size() != 2 || ys.size() != 2) throw InputError("i2dp takes --x x',x'' and --y y',y''");
    r = reduce_i2dp_to_windmill({src, xs[0], xs[1], ys[0], ys[1]}, params);
  }
  save(gl, a.out, r.graph);
  json j{{"order", r.graph.order()}, {"centre", r.centre}, {"terminals", r.terminals},
         {"pairing", r.pairing}, {"hub_free", r.source_hub_free}};
  if (a.out != "-") print(gl, j, "wrote " + a.out + " (" + std::to_string(r.graph.order()) + " vertices)");
  else if (gl.json) std::cerr << j.dump() << "\n";
  return kFound;
}

struct GenArgs {
  std::string kind = "gnp";
  int n = 8;
  double p = 0.5;
  int count = 1;
  bool allow_eight = false;
  std::string out = "-";
};

int run_gen(const Globals& gl, const GenArgs& a) {
  if (a.n < 0) throw InputError("n must be non-negative");
  std::vector<Graph> gs;
  if (a.kind == "all") {
    if (a.n > 8 || (a.n == 8 && !a.allow_eight)) throw InputError("all: n <= 7, or n = 8 with --allow-8");
    gs = all_graphs(a.n);
  } else if (a.kind == "gnp") {
    std::mt19937_64 rng(gl.seed);
    for (int i = 0; i < a.count; ++i) gs.push_back(gnp_graph(a.n, a.p, rng()));
  } else if (a.kind == "path") {
    gs.push_back(path_graph(a.n));
  } else if (a.kind == "cycle") {
    gs.push_back(cycle_graph(a.n));
  } else if (a.kind == "clique") {
    gs.push_back(clique_graph(a.n));
  } else if (a.kind == "star") {
    gs.push_back(star_graph(a.n));
  } else {
    gs.push_back(pattern(parse_pattern_name(a.kind)).graph);
  }
  std::string text;
  GraphFormat f = format_of(gl, a.out);
  if (f == GraphFormat::EdgeList && gs.size() != 1) throw InputError("edgelist output holds one graph");
  for (const Graph& g : gs) text += encode_line(g, f);
  spit(a.out, text);
  return kFound;
}

struct PlantArgs {
  std::string pattern;
  int n = 0;
  std::string bags;
  double noise = 0;
  bool complete_centre = false;
  std::string out = "-";
  std::string emit_model;
};

int run_plant(const Globals& gl, const PlantArgs& a) {
  PlantSpec s;
  s.pattern = parse_pattern_name(a.pattern);
  s.n = a.n;
  if (!a.bags.empty()) s.bag_sizes = parse_ints(a.bags);
  s.noise = a.noise;
  s.seed = gl.seed;
  s.complete_centre = a.complete_centre;
  if (s.n == 0) {
    s.n = 0;
    if (s.bag_sizes.empty()) s.n = pattern(s.pattern).order();
    for (int b : s.bag_sizes) s.n += b;
  }
  auto [g, m] = plant_model(s);
  save(gl, a.out, g);
  if (!a.emit_model.empty()) spit(a.emit_model, model_to_json(m).dump(2) + "\n");
  return kFound;
}

struct DiffArgs {
  std::string pattern;
  std::string corpus = "all";
  std::string input;
  int max_n = 7;
  int count = 100;
  double p = 0.4;
  bool lemmas = false;
  bool no_prune = false;
  bool timing = false;
  std::string report;
};

int run_difftest(const Globals& gl, const DiffArgs& a) {
  PatternId id = parse_pattern_name(a.pattern);
  std::vector<Graph> corpus;
  if (a.corpus == "all") {
    if (a.max_n > 7) throw InputError("all: --max-n must be at most 7");
    corpus = all_graphs_up_to(a.max_n);
  } else if (a.corpus == "gnp") {
    std::mt19937_64 rng(gl.seed);
    for (int i = 0; i < a.count; ++i) corpus.push_back(gnp_graph(a.max_n, a.p, rng()));
  } else {
    if (a.input.empty()) throw InputError("file corpus needs --input");
    corpus = parse_graph6_lines(slurp(a.input));
  }
  DiffOptions opts;
  opts.detect.prune = !a.no_prune;
  opts.detect.jobs = gl.jobs;
  opts.lemma_checks = a.lemmas;
  RunReport r = run_differential(id, corpus, opts, "difftest-" + std::string(pattern_name(id)));
  if (!a.report.empty()) spit(a.report, r.to_jsonl(a.timing));
  json j{{"total", r.total()}, {"pass", r.pass}, {"fail", r.fail}, {"skip", r.skip}};
  print(gl, j,
        std::to_string(r.total()) + " total, " + std::to_string(r.pass) + " pass, " + std::to_string(r.fail) +
            " fail, " + std::to_string(r.skip) + " skip");
  return r.fail == 0 ? kFound : kNotFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced minor detection for the kite, F1, F2 and H2 patterns"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--format", gl.format, "Graph format: graph6, edgelist or auto (by file extension)")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  app.add_option("--seed", gl.seed, "Random seed");
  app.add_option("--jobs", gl.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--json", gl.json, "Print JSON instead of plain text");
  app.fallthrough();

  const auto patterns = CLI::IsMember({"kite", "f1", "f2", "h2"});
  std::function<int()> action;

  DetectArgs det;
  auto* c = app.add_subcommand("detect", "Decide whether the input contains a pattern as an induced minor");
  c->add_option("--pattern", det.pattern)->required()->check(patterns);
  c->add_option("--input", det.input, "Graph file, or - for stdin");
  c->add_option("--emit-model", det.emit_model, "Write the model as JSON");
  c->add_flag("--no-prune", det.no_prune, "Enumerate the literal guess tuples");
  c->add_option("--stage", det.stage, "H2 only: small models only, or the full pipeline")
      ->check(CLI::IsMember({"small", "full"}));
  c->callback([&] { action = [&] { return run_detect(gl, det); }; });

  OracleArgs ora;
  c = app.add_subcommand("oracle", "Brute-force induced minor test");
  c->add_option("--host", ora.host, "Host graph file");
  auto* pat = c->add_option("--pattern", ora.pattern)->check(patterns);
  auto* pat_file = c->add_option("--pattern-file", ora.pattern_file, "Arbitrary pattern graph");
  pat->excludes(pat_file);
  c->add_option("--max-n", ora.max_n, "Largest host accepted");
  c->callback([&] {
    if (ora.pattern.empty() && ora.pattern_file.empty()) throw CLI::ValidationError("need --pattern or --pattern-file");
    action = [&] { return run_oracle(gl, ora); };
  });

  std::string v_input = "-";
  std::string v_model;
  c = app.add_subcommand("verify", "Check a model against a host graph");
  c->add_option("--input", v_input);
  c->add_option("--model", v_model)->required();
  c->callback([&] { action = [&] { return run_verify(gl, v_input, v_model); }; });

  std::string d_graph = "-";
  std::string d_terms;
  bool d_minimal = false;
  c = app.add_subcommand("solve-dcs", "Disjoint connected subgraphs");
  c->add_option("--graph", d_graph);
  c->add_option("--terminals", d_terms, "Groups separated by |, vertices by commas")->required();
  c->add_flag("--minimal", d_minimal, "Drop redundant vertices from the solution");
  c->callback([&] { action = [&] { return run_solve_dcs(gl, d_graph, d_terms, d_minimal); }; });

  std::string w_input = "-";
  std::string w_params;
  c = app.add_subcommand("windmill", "Brute-force windmill search");
  c->add_option("--input", w_input);
  c->add_option("--params", w_params, "a,b,c,d")->required();
  c->callback([&] { action = [&] { return run_windmill(gl, w_input, w_params); }; });

  ReduceArgs red;
  c = app.add_subcommand("reduce", "Build the windmill instance for a path problem");
  c->add_option("--from", red.from)->required()->check(CLI::IsMember({"2iah", "i2dp"}));
  c->add_option("--input", red.input);
  c->add_option("--x", red.x, "x, or x',x'' for i2dp")->required();
  c->add_option("--y", red.y, "y, or y',y'' for i2dp")->required();
  c->add_option("--params", red.params, "a,b,c,d")->required();
  c->add_option("--out", red.out);
  c->callback([&] { action = [&] { return run_reduce(gl, red); }; });

  GenArgs gen;
  c = app.add_subcommand("gen", "Generate graphs");
  c->add_option("--kind", gen.kind, "gnp, all, path, cycle, clique, star or a pattern name");
  c->add_option("--n", gen.n);
  c->add_option("--p", gen.p)->check(CLI::Range(0.0, 1.0));
  c->add_option("--count", gen.count)->check(CLI::NonNegativeNumber);
  c->add_flag("--allow-8", gen.allow_eight, "Permit --kind all with n = 8");
  c->add_option("--out", gen.out);
  c->callback([&] { action = [&] { return run_gen(gl, gen); }; });

  PlantArgs pl;
  c = app.add_subcommand("plant", "Host graph with a planted model");
  c->add_option("--pattern", pl.pattern)->required()->check(patterns);
  c->add_option("--n", pl.n, "Host order (default: sum of bag sizes)");
  c->add_option("--bags", pl.bags, "Bag sizes by label, comma separated");
  c->add_option("--noise", pl.noise)->check(CLI::Range(0.0, 1.0));
  c->add_flag("--complete-centre", pl.complete_centre, "H2 only: windmill-shaped plant");
  c->add_option("--out", pl.out);
  c->add_option("--emit-model", pl.emit_model);
  c->callback([&] { action = [&] { return run_plant(gl, pl); }; });

  DiffArgs diff;
  c = app.add_subcommand("difftest", "Compare a detector with the oracle over a corpus");
  c->add_option("--pattern", diff.pattern)->required()->check(patterns);
  c->add_option("--corpus", diff.corpus)->check(CLI::IsMember({"all", "gnp", "file"}));
  c->add_option("--input", diff.input, "graph6 lines for --corpus file");
  c->add_option("--max-n", diff.max_n, "Largest order (all) or the order (gnp)");
  c->add_option("--count", diff.count);
  c->add_option("--p", diff.p)->check(CLI::Range(0.0, 1.0));
  c->add_flag("--lemmas", diff.lemmas, "Also run the lemma checks on yes models");
  c->add_flag("--no-prune", diff.no_prune);
  c->add_flag("--timing", diff.timing, "Include wall times in the report");
  c->add_option("--report", diff.report, "Write the JSON lines report here");
  c->callback([&] { action = [&] { return run_difftest(gl, diff); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action();
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
