// numgame: command-line front end.
//
//   numgame inspect GRAPH
//   numgame play GRAPH POSITION [--strategy greedy|random] [--seed N] [--cap N] [--script 2,1,2]
//   numgame verify SUITE [--rank-cap N] [--seed N] [--trials N]
//   numgame enumerate GRAPH [--quotient 2,3 | --roots | --reduced-words 1,2,1] [--max N]
//   numgame adjacency GRAPH [--position 1,0,0]
//   numgame export-corpus DIR
//
// GRAPH is a JSON file, the name of a bundled preset, or a family name
// such as B4 or I2(7). Exit status is 0 on
// success, 1 for a negative finding, 2 for an error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "numgame/corpus.hpp"
#include "numgame/io.hpp"
#include "numgame/verify.hpp"

using namespace numgame;

namespace {

EGCMGraph load_graph(const std::string& arg) {
  if (std::filesystem::exists(arg)) return graph_from_document(read_json_file(arg));
  static const std::vector<Preset> presets = corpus();
  if (const Preset* p = find_preset(presets, arg)) return p->graph;
  try {
    return family_graph(arg);
  } catch (const Error&) {
    fail(Errc::ParseError, "no graph file, preset or family named '" + arg + "'");
  }
}

Position load_position(const std::string& arg, int n) {
  if (std::filesystem::exists(arg)) {
    json j = read_json_file(arg);
    return position_from_json(j.is_object() && j.contains("position") ? j["position"] : j, n);
  }
  return parse_position(arg, n);
}

int emit(const json& payload, int code = 0) {
  json out = payload;
  out["tolerances"] = tolerances_json();
  std::cout << out.dump(2) << '\n';
  return code;
}

int cmd_inspect(const std::string& file) {
  EGCMGraph g = load_graph(file);
  json out = {{"valid", true}, {"n", g.size()}, {"graph", graph_to_json(g)}, {"labels", labels_json(g)}};
  json comps = json::array();
  bool unital_all = true;
  for (const auto& c : on_components(g)) {
    UnitalReport u = is_unital_on_cyclic(g, c);
    unital_all = unital_all && u.unital;
    json item = {{"nodes", nodes_json(c)}, {"unital", u.unital}};
    if (u.witness) item["witness"] = to_json(*u.witness);
    comps.push_back(item);
  }
  out["on_components"] = comps;
  json asym = json::array();
  for (const Edge& e : odd_asymmetries(g)) asym.push_back({e.i + 1, e.j + 1});
  out["odd_asymmetries"] = asym;
  out["connected"] = g.is_connected();

  int code = 0;
  if (g.is_connected()) {
    FamilyTag tag = classify(g);
    out["family"] = to_json(tag);
    out["admissible"] = tag.matched();
    if (!tag.matched()) code = 1;
  } else {
    json fams = json::array();
    for (const auto& c : g.components()) fams.push_back(to_json(classify(g.induced(c))));
    out["component_families"] = fams;
    out["admissible"] = nullptr;
  }

  int l_w0 = greedy_length_from_ones(g, 100000);
  out["finite"] = l_w0 >= 0;
  if (l_w0 >= 0) {
    out["longest_length"] = l_w0;
    OrbitTable t = enumerate_group(g);
    if (t.complete) out["group_order"] = t.size();
    else out["group_order"] = nullptr;
    RootSystem rs = generate_root_system(g);
    if (rs.complete) {
      out["positive_roots"] = rs.positives.size();
      json fs = json::array();
      for (const auto& c : on_components(g)) {
        json item = {{"nodes", nodes_json(c)}};
        if (is_unital_on_cyclic(g, c).unital) item["f"] = f_value(rs, c);
        else item["f"] = nullptr;
        fs.push_back(item);
      }
      out["f_values"] = fs;
    }
  }
  return emit(out, code);
}

int cmd_play(const std::string& file, const std::string& pos, const std::string& strategy,
             std::uint64_t seed, int cap, const std::string& script) {
  EGCMGraph g = load_graph(file);
  Position lambda = load_position(pos, g.size());
  Strategy strat = script.empty() ? Strategy::parse(strategy, seed) : Strategy::scripted(parse_word(script, g.size()));
  if (cap <= 0) cap = default_step_cap(g);
  GameRecord rec = play(g, lambda, strat, cap);
  json fs = json::array();
  for (const auto& f : root_functionals(g, lambda, rec.word()))
    fs.push_back({{"beta", to_json(f.beta)}, {"value", round9(f.value)}});
  json out = {{"record", to_json(rec)}, {"root_functionals", fs}, {"step_cap", cap}};
  return emit(out, rec.status == GameStatus::BoundExceeded ? 1 : 0);
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt) {
  SuiteResult r = run_suite(suite, opt);
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json out = {{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks},
              {"options", {{"rank_cap", opt.rank_cap}, {"seed", opt.seed}, {"trials", opt.trials}}}};
  return emit(out, r.passed() ? 0 : 1);
}

int cmd_enumerate(const std::string& file, const std::string& quotient, bool roots,
                  const std::string& words, std::size_t max_elements) {
  EGCMGraph g = load_graph(file);
  Caps caps;
  if (max_elements > 0) caps.max_elements = max_elements;
  if (roots) {
    RootSystem rs = generate_root_system(g, max_elements > 0 ? max_elements : kRootCap);
    return emit({{"roots", to_json(rs)}}, rs.complete ? 0 : 1);
  }
  if (!words.empty()) {
    GroupElement w = GroupElement::from_word(g, parse_word(words, g.size()));
    std::vector<Word> R = reduced_words(g, w);
    auto classes = commutativity_classes(g, R);
    json rw = json::array(), cls = json::array();
    for (const auto& x : R) rw.push_back(to_json(x));
    for (const auto& c : classes) {
      json one = json::array();
      for (const auto& x : c) one.push_back(to_json(x));
      cls.push_back(one);
    }
    return emit({{"element", to_json(w)}, {"reduced_words", rw}, {"count", R.size()},
                 {"commutativity_classes", cls}, {"class_count", classes.size()},
                 {"fully_commutative", is_fully_commutative(g, w)}});
  }
  if (!quotient.empty()) {
    QuotientTable q = enumerate_quotient(g, parse_nodes(quotient, g.size()), caps);
    return emit({{"quotient", to_json(q)}}, q.complete() ? 0 : 1);
  }
  OrbitTable t = enumerate_group(g, caps);
  return emit({{"group", to_json(t)}}, t.complete ? 0 : 1);
}

int cmd_adjacency(const std::string& file, const std::string& pos) {
  EGCMGraph g = load_graph(file);
  if (!pos.empty()) {
    AdjacencyReport r = position_is_adjacency_free(g, load_position(pos, g.size()), default_step_cap(g));
    return emit({{"report", to_json(r)}}, r.verdict == Verdict::AdjacencyFree ? 0 : 1);
  }
  return emit({{"fundamentals", to_json(adjacency_free_fundamentals(g))}});
}

int cmd_export(const std::string& dir) {
  std::filesystem::create_directories(dir);
  json index = json::array();
  for (const Preset& p : corpus()) {
    json doc = {{"name", p.name}, {"description", p.description}, {"graph", graph_to_json(p.graph)},
                {"position", to_json(p.position)}};
    std::ofstream out(std::filesystem::path(dir) / (p.file + ".json"));
    out << doc.dump(2) << '\n';
    if (!out) fail(Errc::Internal, "cannot write " + p.file + ".json");
    index.push_back({{"name", p.name}, {"file", p.file + ".json"}});
  }
  std::ofstream out(std::filesystem::path(dir) / "index.json");
  out << index.dump(2) << '\n';
  return emit({{"written", index.size()}, {"directory", dir}});
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numbers game on E-GCM graphs"};
  app.require_subcommand(1);

  std::string graph, position, strategy = "greedy", script, suite, quotient, words, dir;
  std::uint64_t seed = 0;
  int cap = 0;
  bool roots = false;
  std::size_t max_elements = 0;
  SuiteOptions opt;

  auto* inspect = app.add_subcommand("inspect", "validate and describe a graph");
  inspect->add_option("graph", graph, "graph file or preset name")->required();

  auto* play_cmd = app.add_subcommand("play", "play one game");
  play_cmd->add_option("graph", graph, "graph file or preset name")->required();
  play_cmd->add_option("position", position, "position file or comma-separated numbers")->required();
  play_cmd->add_option("--strategy", strategy, "greedy or random");
  play_cmd->add_option("--seed", seed, "seed for the random strategy");
  play_cmd->add_option("--cap", cap, "step cap (default from the graph)");
  play_cmd->add_option("--script", script, "comma-separated firing sequence, 1-based");

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--rank-cap", opt.rank_cap, "largest rank to include");
  verify->add_option("--seed", opt.seed, "seed");
  verify->add_option("--trials", opt.trials, "random starts per graph");

  auto* enumerate = app.add_subcommand("enumerate", "group, quotient, roots or reduced words");
  enumerate->add_option("graph", graph, "graph file or preset name")->required();
  auto* q_opt = enumerate->add_option("--quotient", quotient, "J as comma-separated nodes");
  auto* r_opt = enumerate->add_flag("--roots", roots, "positive roots");
  auto* w_opt = enumerate->add_option("--reduced-words", words, "word naming the element");
  q_opt->excludes(r_opt)->excludes(w_opt);
  r_opt->excludes(w_opt);
  enumerate->add_option("--max", max_elements, "element / root cap");

  auto* adj = app.add_subcommand("adjacency", "adjacency-free fundamental positions");
  adj->add_option("graph", graph, "graph file or preset name")->required();
  adj->add_option("--position", position, "check one position instead");

  auto* exp = app.add_subcommand("export-corpus", "write the bundled presets as JSON files");
  exp->add_option("dir", dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*inspect) return cmd_inspect(graph);
    if (*play_cmd) return cmd_play(graph, position, strategy, seed, cap, script);
    if (*verify) return cmd_verify(suite, opt);
    if (*enumerate) return cmd_enumerate(graph, quotient, roots, words, max_elements);
    if (*adj) return cmd_adjacency(graph, position);
    if (*exp) return cmd_export(dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
