// JSON reading and writing. Node indices are 1-based on the wire; numbers
// are written with 9 significant digits.

#ifndef NUMGAME_IO_HPP_
#define NUMGAME_IO_HPP_

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "numgame.hpp"

namespace numgame {

using json = nlohmann::json;

inline double round9(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;  // no -0
}

inline json tolerances_json() {
  return {{"label_tolerance", kLabelTolerance},
          {"explicit_label_tolerance", kExplicitLabelTolerance},
          {"max_inferred_label", kMaxInferredLabel},
          {"snap_relative", kSnapRelative},
          {"key_grid", kKeyGrid},
          {"sign_tolerance", kSignTolerance},
          {"ratio_tolerance", kRatioTolerance}};
}

inline json to_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(round9(x));
  return a;
}
inline json to_json(const Position& p) { return to_json(p.values()); }
inline json to_json(const RootVector& r) { return to_json(r.coeffs()); }

inline json to_json(const Word& w) {
  json a = json::array();
  for (Node x : w) a.push_back(x + 1);
  return a;
}

inline json nodes_json(const std::vector<Node>& v) {
  json a = json::array();
  for (Node x : v) a.push_back(x + 1);
  return a;
}

// Finite labels as integers, infinity as the string "inf".
inline json label_json(CoxeterLabel m) { return m.is_finite() ? json(m.value()) : json("inf"); }

// ---- graphs ----

namespace impl {

inline double number_at(const json& j, const char* what) {
  if (!j.is_number()) fail(Errc::ParseError, std::string(what) + " must be a number");
  return j.get<double>();
}

inline int index_at(const json& j, int n, const char* what) {
  if (!j.is_number_integer()) fail(Errc::ParseError, std::string(what) + " must be an integer");
  int v = j.get<int>();
  if (v < 1 || v > n) fail(Errc::NodeOutOfRange, std::string(what) + " out of range");
  return v - 1;
}

} // namespace impl

// Canonical {"n", "amplitudes"} or edge-list {"n", "edges": [{i, j, p, q, m?}]}.
inline EGCMGraph graph_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "graph must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    fail(Errc::ParseError, "graph needs an integer \"n\"");
  const int n = j["n"].get<int>();
  if (n < 1) fail(Errc::NotSquare, "graph needs at least one node");
  std::vector<std::string> names;
  if (j.contains("node_names")) {
    if (!j["node_names"].is_array()) fail(Errc::ParseError, "node_names must be an array");
    for (const auto& s : j["node_names"]) {
      if (!s.is_string()) fail(Errc::ParseError, "node_names must hold strings");
      names.push_back(s.get<std::string>());
    }
  }
  std::map<Edge, int> labels;
  auto add_label = [&](int a, int b, const json& m) {
    if (!m.is_number_integer()) fail(Errc::ParseError, "label \"m\" must be an integer");
    labels[{std::min(a, b), std::max(a, b)}] = m.get<int>();
  };
  Matrix M;
  if (j.contains("amplitudes")) {
    const json& A = j["amplitudes"];
    if (!A.is_array() || static_cast<int>(A.size()) != n)
      fail(Errc::NotSquare, "amplitudes must have n rows");
    for (const auto& row : A) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        fail(Errc::NotSquare, "amplitudes must have n columns");
      std::vector<double> r;
      for (const auto& x : row) r.push_back(impl::number_at(x, "amplitude"));
      M.push_back(std::move(r));
    }
    if (j.contains("labels")) {
      for (const auto& e : j["labels"])
        add_label(impl::index_at(e.at("i"), n, "i"), impl::index_at(e.at("j"), n, "j"), e.at("m"));
    }
  } else if (j.contains("edges")) {
    M.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) M[i][i] = 2.0;
    if (!j["edges"].is_array()) fail(Errc::ParseError, "edges must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("p") || !e.contains("q"))
        fail(Errc::ParseError, "each edge needs i, j, p, q");
      int a = impl::index_at(e["i"], n, "i"), b = impl::index_at(e["j"], n, "j");
      if (a == b) fail(Errc::SameNode, "edge joins a node to itself");
      M[a][b] = -impl::number_at(e["p"], "p");
      M[b][a] = -impl::number_at(e["q"], "q");
      if (e.contains("m")) add_label(a, b, e["m"]);
    }
  } else {
    fail(Errc::ParseError, "graph needs \"amplitudes\" or \"edges\"");
  }
  return EGCMGraph::from_matrix(M, labels, names);
}

// A bare graph object, or a preset document {"name", "graph", "position"}.
inline EGCMGraph graph_from_document(const json& j) {
  if (j.is_object() && j.contains("graph") && !j.contains("n")) return graph_from_json(j["graph"]);
  return graph_from_json(j);
}

inline json graph_to_json(const EGCMGraph& g) {
  // Full precision: rounding can move an amplitude product off its label.
  json A = json::array();
  for (const auto& row : g.matrix()) {
    json r = json::array();
    for (double x : row) r.push_back(x == 0 ? 0.0 : x);
    A.push_back(r);
  }
  json out = {{"n", g.size()}, {"amplitudes", A}};
  if (!g.node_names().empty()) out["node_names"] = g.node_names();
  json labels = json::array();
  for (const Edge& e : g.edges()) {
    CoxeterLabel m = g.label_unchecked(e.i, e.j);
    if (m.is_finite() && m.value() > kMaxInferredLabel)
      labels.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"m", m.value()}});
  }
  if (!labels.empty()) out["labels"] = labels;
  return out;
}

inline Position position_from_json(const json& j, int n) {
  if (!j.is_array()) fail(Errc::ParseError, "position must be a JSON array");
  std::vector<double> v;
  for (const auto& x : j) v.push_back(impl::number_at(x, "position entry"));
  if (static_cast<int>(v.size()) != n)
    fail(Errc::DimensionMismatch, "position has " + std::to_string(v.size()) + " entries, graph has " +
         std::to_string(n) + " nodes");
  return Position(std::move(v));
}

inline Word word_from_json(const json& j, int n) {
  if (!j.is_array()) fail(Errc::ParseError, "word must be a JSON array");
  std::vector<Node> v;
  for (const auto& x : j) v.push_back(impl::index_at(x, n, "letter"));
  return Word(std::move(v));
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

// Comma-separated numbers, or a JSON array.
inline Position parse_position(const std::string& text, int n) {
  std::string s = text;
  if (s.empty() || s.front() != '[') s = "[" + s + "]";
  return position_from_json(parse_json_text(s), n);
}

inline Word parse_word(const std::string& text, int n) {
  std::string s = text;
  if (s.empty() || s.front() != '[') s = "[" + s + "]";
  return word_from_json(parse_json_text(s), n);
}

inline std::vector<Node> parse_nodes(const std::string& text, int n) {
  return parse_word(text, n).letters();
}

// ---- results ----

inline json labels_json(const EGCMGraph& g) {
  json a = json::array();
  for (const Edge& e : g.edges())
    a.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"m", label_json(g.label_unchecked(e.i, e.j))}});
  return a;
}

inline json to_json(const ONPath& p) {
  return {{"nodes", nodes_json(p.nodes)}, {"product", round9(p.product)}, {"word", to_json(p.word)}};
}

inline json to_json(const FamilyTag& t) {
  json out = {{"family", t.name()}, {"matched", t.matched()}};
  if (t.matched()) {
    json c = json::array();
    for (Node x : t.canonical) c.push_back(x + 1);
    out["canonical_index"] = c;
  }
  return out;
}

inline json to_json(const GameRecord& r) {
  json inter = json::array();
  for (const auto& p : r.intermediates) inter.push_back(to_json(p));
  return {{"initial", to_json(r.initial)},
          {"firings", to_json(r.word())},
          {"intermediates", inter},
          {"fired_values", to_json(r.fired_values)},
          {"final", to_json(r.final_position())},
          {"length", r.length()},
          {"status", status_name(r.status)}};
}

inline json to_json(const ConvergenceReport& r) {
  json terms = json::array();
  for (const auto& p : r.terminals) terms.push_back(to_json(p));
  return {{"consistent", r.consistent},
          {"game_count", r.game_count},
          {"terminals", terms},
          {"lengths", std::vector<int>(r.lengths.begin(), r.lengths.end())},
          {"cap_exceeded", r.cap_exceeded},
          {"states", r.states}};
}

inline json to_json(const GroupElement& e) {
  return {{"key", to_json(e.key)}, {"witness", to_json(e.witness)}, {"length", e.length}};
}

inline json to_json(const OrbitTable& t) {
  json els = json::array();
  for (std::size_t k = 0; k < t.size(); ++k)
    els.push_back({{"key", to_json(t.positions[k])},
                   {"length", t.length[k]},
                   {"witness", to_json(t.witness(static_cast<int>(k)))}});
  return {{"size", t.size()}, {"max_length", t.max_length()}, {"complete", t.complete}, {"elements", els}};
}

inline json to_json(const QuotientTable& q) {
  json out = to_json(q.table);
  out["J"] = nodes_json(q.J);
  if (q.longest >= 0)
    out["longest"] = {{"key", to_json(q.table.positions[q.longest])},
                      {"length", q.table.length[q.longest]},
                      {"witness", to_json(q.table.witness(q.longest))}};
  return out;
}

inline json to_json(const RootSystem& rs) {
  json roots = json::array();
  for (const auto& r : rs.positives) roots.push_back({{"coeffs", to_json(r)}, {"sign", sign_name(r.sign())}});
  return {{"positive_roots", roots}, {"count", rs.positives.size()}, {"complete", rs.complete},
          {"cap_used", rs.cap_used}};
}

inline json to_json(const EquivalenceReport& r) {
  return {{"no_odd_asymmetries", r.no_odd_asymmetries},
          {"unital_with_f_one", r.unital_with_f_one},
          {"betas_equal_positive_roots", r.betas_equal_positive_roots},
          {"length_equals_root_count", r.length_equals_root_count},
          {"functionals_cover_roots", r.functionals_cover_roots},
          {"agree", r.agree()},
          {"longest_length", r.longest_length},
          {"positive_root_count", r.positive_root_count},
          {"longest_word", to_json(r.longest_word)}};
}

inline json to_json(const AdjacencyReport& r) {
  json out = {{"position", to_json(r.position)}, {"verdict", verdict_name(r.verdict)},
              {"method", method_name(r.method)}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  if (r.pair) out["pair"] = {{"step", r.pair->step}, {"nodes", {r.pair->i + 1, r.pair->j + 1}}};
  return out;
}

inline json to_json(const FundamentalsReport& r) {
  json verdicts = json::array();
  for (Verdict v : r.verdicts) verdicts.push_back(verdict_name(v));
  json out = {{"method", method_name(r.method)}, {"family", r.tag.name()},
              {"verdicts", verdicts}, {"adjacency_free", nodes_json(r.adjacency_free)}};
  if (r.matches_table) out["matches_table"] = *r.matches_table;
  return out;
}

inline json to_json(const EGCMGraph& g, const PumpScheme& s, int k) {
  return {{"loop", nodes_json(s.loop)}, {"prefix", nodes_json(s.prefix)}, {"cycle", nodes_json(s.cycle)},
          {"cycle_product", round9(s.cycle_product)}, {"start", to_json(s.start)},
          {"predicted", to_json(s.predicted(g, k))}, {"repetitions", k}};
}

} // namespace numgame

#endif
