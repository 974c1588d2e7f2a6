// Interactive play sessions behind a JSON request/response interface. HTTP
// wiring lives in http.hpp; everything here is transport independent.

#ifndef NUMGAME_SERVICE_HPP_
#define NUMGAME_SERVICE_HPP_

#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "corpus.hpp"
#include "io.hpp"

namespace numgame {

inline constexpr int kServiceStepCap = 10000;

struct Response {
  int status = 200;
  json body;
};

inline Response error_response(int status, const std::string& code, const std::string& message) {
  return {status, {{"error", code}, {"message", message}}};
}

enum class SessionStatus { Active, Terminal, BoundExceeded };

inline const char* session_status_name(SessionStatus s) {
  switch (s) {
    case SessionStatus::Active: return "Active";
    case SessionStatus::Terminal: return "Terminal";
    case SessionStatus::BoundExceeded: return "BoundExceeded";
  }
  return "?";
}

class Session {
public:
  Session(std::string id, EGCMGraph g, Position initial, int step_cap)
    : id_(std::move(id)), graph_(std::move(g)), step_cap_(step_cap),
      threshold_(snap_threshold_for(initial)) {
    snap(initial, threshold_);
    positions_.push_back(std::move(initial));
    prepare_prediction();
  }

  const std::string& id() const { return id_; }
  const EGCMGraph& graph() const { return graph_; }
  const Position& initial() const { return positions_.front(); }
  const Position& current() const { return positions_.back(); }
  const std::vector<Node>& history() const { return history_; }
  std::mutex& mutex() const { return mu_; }

  SessionStatus status() const {
    if (fireable(graph_, current()).empty()) return SessionStatus::Terminal;
    if (static_cast<int>(history_.size()) >= step_cap_) return SessionStatus::BoundExceeded;
    return SessionStatus::Active;
  }

  Position preview(Node i) const { return fire(graph_, current(), i, threshold_); }

  void fire_node(Node i) {
    Position next = fire(graph_, current(), i, threshold_);
    history_.push_back(i);
    fired_values_.push_back(current()[i]);
    positions_.push_back(std::move(next));
  }

  void undo() {
    history_.pop_back();
    fired_values_.pop_back();
    positions_.pop_back();
  }

  // Legal sequences are reduced; checked after every mutation.
  void assert_reduced() const {
    if (!is_reduced(graph_, Word(history_)))
      fail(Errc::Internal, "session word is not reduced");
  }

  json to_json() const {
    json hist = json::array();
    for (std::size_t k = 0; k < history_.size(); ++k)
      hist.push_back({{"node", history_[k] + 1}, {"position", numgame::to_json(positions_[k + 1])}});
    json fire_set = json::array();
    for (Node x : fireable(graph_, current())) fire_set.push_back(x + 1);
    return {{"id", id_},
            {"graph", graph_to_json(graph_)},
            {"edges", edge_list_json()},
            {"initial", numgame::to_json(initial())},
            {"current", numgame::to_json(current())},
            {"history", hist},
            {"status", session_status_name(status())},
            {"fireable", fire_set},
            {"step_cap", step_cap_}};
  }

  json analysis() const {
    json fire_set = json::array();
    for (Node x : fireable(graph_, current())) fire_set.push_back(x + 1);
    json out = {{"fireable", fire_set},
                {"word_so_far", numgame::to_json(Word(history_))},
                {"is_reduced", is_reduced(graph_, Word(history_))},
                {"adjacency_flag", adjacent_positive_pair(graph_, current()).has_value()},
                {"functional_values", numgame::to_json(fired_values_)},
                {"status", session_status_name(status())}};
    if (expected_total_) {
      out["terminal_prediction"] = {{"expected_total", *expected_total_},
                                    {"remaining", *expected_total_ - static_cast<int>(history_.size())}};
    }
    return out;
  }

  // Edge-list view for display: p = -M_ij, q = -M_ji.
  json edge_list_json() const {
    json edges = json::array();
    for (const Edge& e : graph_.edges())
      edges.push_back({{"i", e.i + 1}, {"j", e.j + 1},
                       {"p", round9(-graph_.amplitude(e.i, e.j))},
                       {"q", round9(-graph_.amplitude(e.j, e.i))},
                       {"m", label_json(graph_.label_unchecked(e.i, e.j))}});
    return edges;
  }

private:
  // Total game length l(w0) - l((w0)_J) for dominant starts on graphs whose
  // components are all recognized families.
  void prepare_prediction() {
    if (!initial().is_dominant()) return;
    for (const auto& comp : graph_.components())
      if (!classify(graph_.induced(comp)).matched()) return;
    int full = greedy_length_from_ones(graph_, 100000);
    std::vector<Node> J = initial().zero_nodes();
    int parabolic = J.empty() ? 0 : greedy_length_from_ones(graph_.induced(J), 100000);
    if (full >= 0 && parabolic >= 0) expected_total_ = full - parabolic;
  }

  std::string id_;
  EGCMGraph graph_;
  int step_cap_;
  double threshold_;
  std::vector<Node> history_;
  std::vector<double> fired_values_;
  std::vector<Position> positions_;
  std::optional<int> expected_total_;
  mutable std::mutex mu_;
};

// Owns all sessions. With a log directory, every session is mirrored to an
// append-only file <id>.jsonl and replayed on load.
class SessionStore {
public:
  explicit SessionStore(std::string log_dir = "", int step_cap = kServiceStepCap)
    : log_dir_(std::move(log_dir)), step_cap_(step_cap), rng_(std::random_device{}()) {
    if (!log_dir_.empty()) {
      std::filesystem::create_directories(log_dir_);
      load();
    }
  }

  std::size_t size() const {
    std::shared_lock lock(map_mu_);
    return sessions_.size();
  }

  // POST /sessions: {"graph": ..., "position": [...]} or {"preset": name}.
  Response create(const json& body) {
    return guarded([&]() -> Response {
      if (!body.is_object()) fail(Errc::ParseError, "request body must be a JSON object");
      EGCMGraph g;
      Position p;
      if (body.contains("preset")) {
        static const std::vector<Preset> presets = corpus();
        const Preset* pre = body["preset"].is_string() ? find_preset(presets, body["preset"].get<std::string>()) : nullptr;
        if (!pre) return error_response(404, "UnknownPreset", "no preset with that name");
        g = pre->graph;
        p = body.contains("position") ? position_from_json(body["position"], g.size()) : pre->position;
      } else {
        if (!body.contains("graph")) fail(Errc::ParseError, "request needs \"graph\" or \"preset\"");
        g = graph_from_json(body["graph"]);
        p = body.contains("position") ? position_from_json(body["position"], g.size()) : Position::ones(g.size());
      }
      auto s = std::make_shared<Session>(new_id(), g, p, step_cap_);
      log(s->id(), {{"op", "create"}, {"graph", graph_to_json(g)}, {"position", s->initial().values()}});
      {
        std::unique_lock lock(map_mu_);
        sessions_.emplace(s->id(), s);
      }
      return {201, s->to_json()};
    });
  }

  Response get(const std::string& id) {
    return with_session(id, [&](Session& s) -> Response { return {200, s.to_json()}; });
  }

  Response analysis(const std::string& id) {
    return with_session(id, [&](Session& s) -> Response { return {200, s.analysis()}; });
  }

  Response fire_node(const std::string& id, const json& body) {
    return with_session(id, [&](Session& s) -> Response {
      Node i = node_from(body, s.graph());
      if (s.status() == SessionStatus::BoundExceeded)
        return error_response(409, "StepCapReached", "session reached its step cap");
      if (!is_fireable(s.current(), i))
        return error_response(409, "NodeNotFireable", "node " + std::to_string(i + 1) + " is not fireable");
      s.fire_node(i);
      log(s.id(), {{"op", "fire"}, {"node", i + 1}});
      s.assert_reduced();
      return {200, {{"session", s.to_json()}, {"analysis", s.analysis()}}};
    });
  }

  Response whatif(const std::string& id, const json& body) {
    return with_session(id, [&](Session& s) -> Response {
      Node i = node_from(body, s.graph());
      if (!is_fireable(s.current(), i))
        return error_response(409, "NodeNotFireable", "node " + std::to_string(i + 1) + " is not fireable");
      return {200, {{"node", i + 1}, {"preview", numgame::to_json(s.preview(i))}}};
    });
  }

  Response undo(const std::string& id) {
    return with_session(id, [&](Session& s) -> Response {
      if (s.history().empty()) return error_response(409, "NothingToUndo", "no firing to undo");
      s.undo();
      log(s.id(), {{"op", "undo"}});
      return {200, s.to_json()};
    });
  }

  Response autoplay(const std::string& id, const json& body) {
    return with_session(id, [&](Session& s) -> Response {
      std::string name = "greedy";
      int steps = 0;
      std::uint64_t seed = 0;
      if (body.is_object()) {
        if (body.contains("strategy")) {
          if (!body["strategy"].is_string()) fail(Errc::ParseError, "strategy must be a string");
          name = body["strategy"].get<std::string>();
        }
        if (body.contains("steps")) {
          if (!body["steps"].is_number_integer()) fail(Errc::ParseError, "steps must be an integer");
          steps = body["steps"].get<int>();
        }
        if (body.contains("seed") && body["seed"].is_number_unsigned()) seed = body["seed"].get<std::uint64_t>();
      }
      Strategy strat = Strategy::parse(name, seed);
      std::mt19937_64 rng(strat.seed);
      json fired = json::array();
      for (int k = 0; k < steps && s.status() == SessionStatus::Active; ++k) {
        std::vector<Node> options = fireable(s.graph(), s.current());
        Node i = strat.kind == Strategy::Kind::Random ? options[rng() % options.size()] : options.front();
        s.fire_node(i);
        fired.push_back(i + 1);
      }
      if (!fired.empty()) log(s.id(), {{"op", "fire_many"}, {"nodes", fired}});
      s.assert_reduced();
      return {200, {{"session", s.to_json()}, {"analysis", s.analysis()}, {"fired", fired}}};
    });
  }

  static Response presets() {
    json out = json::array();
    for (const Preset& p : corpus()) {
      Session view("", p.graph, p.position, kServiceStepCap);
      out.push_back({{"name", p.name}, {"description", p.description}, {"graph", graph_to_json(p.graph)},
                     {"edges", view.edge_list_json()}, {"position", to_json(p.position)},
                     {"family", p.graph.is_connected() ? classify(p.graph).name() : "NotECoxeter"}});
    }
    return {200, out};
  }

private:
  template <class F>
  Response guarded(F f) {
    try {
      return f();
    } catch (const Error& e) {
      return error_response(e.code() == Errc::Internal ? 500 : 400, errc_name(e.code()), e.what());
    } catch (const json::exception& e) {
      return error_response(400, "ParseError", e.what());
    }
  }

  template <class F>
  Response with_session(const std::string& id, F f) {
    std::shared_ptr<Session> s;
    {
      std::shared_lock lock(map_mu_);
      auto it = sessions_.find(id);
      if (it != sessions_.end()) s = it->second;
    }
    if (!s) return error_response(404, "UnknownSession", "no session " + id);
    std::lock_guard lock(s->mutex());
    return guarded([&] { return f(*s); });
  }

  static Node node_from(const json& body, const EGCMGraph& g) {
    if (!body.is_object() || !body.contains("node") || !body["node"].is_number_integer())
      fail(Errc::ParseError, "request needs an integer \"node\"");
    int v = body["node"].get<int>();
    if (v < 1 || v > g.size()) fail(Errc::NodeOutOfRange, "node " + std::to_string(v) + " out of range");
    return v - 1;
  }

  std::string new_id() {
    std::lock_guard lock(id_mu_);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%016llx%08llx", static_cast<unsigned long long>(rng_()),
                  static_cast<unsigned long long>(++counter_ & 0xffffffffu));
    return buf;
  }

  void log(const std::string& id, const json& entry) {
    if (log_dir_.empty()) return;
    std::ofstream out(std::filesystem::path(log_dir_) / (id + ".jsonl"), std::ios::app);
    out << entry.dump() << '\n';
    out.flush();
    if (!out) fail(Errc::Internal, "cannot write session log");
  }

  // Replays every log in the directory.
  void load() {
    for (const auto& entry : std::filesystem::directory_iterator(log_dir_)) {
      if (entry.path().extension() != ".jsonl") continue;
      std::ifstream in(entry.path());
      std::string line;
      std::shared_ptr<Session> s;
      std::string id = entry.path().stem().string();
      // A torn or invalid line ends the replay; the prefix before it is kept.
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        json op = json::parse(line, nullptr, false);
        if (op.is_discarded() || !op.is_object() || !op.contains("op")) break;
        try {
          std::string kind = op.at("op");
          if (kind == "create") {
            EGCMGraph g = graph_from_json(op.at("graph"));
            s = std::make_shared<Session>(id, g, position_from_json(op.at("position"), g.size()), step_cap_);
          } else if (s && kind == "fire") {
            replay_fire(*s, op.at("node").get<int>() - 1);
          } else if (s && kind == "fire_many") {
            for (const auto& x : op.at("nodes")) replay_fire(*s, x.get<int>() - 1);
          } else if (s && kind == "undo") {
            if (s->history().empty()) break;
            s->undo();
          }
        } catch (const std::exception&) {
          break;
        }
      }
      if (s) sessions_.emplace(id, s);
    }
  }

  static void replay_fire(Session& s, int i) {
    if (i < 0 || i >= s.graph().size() || !is_fireable(s.current(), i))
      fail(Errc::ParseError, "log fires an illegal node");
    s.fire_node(i);
  }

  std::string log_dir_;
  int step_cap_;
  mutable std::shared_mutex map_mu_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
  std::mutex id_mu_;
  std::mt19937_64 rng_;
  std::uint64_t counter_ = 0;
};

} // namespace numgame

#endif
