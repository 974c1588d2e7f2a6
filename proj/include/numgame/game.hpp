// The numbers game: firing, play strategies, exhaustive game trees,
// strong-convergence checks, and the two divergence constructions used to
// rule out loop-shaped graphs.

#ifndef NUMGAME_GAME_HPP_
#define NUMGAME_GAME_HPP_

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "egcm.hpp"
#include "families.hpp"

namespace numgame {

// s_i acting on a position, legal or not: lambda_j -> lambda_j - M_ij lambda_i.
inline Position reflect_position(const EGCMGraph& g, const Position& lambda, Node i) {
  Position out = lambda;
  const double li = lambda[i];
  for (int j = 0; j < g.size(); ++j)
    out[j] = lambda[j] - g.amplitude(i, j) * li;
  return out;
}

inline bool is_fireable(const Position& lambda, Node i) { return lambda[i] > 0; }

// Fires node i with zero-snapping at `threshold`.
inline Position fire(const EGCMGraph& g, const Position& lambda, Node i, double threshold) {
  g.check_node(i);
  if (lambda.size() != static_cast<std::size_t>(g.size()))
    fail(Errc::DimensionMismatch, "position length differs from node count");
  if (!is_fireable(lambda, i))
    fail(Errc::NodeNotFireable, "node " + std::to_string(i + 1) + " carries a nonpositive number");
  Position out = reflect_position(g, lambda, i);
  snap(out, threshold);
  return out;
}

inline Position fire(const EGCMGraph& g, const Position& lambda, Node i) {
  return fire(g, lambda, i, snap_threshold_for(lambda));
}

inline std::vector<Node> fireable(const EGCMGraph& g, const Position& lambda) {
  std::vector<Node> out;
  for (int i = 0; i < g.size(); ++i)
    if (is_fireable(lambda, i)) out.push_back(i);
  return out;
}

// w.lambda for the element named by `word` (letters applied in order),
// ignoring legality. Used for group keys.
inline Position act_on_position(const EGCMGraph& g, const Position& lambda, const Word& word) {
  const double threshold = snap_threshold_for(lambda);
  Position p = lambda;
  for (Node x : word) {
    p = reflect_position(g, p, x);
    snap(p, threshold);
  }
  return p;
}

enum class GameStatus { Terminal, BoundExceeded, Halted };

inline const char* status_name(GameStatus s) {
  switch (s) {
    case GameStatus::Terminal: return "Terminal";
    case GameStatus::BoundExceeded: return "BoundExceeded";
    case GameStatus::Halted: return "Halted";
  }
  return "?";
}

struct GameRecord {
  Position initial;
  std::vector<Node> firings;
  std::vector<Position> intermediates;  // initial first, final last
  std::vector<double> fired_values;
  GameStatus status = GameStatus::Halted;

  const Position& final_position() const { return intermediates.back(); }
  std::size_t length() const { return firings.size(); }
  Word word() const { return Word(firings); }
};

struct Strategy {
  enum class Kind { Greedy, Random, Scripted };
  Kind kind = Kind::Greedy;
  std::uint64_t seed = 0;
  Word script;

  static Strategy greedy() { return {}; }
  static Strategy random(std::uint64_t seed) { return {Kind::Random, seed, {}}; }
  static Strategy scripted(Word w) { return {Kind::Scripted, 0, std::move(w)}; }

  static Strategy parse(const std::string& name, std::uint64_t seed = 0) {
    if (name == "greedy" || name == "lowest-index-greedy") return greedy();
    if (name == "random") return random(seed);
    fail(Errc::UnknownStrategy, "unknown strategy '" + name + "'");
  }
};

inline GameRecord start_record(const Position& lambda, double threshold) {
  GameRecord rec;
  rec.initial = lambda;
  snap(rec.initial, threshold);
  rec.intermediates.push_back(rec.initial);
  return rec;
}

inline void push_firing(const EGCMGraph& g, GameRecord& rec, Node i, double threshold) {
  const Position& cur = rec.intermediates.back();
  rec.fired_values.push_back(cur[i]);
  rec.firings.push_back(i);
  rec.intermediates.push_back(fire(g, cur, i, threshold));
}

// Fires until terminal, the step cap, or the end of a script.
inline GameRecord play(const EGCMGraph& g, const Position& lambda, const Strategy& strategy,
                       int step_cap) {
  if (lambda.size() != static_cast<std::size_t>(g.size()))
    fail(Errc::DimensionMismatch, "position length differs from node count");
  const double threshold = snap_threshold_for(lambda);
  GameRecord rec = start_record(lambda, threshold);
  std::mt19937_64 rng(strategy.seed);
  for (int step = 0;; ++step) {
    std::vector<Node> options = fireable(g, rec.intermediates.back());
    if (options.empty()) {
      rec.status = GameStatus::Terminal;
      break;
    }
    if (step >= step_cap) {
      rec.status = GameStatus::BoundExceeded;
      break;
    }
    Node pick = options.front();
    if (strategy.kind == Strategy::Kind::Random) {
      pick = options[rng() % options.size()];
    } else if (strategy.kind == Strategy::Kind::Scripted) {
      if (static_cast<std::size_t>(step) >= strategy.script.size()) {
        rec.status = GameStatus::Halted;
        break;
      }
      pick = strategy.script[step];
      if (pick < 0 || pick >= g.size() || !is_fireable(rec.intermediates.back(), pick))
        fail(Errc::IllegalScriptedFiring,
             "scripted firing " + std::to_string(step + 1) + " (node " +
             std::to_string(pick + 1) + ") is not legal", static_cast<std::size_t>(step));
    }
    push_firing(g, rec, pick, threshold);
  }
  return rec;
}

// Length of the greedy game from the all-ones position, or -1 past `cap`.
inline int greedy_length_from_ones(const EGCMGraph& g, int cap) {
  GameRecord r = play(g, Position::ones(g.size()), Strategy::greedy(), cap);
  return r.status == GameStatus::Terminal ? static_cast<int>(r.length()) : -1;
}

// 4 l(w0) for recognized finite families, else `fallback`.
inline int default_step_cap(const EGCMGraph& g, int fallback = 1000) {
  bool all_matched = true;
  for (const auto& comp : g.components()) {
    if (!classify(g.induced(comp)).matched()) all_matched = false;
  }
  if (!all_matched) return fallback;
  int len = greedy_length_from_ones(g, 100000);
  return len < 0 ? fallback : std::max(4 * len, 1);
}

struct GameTree {
  std::vector<GameRecord> records;
  bool cap_exceeded = false;  // some branch hit the depth cap
  bool truncated = false;     // stopped at max_records
};

// Depth-first enumeration of all maximal legal firing sequences, lowest node
// first. Branches reaching `step_cap` firings with fireable nodes left are
// recorded with status BoundExceeded.
inline GameTree enumerate_games(const EGCMGraph& g, const Position& lambda, int step_cap,
                                std::size_t max_records = 1000000) {
  if (lambda.size() != static_cast<std::size_t>(g.size()))
    fail(Errc::DimensionMismatch, "position length differs from node count");
  const double threshold = snap_threshold_for(lambda);
  GameTree tree;
  GameRecord cur = start_record(lambda, threshold);
  std::function<void()> dfs = [&]() {
    if (tree.truncated) return;
    std::vector<Node> options = fireable(g, cur.intermediates.back());
    if (options.empty() || static_cast<int>(cur.length()) >= step_cap) {
      GameRecord done = cur;
      done.status = options.empty() ? GameStatus::Terminal : GameStatus::BoundExceeded;
      if (!options.empty()) tree.cap_exceeded = true;
      tree.records.push_back(std::move(done));
      if (tree.records.size() >= max_records) tree.truncated = true;
      return;
    }
    for (Node i : options) {
      push_firing(g, cur, i, threshold);
      dfs();
      cur.firings.pop_back();
      cur.fired_values.pop_back();
      cur.intermediates.pop_back();
    }
  };
  dfs();
  return tree;
}

struct ConvergenceReport {
  bool consistent = false;
  double game_count = 0;  // number of maximal games (may be large)
  std::vector<Position> terminals;
  std::set<int> lengths;
  bool cap_exceeded = false;
  std::size_t states = 0;  // distinct (depth, position) pairs explored
};

// Exhaustive check that every maximal game ends at one position after one
// number of firings. Subtrees are memoized on (depth, quantized position);
// each memo entry keeps the full set of outcomes below it, so the result is
// exact regardless of whether the game is strongly convergent.
inline ConvergenceReport check_strong_convergence(const EGCMGraph& g, const Position& lambda,
                                                  int step_cap) {
  if (lambda.size() != static_cast<std::size_t>(g.size()))
    fail(Errc::DimensionMismatch, "position length differs from node count");
  const double threshold = snap_threshold_for(lambda);
  ConvergenceReport rep;
  Position start = lambda;
  snap(start, threshold);

  struct Summary {
    double count = 0;
    std::set<std::pair<int, int>> outcomes;  // (terminal id, length)
    bool capped = false;
  };
  std::vector<std::unordered_map<QuantizedKey, Summary, QuantizedKeyHash>> memo(step_cap + 1);

  auto terminal_id = [&](const Position& p) {
    for (std::size_t k = 0; k < rep.terminals.size(); ++k)
      if (approx_equal(rep.terminals[k], p, kKeyGrid)) return static_cast<int>(k);
    rep.terminals.push_back(p);
    return static_cast<int>(rep.terminals.size()) - 1;
  };

  std::function<Summary(const Position&, int)> solve = [&](const Position& p, int depth) -> Summary {
    QuantizedKey key = quantize(p.values());
    auto& level = memo[depth];
    if (auto it = level.find(key); it != level.end()) return it->second;
    Summary s;
    std::vector<Node> options = fireable(g, p);
    if (options.empty()) {
      s.count = 1;
      s.outcomes.insert({terminal_id(p), depth});
    } else if (depth >= step_cap) {
      s.count = 1;
      s.capped = true;
    } else {
      for (Node i : options) {
        Summary child = solve(fire(g, p, i, threshold), depth + 1);
        s.count += child.count;
        s.capped = s.capped || child.capped;
        s.outcomes.insert(child.outcomes.begin(), child.outcomes.end());
      }
    }
    level.emplace(std::move(key), s);
    return s;
  };

  Summary top = solve(start, 0);
  for (const auto& level : memo) rep.states += level.size();
  rep.game_count = top.count;
  rep.cap_exceeded = top.capped;
  std::set<int> used_terminals;
  for (auto [t, len] : top.outcomes) {
    used_terminals.insert(t);
    rep.lengths.insert(len);
  }
  std::vector<Position> terms;
  for (int t : used_terminals) terms.push_back(rep.terminals[t]);
  rep.terminals = std::move(terms);
  rep.consistent = !rep.cap_exceeded && rep.terminals.size() <= 1 && rep.lengths.size() <= 1;
  return rep;
}

// Repeating firing scheme on a loop whose edges all have amplitude product 1.
struct PumpScheme {
  std::vector<Node> loop;     // nodes in loop order, loop[0] = node 1
  std::vector<Node> prefix;   // played once from the fundamental position of loop[0]
  std::vector<Node> cycle;    // repeated
  double cycle_product = 1;   // Pi_C for [loop[0], loop[1], ..., loop[n-1], loop[0]]
  Position start;

  // Node values after k repetitions of `cycle`: loop[0] carries
  // 1 + sum_j (Pi^j + Pi^-j), loop[1] carries M_{0,1} sum_j Pi^j,
  // loop[n-1] carries M_{0,n-1} sum_j Pi^-j, zeros elsewhere.
  Position predicted(const EGCMGraph& g, int k) const {
    Position p = Position::zeros(g.size());
    double up = 0, down = 0;
    for (int j = 1; j <= k; ++j) {
      up += std::pow(cycle_product, j);
      down += std::pow(cycle_product, -j);
    }
    const std::size_t n = loop.size();
    p[loop[0]] = 1 + up + down;
    p[loop[1]] = g.amplitude(loop[0], loop[1]) * up;
    p[loop[n - 1]] = g.amplitude(loop[0], loop[n - 1]) * down;
    return p;
  }
};

inline PumpScheme loop_divergence(const EGCMGraph& g) {
  const int n = g.size();
  if (n < 3 || !g.is_connected() || static_cast<int>(g.edges().size()) != n)
    fail(Errc::NotUnitProductLoop, "graph is not a loop");
  for (int v = 0; v < n; ++v)
    if (g.neighbors(v).size() != 2) fail(Errc::NotUnitProductLoop, "graph is not a loop");
  for (const Edge& e : g.edges())
    if (std::fabs(g.amplitude(e.i, e.j) * g.amplitude(e.j, e.i) - 1.0) > kLabelTolerance)
      fail(Errc::NotUnitProductLoop, "edge amplitude product is not 1");

  PumpScheme s;
  s.loop.push_back(0);
  Node prev = 0;
  Node cur = std::min(g.neighbors(0)[0], g.neighbors(0)[1]);
  while (cur != 0) {
    s.loop.push_back(cur);
    Node next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
    prev = cur;
    cur = next;
  }
  for (int k = 0; k < n; ++k) s.cycle.push_back(s.loop[k]);
  for (int k = n - 2; k >= 1; --k) s.cycle.push_back(s.loop[k]);
  std::vector<Node> closed = s.loop;
  closed.push_back(s.loop[0]);
  s.cycle_product = on_path_product(g, closed).product;
  s.start = Position::fundamental(n, s.loop[0]);
  return s;
}

// The 4-cycle with one edge of product (3+sqrt5)/2 (label 5) and three edges
// of product 1, nodes numbered clockwise so the label-5 edge is {1,2}.
struct PentagonAmplitudes {
  double p, q, r, s, t, u, v, w;
};

inline PentagonAmplitudes pentagon_amplitudes(const EGCMGraph& g) {
  const double golden_sq = (3 + std::sqrt(5.0)) / 2;
  bool ok = g.size() == 4 && g.edges().size() == 4 && g.adjacent(0, 1) && g.adjacent(1, 2) &&
            g.adjacent(2, 3) && g.adjacent(3, 0);
  if (ok) {
    auto prod = [&](Node i, Node j) { return g.amplitude(i, j) * g.amplitude(j, i); };
    ok = std::fabs(prod(0, 1) - golden_sq) <= kLabelTolerance &&
         std::fabs(prod(1, 2) - 1) <= kLabelTolerance &&
         std::fabs(prod(2, 3) - 1) <= kLabelTolerance &&
         std::fabs(prod(3, 0) - 1) <= kLabelTolerance;
  }
  if (!ok) fail(Errc::WrongGraphShape, "expected the 4-cycle with a single label-5 edge {1,2}");
  return {-g.amplitude(0, 1), -g.amplitude(1, 0), -g.amplitude(1, 2), -g.amplitude(2, 1),
          -g.amplitude(2, 3), -g.amplitude(3, 2), -g.amplitude(3, 0), -g.amplitude(0, 3)};
}

// (a,b,c,d) with a > 0, b >= 0, c >= 0, d <= 0, aw + d >= 0, aprt + brt + ct + d > 0.
inline bool meets_pentagon_condition(const PentagonAmplitudes& k, const Position& x) {
  double a = x[0], b = x[1], c = x[2], d = x[3];
  return a > 0 && b >= 0 && c >= 0 && d <= 0 && a * k.w + d >= 0 &&
         a * k.p * k.r * k.t + b * k.r * k.t + c * k.t + d > 0;
}

struct PentagonStep {
  bool meets_condition = false;
  Position next;  // after firing 1,2,3,4 (only when the condition holds)
};

inline PentagonStep pentagon_star_step(const EGCMGraph& g, const Position& lambda) {
  PentagonAmplitudes k = pentagon_amplitudes(g);
  if (lambda.size() != 4) fail(Errc::DimensionMismatch, "expected a 4-vector");
  PentagonStep step;
  step.meets_condition = meets_pentagon_condition(k, lambda);
  if (!step.meets_condition) return step;
  GameRecord rec = play(g, lambda, Strategy::scripted(Word{0, 1, 2, 3}), 4);
  step.next = rec.final_position();
  return step;
}

} // namespace numgame

#endif
