// Adjacency-free game sequences and positions, and the link to fully
// commutative quotients.

#ifndef NUMGAME_ADJACENCY_HPP_
#define NUMGAME_ADJACENCY_HPP_

#include <optional>
#include <unordered_set>
#include <vector>

#include "families.hpp"
#include "game.hpp"
#include "words.hpp"

namespace numgame {

struct AdjacentPair {
  std::size_t step = 0;  // index into intermediates
  Node i = -1, j = -1;
};

inline std::optional<AdjacentPair> adjacent_positive_pair(const EGCMGraph& g, const Position& p) {
  for (const Edge& e : g.edges())
    if (p[e.i] > 0 && p[e.j] > 0) return AdjacentPair{0, e.i, e.j};
  return std::nullopt;
}

inline std::optional<AdjacentPair> first_adjacency(const EGCMGraph& g, const GameRecord& rec) {
  for (std::size_t q = 0; q < rec.intermediates.size(); ++q)
    if (auto a = adjacent_positive_pair(g, rec.intermediates[q])) {
      a->step = q;
      return a;
    }
  return std::nullopt;
}

inline bool record_is_adjacency_free(const EGCMGraph& g, const GameRecord& rec) {
  return !first_adjacency(g, rec).has_value();
}

enum class Verdict { AdjacencyFree, NotAdjacencyFree, Undecided };
enum class AdjacencyMethod { ExhaustiveGames, FullCommutativity };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::AdjacencyFree: return "AdjacencyFree";
    case Verdict::NotAdjacencyFree: return "NotAdjacencyFree";
    case Verdict::Undecided: return "Undecided";
  }
  return "?";
}

inline const char* method_name(AdjacencyMethod m) {
  return m == AdjacencyMethod::ExhaustiveGames ? "ExhaustiveGames" : "FullCommutativity";
}

struct AdjacencyReport {
  Position position;
  Verdict verdict = Verdict::Undecided;
  std::optional<GameRecord> witness;  // a full game through the offending position
  std::optional<AdjacentPair> pair;
  AdjacencyMethod method = AdjacencyMethod::ExhaustiveGames;
};

// Searches every game from lambda. Positions already cleared are skipped,
// since the games below a position do not depend on how it was reached.
inline AdjacencyReport position_is_adjacency_free(const EGCMGraph& g, const Position& lambda,
                                                  int step_cap, std::size_t max_states = 2000000) {
  if (lambda.size() != static_cast<std::size_t>(g.size()))
    fail(Errc::DimensionMismatch, "position length differs from node count");
  const double threshold = snap_threshold_for(lambda);
  AdjacencyReport rep;
  rep.position = lambda;
  rep.method = AdjacencyMethod::ExhaustiveGames;
  GameRecord path = start_record(lambda, threshold);
  std::unordered_set<QuantizedKey, QuantizedKeyHash> cleared;
  bool undecided = false;

  std::function<bool()> dfs = [&]() -> bool {  // true when a witness is found
    const Position& cur = path.intermediates.back();
    if (adjacent_positive_pair(g, cur)) return true;
    QuantizedKey key = quantize(cur.values());
    if (cleared.count(key)) return false;
    std::vector<Node> options = fireable(g, cur);
    if (!options.empty() && (static_cast<int>(path.length()) >= step_cap || cleared.size() >= max_states)) {
      undecided = true;
      return false;
    }
    for (Node i : options) {
      push_firing(g, path, i, threshold);
      bool found = dfs();
      if (found) return true;
      path.firings.pop_back();
      path.fired_values.pop_back();
      path.intermediates.pop_back();
    }
    cleared.insert(std::move(key));
    return false;
  };

  if (dfs()) {
    // Finish the game greedily so the witness is a complete record.
    GameRecord rest = play(g, path.intermediates.back(), Strategy::greedy(), step_cap);
    for (std::size_t q = 0; q < rest.length(); ++q) push_firing(g, path, rest.firings[q], threshold);
    path.status = rest.status;
    rep.verdict = Verdict::NotAdjacencyFree;
    rep.pair = first_adjacency(g, path);
    rep.witness = std::move(path);
  } else {
    rep.verdict = undecided ? Verdict::Undecided : Verdict::AdjacencyFree;
  }
  return rep;
}

namespace impl {

// Whether x, y, x, ... (m letters) is a legal firing sequence from p.
inline bool alternation_is_legal(const EGCMGraph& g, Position p, Node x, Node y, int m,
                                 double threshold) {
  for (int r = 0; r < m; ++r) {
    Node z = r % 2 == 0 ? x : y;
    if (!is_fireable(p, z)) return false;
    p = fire(g, p, z, threshold);
  }
  return true;
}

} // namespace impl

// Every element of W^J is fully commutative. W^J is closed under taking
// prefixes of reduced words, so it has a non-FC element exactly when some
// u in W^J has u<x,y>_m in W^J too, i.e. when x,y,x,... is legal from u.lambda_J.
// The orbit is searched breadth first and the search stops at the first hit.
inline bool quotient_is_fully_commutative(const EGCMGraph& g, std::vector<Node> J,
                                          const Caps& caps = {}) {
  check_node_set(g, J);
  require_finite_parabolic(g, J, caps);
  std::vector<std::pair<Node, Node>> braids;
  for (const Edge& e : g.edges()) {
    CoxeterLabel m = g.label_unchecked(e.i, e.j);
    if (m.is_finite() && m.value() >= 3) {
      braids.push_back({e.i, e.j});
      braids.push_back({e.j, e.i});
    }
  }
  Position start = Position::jc_dominant(g.size(), J);
  const double threshold = snap_threshold_for(start);
  std::vector<Position> queue{start};
  std::vector<int> depth{0};
  std::unordered_set<QuantizedKey, QuantizedKeyHash> seen{quantize(start.values())};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Position p = queue[head];
    for (auto [x, y] : braids)
      if (impl::alternation_is_legal(g, p, x, y, g.label_unchecked(x, y).value(), threshold))
        return false;
    std::vector<Node> options = fireable(g, p);
    if (options.empty()) continue;
    if (depth[head] >= caps.max_length || queue.size() >= caps.max_elements)
      fail(Errc::CapExceeded, "quotient enumeration hit its caps");
    for (Node i : options) {
      Position next = fire(g, p, i, threshold);
      if (seen.insert(quantize(next.values())).second) {
        queue.push_back(std::move(next));
        depth.push_back(depth[head] + 1);
      }
    }
  }
  return true;
}

// The same question answered element by element with is_fully_commutative.
inline bool quotient_is_fully_commutative_elementwise(const EGCMGraph& g, const std::vector<Node>& J,
                                                      const Caps& caps = {}) {
  QuotientTable q = enumerate_quotient(g, J, caps);
  if (!q.complete()) fail(Errc::CapExceeded, "quotient enumeration hit its caps");
  for (std::size_t k = 0; k < q.table.size(); ++k)
    if (!is_fully_commutative(g, element_of(q.table, static_cast<int>(k)))) return false;
  return true;
}

struct FundamentalsReport {
  AdjacencyMethod method = AdjacencyMethod::FullCommutativity;
  FamilyTag tag;
  std::vector<Verdict> verdicts;  // per input node
  std::vector<Node> adjacency_free;
  std::optional<bool> matches_table;  // recognized families only
};

inline std::vector<Node> all_but(int n, Node i) {
  std::vector<Node> J;
  for (int j = 0; j < n; ++j) if (j != i) J.push_back(j);
  return J;
}

// Which fundamental positions are adjacency-free. Recognized families go
// through W^J full commutativity; anything else through exhaustive games,
// where a node may come back Undecided.
inline FundamentalsReport adjacency_free_fundamentals(const EGCMGraph& g, const Caps& caps = {},
                                                      int step_cap = 0) {
  FundamentalsReport rep;
  const int n = g.size();
  if (g.is_connected()) rep.tag = classify(g);
  rep.verdicts.assign(n, Verdict::Undecided);
  if (rep.tag.matched()) {
    rep.method = AdjacencyMethod::FullCommutativity;
    for (Node i = 0; i < n; ++i)
      rep.verdicts[i] = quotient_is_fully_commutative(g, all_but(n, i), caps)
                            ? Verdict::AdjacencyFree : Verdict::NotAdjacencyFree;
  } else {
    rep.method = AdjacencyMethod::ExhaustiveGames;
    int cap = step_cap > 0 ? step_cap : default_step_cap(g);
    for (Node i = 0; i < n; ++i)
      rep.verdicts[i] = position_is_adjacency_free(g, Position::fundamental(n, i), cap).verdict;
  }
  for (Node i = 0; i < n; ++i)
    if (rep.verdicts[i] == Verdict::AdjacencyFree) rep.adjacency_free.push_back(i);
  if (rep.tag.matched()) {
    std::vector<Node> expected;
    for (Node c : adjacency_free_table(rep.tag)) expected.push_back(rep.tag.input_node(c));
    std::sort(expected.begin(), expected.end());
    rep.matches_table = expected == rep.adjacency_free;
  }
  return rep;
}

} // namespace numgame

#endif
