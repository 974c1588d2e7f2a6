// Words in the Coxeter generators: braid moves, Tits' word problem, reduced
// words, commutation classes, and group / quotient enumeration through
// orbits of the numbers game.

#ifndef NUMGAME_WORDS_HPP_
#define NUMGAME_WORDS_HPP_

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "egcm.hpp"
#include "game.hpp"

namespace numgame {

inline constexpr std::size_t kTitsBudget = 1000000;

namespace impl {

// Words are packed into strings (one byte per letter) for hashing.
inline std::string pack(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Node x : w) s.push_back(static_cast<char>(x));
  return s;
}

inline Word unpack(const std::string& s) {
  std::vector<Node> v;
  v.reserve(s.size());
  for (char c : s) v.push_back(static_cast<unsigned char>(c));
  return Word(std::move(v));
}

// Length of the alternating run x,y,x,... starting at s[k] with s[k+1] = y.
inline std::size_t alternating_run(const std::string& s, std::size_t k) {
  if (k + 1 >= s.size() || s[k] == s[k + 1]) return k < s.size() ? 1 : 0;
  std::size_t r = 2;
  while (k + r < s.size() && s[k + r] == s[k + r - 2]) ++r;
  return r;
}

// Calls f(neighbor) for each word one braid move away from s.
// want(m) selects which labels count: commuting only (m == 2) or all finite.
template <class Want, class F>
void for_each_braid_move(const EGCMGraph& g, const std::string& s, Want want, F f) {
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    Node x = static_cast<unsigned char>(s[k]), y = static_cast<unsigned char>(s[k + 1]);
    if (x == y) continue;
    CoxeterLabel lab = g.label_unchecked(x, y);
    if (lab.is_infinite() || !want(lab.value())) continue;
    std::size_t m = static_cast<std::size_t>(lab.value());
    if (alternating_run(s, k) < m) continue;
    std::string t = s;
    for (std::size_t r = 0; r < m; ++r) t[k + r] = static_cast<char>(r % 2 == 0 ? y : x);
    f(std::move(t));
  }
}

inline bool any_label(int) { return true; }
inline bool commuting_label(int m) { return m == 2; }

} // namespace impl

// Words one braid move (any finite label) away from w.
inline std::vector<Word> braid_neighbors(const EGCMGraph& g, const Word& w) {
  std::vector<Word> out;
  impl::for_each_braid_move(g, impl::pack(w), impl::any_label,
                            [&](std::string t) { out.push_back(impl::unpack(t)); });
  return out;
}

// True if w contains <x,y>_m with 3 <= m < inf as a consecutive subword.
inline bool has_braid_subword(const EGCMGraph& g, const Word& w) {
  std::string s = impl::pack(w);
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    Node x = static_cast<unsigned char>(s[k]), y = static_cast<unsigned char>(s[k + 1]);
    if (x == y) continue;
    CoxeterLabel lab = g.label_unchecked(x, y);
    if (lab.is_finite() && lab.value() >= 3 &&
        impl::alternating_run(s, k) >= static_cast<std::size_t>(lab.value()))
      return true;
  }
  return false;
}

// Legal from the all-ones position, i.e. reduced.
inline bool is_reduced(const EGCMGraph& g, const Word& s) {
  Position p = Position::ones(g.size());
  const double threshold = snap_threshold_for(p);
  for (Node x : s) {
    g.check_node(x);
    if (!is_fireable(p, x)) return false;
    p = fire(g, p, x, threshold);
  }
  return true;
}

// Closure of a word under braid moves and, if `deletions`, removal of (x,x).
// Throws SearchBudgetExceeded past `budget` words.
inline std::unordered_set<std::string> word_closure(const EGCMGraph& g, const Word& w,
                                                    bool deletions,
                                                    std::size_t budget = kTitsBudget) {
  std::unordered_set<std::string> seen;
  std::deque<std::string> queue;
  auto visit = [&](std::string t) {
    if (seen.insert(t).second) {
      if (seen.size() > budget)
        fail(Errc::SearchBudgetExceeded, "word closure exceeds " + std::to_string(budget) + " words");
      queue.push_back(std::move(t));
    }
  };
  for (Node x : w) g.check_node(x);
  visit(impl::pack(w));
  while (!queue.empty()) {
    std::string s = std::move(queue.front());
    queue.pop_front();
    impl::for_each_braid_move(g, s, impl::any_label, visit);
    if (deletions)
      for (std::size_t k = 0; k + 1 < s.size(); ++k)
        if (s[k] == s[k + 1]) visit(s.substr(0, k) + s.substr(k + 2));
  }
  return seen;
}

// psi(s) == psi(t), by growing both simplification closures breadth-first
// until they meet or both are exhausted.
inline bool tits_equal(const EGCMGraph& g, const Word& s, const Word& t,
                       std::size_t budget = kTitsBudget) {
  for (Node x : s) g.check_node(x);
  for (Node x : t) g.check_node(x);
  if (s == t) return true;
  struct Side {
    std::unordered_set<std::string> seen;
    std::deque<std::string> queue;
  } a, b;
  a.seen.insert(impl::pack(s));
  a.queue.push_back(impl::pack(s));
  b.seen.insert(impl::pack(t));
  b.queue.push_back(impl::pack(t));
  bool met = false;
  auto step = [&](Side& me, const Side& other) {
    std::string cur = std::move(me.queue.front());
    me.queue.pop_front();
    auto visit = [&](std::string u) {
      if (met || !me.seen.insert(u).second) return;
      if (other.seen.count(u)) met = true;
      if (a.seen.size() + b.seen.size() > budget)
        fail(Errc::SearchBudgetExceeded, "tits_equal search exceeds budget");
      me.queue.push_back(std::move(u));
    };
    impl::for_each_braid_move(g, cur, impl::any_label, visit);
    for (std::size_t k = 0; k + 1 < cur.size() && !met; ++k)
      if (cur[k] == cur[k + 1]) visit(cur.substr(0, k) + cur.substr(k + 2));
  };
  while (!met && (!a.queue.empty() || !b.queue.empty())) {
    bool a_turn = !a.queue.empty() && (b.queue.empty() || a.seen.size() <= b.seen.size());
    if (a_turn) step(a, b);
    else step(b, a);
  }
  return met;
}

// A reduced word for psi(s): within the braid class, delete the leftmost
// (x,x) of the lexicographically first word that has one; repeat.
inline Word simplify(const EGCMGraph& g, const Word& s, std::size_t budget = kTitsBudget) {
  Word cur = s;
  for (;;) {
    auto cls = word_closure(g, cur, false, budget);
    std::vector<std::string> sorted(cls.begin(), cls.end());
    std::sort(sorted.begin(), sorted.end());
    bool reduced_once = false;
    for (const std::string& u : sorted) {
      for (std::size_t k = 0; k + 1 < u.size(); ++k)
        if (u[k] == u[k + 1]) {
          cur = impl::unpack(u.substr(0, k) + u.substr(k + 2));
          reduced_once = true;
          break;
        }
      if (reduced_once) break;
    }
    if (!reduced_once) return impl::unpack(sorted.front());
  }
}

// A group element, identified by w.rho for rho = (1,...,1).
struct GroupElement {
  Position key;
  Word witness;  // reduced; firing order
  int length = 0;

  // Element psi(word); the witness is recovered from the key by descent.
  static GroupElement from_word(const EGCMGraph& g, const Word& word);
  static GroupElement from_key(const EGCMGraph& g, const Position& key);

  bool same_as(const GroupElement& o) const { return quantize(key.values()) == quantize(o.key.values()); }
};

// Strip descents: while some entry of mu = w.rho is negative, replace w by
// s_i w. Letters come out left factor first, so the firing word is reversed.
inline GroupElement GroupElement::from_key(const EGCMGraph& g, const Position& key) {
  const double threshold = snap_threshold_for(Position::ones(g.size()));
  Position mu = key;
  std::vector<Node> left;
  for (std::size_t guard = 0;; ++guard) {
    if (guard > 100000) fail(Errc::Internal, "descent did not terminate");
    Node d = -1;
    for (int i = 0; i < g.size(); ++i)
      if (mu[i] < -threshold) { d = i; break; }
    if (d < 0) break;
    mu = reflect_position(g, mu, d);
    snap(mu, threshold);
    left.push_back(d);
  }
  GroupElement e;
  e.key = key;
  e.witness = Word(std::vector<Node>(left.rbegin(), left.rend()));
  e.length = static_cast<int>(left.size());
  return e;
}

inline GroupElement GroupElement::from_word(const EGCMGraph& g, const Word& word) {
  for (Node x : word) g.check_node(x);
  return from_key(g, act_on_position(g, Position::ones(g.size()), word));
}

// R(w): the braid class of the witness.
inline std::vector<Word> reduced_words(const EGCMGraph& g, const GroupElement& w,
                                       std::size_t budget = kTitsBudget) {
  auto cls = word_closure(g, w.witness, false, budget);
  std::vector<std::string> sorted(cls.begin(), cls.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Word> out;
  for (const auto& s : sorted) out.push_back(impl::unpack(s));
  return out;
}

// Partition of a set of words into classes under commuting moves. Classes are
// sorted internally and ordered by their first word.
inline std::vector<std::vector<Word>> commutativity_classes(const EGCMGraph& g,
                                                            const std::vector<Word>& words) {
  std::unordered_map<std::string, int> index;
  for (std::size_t k = 0; k < words.size(); ++k) index.emplace(impl::pack(words[k]), static_cast<int>(k));
  std::vector<int> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t k = 0; k < words.size(); ++k)
    impl::for_each_braid_move(g, impl::pack(words[k]), impl::commuting_label, [&](std::string t) {
      auto it = index.find(t);
      if (it != index.end()) parent[find(static_cast<int>(k))] = find(it->second);
    });
  std::map<int, std::vector<Word>> groups;
  for (std::size_t k = 0; k < words.size(); ++k) groups[find(static_cast<int>(k))].push_back(words[k]);
  std::vector<std::vector<Word>> out;
  for (auto& [root, cls] : groups) {
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<Word>> commutativity_classes(const EGCMGraph& g, const GroupElement& w,
                                                            std::size_t budget = kTitsBudget) {
  return commutativity_classes(g, reduced_words(g, w, budget));
}

// No reduced word contains <x,y>_m, 3 <= m < inf. It suffices to search the
// commutation class of the witness: if R(w) has several classes, every class
// has a word admitting a non-commuting braid move.
inline bool is_fully_commutative(const EGCMGraph& g, const GroupElement& w,
                                 std::size_t budget = kTitsBudget) {
  std::unordered_set<std::string> seen;
  std::vector<std::string> stack{impl::pack(w.witness)};
  seen.insert(stack.back());
  while (!stack.empty()) {
    std::string s = std::move(stack.back());
    stack.pop_back();
    if (has_braid_subword(g, impl::unpack(s))) return false;
    impl::for_each_braid_move(g, s, impl::commuting_label, [&](std::string t) {
      if (seen.insert(t).second) {
        if (seen.size() > budget) fail(Errc::SearchBudgetExceeded, "commutation class exceeds budget");
        stack.push_back(std::move(t));
      }
    });
  }
  return true;
}

// Orbit of a dominant position under legal play, breadth first. Every legal
// sequence from a dominant position is reduced, so BFS depth is length.
struct OrbitTable {
  Position start;
  std::vector<Position> positions;
  std::vector<int> parent;  // -1 for the start
  std::vector<Node> letter;
  std::vector<int> length;
  std::unordered_map<QuantizedKey, int, QuantizedKeyHash> index;
  bool complete = false;

  std::size_t size() const { return positions.size(); }
  int max_length() const { return length.empty() ? 0 : length.back(); }

  Word witness(int k) const {
    std::vector<Node> v;
    for (; parent[k] >= 0; k = parent[k]) v.push_back(letter[k]);
    return Word(std::vector<Node>(v.rbegin(), v.rend()));
  }
  int find(const Position& p) const {
    auto it = index.find(quantize(p.values()));
    return it == index.end() ? -1 : it->second;
  }
};

inline OrbitTable orbit_table(const EGCMGraph& g, const Position& start, const Caps& caps) {
  if (start.size() != static_cast<std::size_t>(g.size()))
    fail(Errc::DimensionMismatch, "position length differs from node count");
  const double threshold = snap_threshold_for(start);
  OrbitTable t;
  t.start = start;
  snap(t.start, threshold);
  auto add = [&](Position p, int parent, Node letter, int len) {
    auto [it, fresh] = t.index.emplace(quantize(p.values()), static_cast<int>(t.positions.size()));
    if (!fresh) return;
    t.positions.push_back(std::move(p));
    t.parent.push_back(parent);
    t.letter.push_back(letter);
    t.length.push_back(len);
  };
  add(t.start, -1, -1, 0);
  for (std::size_t head = 0; head < t.positions.size(); ++head) {
    std::vector<Node> options = fireable(g, t.positions[head]);
    if (options.empty()) continue;
    if (t.length[head] >= caps.max_length || t.positions.size() >= caps.max_elements) return t;
    for (Node i : options) {
      add(fire(g, t.positions[head], i, threshold), static_cast<int>(head), i, t.length[head] + 1);
      if (t.positions.size() > caps.max_elements) return t;
    }
  }
  t.complete = true;
  return t;
}

// Elements of W with lengths and witnesses. A partial table comes back with
// complete == false.
inline OrbitTable enumerate_group(const EGCMGraph& g, const Caps& caps = {}) {
  return orbit_table(g, Position::ones(g.size()), caps);
}

inline GroupElement element_of(const OrbitTable& t, int k) {
  return {t.positions[k], t.witness(k), t.length[k]};
}

struct QuotientTable {
  std::vector<Node> J;
  OrbitTable table;
  int longest = -1;  // index of (w0)^J when complete
  bool complete() const { return table.complete; }
};

inline void check_node_set(const EGCMGraph& g, const std::vector<Node>& J) {
  for (Node j : J) g.check_node(j);
}

// W_J is finite iff a game on the J-induced subgraph from its all-ones
// position converges; the game must end within caps.max_length firings.
inline void require_finite_parabolic(const EGCMGraph& g, const std::vector<Node>& J, const Caps& caps) {
  if (J.empty()) return;
  EGCMGraph sub = g.induced(J);
  GameRecord r = play(sub, Position::ones(sub.size()), Strategy::greedy(), caps.max_length);
  if (r.status != GameStatus::Terminal)
    fail(Errc::ParabolicNotFinite, "W_J is not finite within caps");
}

// W^J via play from the J^c-dominant position with ones off J.
inline QuotientTable enumerate_quotient(const EGCMGraph& g, std::vector<Node> J, const Caps& caps = {}) {
  check_node_set(g, J);
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  require_finite_parabolic(g, J, caps);
  QuotientTable q;
  q.J = J;
  q.table = orbit_table(g, Position::jc_dominant(g.size(), J), caps);
  if (q.table.complete) {
    for (std::size_t k = 0; k < q.table.size(); ++k)
      if (fireable(g, q.table.positions[k]).empty()) {
        if (q.longest >= 0) fail(Errc::Internal, "two terminal positions in a finite quotient");
        q.longest = static_cast<int>(k);
      }
  }
  return q;
}

// Longest element from the full group table.
inline GroupElement longest_element(const EGCMGraph& g, const Caps& caps = {}) {
  OrbitTable t = enumerate_group(g, caps);
  if (!t.complete) fail(Errc::GroupNotFiniteWithinCaps, "group enumeration hit its caps");
  return element_of(t, static_cast<int>(t.size()) - 1);
}

// w0 from one game from rho; cheaper than enumeration for large groups.
inline GroupElement longest_element_by_play(const EGCMGraph& g, int step_cap = 100000) {
  GameRecord r = play(g, Position::ones(g.size()), Strategy::greedy(), step_cap);
  if (r.status != GameStatus::Terminal)
    fail(Errc::GroupNotFiniteWithinCaps, "game from the all-ones position exceeded the step cap");
  return {r.final_position(), r.word(), static_cast<int>(r.length())};
}

// w = w^J w_J with w^J in W^J and w_J in W_J.
struct CosetSplit {
  GroupElement quotient_part;
  GroupElement parabolic_part;
};

inline CosetSplit coset_decompose(const EGCMGraph& g, const Word& s, std::vector<Node> J,
                                  const Caps& caps = {}) {
  QuotientTable q = enumerate_quotient(g, J, caps);
  if (!q.complete()) fail(Errc::CapExceeded, "quotient enumeration hit its caps");
  Position lambda = act_on_position(g, q.table.start, s);
  int k = q.table.find(lambda);
  if (k < 0) fail(Errc::Internal, "w.lambda_J not found in the quotient table");
  CosetSplit out;
  out.quotient_part = GroupElement::from_word(g, q.table.witness(k));
  // w_J = (w^J)^{-1} w, acting on rho.
  Position rho_w = act_on_position(g, Position::ones(g.size()), s);
  Position key = act_on_position(g, rho_w, out.quotient_part.witness.reversed());
  out.parabolic_part = GroupElement::from_key(g, key);
  for (Node x : out.parabolic_part.witness)
    if (!std::binary_search(q.J.begin(), q.J.end(), x))
      fail(Errc::Internal, "parabolic part leaves W_J");
  return out;
}

} // namespace numgame

#endif
