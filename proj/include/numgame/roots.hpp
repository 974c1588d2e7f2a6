// Geometric representation: the bilinear form B(a_i,a_j) = M_ij/2, simple
// reflections, root systems, inversion sets and root functionals.

#ifndef NUMGAME_ROOTS_HPP_
#define NUMGAME_ROOTS_HPP_

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_map>
#include <vector>

#include "egcm.hpp"
#include "game.hpp"
#include "words.hpp"

namespace numgame {

enum class RootSign { Positive, Negative, Unsigned };

inline const char* sign_name(RootSign s) {
  switch (s) {
    case RootSign::Positive: return "Positive";
    case RootSign::Negative: return "Negative";
    case RootSign::Unsigned: return "Unsigned";
  }
  return "?";
}

// Vector in V written in the simple-root basis.
class RootVector {
public:
  RootVector() = default;
  explicit RootVector(std::vector<double> c) : c_(std::move(c)) {
    for (double& x : c_) if (std::fabs(x) < kSignTolerance) x = 0.0;
  }
  RootVector(std::initializer_list<double> c) : RootVector(std::vector<double>(c)) {}
  static RootVector simple(std::size_t n, Node i) {
    std::vector<double> c(n, 0.0);
    c.at(i) = 1.0;
    return RootVector(std::move(c));
  }

  std::size_t size() const { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  const std::vector<double>& coeffs() const { return c_; }

  // Throws Internal on mixed signs.
  RootSign sign() const {
    bool pos = false, neg = false;
    for (double x : c_) {
      if (x > kSignTolerance) pos = true;
      if (x < -kSignTolerance) neg = true;
    }
    if (pos && neg) fail(Errc::Internal, "root with mixed-sign coefficients");
    return pos ? RootSign::Positive : neg ? RootSign::Negative : RootSign::Unsigned;
  }
  RootVector negated() const { return scaled(-1.0); }
  RootVector scaled(double r) const {
    std::vector<double> c = c_;
    for (double& x : c) x *= r;
    return RootVector(std::move(c));
  }
  QuantizedKey key() const { return quantize(c_); }

  friend bool operator==(const RootVector& a, const RootVector& b) { return a.key() == b.key(); }

private:
  std::vector<double> c_;
};

inline std::ostream& operator<<(std::ostream& os, const RootVector& r) {
  return os << Position(r.coeffs());
}

inline void check_dim(const EGCMGraph& g, std::size_t k) {
  if (k != static_cast<std::size_t>(g.size()))
    fail(Errc::DimensionMismatch, "vector length differs from node count");
}

inline double bilinear_form(const EGCMGraph& g, const RootVector& u, const RootVector& v) {
  check_dim(g, u.size());
  check_dim(g, v.size());
  double s = 0;
  for (int i = 0; i < g.size(); ++i)
    if (u[i] != 0)
      for (int j = 0; j < g.size(); ++j) s += u[i] * v[j] * g.amplitude(i, j);
  return 0.5 * s;
}

// S_i(v) = v - 2B(a_i, v) a_i.
inline RootVector reflect(const EGCMGraph& g, Node i, const RootVector& v) {
  g.check_node(i);
  check_dim(g, v.size());
  double t = 0;
  for (int j = 0; j < g.size(); ++j) t += g.amplitude(i, j) * v[j];
  std::vector<double> c = v.coeffs();
  c[i] -= t;
  return RootVector(std::move(c));
}

// w.v for w = s_ip ... s_i1, i.e. word[0] acts first.
inline RootVector act(const EGCMGraph& g, const Word& s, const RootVector& v) {
  RootVector r = v;
  for (Node x : s) r = reflect(g, x, r);
  return r;
}

// <lambda, v>: the pairing between positions and V.
inline double pairing(const Position& lambda, const RootVector& v) {
  double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += lambda[i] * v[i];
  return s;
}

inline constexpr std::size_t kRootCap = 10000;

struct RootSystem {
  EGCMGraph graph;
  std::vector<RootVector> positives;  // discovery order
  bool complete = false;
  std::size_t cap_used = 0;           // roots generated, both signs
  std::unordered_map<QuantizedKey, int, QuantizedKeyHash> index;

  // Index of the positive root +-v, or -1.
  int find(const RootVector& v) const {
    RootVector p = v.sign() == RootSign::Negative ? v.negated() : v;
    auto it = index.find(p.key());
    return it == index.end() ? -1 : it->second;
  }
  void require_complete() const {
    if (!complete) fail(Errc::IncompleteRootSystem, "root system enumeration hit its cap");
  }
};

// Closure of the simple roots under every S_i.
inline RootSystem generate_root_system(const EGCMGraph& g, std::size_t cap = kRootCap) {
  RootSystem rs;
  rs.graph = g;
  std::unordered_map<QuantizedKey, char, QuantizedKeyHash> seen;
  std::deque<RootVector> queue;
  auto visit = [&](const RootVector& r) {
    if (!seen.emplace(r.key(), 1).second) return;
    ++rs.cap_used;
    queue.push_back(r);
    if (r.sign() == RootSign::Positive) {
      rs.index.emplace(r.key(), static_cast<int>(rs.positives.size()));
      rs.positives.push_back(r);
    }
  };
  for (int i = 0; i < g.size(); ++i) visit(RootVector::simple(g.size(), i));
  while (!queue.empty()) {
    if (rs.cap_used > cap) return rs;
    RootVector r = queue.front();
    queue.pop_front();
    for (int i = 0; i < g.size(); ++i) visit(reflect(g, i, r));
  }
  rs.complete = rs.cap_used <= cap;
  return rs;
}

// K with v = K u, if one exists and K > 0.
inline std::optional<double> positive_ratio(const RootVector& v, const RootVector& u) {
  std::optional<double> k;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if ((u[i] == 0) != (v[i] == 0)) return std::nullopt;
    if (u[i] == 0) continue;
    double r = v[i] / u[i];
    if (!k) k = r;
    else if (std::fabs(r - *k) > kKeyGrid * std::max(1.0, std::fabs(*k))) return std::nullopt;
  }
  if (!k || *k <= 0) return std::nullopt;
  return k;
}

// The set of positive roots that are multiples of alpha (indices into positives).
inline std::vector<int> positive_multiples(const RootSystem& rs, const RootVector& alpha) {
  rs.require_complete();
  RootVector a = alpha.sign() == RootSign::Negative ? alpha.negated() : alpha;
  std::vector<int> out;
  for (std::size_t k = 0; k < rs.positives.size(); ++k)
    if (positive_ratio(rs.positives[k], a)) out.push_back(static_cast<int>(k));
  return out;
}

// |S(a_x)| for the ON-component; needs the component unital ON-cyclic.
inline int f_value(const RootSystem& rs, const std::vector<Node>& component) {
  if (!is_unital_on_cyclic(rs.graph, component).unital)
    fail(Errc::NotUnitalONCyclic, "component is not unital ON-cyclic");
  rs.require_complete();
  return static_cast<int>(positive_multiples(rs, RootVector::simple(rs.graph.size(), component.front())).size());
}

// (f_1, f_2): min and max f over the ON-components meeting `nodes`.
inline std::pair<int, int> f_bounds(const RootSystem& rs, const std::vector<Node>& nodes) {
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& comp : on_components(rs.graph)) {
    bool touched = false;
    for (Node x : nodes) touched = touched || std::binary_search(comp.begin(), comp.end(), x);
    if (!touched) continue;
    int f = f_value(rs, comp);
    lo = first ? f : std::min(lo, f);
    hi = first ? f : std::max(hi, f);
    first = false;
  }
  return {lo, hi};
}

// N(w): indices of positive roots sent negative by w.
inline std::vector<int> inversion_set(const RootSystem& rs, const Word& w) {
  rs.require_complete();
  std::vector<int> out;
  for (std::size_t k = 0; k < rs.positives.size(); ++k)
    if (act(rs.graph, w, rs.positives[k]).sign() == RootSign::Negative) out.push_back(static_cast<int>(k));
  return out;
}

inline std::vector<int> inversion_set(const RootSystem& rs, const GroupElement& w) {
  return inversion_set(rs, w.witness);
}

struct RootFunctional {
  RootVector beta;
  double value = 0;
};

// beta_q = s_i1 ... s_i(q-1).a_iq and <lambda, beta_q> along a legal sequence.
inline std::vector<RootFunctional> root_functionals(const EGCMGraph& g, const Position& lambda,
                                                    const Word& s) {
  check_dim(g, lambda.size());
  const double threshold = snap_threshold_for(lambda);
  Position p = lambda;
  snap(p, threshold);
  std::vector<RootFunctional> out;
  // prefix_rev holds (i_{q-1}, ..., i_1) so that act applies s_i(q-1) first.
  std::vector<Node> prefix_rev;
  for (std::size_t q = 0; q < s.size(); ++q) {
    Node x = s[q];
    g.check_node(x);
    if (!is_fireable(p, x))
      fail(Errc::IllegalFiringAt, "firing " + std::to_string(q + 1) + " is not legal", q);
    RootVector beta = act(g, Word(prefix_rev), RootVector::simple(g.size(), x));
    out.push_back({beta, pairing(lambda, beta)});
    p = fire(g, p, x, threshold);
    prefix_rev.insert(prefix_rev.begin(), x);
  }
  return out;
}

struct EquivalenceReport {
  bool no_odd_asymmetries = false;         // (1)
  bool unital_with_f_one = false;          // (2)
  bool betas_equal_positive_roots = false; // (3)
  bool length_equals_root_count = false;   // (4)
  bool functionals_cover_roots = false;    // (5)
  int longest_length = 0;
  std::size_t positive_root_count = 0;
  Word longest_word;

  bool all_true() const {
    return no_odd_asymmetries && unital_with_f_one && betas_equal_positive_roots &&
           length_equals_root_count && functionals_cover_roots;
  }
  bool all_false() const {
    return !no_odd_asymmetries && !unital_with_f_one && !betas_equal_positive_roots &&
           !length_equals_root_count && !functionals_cover_roots;
  }
  bool agree() const { return all_true() || all_false(); }
};

namespace impl {

inline bool covers(const RootSystem& rs, const std::vector<RootFunctional>& fs, bool exact) {
  std::vector<char> hit(rs.positives.size(), 0);
  for (const auto& f : fs) {
    int k = rs.find(f.beta);
    if (k < 0 || f.beta.sign() != RootSign::Positive) return false;
    if (exact && hit[k]) return false;
    hit[k] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

} // namespace impl

// Evaluates the five conditions independently.
inline EquivalenceReport equivalence_report(const EGCMGraph& g, int step_cap = 100000,
                                        std::size_t root_cap = kRootCap) {
  EquivalenceReport r;
  GroupElement w0 = longest_element_by_play(g, step_cap);
  r.longest_length = w0.length;
  r.longest_word = w0.witness;
  RootSystem rs = generate_root_system(g, root_cap);
  rs.require_complete();
  r.positive_root_count = rs.positives.size();

  r.no_odd_asymmetries = odd_asymmetries(g).empty();

  r.unital_with_f_one = true;
  for (const auto& comp : on_components(g)) {
    if (!is_unital_on_cyclic(g, comp).unital || f_value(rs, comp) != 1) {
      r.unital_with_f_one = false;
      break;
    }
  }

  r.betas_equal_positive_roots =
      impl::covers(rs, root_functionals(g, Position::ones(g.size()), w0.witness), true);

  r.length_equals_root_count = static_cast<std::size_t>(w0.length) == rs.positives.size();

  // A different strongly dominant start, played to the end.
  std::vector<double> v(g.size());
  for (int i = 0; i < g.size(); ++i) v[i] = 1.0 + 0.5 * i;
  Position lambda(v);
  GameRecord game = play(g, lambda, Strategy::greedy(), step_cap);
  r.functionals_cover_roots = game.status == GameStatus::Terminal &&
                              impl::covers(rs, root_functionals(g, lambda, game.word()), false);
  return r;
}

} // namespace numgame

#endif
