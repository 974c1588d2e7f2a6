// Connected E-Coxeter families (A_n, B_n, D_n, E6-8, F4, H3, H4, I2(m)):
// canonical templates and recognition of a labeled graph as one of them.
//
// Canonical numbering (1-based):
//   A_n   path 1-2-...-n
//   B_n   path 1-...-n, label 4 on {n-1,n}
//   D_n   path 1-...-(n-1), node n joined to n-2
//   E_n   path 1-...-(n-1), node n joined to 3
//   F4    path 1-2-3-4, label 4 on {2,3}
//   H_n   path 1-...-n, label 5 on {1,2}
//   I2(m) nodes 1, 2 with label m (4 <= m < inf)

#ifndef NUMGAME_FAMILIES_HPP_
#define NUMGAME_FAMILIES_HPP_

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "egcm.hpp"

namespace numgame {

enum class Family { A, B, D, E, F, H, I2, NotECoxeter };

struct FamilyTag {
  Family family = Family::NotECoxeter;
  int rank = 0;
  int m = 0;  // label for I2(m)
  // canonical[v] = canonical 0-based index of input node v (empty if unmatched)
  std::vector<Node> canonical;

  bool matched() const { return family != Family::NotECoxeter; }

  std::string name() const {
    switch (family) {
      case Family::A: return "A" + std::to_string(rank);
      case Family::B: return "B" + std::to_string(rank);
      case Family::D: return "D" + std::to_string(rank);
      case Family::E: return "E" + std::to_string(rank);
      case Family::F: return "F4";
      case Family::H: return "H" + std::to_string(rank);
      case Family::I2: return "I2(" + std::to_string(m) + ")";
      case Family::NotECoxeter: return "NotECoxeter";
    }
    return "NotECoxeter";
  }

  // Input node carrying canonical index c.
  Node input_node(Node c) const {
    for (std::size_t v = 0; v < canonical.size(); ++v)
      if (canonical[v] == c) return static_cast<Node>(v);
    return -1;
  }
};

namespace impl {

inline void set_edge(Matrix& M, Node i, Node j, int m, bool asymmetric) {
  double c = 2.0 * std::cos(kPi / m);
  double a = -c, b = -c;  // M_ij, M_ji
  if (m == 4) { a = -1; b = -2; }
  else if (m == 6) { a = -1; b = -3; }
  else if (m == 3) { a = -1; b = -1; }
  if (asymmetric && m % 2 == 1) { a = -c / 2; b = -2 * c; }
  M[i][j] = a;
  M[j][i] = b;
}

inline Matrix identity2(int n) {
  Matrix M(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) M[i][i] = 2.0;
  return M;
}

} // namespace impl

// Template instance of a family. With `asymmetric`, every odd edge gets
// amplitudes (c/2, 2c) instead of (c, c); even edges are unchanged.
inline EGCMGraph family_graph(Family f, int rank, int m = 0, bool asymmetric = false) {
  using impl::set_edge;
  int n = rank;
  std::map<Edge, int> labels;
  auto path_edge = [&](Matrix& M, Node i, Node j, int lab) {
    set_edge(M, i, j, lab, asymmetric);
    labels[{std::min(i, j), std::max(i, j)}] = lab;
  };
  Matrix M;
  switch (f) {
    case Family::A:
      if (n < 1) fail(Errc::WrongGraphShape, "A_n needs n >= 1");
      M = impl::identity2(n);
      for (int i = 0; i + 1 < n; ++i) path_edge(M, i, i + 1, 3);
      break;
    case Family::B:
      if (n < 3) fail(Errc::WrongGraphShape, "B_n needs n >= 3");
      M = impl::identity2(n);
      for (int i = 0; i + 1 < n; ++i) path_edge(M, i, i + 1, i + 2 == n ? 4 : 3);
      break;
    case Family::D:
      if (n < 4) fail(Errc::WrongGraphShape, "D_n needs n >= 4");
      M = impl::identity2(n);
      for (int i = 0; i + 2 < n; ++i) path_edge(M, i, i + 1, 3);
      path_edge(M, n - 3, n - 1, 3);
      break;
    case Family::E:
      if (n < 6 || n > 8) fail(Errc::WrongGraphShape, "E_n needs 6 <= n <= 8");
      M = impl::identity2(n);
      for (int i = 0; i + 2 < n; ++i) path_edge(M, i, i + 1, 3);
      path_edge(M, 2, n - 1, 3);
      break;
    case Family::F:
      n = 4;
      M = impl::identity2(n);
      path_edge(M, 0, 1, 3);
      path_edge(M, 1, 2, 4);
      path_edge(M, 2, 3, 3);
      break;
    case Family::H:
      if (n != 3 && n != 4) fail(Errc::WrongGraphShape, "H_n needs n in {3,4}");
      M = impl::identity2(n);
      for (int i = 0; i + 1 < n; ++i) path_edge(M, i, i + 1, i == 0 ? 5 : 3);
      break;
    case Family::I2:
      if (m < 4) fail(Errc::WrongGraphShape, "I2(m) needs m >= 4");
      n = 2;
      M = impl::identity2(n);
      path_edge(M, 0, 1, m);
      break;
    case Family::NotECoxeter:
      fail(Errc::WrongGraphShape, "no template for NotECoxeter");
  }
  return EGCMGraph::from_matrix(M, labels);
}

// Parses "A3", "B4", "D4", "E6", "F4", "H3", "I2(5)" (case-insensitive).
inline EGCMGraph family_graph(const std::string& name, bool asymmetric = false) {
  std::string s;
  for (char c : name) if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(c));
  try {
    if (s.rfind("I2(", 0) == 0 && s.back() == ')')
      return family_graph(Family::I2, 2, std::stoi(s.substr(3, s.size() - 4)), asymmetric);
    if (s.size() >= 2) {
      int r = std::stoi(s.substr(1));
      switch (s[0]) {
        case 'A': return family_graph(Family::A, r, 0, asymmetric);
        case 'B': return family_graph(Family::B, r, 0, asymmetric);
        case 'D': return family_graph(Family::D, r, 0, asymmetric);
        case 'E': return family_graph(Family::E, r, 0, asymmetric);
        case 'F': if (r == 4) return family_graph(Family::F, 4, 0, asymmetric); break;
        case 'H': return family_graph(Family::H, r, 0, asymmetric);
        default: break;
      }
    }
  } catch (const std::logic_error&) {
  }
  fail(Errc::ParseError, "unknown family name '" + name + "'");
}

namespace impl {

// Walks from `start` away from `from` while the path stays unbranched.
inline std::vector<Node> walk_arm(const EGCMGraph& g, Node from, Node start) {
  std::vector<Node> arm{start};
  Node prev = from, cur = start;
  for (;;) {
    std::size_t deg = g.neighbors(cur).size();
    bool go_on = (cur == start && from < 0) ? deg == 1 : deg == 2;
    if (!go_on) break;
    Node next = -1;
    for (Node y : g.neighbors(cur))
      if (y != prev) next = y;
    arm.push_back(next);
    prev = cur;
    cur = next;
  }
  return arm;
}

inline FamilyTag tag_from_order(Family f, int rank, int m, const std::vector<Node>& order) {
  FamilyTag t;
  t.family = f;
  t.rank = rank;
  t.m = m;
  t.canonical.assign(order.size(), -1);
  for (std::size_t c = 0; c < order.size(); ++c) t.canonical[order[c]] = static_cast<Node>(c);
  return t;
}

} // namespace impl

// Recognizes the labeled graph as one of the family templates. Only the
// Coxeter labels matter; amplitudes are free within each label.
inline FamilyTag classify(const EGCMGraph& g) {
  if (!g.is_connected())
    fail(Errc::NotConnected, "classification needs a connected graph");
  const int n = g.size();
  FamilyTag none;
  if (n == 1) return impl::tag_from_order(Family::A, 1, 0, {0});
  if (static_cast<int>(g.edges().size()) != n - 1) return none;  // has a cycle
  for (const Edge& e : g.edges())
    if (g.label_unchecked(e.i, e.j).is_infinite()) return none;

  std::vector<Node> branch;
  for (Node v = 0; v < n; ++v) {
    auto d = g.neighbors(v).size();
    if (d > 3) return none;
    if (d == 3) branch.push_back(v);
  }
  if (branch.size() > 1) return none;

  if (n == 2) {
    int m = g.label_unchecked(0, 1).value();
    if (m == 3) return impl::tag_from_order(Family::A, 2, 0, {0, 1});
    return impl::tag_from_order(Family::I2, 2, m, {0, 1});
  }

  if (branch.empty()) {
    std::vector<Node> ends;
    for (Node v = 0; v < n; ++v)
      if (g.neighbors(v).size() == 1) ends.push_back(v);
    std::vector<Node> order = impl::walk_arm(g, -1, ends.front());
    std::vector<int> lab;
    for (int k = 0; k + 1 < n; ++k) lab.push_back(g.label_unchecked(order[k], order[k + 1]).value());
    std::vector<int> special;
    for (int k = 0; k + 1 < n; ++k) if (lab[k] != 3) special.push_back(k);
    if (special.empty()) return impl::tag_from_order(Family::A, n, 0, order);
    if (special.size() > 1) return none;
    int k = special.front(), m = lab[k];
    bool first = k == 0, last = k == n - 2;
    if (m == 4) {
      if (last) return impl::tag_from_order(Family::B, n, 0, order);
      if (first) {
        std::reverse(order.begin(), order.end());
        return impl::tag_from_order(Family::B, n, 0, order);
      }
      if (n == 4 && k == 1) return impl::tag_from_order(Family::F, 4, 0, order);
      return none;
    }
    if (m == 5 && (n == 3 || n == 4)) {
      if (first) return impl::tag_from_order(Family::H, n, 0, order);
      if (last) {
        std::reverse(order.begin(), order.end());
        return impl::tag_from_order(Family::H, n, 0, order);
      }
    }
    return none;
  }

  Node b = branch.front();
  for (const Edge& e : g.edges())
    if (g.label_unchecked(e.i, e.j).value() != 3) return none;
  std::vector<std::vector<Node>> arms;
  for (Node y : g.neighbors(b)) arms.push_back(impl::walk_arm(g, b, y));
  // Shortest first; ties broken by smallest leading node.
  std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.front() < y.front();
  });
  std::size_t a1 = arms[0].size(), a2 = arms[1].size(), a3 = arms[2].size();
  std::vector<Node> order;
  if (a1 == 1 && a2 == 1) {
    // D_n: long arm from its far end, branch, then the two short arms.
    order.assign(arms[2].rbegin(), arms[2].rend());
    order.push_back(b);
    order.push_back(arms[0][0]);
    order.push_back(arms[1][0]);
    return impl::tag_from_order(Family::D, n, 0, order);
  }
  if (a1 == 1 && a2 == 2 && a3 >= 2 && a3 <= 4) {
    // E_n: the length-2 arm as nodes 1,2, branch 3, long arm, then the leg.
    order.assign(arms[1].rbegin(), arms[1].rend());
    order.push_back(b);
    order.insert(order.end(), arms[2].begin(), arms[2].end());
    order.push_back(arms[0][0]);
    return impl::tag_from_order(Family::E, n, 0, order);
  }
  return none;
}

// Canonical (0-based) nodes whose fundamental positions are adjacency-free,
// per the classification of fully commutative quotients.
inline std::vector<Node> adjacency_free_table(const FamilyTag& t) {
  std::vector<Node> out;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < t.rank; ++i) out.push_back(i);
      break;
    case Family::B:
      out = {0, t.rank - 1};
      break;
    case Family::D:
      out = {0, t.rank - 2, t.rank - 1};
      break;
    case Family::I2:
      out = {0, 1};
      break;
    case Family::E:
      if (t.rank == 6) out = {0, 4};       // ends of the two long arms
      else if (t.rank == 7) out = {5};     // end of the longest arm
      break;
    case Family::H:
      if (t.rank == 3) out = {2};          // end away from the 5-edge
      break;
    case Family::F:
    case Family::NotECoxeter:
      break;
  }
  return out;
}

} // namespace numgame

#endif
