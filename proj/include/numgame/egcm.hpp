// E-GCM graphs: validated amplitude matrices, Coxeter labels and the
// odd-neighbor (ON) structure.

#ifndef NUMGAME_EGCM_HPP_
#define NUMGAME_EGCM_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace numgame {

// Coxeter label m_ij: an integer >= 2, or infinity.
class CoxeterLabel {
public:
  constexpr CoxeterLabel() = default;
  constexpr explicit CoxeterLabel(int m) : m_(m) {}
  static constexpr CoxeterLabel infinity() { return CoxeterLabel(0); }

  constexpr bool is_infinite() const { return m_ == 0; }
  constexpr bool is_finite() const { return m_ != 0; }
  // Only valid when finite.
  constexpr int value() const { return m_; }
  constexpr bool is_odd() const { return m_ != 0 && m_ % 2 == 1; }

  friend constexpr bool operator==(CoxeterLabel, CoxeterLabel) = default;

  std::string str() const { return is_infinite() ? "inf" : std::to_string(m_); }

private:
  int m_ = 2;
};

inline double four_cos_sq(int k) {
  double c = std::cos(kPi / k);
  return 4.0 * c * c;
}

// Label from an amplitude product pq > 0. Throws InvalidAmplitudeProduct.
inline CoxeterLabel label_from_product(double product) {
  if (product >= 4.0 - kLabelTolerance)
    return CoxeterLabel::infinity();
  for (int k = 3; k <= kMaxInferredLabel; ++k)
    if (std::fabs(product - four_cos_sq(k)) <= kLabelTolerance)
      return CoxeterLabel(k);
  fail(Errc::InvalidAmplitudeProduct,
       "amplitude product " + std::to_string(product) +
       " is below 4 and matches no 4cos^2(pi/k), k <= " + std::to_string(kMaxInferredLabel));
}

struct Edge {
  Node i;
  Node j;  // i < j
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Matrix = std::vector<std::vector<double>>;

// A validated E-GCM graph. Immutable once constructed.
class EGCMGraph {
public:
  EGCMGraph() = default;

  // Validates M. `explicit_labels` maps an edge to a label given by the user;
  // it overrides inference and must agree with pq within 1e-6.
  static EGCMGraph from_matrix(const Matrix& M,
                               const std::map<Edge, int>& explicit_labels = {},
                               std::vector<std::string> node_names = {}) {
    const std::size_t n = M.size();
    if (n == 0)
      fail(Errc::NotSquare, "graph needs at least one node");
    for (const auto& row : M)
      if (row.size() != n)
        fail(Errc::NotSquare, "amplitude matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!std::isfinite(M[i][j]))
          fail(Errc::NonFinite, "non-finite amplitude at (" + std::to_string(i + 1) +
               "," + std::to_string(j + 1) + ")");
    for (std::size_t i = 0; i < n; ++i)
      if (M[i][i] != 2.0)
        fail(Errc::BadDiagonal, "diagonal entry " + std::to_string(i + 1) + " is not 2");

    EGCMGraph g;
    g.n_ = static_cast<int>(n);
    g.M_ = M;
    g.labels_.assign(n, std::vector<CoxeterLabel>(n, CoxeterLabel(2)));
    g.adj_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (M[i][j] > 0)
          fail(Errc::PositiveOffDiagonal, "entry (" + std::to_string(i + 1) + "," +
               std::to_string(j + 1) + ") is positive");
        if ((M[i][j] == 0) != (M[j][i] == 0))
          fail(Errc::AsymmetricZeroPattern, "entry (" + std::to_string(i + 1) + "," +
               std::to_string(j + 1) + ") is zero but its transpose is not");
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (M[i][j] == 0) continue;
        Edge e{static_cast<Node>(i), static_cast<Node>(j)};
        double product = M[i][j] * M[j][i];
        CoxeterLabel label;
        auto it = explicit_labels.find(e);
        if (it != explicit_labels.end()) {
          int m = it->second;
          if (m < 3)
            fail(Errc::InconsistentLabel, "explicit label on an edge must be >= 3");
          if (std::fabs(product - four_cos_sq(m)) > kExplicitLabelTolerance)
            fail(Errc::InconsistentLabel, "explicit label " + std::to_string(m) +
                 " disagrees with amplitude product " + std::to_string(product));
          label = CoxeterLabel(m);
        } else {
          label = label_from_product(product);
        }
        g.labels_[i][j] = g.labels_[j][i] = label;
        g.edges_.push_back(e);
        g.adj_[i].push_back(e.j);
        g.adj_[j].push_back(e.i);
      }
    for (auto& [e, m] : explicit_labels)
      if (e.i < 0 || e.j >= g.n_ || M[e.i][e.j] == 0)
        fail(Errc::InconsistentLabel, "explicit label on a non-edge");
    if (!node_names.empty() && node_names.size() != n)
      fail(Errc::DimensionMismatch, "node_names has the wrong length");
    g.names_ = std::move(node_names);
    return g;
  }

  int size() const { return n_; }
  double amplitude(Node i, Node j) const { return M_[i][j]; }
  const Matrix& matrix() const { return M_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Node>& neighbors(Node i) const { return adj_[i]; }
  const std::vector<std::string>& node_names() const { return names_; }
  bool adjacent(Node i, Node j) const { return i != j && M_[i][j] != 0; }

  // m_ij; 2 for distinct non-adjacent nodes.
  CoxeterLabel label(Node i, Node j) const {
    check_node(i);
    check_node(j);
    if (i == j) fail(Errc::SameNode, "coxeter label needs two distinct nodes");
    return labels_[i][j];
  }
  // Unchecked access, for inner loops.
  CoxeterLabel label_unchecked(Node i, Node j) const { return labels_[i][j]; }

  void check_node(Node i) const {
    if (i < 0 || i >= n_)
      fail(Errc::NodeOutOfRange, "node " + std::to_string(i + 1) + " out of range");
  }

  bool is_connected() const { return components().size() == 1; }

  std::vector<std::vector<Node>> components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<Node>> out;
    for (Node s = 0; s < n_; ++s) {
      if (comp[s] >= 0) continue;
      out.emplace_back();
      std::queue<Node> q;
      q.push(s);
      comp[s] = static_cast<int>(out.size()) - 1;
      while (!q.empty()) {
        Node x = q.front();
        q.pop();
        out.back().push_back(x);
        for (Node y : adj_[x])
          if (comp[y] < 0) {
            comp[y] = comp[s];
            q.push(y);
          }
      }
      std::sort(out.back().begin(), out.back().end());
    }
    return out;
  }

  // Induced E-GCM subgraph on `nodes` (kept in the given order).
  EGCMGraph induced(const std::vector<Node>& nodes) const {
    Matrix sub(nodes.size(), std::vector<double>(nodes.size()));
    std::map<Edge, int> labels;
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = 0; b < nodes.size(); ++b) {
        sub[a][b] = M_[nodes[a]][nodes[b]];
        if (a < b && adjacent(nodes[a], nodes[b]) && labels_[nodes[a]][nodes[b]].is_finite())
          labels[{static_cast<Node>(a), static_cast<Node>(b)}] =
              labels_[nodes[a]][nodes[b]].value();
      }
    return from_matrix(sub, labels);
  }

  // Same graph with nodes renumbered: new node k is old node perm[k].
  EGCMGraph permuted(const std::vector<Node>& perm) const { return induced(perm); }

private:
  int n_ = 0;
  Matrix M_;
  std::vector<std::vector<CoxeterLabel>> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Node>> adj_;
  std::vector<std::string> names_;
};

inline EGCMGraph validate_matrix(const Matrix& M) { return EGCMGraph::from_matrix(M); }

inline CoxeterLabel coxeter_label(const EGCMGraph& g, Node i, Node j) { return g.label(i, j); }

inline bool odd_neighborly(const EGCMGraph& g, Node i, Node j) {
  return g.adjacent(i, j) && g.label_unchecked(i, j).is_odd();
}

// Edges with odd m_ij and M_ij != M_ji.
inline std::vector<Edge> odd_asymmetries(const EGCMGraph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (g.label_unchecked(e.i, e.j).is_odd() &&
        std::fabs(g.amplitude(e.i, e.j) - g.amplitude(e.j, e.i)) > kAsymmetryTolerance)
      out.push_back(e);
  return out;
}

// Maximal classes of nodes joined by ON-paths, each sorted, ordered by
// smallest member.
inline std::vector<std::vector<Node>> on_components(const EGCMGraph& g) {
  const int n = g.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Node>> out;
  for (Node s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Node> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      Node x = stack.back();
      stack.pop_back();
      out[c].push_back(x);
      for (Node y : g.neighbors(x))
        if (comp[y] < 0 && odd_neighborly(g, x, y)) {
          comp[y] = c;
          stack.push_back(y);
        }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  return out;
}

// K_ji = -M_ji / (2 cos(pi/m_ij)) for odd-neighborly i, j; v_ji.alpha_i = K_ji alpha_j.
inline double transport_factor(const EGCMGraph& g, Node j, Node i) {
  if (!odd_neighborly(g, i, j))
    fail(Errc::NotOddNeighborly, "nodes " + std::to_string(i + 1) + " and " +
         std::to_string(j + 1) + " are not odd-neighborly");
  int m = g.label_unchecked(i, j).value();
  return -g.amplitude(j, i) / (2.0 * std::cos(kPi / m));
}

// Firing-order word for v_ji = (s_i s_j)^((m-1)/2): letters j, i, j, i, ...
inline Word transport_word(const EGCMGraph& g, Node j, Node i) {
  if (!odd_neighborly(g, i, j))
    fail(Errc::NotOddNeighborly, "nodes are not odd-neighborly");
  int half = (g.label_unchecked(i, j).value() - 1) / 2;
  Word w;
  for (int r = 0; r < half; ++r) {
    w.push_back(j);
    w.push_back(i);
  }
  return w;
}

struct ONPath {
  std::vector<Node> nodes;
  double product = 1.0;
  Word word;  // w_P as a firing-order word
};

inline ONPath on_path_product(const EGCMGraph& g, const std::vector<Node>& nodes) {
  ONPath path;
  path.nodes = nodes;
  if (nodes.empty()) return path;
  for (Node x : nodes) g.check_node(x);
  for (std::size_t q = 1; q < nodes.size(); ++q) {
    Node from = nodes[q - 1], to = nodes[q];
    path.product *= transport_factor(g, to, from);
    path.word = path.word.then(transport_word(g, to, from));
  }
  return path;
}

struct UnitalReport {
  bool unital = true;
  std::optional<ONPath> witness;  // simple ON-cycle with product > 1
};

// Spanning-tree potentials over one ON-component: phi(root) = 1 and
// phi(child) = phi(parent) K_child,parent. Every non-tree odd edge must close
// a cycle of product 1.
inline UnitalReport is_unital_on_cyclic(const EGCMGraph& g, const std::vector<Node>& component) {
  UnitalReport report;
  if (component.empty()) return report;
  const int n = g.size();
  std::vector<double> phi(n, 0.0);
  std::vector<Node> parent(n, -1);
  std::vector<int> depth(n, -1);
  std::vector<bool> in_comp(n, false);
  for (Node x : component) in_comp[x] = true;

  Node root = component.front();
  depth[root] = 0;
  phi[root] = 1.0;
  std::queue<Node> q;
  q.push(root);
  while (!q.empty()) {
    Node x = q.front();
    q.pop();
    for (Node y : g.neighbors(x)) {
      if (!in_comp[y] || !odd_neighborly(g, x, y) || depth[y] >= 0) continue;
      depth[y] = depth[x] + 1;
      parent[y] = x;
      phi[y] = phi[x] * transport_factor(g, y, x);
      q.push(y);
    }
  }
  for (const Edge& e : g.edges()) {
    if (!in_comp[e.i] || !odd_neighborly(g, e.i, e.j)) continue;
    if (parent[e.j] == e.i || parent[e.i] == e.j) continue;
    double ratio = phi[e.i] * transport_factor(g, e.j, e.i) / phi[e.j];
    if (std::fabs(ratio - 1.0) <= kRatioTolerance * std::max(1.0, ratio)) continue;

    // Cycle: lca -> ... -> i -> j -> ... -> lca.
    Node a = e.i, b = e.j;
    std::vector<Node> up_a{a}, up_b{b};
    while (depth[a] > depth[b]) up_a.push_back(a = parent[a]);
    while (depth[b] > depth[a]) up_b.push_back(b = parent[b]);
    while (a != b) {
      up_a.push_back(a = parent[a]);
      up_b.push_back(b = parent[b]);
    }
    std::vector<Node> cycle(up_a.rbegin(), up_a.rend());
    cycle.insert(cycle.end(), up_b.begin(), up_b.end());
    if (ratio < 1.0) std::reverse(cycle.begin(), cycle.end());
    report.unital = false;
    report.witness = on_path_product(g, cycle);
    return report;
  }
  return report;
}

inline bool is_unital_on_cyclic(const EGCMGraph& g) {
  for (const auto& c : on_components(g))
    if (!is_unital_on_cyclic(g, c).unital) return false;
  return true;
}

// Enumerate simple ON-paths starting at `start` (no repeated nodes, except a
// final return to the start). Small graphs only.
inline std::vector<ONPath> simple_on_paths(const EGCMGraph& g, Node start) {
  std::vector<ONPath> out;
  std::vector<Node> path{start};
  std::vector<bool> used(g.size(), false);
  used[start] = true;
  std::function<void()> extend = [&]() {
    out.push_back(on_path_product(g, path));
    Node x = path.back();
    for (Node y : g.neighbors(x)) {
      if (!odd_neighborly(g, x, y)) continue;
      if (y == start && path.size() >= 2) {
        path.push_back(y);
        out.push_back(on_path_product(g, path));
        path.pop_back();
      }
      if (used[y]) continue;
      used[y] = true;
      path.push_back(y);
      extend();
      path.pop_back();
      used[y] = false;
    }
  };
  extend();
  return out;
}

} // namespace numgame

#endif
