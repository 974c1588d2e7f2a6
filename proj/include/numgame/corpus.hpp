// Bundled example graphs with a starting position each.

#ifndef NUMGAME_CORPUS_HPP_
#define NUMGAME_CORPUS_HPP_

#include <string>
#include <vector>

#include "families.hpp"

namespace numgame {

struct Preset {
  std::string name;
  std::string file;  // basename under data/
  std::string description;
  EGCMGraph graph;
  Position position;
};

inline EGCMGraph two_node_graph(double p, double q) {
  return EGCMGraph::from_matrix({{2, -p}, {-q, 2}});
}

// Loop 1-2-...-n-1 with M_{i,i+1} = -1/r and M_{i+1,i} = -r (indices mod n).
// Every edge has product 1; the ON-cycle product is r^n.
inline EGCMGraph unit_loop(int n, double r = 1.0) {
  if (n < 3) fail(Errc::WrongGraphShape, "a loop needs at least 3 nodes");
  Matrix M(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    M[i][i] = 2;
    int j = (i + 1) % n;
    M[i][j] = -1.0 / r;
    M[j][i] = -r;
  }
  return EGCMGraph::from_matrix(M);
}

// 4-cycle 1-2-3-4-1, label 5 on {1,2} with equal amplitudes, unit products elsewhere.
inline EGCMGraph pentagon_cycle() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  Matrix M = {{2, -phi, 0, -1}, {-phi, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}};
  return EGCMGraph::from_matrix(M);
}

inline std::vector<Preset> corpus() {
  std::vector<Preset> out;
  auto add = [&](std::string name, std::string file, std::string desc, EGCMGraph g, Position p) {
    out.push_back({std::move(name), std::move(file), std::move(desc), std::move(g), std::move(p)});
  };
  auto ones = [](const EGCMGraph& g) { return Position::ones(g.size()); };

  EGCMGraph i24 = two_node_graph(1, 2);
  add("I2(4) Figure-2", "i2_4", "two nodes, amplitudes 1 and 2 (label 4)", i24, ones(i24));
  EGCMGraph a2asym = two_node_graph(0.5, 2);
  add("A2-asymmetric", "a2_asymmetric", "two nodes, amplitudes 1/2 and 2 (label 3)", a2asym, ones(a2asym));
  for (const char* name : {"A1", "A2", "A3", "B3", "D4", "E6", "E7", "E8", "F4", "H3", "H4", "I2(5)", "I2(6)"}) {
    EGCMGraph g = family_graph(name);
    std::string file;
    for (char c : std::string(name))
      if (std::isalnum(static_cast<unsigned char>(c))) file += static_cast<char>(std::tolower(c));
    add(name, file, std::string("family template ") + name, g, ones(g));
  }
  for (int n : {3, 4, 5}) {
    EGCMGraph g = unit_loop(n);
    add("loop-" + std::to_string(n), "loop_" + std::to_string(n),
        std::to_string(n) + "-node loop, symmetric unit amplitudes", g, Position::fundamental(n, 0));
  }
  EGCMGraph tri8 = unit_loop(3, 2.0);
  add("loop-3 product-8", "loop_3_product_8", "triangle, amplitudes 1/2 and 2 around the cycle",
      tri8, Position::fundamental(3, 0));
  EGCMGraph pent = pentagon_cycle();
  add("pentagon-cycle", "pentagon_cycle", "4-cycle with one label-5 edge and three unit-product edges",
      pent, Position::fundamental(4, 0));
  return out;
}

inline const Preset* find_preset(const std::vector<Preset>& presets, const std::string& name) {
  for (const auto& p : presets)
    if (p.name == name || p.file == name) return &p;
  return nullptr;
}

} // namespace numgame

#endif
