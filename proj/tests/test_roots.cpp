#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "helpers.hpp"
#include "numgame/corpus.hpp"

using namespace numgame;

namespace {

EGCMGraph i2_4() { return validate_matrix({{2, -1}, {-2, 2}}); }
EGCMGraph a2_asym() { return validate_matrix({{2, -0.5}, {-2, 2}}); }

std::set<QuantizedKey> keys_of(const std::vector<RootVector>& v) {
  std::set<QuantizedKey> s;
  for (const auto& r : v) s.insert(r.key());
  return s;
}

std::set<QuantizedKey> keys_of(const RootSystem& rs, const std::vector<int>& idx) {
  std::set<QuantizedKey> s;
  for (int k : idx) s.insert(rs.positives[k].key());
  return s;
}

} // namespace

TEST(Bilinear, Examples) {
  EGCMGraph g = i2_4();
  RootVector a1 = RootVector::simple(2, 0), a2 = RootVector::simple(2, 1);
  EXPECT_DOUBLE_EQ(bilinear_form(g, a1, a1), 1);
  EXPECT_DOUBLE_EQ(bilinear_form(g, a1, a2), -0.5);
  EXPECT_DOUBLE_EQ(bilinear_form(g, a2, a1), -1);
  EXPECT_DOUBLE_EQ(bilinear_form(family_graph("A3"), RootVector::simple(3, 0), RootVector::simple(3, 2)), 0);
  EXPECT_ERRC(bilinear_form(g, a1, RootVector::simple(3, 0)), Errc::DimensionMismatch);
}

TEST(Reflect, Examples) {
  EGCMGraph g = i2_4();
  expect_root(reflect(g, 0, RootVector::simple(2, 0)), {-1, 0});
  expect_root(reflect(g, 1, RootVector::simple(2, 0)), {1, 2});
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3, 3);
  for (const char* name : {"B4", "H4", "I2(7)", "E6"})
    for (int t = 0; t < 20; ++t) {
      EGCMGraph h = family_graph(name, true);
      std::vector<double> c(h.size());
      for (double& x : c) x = u(rng);
      RootVector v(c);
      Node i = static_cast<Node>(rng() % h.size());
      expect_root(reflect(h, i, reflect(h, i, v)), v.coeffs(), 1e-9);
    }
}

TEST(Act, EmptyWordAndPairingInvariance) {
  EGCMGraph g = a2_asym();
  RootVector v{0.3, -1.2};
  expect_root(act(g, Word{}, v), v.coeffs());
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  for (const char* name : {"A2", "B3", "H3", "F4"})
    for (int t = 0; t < 30; ++t) {
      EGCMGraph h = t % 2 ? family_graph(name, true) : family_graph(name);
      std::vector<double> l(h.size()), c(h.size());
      for (double& x : l) x = u(rng);
      for (double& x : c) x = u(rng);
      std::vector<Node> letters;
      for (int k = 0; k < 7; ++k) letters.push_back(static_cast<Node>(rng() % h.size()));
      Word w(letters);
      // <w.lambda, w.v> = <lambda, v>: the position action is contragredient.
      Position wl = act_on_position(h, Position(l), w);
      RootVector wv = act(h, w, RootVector(c));
      EXPECT_NEAR(pairing(wl, wv), pairing(Position(l), RootVector(c)), 1e-8) << name;
    }
  // Inverse: act with the reversed word undoes the action.
  EGCMGraph b3 = family_graph("B3", true);
  Word w = Word::one_based({1, 2, 3, 2, 1, 3});
  RootVector x{0.5, 1, -2};
  expect_root(act(b3, w.reversed(), act(b3, w, x)), x.coeffs(), 1e-9);
}

TEST(RootSystem, TwoNodeExamples) {
  RootSystem i24 = generate_root_system(i2_4());
  ASSERT_TRUE(i24.complete);
  EXPECT_EQ(keys_of(i24.positives), keys_of({{0, 1}, {1, 2}, {1, 1}, {1, 0}}));
  RootSystem a2 = generate_root_system(a2_asym());
  ASSERT_TRUE(a2.complete);
  EXPECT_EQ(keys_of(a2.positives), keys_of({{0, 1}, {1, 2}, {0.5, 0}, {1, 0}, {0.5, 1}, {0, 2}}));
  RootSystem one = generate_root_system(validate_matrix({{2}}));
  ASSERT_EQ(one.positives.size(), 1u);
  expect_root(one.positives[0], {1});
}

TEST(RootSystem, PositiveRootCounts) {
  // Classical counts: A_n n(n+1)/2, B_n n^2, D_n n(n-1), I2(m) m.
  struct Case {
    const char* name;
    std::size_t count;
  };
  for (const Case& c : {Case{"A1", 1}, Case{"A4", 10}, Case{"A5", 15}, Case{"B3", 9}, Case{"B4", 16},
                        Case{"D4", 12}, Case{"D5", 20}, Case{"E6", 36}, Case{"E7", 63}, Case{"E8", 120},
                        Case{"F4", 24}, Case{"H3", 15}, Case{"H4", 60}, Case{"I2(9)", 9}}) {
    RootSystem rs = generate_root_system(family_graph(c.name));
    EXPECT_TRUE(rs.complete) << c.name;
    EXPECT_EQ(rs.positives.size(), c.count) << c.name;
  }
}

TEST(RootSystem, PartitionAndClosure) {
  for (const char* name : {"A3", "B3", "D4", "H3", "I2(5)", "F4"})
    for (bool asym : {false, true}) {
      EGCMGraph g = family_graph(name, asym);
      RootSystem rs = generate_root_system(g);
      ASSERT_TRUE(rs.complete);
      for (const auto& r : rs.positives) ASSERT_EQ(r.sign(), RootSign::Positive);
      for (Node i = 0; i < g.size(); ++i) {
        auto multiples = keys_of(rs, positive_multiples(rs, RootVector::simple(g.size(), i)));
        std::set<QuantizedKey> rest, image;
        for (const auto& r : rs.positives) {
          if (multiples.count(r.key())) continue;
          rest.insert(r.key());
          image.insert(reflect(g, i, r).key());
        }
        EXPECT_EQ(rest, image) << name;
      }
    }
}

TEST(RootSystem, IncompleteWhenInfinite) {
  RootSystem rs = generate_root_system(unit_loop(3, 1), 200);
  EXPECT_FALSE(rs.complete);
  EXPECT_ERRC(rs.require_complete(), Errc::IncompleteRootSystem);
  EXPECT_ERRC(positive_multiples(rs, RootVector::simple(3, 0)), Errc::IncompleteRootSystem);
}

TEST(Multiples, Examples) {
  RootSystem a2 = generate_root_system(a2_asym());
  EXPECT_EQ(keys_of(a2, positive_multiples(a2, RootVector::simple(2, 0))), keys_of({{0.5, 0}, {1, 0}}));
  RootSystem i24 = generate_root_system(i2_4());
  EXPECT_EQ(keys_of(i24, positive_multiples(i24, RootVector::simple(2, 0))), keys_of({{1, 0}}));
  for (const auto& r : i24.positives) EXPECT_FALSE(positive_multiples(i24, r).empty());
}

TEST(FValue, Examples) {
  RootSystem a3 = generate_root_system(family_graph("A3"));
  EXPECT_EQ(f_value(a3, {0, 1, 2}), 1);
  RootSystem a2 = generate_root_system(a2_asym());
  EXPECT_EQ(f_value(a2, {0, 1}), 2);
  RootSystem b3 = generate_root_system(family_graph("B3", true));
  for (const auto& comp : on_components(b3.graph)) {
    int f0 = -1;
    for (Node x : comp) {
      int f = static_cast<int>(positive_multiples(b3, RootVector::simple(3, x)).size());
      if (f0 < 0) f0 = f;
      EXPECT_EQ(f, f0);
    }
    EXPECT_EQ(f_value(b3, comp), f0);
  }
  EGCMGraph tri = validate_matrix({{2, -0.5, -2}, {-2, 2, -0.5}, {-0.5, -2, 2}});
  EXPECT_ERRC(f_value(generate_root_system(tri, 50), {0, 1, 2}), Errc::NotUnitalONCyclic);
}

TEST(Inversions, Examples) {
  EGCMGraph g = family_graph("B3", true);
  RootSystem rs = generate_root_system(g);
  EXPECT_TRUE(inversion_set(rs, Word{}).empty());
  for (Node i = 0; i < 3; ++i)
    EXPECT_EQ(keys_of(rs, inversion_set(rs, Word{i})), keys_of(rs, positive_multiples(rs, RootVector::simple(3, i))));
  EXPECT_EQ(inversion_set(rs, longest_element(g)).size(), rs.positives.size());
}

TEST(Functionals, TwoNodeExamples) {
  auto fs = root_functionals(i2_4(), Position{1, 1}, Word::one_based({2, 1, 2, 1}));
  ASSERT_EQ(fs.size(), 4u);
  const std::vector<std::vector<double>> betas = {{0, 1}, {1, 2}, {1, 1}, {1, 0}};
  const std::vector<double> values = {1, 3, 2, 1};
  for (std::size_t q = 0; q < 4; ++q) {
    expect_root(fs[q].beta, betas[q]);
    EXPECT_NEAR(fs[q].value, values[q], 1e-12);
  }
  // Symbolically b, a+2b, a+b, a.
  auto sym = root_functionals(i2_4(), Position{0.7, 2.9}, Word::one_based({2, 1, 2, 1}));
  EXPECT_NEAR(sym[0].value, 2.9, 1e-12);
  EXPECT_NEAR(sym[1].value, 0.7 + 5.8, 1e-12);
  EXPECT_NEAR(sym[2].value, 3.6, 1e-12);
  EXPECT_NEAR(sym[3].value, 0.7, 1e-12);

  auto fa = root_functionals(a2_asym(), Position{1, 1}, Word::one_based({2, 1, 2}));
  ASSERT_EQ(fa.size(), 3u);
  EXPECT_NEAR(fa[0].value, 1, 1e-12);
  EXPECT_NEAR(fa[1].value, 3, 1e-12);
  EXPECT_NEAR(fa[2].value, 0.5, 1e-12);
  EXPECT_TRUE(root_functionals(a2_asym(), Position{1, 1}, Word{}).empty());
}

TEST(Functionals, IllegalFiringReportsIndex) {
  try {
    root_functionals(i2_4(), Position{1, 1}, Word::one_based({1, 2, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IllegalFiringAt);
    EXPECT_EQ(e.index().value_or(99), 2u);
  }
}

TEST(Functionals, EqualFiredValuesAlongRandomGames) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 2);
  for (const char* name : {"A4", "B4", "D4", "H3", "F4", "I2(8)"})
    for (bool asym : {false, true}) {
      EGCMGraph g = family_graph(name, asym);
      for (int t = 0; t < 10; ++t) {
        std::vector<double> v(g.size());
        for (double& x : v) x = u(rng);
        GameRecord rec = play(g, Position(v), Strategy::random(t), 10000);
        auto fs = root_functionals(g, Position(v), rec.word());
        ASSERT_EQ(fs.size(), rec.length());
        for (std::size_t q = 0; q < fs.size(); ++q) {
          EXPECT_NEAR(fs[q].value, rec.fired_values[q], 1e-9 * (1 + std::fabs(fs[q].value))) << name;
          EXPECT_EQ(fs[q].beta.sign(), RootSign::Positive);
        }
      }
    }
}

TEST(Equivalence, Examples) {
  EquivalenceReport i24 = equivalence_report(i2_4());
  EXPECT_TRUE(i24.all_true());
  EXPECT_EQ(i24.longest_length, 4);
  EXPECT_EQ(i24.positive_root_count, 4u);
  EquivalenceReport a2 = equivalence_report(a2_asym());
  EXPECT_TRUE(a2.all_false());
  EXPECT_EQ(a2.longest_length, 3);
  EXPECT_EQ(a2.positive_root_count, 6u);
  EXPECT_TRUE(equivalence_report(family_graph("F4")).all_true());
}

TEST(Equivalence, AsymmetricFamiliesAgree) {
  for (const char* name : {"A3", "B3", "D4", "H3", "I2(5)", "F4", "E6"}) {
    EquivalenceReport r = equivalence_report(family_graph(name, true));
    EXPECT_TRUE(r.agree()) << name;
    EXPECT_TRUE(r.all_false()) << name;
    RootSystem rs = generate_root_system(family_graph(name, true));
    std::vector<Node> all(rs.graph.size());
    std::iota(all.begin(), all.end(), 0);
    auto [f1, f2] = f_bounds(rs, all);
    EXPECT_LE(static_cast<std::size_t>(f1 * r.longest_length), rs.positives.size()) << name;
    EXPECT_GE(static_cast<std::size_t>(f2 * r.longest_length), rs.positives.size()) << name;
    EXPECT_GE(f2, 2) << name;
  }
}
