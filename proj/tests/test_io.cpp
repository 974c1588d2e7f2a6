#include <cmath>
#include <random>

#include "helpers.hpp"
#include "numgame/corpus.hpp"
#include "numgame/io.hpp"

using namespace numgame;

TEST(Round9, Examples) {
  EXPECT_EQ(round9(1.0 / 3), 0.333333333);
  EXPECT_EQ(round9(2.0000000001), 2.0);
  EXPECT_EQ(round9(-1e-12), -1e-12);
  EXPECT_FALSE(std::signbit(round9(-0.0)));
  EXPECT_EQ(to_json(Position{-0.0, 1}).dump(), "[0.0,1.0]");
  EXPECT_TRUE(std::isinf(round9(INFINITY)));
}

TEST(GraphJson, CanonicalForm) {
  json j = parse_json_text(R"({"n": 2, "amplitudes": [[2, -1], [-2, 2]]})");
  EGCMGraph g = graph_from_json(j);
  EXPECT_EQ(coxeter_label(g, 0, 1), CoxeterLabel(4));
  EXPECT_EQ(graph_to_json(g), j);
}

TEST(GraphJson, EdgeListForm) {
  json j = parse_json_text(R"({"n": 3, "node_names": ["a", "b", "c"],
                               "edges": [{"i": 1, "j": 2, "p": 1, "q": 2}, {"i": 2, "j": 3, "p": 1, "q": 1}]})");
  EGCMGraph g = graph_from_json(j);
  EXPECT_DOUBLE_EQ(g.amplitude(0, 1), -1);
  EXPECT_DOUBLE_EQ(g.amplitude(1, 0), -2);
  EXPECT_DOUBLE_EQ(g.amplitude(0, 2), 0);
  EXPECT_EQ(classify(g).name(), "B3");
  EXPECT_EQ(g.node_names()[2], "c");
  EGCMGraph back = graph_from_json(graph_to_json(g));
  EXPECT_EQ(back.matrix(), g.matrix());
  EXPECT_EQ(back.node_names(), g.node_names());
}

TEST(GraphJson, ExplicitLabelsRoundTrip) {
  double c = std::cos(kPi / 400);
  EGCMGraph g = EGCMGraph::from_matrix({{2, -2 * c}, {-2 * c, 2}}, {{Edge{0, 1}, 400}});
  json j = graph_to_json(g);
  ASSERT_TRUE(j.contains("labels"));
  EXPECT_EQ(j["labels"][0]["m"], 400);
  EXPECT_EQ(coxeter_label(graph_from_json(j), 0, 1).value(), 400);
  json edge = {{"n", 2}, {"edges", {{{"i", 1}, {"j", 2}, {"p", 2 * c}, {"q", 2 * c}, {"m", 400}}}}};
  EXPECT_EQ(coxeter_label(graph_from_json(edge), 0, 1).value(), 400);
  EXPECT_EQ(labels_json(g)[0]["m"], 400);
  EXPECT_EQ(labels_json(two_node_graph(2, 2))[0]["m"], "inf");
}

TEST(GraphJson, RoundTripsEveryPresetExactly) {
  for (const Preset& p : corpus()) {
    EGCMGraph g = graph_from_json(parse_json_text(graph_to_json(p.graph).dump()));
    EXPECT_EQ(g.matrix(), p.graph.matrix()) << p.name;
  }
}

TEST(GraphJson, Errors) {
  EXPECT_ERRC(graph_from_json(parse_json_text("[1]")), Errc::ParseError);
  EXPECT_ERRC(graph_from_json(parse_json_text(R"({"amplitudes": [[2]]})")), Errc::ParseError);
  EXPECT_ERRC(graph_from_json(parse_json_text(R"({"n": 2})")), Errc::ParseError);
  EXPECT_ERRC(graph_from_json(parse_json_text(R"({"n": 2, "amplitudes": [[2, -1]]})")), Errc::NotSquare);
  EXPECT_ERRC(graph_from_json(parse_json_text(R"({"n": 2, "amplitudes": [[2, -1], [-1]]})")), Errc::NotSquare);
  EXPECT_ERRC(graph_from_json(parse_json_text(R"({"n": 2, "amplitudes": [[2, "x"], [-1, 2]]})")), Errc::ParseError);
  EXPECT_ERRC(graph_from_json(parse_json_text(R"({"n": 0, "amplitudes": []})")), Errc::NotSquare);
  EXPECT_ERRC(graph_from_json(parse_json_text(R"({"n": 2, "edges": [{"i": 1, "j": 3, "p": 1, "q": 1}]})")),
              Errc::NodeOutOfRange);
  EXPECT_ERRC(graph_from_json(parse_json_text(R"({"n": 2, "edges": [{"i": 1, "j": 1, "p": 1, "q": 1}]})")),
              Errc::SameNode);
  EXPECT_ERRC(graph_from_json(parse_json_text(R"({"n": 2, "edges": [{"i": 1, "j": 2, "p": 1}]})")),
              Errc::ParseError);
  EXPECT_ERRC(graph_from_json(parse_json_text(R"({"n": 2, "edges": [{"i": 1, "j": 2, "p": 1, "q": 3.5}]})")),
              Errc::InvalidAmplitudeProduct);
  EXPECT_ERRC(parse_json_text("{not json"), Errc::ParseError);
}

TEST(GraphJson, PresetDocument) {
  const std::vector<Preset> presets = corpus();
  const Preset* p = find_preset(presets, "B3");
  ASSERT_NE(p, nullptr);
  json doc = {{"name", p->name}, {"graph", graph_to_json(p->graph)}, {"position", to_json(p->position)}};
  EXPECT_EQ(graph_from_document(doc).matrix(), p->graph.matrix());
  EXPECT_EQ(graph_from_document(graph_to_json(p->graph)).matrix(), p->graph.matrix());
}

TEST(PositionJson, ParseAndErrors) {
  expect_position(parse_position("1,2.5,-3", 3), Position{1, 2.5, -3});
  expect_position(parse_position("[0, 1]", 2), Position{0, 1});
  EXPECT_ERRC(parse_position("1,2", 3), Errc::DimensionMismatch);
  EXPECT_ERRC(parse_position("1,a", 2), Errc::ParseError);
  EXPECT_ERRC(position_from_json(json{{"x", 1}}, 1), Errc::ParseError);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> v(4);
    for (double& x : v) x = u(rng);
    Position back = position_from_json(parse_json_text(to_json(Position(v)).dump()), 4);
    expect_position(back, Position(v), 1e-8);
  }
}

TEST(WordJson, OneBasedLetters) {
  Word w = parse_word("2,1,2", 2);
  EXPECT_EQ(w, Word::one_based({2, 1, 2}));
  EXPECT_EQ(to_json(w).dump(), "[2,1,2]");
  EXPECT_EQ(parse_word("", 3), Word{});
  EXPECT_ERRC(parse_word("0", 2), Errc::NodeOutOfRange);
  EXPECT_ERRC(parse_word("3", 2), Errc::NodeOutOfRange);
  EXPECT_ERRC(parse_word("1.5", 2), Errc::ParseError);
  EXPECT_EQ(parse_nodes("1,3", 3), (std::vector<Node>{0, 2}));
}

TEST(ResultJson, GameRecord) {
  GameRecord rec = play(two_node_graph(1, 2), Position{1, 1}, Strategy::greedy(), 100);
  json j = to_json(rec);
  EXPECT_EQ(j["length"], 4);
  EXPECT_EQ(j["status"], "Terminal");
  EXPECT_EQ(j["intermediates"].size(), 5u);
  EXPECT_EQ(j["final"], json::parse("[-1.0,-1.0]"));
  EXPECT_EQ(j["firings"].size(), j["fired_values"].size());
}

TEST(ResultJson, Tolerances) {
  json t = tolerances_json();
  EXPECT_DOUBLE_EQ(t["label_tolerance"].get<double>(), 1e-9);
  EXPECT_DOUBLE_EQ(t["explicit_label_tolerance"].get<double>(), 1e-6);
  EXPECT_EQ(t["max_inferred_label"], 360);
  EXPECT_DOUBLE_EQ(t["key_grid"].get<double>(), 1e-6);
}
