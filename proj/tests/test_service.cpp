#include <filesystem>
#include <fstream>
#include <thread>

#include "helpers.hpp"
#include "numgame/http.hpp"

using namespace numgame;

namespace {

json i24_body() { return {{"graph", {{"n", 2}, {"amplitudes", {{2, -1}, {-2, 2}}}}}, {"position", {1, 1}}}; }

std::string make_session(SessionStore& st, const json& body) {
  Response r = st.create(body);
  EXPECT_EQ(r.status, 201) << r.body.dump();
  return r.body.value("id", "");
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("numgame_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

class HttpFixture : public ::testing::Test {
protected:
  void SetUp() override {
    port_ = server_.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    install_routes(server_, store_);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  void TearDown() override {
    server_.stop();
    thread_.join();
  }
  httplib::Client client() const { return httplib::Client("127.0.0.1", port_); }
  json post(const std::string& path, const json& body, int want) {
    auto c = client();
    auto res = c.Post(path.c_str(), body.dump(), "application/json");
    EXPECT_TRUE(res) << path;
    if (!res) return json();
    EXPECT_EQ(res->status, want) << path << " " << res->body;
    return json::parse(res->body);
  }
  json get(const std::string& path, int want) {
    auto c = client();
    auto res = c.Get(path.c_str());
    EXPECT_TRUE(res) << path;
    if (!res) return json();
    EXPECT_EQ(res->status, want) << path << " " << res->body;
    return json::parse(res->body);
  }

  SessionStore store_{"", 25};
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

} // namespace

TEST(Store, TwoNodeLabelFourSession) {
  SessionStore st;
  std::string id = make_session(st, i24_body());
  Response g = st.get(id);
  EXPECT_EQ(g.body["fireable"], json::parse("[1,2]"));
  EXPECT_EQ(g.body["status"], "Active");
  EXPECT_EQ(g.body["edges"][0]["m"], 4);
  Response a = st.analysis(id);
  EXPECT_EQ(a.body["terminal_prediction"]["expected_total"], 4);

  Response f = st.fire_node(id, {{"node", 2}});
  ASSERT_EQ(f.status, 200);
  EXPECT_EQ(f.body["session"]["current"], json::parse("[3.0,-1.0]"));
  EXPECT_EQ(f.body["analysis"]["functional_values"], json::parse("[1.0]"));
  EXPECT_EQ(f.body["analysis"]["terminal_prediction"]["remaining"], 3);
  for (int node : {1, 2, 1}) ASSERT_EQ(st.fire_node(id, {{"node", node}}).status, 200);
  Response done = st.get(id);
  EXPECT_EQ(done.body["status"], "Terminal");
  EXPECT_EQ(done.body["current"], json::parse("[-1.0,-1.0]"));
  EXPECT_EQ(st.analysis(id).body["functional_values"], json::parse("[1.0,3.0,2.0,1.0]"));
  EXPECT_TRUE(st.analysis(id).body["is_reduced"].get<bool>());
}

TEST(Store, WhatIfIsPure) {
  SessionStore st;
  std::string id = make_session(st, i24_body());
  json before = st.get(id).body;
  Response w = st.whatif(id, {{"node", 1}});
  ASSERT_EQ(w.status, 200);
  EXPECT_EQ(w.body["preview"], json::parse("[-1.0,2.0]"));
  EXPECT_EQ(st.get(id).body, before);
}

TEST(Store, UndoRestores) {
  SessionStore st;
  std::string id = make_session(st, i24_body());
  json before = st.get(id).body;
  EXPECT_EQ(st.undo(id).status, 409);
  st.fire_node(id, {{"node", 1}});
  ASSERT_EQ(st.undo(id).status, 200);
  EXPECT_EQ(st.get(id).body, before);
}

TEST(Store, Errors) {
  SessionStore st;
  EXPECT_EQ(st.get("nope").status, 404);
  EXPECT_EQ(st.fire_node("nope", {{"node", 1}}).status, 404);
  Response bad = st.create({{"graph", {{"n", 2}, {"amplitudes", {{2, -1}, {-3.5, 2}}}}}});
  EXPECT_EQ(bad.status, 400);
  EXPECT_EQ(bad.body["error"], "InvalidAmplitudeProduct");
  EXPECT_EQ(st.create({{"preset", "no-such"}}).status, 404);
  EXPECT_EQ(st.create(json::array()).status, 400);
  EXPECT_EQ(st.create({{"graph", {{"n", 2}, {"amplitudes", {{2, -1}, {-2, 2}}}}}, {"position", {1}}}).status, 400);
  std::string id = make_session(st, {{"graph", {{"n", 2}, {"amplitudes", {{2, -1}, {-2, 2}}}}}, {"position", {1, 0}}});
  Response nf = st.fire_node(id, {{"node", 2}});
  EXPECT_EQ(nf.status, 409);
  EXPECT_EQ(nf.body["error"], "NodeNotFireable");
  EXPECT_EQ(st.fire_node(id, {{"node", 3}}).status, 400);
  EXPECT_EQ(st.fire_node(id, {{"node", "x"}}).status, 400);
  EXPECT_EQ(st.whatif(id, {{"node", 2}}).status, 409);
  EXPECT_EQ(st.autoplay(id, {{"strategy", "sideways"}, {"steps", 1}}).status, 400);
}

TEST(Store, PresetsAndAutoplay) {
  SessionStore st;
  Response list = SessionStore::presets();
  ASSERT_EQ(list.status, 200);
  EXPECT_GE(list.body.size(), 10u);
  std::string id = make_session(st, {{"preset", "E6"}});
  Response r = st.autoplay(id, {{"strategy", "random"}, {"steps", 1000}, {"seed", 4}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["session"]["status"], "Terminal");
  EXPECT_EQ(r.body["fired"].size(), 36u);
  EXPECT_TRUE(r.body["analysis"]["is_reduced"].get<bool>());
}

TEST(Store, DivergentLoopHitsCap) {
  SessionStore st("", 40);
  std::string id = make_session(st, {{"preset", "loop-3"}});
  Response r = st.autoplay(id, {{"steps", 1000}});
  EXPECT_EQ(r.body["fired"].size(), 40u);
  EXPECT_EQ(r.body["session"]["status"], "BoundExceeded");
  ASSERT_FALSE(r.body["session"]["fireable"].empty());
  Response more = st.fire_node(id, {{"node", r.body["session"]["fireable"][0]}});
  EXPECT_EQ(more.status, 409);
  EXPECT_EQ(more.body["error"], "StepCapReached");
}

TEST(Store, LogReplayRestoresSessions) {
  auto dir = fresh_dir("replay");
  std::string a, b;
  json want_a, want_b;
  {
    SessionStore st(dir.string());
    a = make_session(st, {{"preset", "H3"}});
    st.fire_node(a, {{"node", 1}});
    st.autoplay(a, {{"strategy", "random"}, {"steps", 4}, {"seed", 9}});
    st.undo(a);
    b = make_session(st, i24_body());
    st.fire_node(b, {{"node", 2}});
    want_a = st.get(a).body;
    want_b = st.get(b).body;
  }
  SessionStore again(dir.string());
  EXPECT_EQ(again.size(), 2u);
  EXPECT_EQ(again.get(a).body, want_a);
  EXPECT_EQ(again.get(b).body, want_b);

  // A torn final line keeps everything before it.
  std::ofstream(dir / (b + ".jsonl"), std::ios::app) << "{\"op\": \"fi";
  SessionStore torn(dir.string());
  EXPECT_EQ(torn.get(b).body, want_b);
  std::filesystem::remove_all(dir);
}

TEST_F(HttpFixture, EndToEnd) {
  json s = post("/sessions", i24_body(), 201);
  std::string id = s["id"];
  EXPECT_EQ(get("/sessions/" + id, 200)["current"], json::parse("[1.0,1.0]"));
  EXPECT_EQ(post("/sessions/" + id + "/whatif", {{"node", 2}}, 200)["preview"], json::parse("[3.0,-1.0]"));
  json f = post("/sessions/" + id + "/fire", {{"node", 2}}, 200);
  EXPECT_EQ(f["session"]["current"], json::parse("[3.0,-1.0]"));
  EXPECT_EQ(get("/sessions/" + id + "/analysis", 200)["word_so_far"], json::parse("[2]"));
  EXPECT_EQ(post("/sessions/" + id + "/undo", json::object(), 200)["history"].size(), 0u);
  json ap = post("/sessions/" + id + "/autoplay", {{"steps", 10}}, 200);
  EXPECT_EQ(ap["session"]["status"], "Terminal");
  EXPECT_EQ(ap["fired"].size(), 4u);
  EXPECT_EQ(post("/sessions/" + id + "/fire", {{"node", 1}}, 409)["error"], "NodeNotFireable");
  EXPECT_GE(get("/presets", 200).size(), 10u);
}

TEST_F(HttpFixture, ErrorStatuses) {
  get("/sessions/missing", 404);
  post("/sessions/missing/fire", {{"node", 1}}, 404);
  post("/sessions", {{"graph", {{"n", 1}, {"amplitudes", {{3}}}}}}, 400);
  auto c = client();
  auto res = c.Post("/sessions", "{broken", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  EXPECT_EQ(json::parse(res->body)["error"], "ParseError");
  auto opt = c.Options("/sessions");
  ASSERT_TRUE(opt);
  EXPECT_EQ(opt->status, 204);
  EXPECT_EQ(opt->get_header_value("Access-Control-Allow-Origin"), "*");
}

TEST_F(HttpFixture, StepCapOverHttp) {
  std::string id = post("/sessions", {{"preset", "loop-4"}}, 201)["id"];
  json ap = post("/sessions/" + id + "/autoplay", {{"steps", 100}}, 200);
  EXPECT_EQ(ap["session"]["status"], "BoundExceeded");
  EXPECT_EQ(ap["fired"].size(), 25u);
  int node = ap["session"]["fireable"][0];
  EXPECT_EQ(post("/sessions/" + id + "/fire", {{"node", node}}, 409)["error"], "StepCapReached");
}

TEST_F(HttpFixture, ConcurrentFiresStayConsistent) {
  // Many clients hammer one E8 session; every accepted firing is legal and the word stays reduced.
  std::string id = post("/sessions", {{"preset", "E8"}}, 201)["id"];
  std::atomic<int> accepted{0}, rejected{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] {
      auto c = client();
      for (int k = 0; k < 40; ++k) {
        json body = {{"node", 1 + (t + k) % 8}};
        auto res = c.Post(("/sessions/" + id + "/fire").c_str(), body.dump(), "application/json");
        if (!res) continue;
        (res->status == 200 ? accepted : rejected)++;
      }
    });
  for (auto& w : workers) w.join();
  json a = get("/sessions/" + id + "/analysis", 200);
  EXPECT_EQ(static_cast<int>(a["word_so_far"].size()), accepted.load());
  EXPECT_TRUE(a["is_reduced"].get<bool>());
  EXPECT_EQ(accepted + rejected, 320);
  EXPECT_FALSE(a["adjacency_flag"].is_null());
}
