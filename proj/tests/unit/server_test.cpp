#include <gtest/gtest.h>

#include <httplib.h>

#include <thread>

#include "fixtures.hpp"
#include "taco/server.hpp"

using namespace taco;

TEST(ParseTurnBody, UtteranceAndTouch) {
  auto u = server::parse_turn_body(R"({"utterance":"next"})");
  ASSERT_TRUE(u.is_utterance());
  EXPECT_EQ(u.utterance(), "next");
  auto t = server::parse_turn_body(R"({"touch":[{"name":"action","value":"select"},{"name":"index","value":"2"}]})");
  ASSERT_FALSE(t.is_utterance());
  EXPECT_EQ(t.touch().size(), 2u);
  EXPECT_EQ(t.touch()[1].value, "2");
}

TEST(ParseTurnBody, Malformed) {
  EXPECT_THROW(server::parse_turn_body("{"), ParseError);
  EXPECT_THROW(server::parse_turn_body(R"({"text":"hi"})"), ParseError);
  EXPECT_THROW(server::parse_turn_body(R"({"utterance":3})"), ParseError);
}

TEST(Http, SessionTurnTranscriptRoundTrip) {
  engine::Engine eng(fixtures::bundled_resources(), std::make_shared<store::MemoryStore>());
  server::HttpService svc(eng);
  int port = svc.bind_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread th([&] { svc.listen_after_bind(); });
  svc.wait_until_ready();

  httplib::Client cli("127.0.0.1", port);
  auto created = cli.Post("/sessions", "", "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  auto id = Json::parse(created->body).at("session_id").get<std::string>();

  auto turn = cli.Post("/sessions/" + id + "/turns", R"({"utterance":"how to paint a fence"})", "application/json");
  ASSERT_TRUE(turn);
  EXPECT_EQ(turn->status, 200);
  auto resp = Json::parse(turn->body).get<Response>();
  EXPECT_FALSE(resp.speech.empty());

  auto bad = cli.Post("/sessions/" + id + "/turns", "nope", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
  auto missing = cli.Post("/sessions/ghost/turns", R"({"utterance":"hi"})", "application/json");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);

  auto tr = cli.Get("/sessions/" + id + "/transcript");
  ASSERT_TRUE(tr);
  EXPECT_EQ(Json::parse(tr->body).size(), 1u);

  svc.stop();
  th.join();
}
