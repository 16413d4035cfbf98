#include <gtest/gtest.h>

#include <thread>

#include "fixtures.hpp"
#include "taco/engine.hpp"
#include "taco/harness.hpp"

using namespace taco;

namespace {

std::unique_ptr<engine::Engine> make_engine(bool parallel = true) {
  engine::EngineConfig cfg;
  cfg.parallel = parallel;
  auto e = std::make_unique<engine::Engine>(fixtures::bundled_resources(), std::make_shared<store::MemoryStore>(), cfg);
  e->clock = [] { return harness::kCaseEpochMs; };
  return e;
}

}  // namespace

TEST(Engine, UnknownSessionThrows) {
  auto e_ptr = make_engine();
  auto& e = *e_ptr;
  EXPECT_THROW(e.handle_turn("missing", TurnInput::say("hi")), NotFound);
  EXPECT_THROW(e.handle_turn("../x", TurnInput::say("hi")), store::StorageError);
}

TEST(Engine, PreferredIdsAreUniqued) {
  auto e_ptr = make_engine();
  auto& e = *e_ptr;
  auto a = e.create_session("kitchen");
  auto b = e.create_session("kitchen");
  EXPECT_EQ(a, "kitchen");
  EXPECT_NE(a, b);
}

TEST(Engine, FirstTurnGreetsAndSearches) {
  auto e_ptr = make_engine();
  auto& e = *e_ptr;
  auto id = e.create_session();
  auto r = e.handle_turn(id, TurnInput::say("how do i fix a leaky faucet"));
  EXPECT_EQ(r.debug.at("sub_state"), "catalog");
  ASSERT_TRUE(r.display.has_value());
  EXPECT_FALSE(r.display->cards.empty());
  EXPECT_FALSE(has_placeholder(r.speech));
  EXPECT_EQ(r.debug.at("version"), "1");
}

TEST(Engine, TouchAndSpeechSelectTheSameTask) {
  auto spoken_ptr = make_engine();
  auto& spoken = *spoken_ptr;
  auto touched_ptr = make_engine();
  auto& touched = *touched_ptr;
  auto a = spoken.create_session("s");
  auto b = touched.create_session("s");
  spoken.handle_turn(a, TurnInput::say("how to paint a fence"));
  touched.handle_turn(b, TurnInput::say("how to paint a fence"));
  spoken.handle_turn(a, TurnInput::say("the first one"));
  touched.handle_turn(b, TurnInput::tap({{"action", "select"}, {"index", "1"}}));
  EXPECT_EQ(spoken.store().get(a)->state, touched.store().get(b)->state);
}

TEST(Engine, ParallelAndSequentialAgree) {
  auto par_ptr = make_engine(true);
  auto& par = *par_ptr;
  auto seq_ptr = make_engine(false);
  auto& seq = *seq_ptr;
  const std::vector<std::string> script = {"how to make pancakes", "vegetarian please", "the second one", "start",
                                           "next", "tell me more", "set a timer for 3 minutes", "repeat that",
                                           "i'm done"};
  auto a = par.create_session("same");
  auto b = seq.create_session("same");
  TimestampMs t = harness::kCaseEpochMs;
  for (const auto& u : script) {
    t += 1000;
    auto ra = par.handle_turn(a, TurnInput::say(u, t));
    auto rb = seq.handle_turn(b, TurnInput::say(u, t));
    EXPECT_EQ(ra, rb) << u;
  }
  EXPECT_EQ(*par.store().get(a), *seq.store().get(b));
}

TEST(Engine, TranscriptRecordsEveryTurn) {
  auto e_ptr = make_engine();
  auto& e = *e_ptr;
  auto id = e.create_session();
  e.handle_turn(id, TurnInput::say("help"));
  e.handle_turn(id, TurnInput::say("stop"));
  auto t = e.transcript(id);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[1]["state_after"].get<DialogueState>().sub, SubState::Halt);
}

TEST(Engine, HaltedSessionRestarts) {
  auto e_ptr = make_engine();
  auto& e = *e_ptr;
  auto id = e.create_session();
  auto bye = e.handle_turn(id, TurnInput::say("stop"));
  EXPECT_TRUE(bye.end_session);
  auto again = e.handle_turn(id, TurnInput::say("how to paint a fence"));
  EXPECT_EQ(again.debug.at("sub_state"), "catalog");
}

TEST(Engine, DistinctSessionsRunConcurrently) {
  auto e_ptr = make_engine();
  auto& e = *e_ptr;
  std::vector<std::string> ids;
  for (int i = 0; i < 4; ++i) ids.push_back(e.create_session());
  std::vector<std::thread> threads;
  std::atomic<int> failures{0};
  for (const auto& id : ids)
    threads.emplace_back([&, id] {
      try {
        for (const char* u : {"how to paint a fence", "the first one", "start", "next"}) e.handle_turn(id, TurnInput::say(u));
      } catch (...) {
        ++failures;
      }
    });
  for (auto& t : threads) t.join();
  EXPECT_EQ(failures, 0);
  for (const auto& id : ids) EXPECT_EQ(e.store().get(id)->state.sub, SubState::Step);
}

TEST(Engine, TouchTable) {
  auto s = engine::touch_to_intents({{"action", "select"}, {"index", "2"}});
  EXPECT_TRUE(s.has(IntentKind::Affirm));
  EXPECT_EQ(s.choice, 2);
  EXPECT_TRUE(engine::touch_to_intents({{"action", "next"}}).has(IntentKind::Forward));
}

TEST(Fuzz, ShortRunHasNoViolations) {
  auto e_ptr = make_engine(false);
  auto& e = *e_ptr;
  harness::FuzzConfig cfg;
  cfg.turns = 2000;
  cfg.seed = 99;
  auto rep = harness::fuzz(e, cfg);
  EXPECT_EQ(rep.turns, 2000);
  EXPECT_EQ(rep.violations, 0) << (rep.samples.empty() ? "" : rep.samples.front());
  EXPECT_GT(rep.sub_states["Step"], 0);
}
