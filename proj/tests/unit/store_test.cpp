#include <gtest/gtest.h>

#include <filesystem>
#include <thread>

#include "taco/store.hpp"

using namespace taco;
using namespace taco::store;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("taco_store_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

DialogueContext ctx_for(const std::string& id) {
  DialogueContext c;
  c.session_id = id;
  return c;
}

template <typename Store>
void version_conflict_contract(Store& s) {
  auto c = ctx_for("s1");
  EXPECT_EQ(s.put(c), 1);
  auto loaded = *s.get("s1");
  EXPECT_EQ(loaded.version, 1);
  auto stale = loaded;
  loaded.turn_count = 1;
  EXPECT_EQ(s.put(loaded), 2);
  stale.turn_count = 99;
  try {
    s.put(stale);
    FAIL() << "stale write accepted";
  } catch (const VersionConflict& e) {
    EXPECT_EQ(e.stored(), 2);
    EXPECT_EQ(e.attempted(), 1);
  }
  EXPECT_EQ(s.get("s1")->turn_count, 1);
}

}  // namespace

TEST(MemoryStore, VersionConflict) {
  MemoryStore s;
  version_conflict_contract(s);
}

TEST(FileStore, VersionConflict) {
  TempDir d;
  FileStore s(d.path);
  version_conflict_contract(s);
}

TEST(FileStore, RoundTripsFullContext) {
  TempDir d;
  FileStore s(d.path);
  auto c = ctx_for("abc");
  c.state = DialogueState::step_at("cook-001", 2, StepPart::Detail);
  c.state_history = {DialogueState::welcome(), DialogueState::catalog(1)};
  c.shopping_list = {"flour"};
  c.timers.push_back(TimerRecord{1, "eggs", 300, 5, TimerState::Paused, 120});
  c.rng_state = 0xdeadbeefULL;
  s.put(c);
  auto back = *s.get("abc");
  c.version = 1;
  EXPECT_EQ(back, c);
}

TEST(FileStore, CrashBeforeRenameKeepsPreviousVersion) {
  TempDir d;
  FileStore s(d.path);
  auto c = ctx_for("crashy");
  c.turn_count = 1;
  s.put(c);
  auto next = *s.get("crashy");
  next.turn_count = 2;
  s.crash_hook = [](std::string_view stage) {
    if (stage == "after_temp_write") throw std::runtime_error("simulated crash");
  };
  EXPECT_THROW(s.put(next), std::runtime_error);
  s.crash_hook = nullptr;

  FileStore reopened(d.path);
  auto survived = *reopened.get("crashy");
  EXPECT_EQ(survived.version, 1);
  EXPECT_EQ(survived.turn_count, 1);
  EXPECT_EQ(reopened.put(next), 2);
  EXPECT_EQ(reopened.get("crashy")->turn_count, 2);
}

TEST(FileStore, TranscriptAppendsInOrder) {
  TempDir d;
  FileStore s(d.path);
  s.create("t1");
  EXPECT_TRUE(s.exists("t1"));
  for (int i = 0; i < 3; ++i) s.append_transcript("t1", Json{{"turn", i}});
  auto t = s.transcript("t1");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[2]["turn"], 2);
  EXPECT_THROW(s.transcript("nope"), NotFound);
}

TEST(FileStore, RejectsUnsafeIds) {
  EXPECT_THROW(check_session_id("../etc"), StorageError);
  EXPECT_THROW(check_session_id(""), StorageError);
  EXPECT_NO_THROW(check_session_id("ok_id-1"));
}

TEST(MemoryStore, ConcurrentWritersExactlyOneWinsPerVersion) {
  MemoryStore s;
  s.put(ctx_for("race"));
  std::atomic<int> wins{0}, conflicts{0};
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i)
    threads.emplace_back([&] {
      auto c = ctx_for("race");
      c.version = 1;
      try {
        s.put(c);
        ++wins;
      } catch (const VersionConflict&) {
        ++conflicts;
      }
    });
  for (auto& t : threads) t.join();
  EXPECT_EQ(wins, 1);
  EXPECT_EQ(conflicts, 7);
}
