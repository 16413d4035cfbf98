#include <gtest/gtest.h>

#include "taco/safety.hpp"
#include "taco/utility.hpp"

using namespace taco;

namespace {

Blacklist lists() {
  Blacklist b;
  b.dangerous_terms = {"gas line", "bleach and ammonia"};
  b.professional_terms = {"electrical panel", "gas line"};
  b.profanity_terms = {"darn"};
  return b;
}

}  // namespace

TEST(Safety, ProfanityWholeWord) {
  auto b = lists();
  EXPECT_EQ(safety::check_profanity("Well, DARN it!", b).kind, safety::VerdictKind::Profane);
  EXPECT_TRUE(safety::check_profanity("darning socks", b).safe());
}

TEST(Safety, DangerousBeatsProfessional) {
  auto b = lists();
  auto v = safety::check_task_request("move a gas line", b);
  EXPECT_EQ(v.kind, safety::VerdictKind::DangerousTask);
  EXPECT_EQ(v.matched_term, "gas line");
  EXPECT_EQ(safety::check_task_request("rewire my electrical panel", b).kind,
            safety::VerdictKind::ProfessionalTask);
  EXPECT_TRUE(safety::check_task_request("paint a fence", b).safe());
}

TEST(Safety, ScrubDropsProfaneSentences) {
  auto b = lists();
  Response r;
  r.speech = "Step one is done. Darn, that was quick. Say next.";
  auto out = safety::scrub_response(r, b);
  EXPECT_EQ(out.speech, "Step one is done. Say next.");
  r.speech = "Darn.";
  r.end_session = true;
  out = safety::scrub_response(r, b);
  EXPECT_EQ(out.speech, safety::kApologyLine);
  EXPECT_FALSE(out.end_session);
}

TEST(ShoppingList, AddDedupesAndRemoveThrows) {
  DialogueContext ctx;
  ctx = utility::list_add(ctx, "Flour");
  ctx = utility::list_add(ctx, "flour");
  ctx = utility::list_add(ctx, "eggs");
  EXPECT_EQ(ctx.shopping_list.size(), 2u);
  ctx = utility::list_remove(ctx, "FLOUR");
  EXPECT_EQ(ctx.shopping_list, std::vector<std::string>{"eggs"});
  EXPECT_THROW(utility::list_remove(ctx, "milk"), utility::ItemNotFound);
  EXPECT_THROW(utility::list_add(ctx, "  "), EmptyInput);
}

TEST(Timers, PauseResumeAndFire) {
  DialogueContext ctx;
  const TimestampMs t0 = 1'000'000;
  ctx = utility::timer_set(ctx, 60, t0);
  EXPECT_EQ(utility::timer_remaining(ctx.timers[0], t0 + 10'000), 50);
  ctx = utility::timer_pause(ctx, t0 + 20'000);
  EXPECT_EQ(utility::timer_remaining(ctx.timers[0], t0 + 500'000), 40);
  EXPECT_THROW(utility::timer_pause(ctx, t0 + 21'000), utility::InvalidTimerState);
  ctx = utility::timer_resume(ctx, t0 + 100'000);
  EXPECT_TRUE(utility::fire_due_timers(ctx, t0 + 139'000).empty());
  auto fired = utility::fire_due_timers(ctx, t0 + 140'000);
  ASSERT_EQ(fired.size(), 1u);
  EXPECT_EQ(ctx.timers[0].state, TimerState::Fired);
  EXPECT_EQ(utility::active_timer(ctx), nullptr);
}

TEST(Timers, CancelActsOnLatest) {
  DialogueContext ctx;
  ctx = utility::timer_set(ctx, 60, 0);
  ctx = utility::timer_set(ctx, 120, 0);
  ctx = utility::timer_cancel(ctx, 1000);
  EXPECT_EQ(ctx.timers[1].state, TimerState::Cancelled);
  EXPECT_EQ(ctx.timers[0].state, TimerState::Running);
  EXPECT_EQ(utility::active_timer(ctx)->id, ctx.timers[0].id);
}
