#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "taco/dm.hpp"

using namespace taco;
using namespace taco::dm;

namespace {

std::vector<TaskDocument> docs_fixture() {
  auto a = fixtures::make_doc("t1", "Fix a Chair", Domain::DIY, {"Loosen.", "Glue.", "Clamp."});
  a.steps[1].detail = "Use wood glue.";
  auto b = fixtures::make_doc("t2", "Paint a Fence", Domain::DIY, {"Sand.", "Paint."});
  return {a, b};
}

response::DocLookup lookup(const std::vector<TaskDocument>& docs) {
  return [&docs](const std::string& id) -> const TaskDocument* {
    for (const auto& d : docs)
      if (d.id == id) return &d;
    return nullptr;
  };
}

IntentSet intents(std::initializer_list<IntentLabel> labels) {
  IntentSet s;
  for (const auto& l : labels) s.add(l);
  return s;
}

RankedResult results(int n) {
  RankedResult r;
  r.query = "q";
  for (int i = 0; i < n; ++i) r.candidates.push_back({i % 2 ? "t2" : "t1", 1.0 - i * 0.1, {}});
  return r;
}

}  // namespace

TEST(ModelCheck, DefaultTableHoldsLockAndCoverage) {
  auto rep = model_check(default_table());
  EXPECT_TRUE(rep.execution_lock);
  EXPECT_TRUE(rep.coverage);
  EXPECT_TRUE(rep.halt_only_via_stop);
  EXPECT_TRUE(rep.ok()) << rep.problems.size();
  EXPECT_EQ(rep.reachable.size(), 8u);
}

TEST(ModelCheck, DetectsBrokenLock) {
  TransitionTable t = default_table();
  auto& e = t.entries.at({SubState::Step, IntentKind::Negate});
  e.targets.push_back(SubState::Catalog);
  e.fallback = false;
  auto rep = model_check(t);
  EXPECT_FALSE(rep.execution_lock);
}

TEST(ModelCheck, DetectsMissingEntry) {
  TransitionTable t = default_table();
  t.entries.erase({SubState::Catalog, IntentKind::MoreChoice});
  EXPECT_FALSE(model_check(t).coverage);
}

TEST(Table, TotalOverAllPairs) {
  for (int s = 0; s <= static_cast<int>(SubState::Halt); ++s)
    for (int k = 0; k < kIntentKindCount; ++k)
      EXPECT_NE(default_table().find(static_cast<SubState>(s), static_cast<IntentKind>(k)), nullptr);
}

TEST(Priority, StopBeatsNavigationBeatsHelp) {
  EXPECT_LT(priority(IntentKind::Stop), priority(IntentKind::Forward));
  EXPECT_LT(priority(IntentKind::Forward), priority(IntentKind::Help));
  auto s = intents({IntentLabel(IntentKind::Help), IntentLabel(IntentKind::Stop)});
  EXPECT_EQ(pick_label(s, SubState::Step).kind(), IntentKind::Stop);
}

TEST(History, PushPopAndGuard) {
  DialogueContext ctx;
  EXPECT_THROW(pop_state(ctx), EmptyHistory);
  ctx = change_state(ctx, DialogueState::catalog(0));
  EXPECT_EQ(ctx.state_history.size(), 1u);
  ctx = change_state(ctx, DialogueState::catalog(0));
  EXPECT_EQ(ctx.state_history.size(), 1u);
  auto back = pop_state(ctx);
  EXPECT_EQ(back.state, DialogueState::welcome());
  EXPECT_TRUE(back.state_history.empty());

  DialogueContext exec;
  exec.state_history = {DialogueState::overview("t1")};
  exec.state = DialogueState::step_at("t1", 1);
  EXPECT_EQ(pop_state(exec), exec);
}

TEST(History, CappedAtLimit) {
  DialogueContext ctx;
  for (int i = 0; i < 120; ++i) ctx = change_state(ctx, DialogueState::catalog(i));
  EXPECT_EQ(ctx.state_history.size(), kHistoryLimit);
  EXPECT_EQ(ctx.state_history.back(), DialogueState::catalog(118));
}

TEST(Navigate, ClampsStepsAndPages) {
  auto docs = docs_fixture();
  DialogueContext ctx;
  ctx.state = DialogueState::step_at("t1", 2);
  EXPECT_EQ(navigate(ctx, {NavKind::Forward, 5}, lookup(docs)).state.step, 3);
  EXPECT_EQ(navigate(ctx, {NavKind::Backward, 5}, lookup(docs)).state.step, 1);
  EXPECT_EQ(navigate(ctx, {NavKind::GoToStep, 9}, lookup(docs)), ctx);

  DialogueContext cat;
  cat.search_results = results(7);
  cat.state = DialogueState::catalog(2);
  EXPECT_EQ(navigate(cat, {NavKind::MoreChoice, 1}, lookup(docs)).state.page, 2);
  EXPECT_EQ(navigate(cat, {NavKind::LessChoice, 1}, lookup(docs)).state.page, 1);
}

TEST(Detail, WalksInstructionDetailThenExhausts) {
  auto docs = docs_fixture();
  DialogueContext ctx;
  ctx.state = DialogueState::step_at("t1", 2);
  auto plan = handle_detail_request(ctx, lookup(docs));
  EXPECT_EQ(plan.context_snapshot.state.part, StepPart::Detail);
  auto again = handle_detail_request(plan.context_snapshot, lookup(docs));
  ASSERT_FALSE(again.responder_ids.empty());
  EXPECT_EQ(again.responder_ids.front(), "no_more_detail");
}

TEST(Clarification, ConstraintParsing) {
  TagVocabulary v{{"vegetarian", "nut-free"}, {"italian", "thai"}};
  EXPECT_EQ(parse_constraints("vegetarian please", v), (Constraints{{"vegetarian"}, {}}));
  EXPECT_EQ(parse_constraints("something italian with no nuts", v), (Constraints{{"nut-free"}, {"italian"}}));
  EXPECT_TRUE(parse_constraints("anything is fine", v).empty());
}

TEST(Transition, CookingRequestAsksForClarification) {
  auto docs = docs_fixture();
  DialogueContext ctx;
  auto in = intents({IntentLabel(IntentKind::TaskRequest)});
  in.task_name = "pancakes";
  in.domain = Domain::Cooking;
  TurnExtras ex;
  ex.docs = lookup(docs);
  auto [next, plan] = transition(ctx, in, safety::SafetyVerdict::ok(), ex);
  EXPECT_EQ(next.state.sub, SubState::Clarification);
  EXPECT_EQ(next.pending_query, "pancakes");
}

TEST(Transition, DiyRequestWithResultsOpensCatalog) {
  auto docs = docs_fixture();
  DialogueContext ctx;
  auto in = intents({IntentLabel(IntentKind::TaskRequest)});
  in.task_name = "fix a chair";
  in.domain = Domain::DIY;
  TurnExtras ex;
  ex.docs = lookup(docs);
  ex.search = results(4);
  auto [next, plan] = transition(ctx, in, safety::SafetyVerdict::ok(), ex);
  EXPECT_EQ(next.state, DialogueState::catalog(0));
  EXPECT_EQ(next.state_history.size(), 1u);
}

TEST(Transition, UnsafeRequestStaysPut) {
  auto docs = docs_fixture();
  DialogueContext ctx;
  auto in = intents({IntentLabel(IntentKind::TaskRequest)});
  in.task_name = "rewire an electrical panel";
  in.domain = Domain::DIY;
  TurnExtras ex;
  ex.docs = lookup(docs);
  safety::SafetyVerdict v{safety::VerdictKind::ProfessionalTask, "electrical panel"};
  auto [next, plan] = transition(ctx, in, v, ex);
  EXPECT_EQ(next.state.phase(), Phase::TaskSearch);
  EXPECT_FALSE(plan.responder_ids.empty());
}

TEST(Transition, ExecutionIgnoresNewTaskRequests) {
  auto docs = docs_fixture();
  DialogueContext ctx;
  ctx.state_history = {DialogueState::catalog(0), DialogueState::overview("t1")};
  ctx.state = DialogueState::step_at("t1", 2);
  ctx.search_results = results(3);
  auto in = intents({IntentLabel(IntentKind::TaskRequest), IntentLabel(IntentKind::Negate)});
  in.task_name = "paint a fence";
  in.domain = Domain::DIY;
  TurnExtras ex;
  ex.docs = lookup(docs);
  ex.search = results(3);
  auto [next, plan] = transition(ctx, in, safety::SafetyVerdict::ok(), ex);
  EXPECT_EQ(next.state.phase(), Phase::TaskExecution);
}

TEST(Transition, PureFunction) {
  auto docs = docs_fixture();
  DialogueContext ctx;
  ctx.state = DialogueState::step_at("t1", 1);
  auto in = intents({IntentLabel::navigation({NavKind::Forward, 1})});
  TurnExtras ex;
  ex.docs = lookup(docs);
  auto a = transition(ctx, in, safety::SafetyVerdict::ok(), ex);
  auto b = transition(ctx, in, safety::SafetyVerdict::ok(), ex);
  EXPECT_EQ(a.first, b.first);
  EXPECT_EQ(a.second.responder_ids, b.second.responder_ids);
  EXPECT_EQ(a.first.state.step, 2);
}

TEST(Transition, StopHalts) {
  auto docs = docs_fixture();
  DialogueContext ctx;
  ctx.state = DialogueState::step_at("t1", 1);
  TurnExtras ex;
  ex.docs = lookup(docs);
  auto [next, plan] = transition(ctx, intents({IntentLabel(IntentKind::Stop)}), safety::SafetyVerdict::ok(), ex);
  EXPECT_EQ(next.state.sub, SubState::Halt);
  EXPECT_TRUE(plan.end_session);
}

TEST(Graph, DumpListsEdges) {
  auto g = dump_graph(default_table());
  EXPECT_NE(g.find("->"), std::string::npos);
}

TEST(CheckState, FlagsBadStep) {
  auto docs = docs_fixture();
  DialogueContext ctx;
  ctx.state = DialogueState::step_at("t1", 7);
  EXPECT_TRUE(check_state(ctx, lookup(docs)).has_value());
  ctx.state = DialogueState::step_at("t1", 2, StepPart::Detail);
  EXPECT_FALSE(check_state(ctx, lookup(docs)).has_value());
}
