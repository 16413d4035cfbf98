#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "taco/nlu.hpp"

using namespace taco;
using namespace taco::nlu;

namespace {

IntentSet recognize(const std::string& u) {
  return recognize_intents(u, fixtures::bundled_resources()->models.intents);
}

std::set<std::string> coarse(const std::string& u) { return coarse_set(recognize(u)); }

}  // namespace

TEST(Asr, PhaseScopedWholeWordReplacement) {
  auto rules = parse_asr_rules("wrong,right,phases\nnext stop,next step,TaskExecution\nbowl,boil,TaskExecution\n");
  EXPECT_EQ(correct_asr("Next stop please", Phase::TaskExecution, rules), "next step please");
  EXPECT_EQ(correct_asr("Next stop please", Phase::TaskSearch, rules), "next stop please");
  EXPECT_EQ(correct_asr("bowls of soup", Phase::TaskExecution, rules), "bowls of soup");
  EXPECT_TRUE(lint_asr_rules(rules).empty());
}

TEST(Asr, LintFlagsChainedRules) {
  auto rules = parse_asr_rules("wrong,right,phases\na,b,TaskSearch\nb,c,TaskSearch\n");
  EXPECT_FALSE(lint_asr_rules(rules).empty());
}

TEST(Asr, BundledTableIsIdempotent) {
  EXPECT_TRUE(lint_asr_rules(fixtures::bundled_resources()->asr_rules).empty());
}

TEST(Parsers, Navigation) {
  EXPECT_EQ(parse_navigation("go forward two steps"), (NavCommand{NavKind::Forward, 2}));
  EXPECT_EQ(parse_navigation("go back"), (NavCommand{NavKind::Backward, 1}));
  EXPECT_EQ(parse_navigation("go to step 4"), (NavCommand{NavKind::GoToStep, 4}));
  EXPECT_EQ(parse_navigation("show me more").kind, NavKind::MoreChoice);
  EXPECT_THROW(parse_navigation("banana"), UnparseableNavigation);
}

TEST(Parsers, NumbersChoicesDurations) {
  EXPECT_EQ(parse_number("seven"), 7);
  EXPECT_EQ(parse_number("third"), 3);
  EXPECT_EQ(parse_number("12"), 12);
  EXPECT_FALSE(parse_number("many"));
  EXPECT_EQ(parse_choice("the second one"), 2);
  EXPECT_EQ(parse_choice("option 3"), 3);
  EXPECT_EQ(parse_duration_seconds("set a timer for five minutes"), 300);
  EXPECT_EQ(parse_duration_seconds("1 hour 30 minutes"), 5400);
  EXPECT_EQ(parse_duration_seconds("half an hour"), 1800);
  EXPECT_EQ(parse_duration_seconds("an hour and a half"), 5400);
  EXPECT_EQ(parse_duration_seconds("two and a half minutes"), 150);
  EXPECT_FALSE(parse_duration_seconds("set a timer"));
  EXPECT_EQ(parse_list_item("add flour to my shopping list"), "flour");
  EXPECT_TRUE(is_recommendation_request("what are your favorites"));
}

TEST(Intents, NegateAndTaskRequest) {
  auto s = recognize("No, I want to know how to wash my car.");
  EXPECT_EQ(coarse_set(s), (std::set<std::string>{"negate", "task_request"}));
  EXPECT_EQ(extract_task_name(s.raw_utterance), "wash my car");
}

TEST(Intents, SingleLabelCommands) {
  EXPECT_EQ(coarse("repeat that"), std::set<std::string>{"repeat"});
  EXPECT_EQ(coarse("stop"), std::set<std::string>{"stop"});
  EXPECT_EQ(coarse("what can i say"), std::set<std::string>{"help"});
  EXPECT_EQ(coarse("next step"), std::set<std::string>{"navigation"});
  EXPECT_EQ(coarse("set a timer for ten minutes"), std::set<std::string>{"timer"});
  EXPECT_EQ(coarse("how do i rewire my electrical panel"), std::set<std::string>{"task_request"});
}

TEST(Intents, ParametersFilled) {
  auto t = recognize("set a timer for ten minutes");
  EXPECT_EQ(t.timer_seconds, 600);
  auto l = recognize("add butter to my shopping list");
  EXPECT_EQ(l.list_item, "butter");
  auto f = recognize("tell me your favorites");
  EXPECT_TRUE(f.wants_recommendation);
}

TEST(Intents, DisfluenciesAndClauses) {
  EXPECT_EQ(strip_disfluencies("Um, so uh next step"), "next step");
  auto parts = split_clauses("go back and repeat that");
  EXPECT_EQ(parts, (std::vector<std::string>{"go back", "repeat that"}));
}

TEST(Intents, StateFilterDropsDisallowed) {
  IntentSet s;
  s.add(IntentLabel::navigation({NavKind::Forward, 1}));
  auto out = filter_by_state(s, DialogueState::welcome());
  EXPECT_TRUE(out.has(IntentKind::Ignore));
  auto kept = filter_by_state(s, DialogueState::step_at("x", 1));
  EXPECT_TRUE(kept.has(IntentKind::Forward));
}

TEST(TaskNames, Examples) {
  EXPECT_EQ(extract_task_name("How to wash a car?"), "wash a car");
  EXPECT_EQ(extract_task_name("Search bubble tea recipe for me."), "bubble tea");
  EXPECT_EQ(extract_task_name("i want to make pancakes"), "make pancakes");
  EXPECT_FALSE(extract_task_name("please"));
}

TEST(Domain, ClassifiesObviousTasks) {
  const auto& d = fixtures::bundled_resources()->models.domain;
  EXPECT_EQ(d.classify("bubble tea"), Domain::Cooking);
  EXPECT_EQ(d.classify("fix a leaky faucet"), Domain::DIY);
  EXPECT_THROW(d.classify("  "), EmptyInput);
}

TEST(Simulator, TemplateSplitIsDisjointAndSeeded) {
  auto spec = load_simulator_spec(fixtures::bundled_paths().intent_spec());
  auto [train, held] = split_templates(spec, 0.25, 7);
  for (const auto& [label, ts] : held.templates) {
    std::set<std::string> tr(train.templates[label].begin(), train.templates[label].end());
    for (const auto& t : ts) EXPECT_EQ(tr.count(t), 0u) << label << ": " << t;
  }
  auto a = simulate_training_data(train, 50, 3);
  auto b = simulate_training_data(train, 50, 3);
  EXPECT_EQ(a, b);
}

TEST(Simulator, MissingSlotValuesRejected) {
  SimulatorSpec spec;
  spec.templates["stop"] = {"stop the {thing}"};
  EXPECT_THROW(validate_simulator_spec(spec), SpecError);
}

TEST(IntentModel, JsonRoundTripPreservesPredictions) {
  const auto& m = fixtures::bundled_resources()->models.intents;
  auto back = IntentModel::from_json(m.to_json());
  for (const char* u : {"next step", "how to make pancakes", "what's the temperature for step two"})
    EXPECT_EQ(coarse_set(recognize_intents(u, back)), coarse_set(recognize_intents(u, m))) << u;
}
