#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "taco/eval.hpp"
#include "taco/harness.hpp"

using namespace taco;

namespace {

std::unique_ptr<engine::Engine> make_engine() {
  return std::make_unique<engine::Engine>(fixtures::bundled_resources(), std::make_shared<store::MemoryStore>());
}

harness::ConversationCase case_of(const char* json) { return harness::parse_case(Json::parse(json)); }

}  // namespace

TEST(Harness, ParseRejectsUppercaseKeywordsAndEmptyTurns) {
  EXPECT_THROW(case_of(R"({"name":"x","turns":[{"utterance":"hi","require":["Recipe"]}]})"), ValidationError);
  EXPECT_THROW(case_of(R"({"name":"x","turns":[]})"), ValidationError);
}

TEST(Harness, CaseJsonRoundTrip) {
  auto c = case_of(R"({"name":"x","turns":[{"utterance":"hi","require":["a"],"forbid":["b"],"forbid_repeat":true}]})");
  auto back = harness::parse_case(harness::case_to_json(c));
  EXPECT_EQ(back.turns[0].require_keywords, c.turns[0].require_keywords);
  EXPECT_EQ(back.turns[0].forbid_keywords, c.turns[0].forbid_keywords);
  EXPECT_TRUE(back.turns[0].forbid_repeat);
}

TEST(Harness, LintWarnsOnAssertionFreeCase) {
  auto c = case_of(R"({"name":"x","turns":[{"utterance":"hi"}]})");
  EXPECT_FALSE(harness::lint_case(c).empty());
}

TEST(Harness, NormalizeForMatch) {
  EXPECT_EQ(harness::normalize_for_match("Don't  understand, SORRY!"), "dont understand sorry");
}

TEST(Harness, FavoritesCasePasses) {
  auto e_ptr = make_engine();
  auto& e = *e_ptr;
  auto c = case_of(R"({"name":"fav","turns":[{"utterance":"tell me your favorites",
      "require":["recipe","task","favorite"],"forbid":["sorry","don't understand"]}]})");
  auto r = harness::run_case(c, e);
  EXPECT_TRUE(r.passed) << r.reason << " | " << r.actual;
}

TEST(Harness, FailingKeywordIsReported) {
  auto e_ptr = make_engine();
  auto& e = *e_ptr;
  auto c = case_of(R"({"name":"bad","turns":[{"utterance":"help","require":["zebra crossing"]}]})");
  auto r = harness::run_case(c, e);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.failing_turn, 1);
  EXPECT_NE(r.reason.find("zebra crossing"), std::string::npos);
}

TEST(Harness, BundledSuiteDeterministicAndGreen) {
  auto cases = harness::load_cases(fixtures::bundled_paths().root.parent_path() / "tests" / "conversations");
  ASSERT_GE(cases.size(), 10u);
  auto e1 = make_engine();
  auto e2 = make_engine();
  auto a = harness::run_suite(cases, *e1, true);
  auto b = harness::run_suite(cases, *e2, false);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(a[i].passed) << a[i].name << ": " << a[i].reason;
    EXPECT_EQ(a[i].passed, b[i].passed);
    ASSERT_EQ(a[i].responses.size(), b[i].responses.size()) << a[i].name;
    for (std::size_t t = 0; t < a[i].responses.size(); ++t)
      EXPECT_EQ(a[i].responses[t].speech, b[i].responses[t].speech) << a[i].name << " turn " << t + 1;
  }
}

TEST(Harness, ExportMasksRedactions) {
  auto e_ptr = make_engine();
  auto& e = *e_ptr;
  auto id = e.create_session();
  e.handle_turn(id, TurnInput::say("how to paint a fence for alice"));
  auto c = harness::export_case(e.transcript(id), {"alice"});
  ASSERT_EQ(c.turns.size(), 1u);
  EXPECT_EQ(c.turns[0].input.utterance().find("alice"), std::string::npos);
  EXPECT_THROW(harness::export_case({}, {}), harness::EmptyTranscript);
}

TEST(Eval, SpanF1) {
  EXPECT_DOUBLE_EQ(eval::span_f1({"wash", "a", "car"}, {"wash", "a", "car"}), 1.0);
  EXPECT_DOUBLE_EQ(eval::span_f1({}, {}), 1.0);
  EXPECT_DOUBLE_EQ(eval::span_f1({"x"}, {}), 0.0);
  // p = 1/2, r = 1/3 -> 2pr/(p+r) = 0.4
  EXPECT_NEAR(eval::span_f1({"wash", "car"}, {"wash", "my", "boat"}), 0.4, 1e-12);
  EXPECT_NEAR(eval::span_f1({"a", "a"}, {"a"}), 2 * 0.5 * 1 / 1.5, 1e-12);
}

TEST(Eval, OraclePredictorScoresPerfectly) {
  std::vector<nlu::LabeledUtterance> data = {
      {"next step", {"navigation"}, std::nullopt, std::nullopt},
      {"how to bake bread", {"task_request"}, "bake bread", Domain::Cooking},
  };
  eval::NluPredictor oracle;
  oracle.intents = [&](const std::string& u) {
    for (const auto& d : data)
      if (d.text == u) return std::set<std::string>(d.labels.begin(), d.labels.end());
    return std::set<std::string>{};
  };
  oracle.task_name = [&](const std::string& u) -> std::optional<std::string> {
    return u == "how to bake bread" ? std::optional<std::string>("bake bread") : std::nullopt;
  };
  oracle.domain = [](const std::string&) { return Domain::Cooking; };
  auto r = eval::evaluate_nlu(data, oracle);
  EXPECT_DOUBLE_EQ(r.intent_accuracy, 1.0);
  EXPECT_DOUBLE_EQ(r.task_em, 1.0);
  EXPECT_DOUBLE_EQ(r.domain_accuracy, 1.0);
  EXPECT_EQ(r.task_examples, 1);
}

TEST(Eval, MissingDatasetThrows) {
  auto res = fixtures::bundled_resources();
  engine::DataPaths empty{std::filesystem::temp_directory_path() / "taco_no_such_dir"};
  EXPECT_THROW(eval::evaluate_all(*res, empty, eval::Suite::Qa), eval::MissingDataset);
}
