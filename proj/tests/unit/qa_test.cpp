#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "taco/qa.hpp"

using namespace taco;
using namespace taco::qa;

namespace {

const std::vector<std::string> kBlanch = {
    "Bring a large pot of water to a rolling boil.",
    "Fill a large bowl with ice and cold water.",
    "Carefully lower the tomatoes into the boiling water and leave them for about 30 seconds. "
    "Use tongs or a slotted spoon to move them straight into the ice bath.",
};

}  // namespace

TEST(Mrc, BlanchingDuration) {
  auto a = answer_mrc("How long should I leave the tomatoes in the boiling water?", kBlanch, 3);
  ASSERT_EQ(a.kind, AnswerKind::Extracted);
  EXPECT_NE(a.text.find("30 seconds"), std::string::npos);
}

TEST(Mrc, ZeroOverlapIsNoAnswer) {
  auto a = answer_mrc("Who won the chess tournament yesterday?", kBlanch, 3);
  EXPECT_EQ(a.kind, AnswerKind::NoAnswer);
  EXPECT_FALSE(a.answered());
}

TEST(Mrc, ContextWindow) {
  EXPECT_EQ(build_context({"a.", "b.", "c.", "d."}, 4, 2), "b. c. d.");
  EXPECT_EQ(build_context({"a.", "b."}, 1, 2), "a.");
}

TEST(Faq, ThresholdIsInclusive) {
  std::vector<FaqPair> faqs{{"can i freeze the soup", "Yes, for three months."},
                            {"how do i store leftovers", "In the fridge."}};
  auto exact = retrieve_faq("can i freeze the soup", faqs);
  EXPECT_EQ(exact.kind, AnswerKind::Faq);
  EXPECT_NEAR(exact.score, 1.0, 1e-12);

  const char* q = "can i freeze it";
  double c = faq_cosine(q, faqs[0].question, faqs);
  QAConfig at{c, 2, 0.25};
  EXPECT_EQ(retrieve_faq(q, faqs, at).kind, AnswerKind::Faq);
  QAConfig above{std::nextafter(c, 2.0), 2, 0.25};
  EXPECT_EQ(retrieve_faq(q, faqs, above).kind, AnswerKind::NoAnswer);
}

TEST(Faq, DefaultThresholdGate) {
  std::vector<FaqPair> faqs{{"can i freeze the soup", "Yes."}, {"how do i store leftovers", "Fridge."}};
  for (const char* q : {"can i freeze the soup", "can i freeze it", "what pan should i use", "store soup"}) {
    double best = std::max(faq_cosine(q, faqs[0].question, faqs), faq_cosine(q, faqs[1].question, faqs));
    EXPECT_EQ(retrieve_faq(q, faqs).answered(), best >= 0.75) << q;
  }
}

TEST(Ingredients, LongestMatchWins) {
  TaskDocument doc = fixtures::make_doc("c", "Cake", Domain::Cooking, {"Mix."}, {"sugar", "brown sugar"});
  doc.ingredients[1].quantity = "1 cup";
  auto hit = find_ingredient("how much brown sugar do i need", doc.ingredients);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->name, "brown sugar");
  auto a = answer_ingredient("how much brown sugar do i need", doc);
  EXPECT_EQ(a.kind, AnswerKind::IngredientInfo);
  EXPECT_EQ(a.quantity, "1 cup");
}

TEST(Substitutes, TableLookup) {
  SubstitutionTable t;
  t.entries["butter"] = {"olive oil", "margarine"};
  TaskDocument doc = fixtures::make_doc("c", "Toast", Domain::Cooking, {"Toast."}, {"butter", "bread"});
  auto a = answer_substitute("what can i use instead of butter", &doc, t);
  EXPECT_EQ(a.kind, AnswerKind::SubstituteInfo);
  EXPECT_NE(a.text.find("olive oil"), std::string::npos);
  EXPECT_EQ(answer_substitute("what can i use instead of saffron", &doc, t).kind, AnswerKind::NoAnswer);
}

TEST(Router, ClassifierMasksCookingTypesForDiy) {
  const auto& c = fixtures::bundled_resources()->models.questions;
  auto t = c.classify("what can i use instead of the sandpaper", std::nullopt, Domain::DIY);
  EXPECT_NE(t, QuestionType::Ingredient);
  EXPECT_NE(t, QuestionType::Substitute);
  EXPECT_THROW(c.classify(" ", std::nullopt, Domain::Cooking), EmptyQuestion);
}

TEST(Eval, NormalizeAnswer) {
  EXPECT_EQ(normalize_answer("  About 30 Seconds! "), "about 30 seconds");
}

TEST(Eval, BundledSetMeetsFloor) {
  auto records = parse_qa_eval(read_json(fixtures::bundled_paths().qa_eval()));
  auto r = evaluate_mrc(records);
  EXPECT_GT(r.answerable, 0);
  EXPECT_GT(r.unanswerable, 0);
  EXPECT_GE(r.answerable_em(), 0.5);
}
