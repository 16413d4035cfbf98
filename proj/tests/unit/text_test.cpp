#include <gtest/gtest.h>

#include "taco/corpus.hpp"
#include "taco/text.hpp"

using namespace taco;

TEST(Text, NormalizeKeepsInnerApostrophes) {
  EXPECT_EQ(text::normalize_utterance("  What's   NEXT?! "), "what's next");
  EXPECT_EQ(text::normalize_utterance("'quoted'"), "quoted");
}

TEST(Text, TokenizeSplitsOnNonAlnum) {
  std::vector<std::string> want{"how", "to", "remove", "spray", "paint"};
  EXPECT_EQ(text::tokenize("How-to remove, spray_paint!"), want);
  EXPECT_TRUE(text::tokenize(" ... ").empty());
}

TEST(Text, SplitSentencesKeepsTerminators) {
  auto parts = text::split_sentences("Boil water. Add salt! Done? 3.5 cups");
  ASSERT_EQ(parts.size(), 4u);
  EXPECT_EQ(parts[0], "Boil water.");
  EXPECT_EQ(parts[3], "3.5 cups");
}

TEST(Text, FindPhraseWholeWords) {
  auto toks = text::tokenize("add the baking soda now");
  EXPECT_EQ(text::find_phrase(toks, {"baking", "soda"}), 2u);
  EXPECT_EQ(text::find_phrase(toks, {"bak"}), text::npos);
  EXPECT_EQ(text::find_phrase(toks, {}), text::npos);
}

TEST(Text, JoinAndPrefix) {
  EXPECT_EQ(text::join({"a", "b", "c"}, ", "), "a, b, c");
  EXPECT_TRUE(text::starts_with_icase("Tip: be careful", "tip:"));
  EXPECT_FALSE(text::starts_with_icase("Ti", "tip:"));
}

TEST(Segment, TipsAreSeparated) {
  auto s = segment_step("Whisk the eggs. Tip: use a fork if you have no whisk.");
  EXPECT_EQ(s.instruction, "Whisk the eggs.");
  EXPECT_FALSE(s.detail.has_value());
  ASSERT_TRUE(s.tips.has_value());
  EXPECT_EQ(*s.tips, "use a fork if you have no whisk.");
}

TEST(Segment, LongStepSpillsIntoDetail) {
  std::string raw = "Cut the board to length. ";
  for (int i = 0; i < 20; ++i) raw += "Sand every edge until it is smooth to the touch. ";
  auto s = segment_step(raw, 80);
  EXPECT_LE(s.instruction.size(), 80u);
  ASSERT_TRUE(s.detail.has_value());
  EXPECT_FALSE(s.detail->empty());
}

TEST(Segment, BlankThrows) { EXPECT_THROW(segment_step("   "), EmptyStep); }

TEST(Corpus, CanonicalizeAndPhraseList) {
  EXPECT_EQ(canonicalize("  Spray   Paint "), "spray paint");
  auto set = parse_phrase_list("# comment\nGas Leak\n\n  bleach and ammonia \n");
  EXPECT_EQ(set, (std::set<std::string>{"bleach and ammonia", "gas leak"}));
}

TEST(Corpus, ParseRejectsDuplicateIds) {
  Json j = Json::array({
      {{"id", "a"}, {"title", "One"}, {"domain", "diy"}, {"steps", {"Do it."}}},
      {{"id", "a"}, {"title", "Two"}, {"domain", "diy"}, {"steps", {"Do it."}}},
  });
  EXPECT_THROW(parse_corpus(j), ValidationError);
}

TEST(Corpus, ParseSegmentsRawSteps) {
  Json j = Json::array({{{"id", "a"}, {"title", "One"}, {"domain", "cooking"}, {"steps", {"Mix. Note: gently."}}}});
  auto docs = parse_corpus(j);
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].domain, Domain::Cooking);
  EXPECT_EQ(docs[0].steps[0].instruction, "Mix.");
  EXPECT_EQ(docs[0].steps[0].tips.value_or(""), "gently.");
}
