#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "taco/response.hpp"
#include "taco/text.hpp"

using namespace taco;
using namespace taco::response;

TEST(Slots, FillAndEscape) {
  EXPECT_EQ(fill_slots("Step {n}: {text} {{ok}}", {{"n", "2"}, {"text", "stir"}}), "Step 2: stir {ok}");
  EXPECT_THROW(fill_slots("{missing}", {}), MissingSlot);
  std::vector<std::string> declared{"a"};
  EXPECT_THROW(fill_slots("{a}", {{"a", "1"}, {"b", "2"}}, &declared), UnknownSlot);
  EXPECT_EQ(placeholders("{a} {{b}} {c}"), (std::vector<std::string>{"a", "c"}));
}

TEST(Variants, DeterministicUnderSeed) {
  std::vector<std::string> v{"a", "b", "c", "d"};
  std::uint64_t s1 = 5, s2 = 5;
  for (int i = 0; i < 20; ++i) EXPECT_EQ(select_variant(v, s1), select_variant(v, s2));
  std::vector<std::string> none;
  EXPECT_THROW(select_variant(none, s1), EmptyVariantList);
}

TEST(Variants, DrawCoversAllIndices) {
  std::uint64_t s = 1;
  std::set<std::size_t> seen;
  for (int i = 0; i < 200; ++i) seen.insert(draw_index(3, s));
  EXPECT_EQ(seen.size(), 3u);
}

TEST(Durations, Format) {
  EXPECT_EQ(format_duration(300), "5 minutes");
  EXPECT_EQ(format_duration(5400), "1 hour and 30 minutes");
  EXPECT_EQ(format_duration(45), "45 seconds");
  EXPECT_EQ(format_duration(60), "1 minute");
}

TEST(Registry, LintFindsProblems) {
  TemplateRegistry reg;
  reg.entries["x"] = {{"a"}, {"uses {b}"}};
  auto problems = reg.lint({"x", "y"});
  EXPECT_GE(problems.size(), 2u);
}

TEST(Registry, BundledTemplatesLintClean) {
  const auto& reg = fixtures::bundled_resources()->templates;
  auto problems = reg.lint(engine::required_responders());
  EXPECT_TRUE(problems.empty()) << text::join(problems, "\n");
}

TEST(Greeting, TimeOfDayBuckets) {
  const auto& reg = fixtures::bundled_resources()->templates;
  std::uint64_t s = 9;
  auto m = greet(reg, 9, s);
  auto e = greet(reg, 22, s);
  EXPECT_FALSE(m.speech.empty());
  EXPECT_FALSE(e.speech.empty());
  EXPECT_FALSE(has_placeholder(m.speech));
}

TEST(Catalog, PagesOfThree) {
  EXPECT_EQ(page_count(0), 0);
  EXPECT_EQ(page_count(3), 1);
  EXPECT_EQ(page_count(7), 3);
}

TEST(Favorites, IntroMentionsThreeTasks) {
  auto res = fixtures::bundled_resources();
  std::uint64_t s = 3;
  auto ids = shuffled_favorites(res->templates, s);
  ASSERT_GE(ids.size(), 3u);
  auto r = render_favorites(res->templates, ids, res->lookup(), s);
  ASSERT_TRUE(r.display.has_value());
  EXPECT_EQ(r.display->cards.size(), 3u);
  TemplateRegistry empty;
  EXPECT_THROW(render_favorites(empty, {}, res->lookup(), s), EmptyFavorites);
}

TEST(Join, SkipsEmptyParts) { EXPECT_EQ(join_speech({"One.", "", "Two."}), "One. Two."); }
