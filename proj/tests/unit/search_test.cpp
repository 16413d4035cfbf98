#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "taco/search.hpp"

using namespace taco;
using namespace taco::search;

namespace {

std::vector<TaskDocument> tiny_corpus() {
  return {
      fixtures::make_doc("c1", "Tomato Soup", Domain::Cooking, {"Simmer."}, {"tomato", "salt"}),
      fixtures::make_doc("c2", "Garlic Bread", Domain::Cooking, {"Bake."}, {"bread", "garlic", "butter"}),
      fixtures::make_doc("d1", "Remove Spray Paint", Domain::DIY, {"Scrub."}, {"paint thinner"}),
      fixtures::make_doc("d2", "Paint a Fence", Domain::DIY, {"Brush."}, {"paint", "brush"}),
  };
}

}  // namespace

TEST(Expansion, SpraypaintExample) {
  auto index = build_index(tiny_corpus());
  auto got = expand_query("How to remove spraypaint", index.lexicon());
  std::vector<std::string> want{"how", "to", "remove", "spraypaint", "spray", "paint"};
  EXPECT_EQ(got, want);
}

TEST(Expansion, LemmasAppended) {
  std::set<std::string> vocab{"bake", "cookie"};
  auto got = expand_query("baking cookies", vocab);
  std::vector<std::string> want{"baking", "cookies", "bake", "cookie"};
  EXPECT_EQ(got, want);
}

TEST(Lexicon, Lemmatize) {
  EXPECT_EQ(lemmatize("tomatoes"), "tomato");
  EXPECT_EQ(lemmatize("berries"), "berry");
  EXPECT_EQ(lemmatize("glass"), "glass");
  std::set<std::string> known{"bake"};
  EXPECT_EQ(lemmatize("baking", &known), "bake");
}

TEST(Lexicon, CompoundNeedsBothHalves) {
  std::set<std::string> vocab{"spray", "paint", "pan"};
  auto s = split_compound("spraypaint", vocab);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->first, "spray");
  EXPECT_EQ(s->second, "paint");
  EXPECT_FALSE(split_compound("spraypan", std::set<std::string>{"spray"}));
  EXPECT_FALSE(split_compound("paint", vocab));
}

TEST(Bm25, MatchesHandComputedOracle) {
  auto corpus = tiny_corpus();
  corpus.pop_back();
  auto index = build_index(corpus);
  // Indexed tokens (title + ingredients): c1 = 4, c2 = 5, d1 = 5; avg 14/3.
  // "garlic" and "bread" each occur twice in c2 only: df = 1, N = 3.
  const double idf = std::log((3 - 1 + 0.5) / (1 + 0.5));
  const double norm = 1.2 * (1 - 0.75 + 0.75 * 5 / (14.0 / 3.0));
  const double term = idf * 2 * 2.2 / (2 + norm);
  EXPECT_NEAR(bm25(index, index.doc_pos.at("c2"), {"garlic", "bread"}), 2 * term, 1e-9);
  EXPECT_NEAR(bm25(index, index.doc_pos.at("c1"), {"garlic", "bread"}), 0.0, 1e-12);
  EXPECT_NEAR(search::idf(index, "garlic"), idf, 1e-12);
}

TEST(Bm25, IdfFlooredAtZero) {
  auto index = build_index(tiny_corpus());
  // "paint" is in 2 of 4 documents: ln(2.5/2.5) = 0.
  EXPECT_EQ(search::idf(index, "paint"), 0.0);
  EXPECT_EQ(search::idf(index, "absent"), 0.0);
}

TEST(Bm25, AddingAMatchingTermNeverLowersScore) {
  auto index = build_index(tiny_corpus());
  std::size_t d = index.doc_pos.at("d1");
  EXPECT_GE(bm25(index, d, {"remove", "paint"}), bm25(index, d, {"remove"}));
}

TEST(Retrieve, RanksAndFilters) {
  auto index = build_index(tiny_corpus());
  auto r = retrieve(index, {"fence", "paint"}, {}, 10);
  ASSERT_EQ(r.candidates.size(), 2u);
  EXPECT_EQ(r.candidates[0].doc_id, "d2");
  EXPECT_EQ(r.candidates[1].doc_id, "d1");
  EXPECT_TRUE(retrieve(index, {"zzz"}, {}, 10).candidates.empty());
  Constraints vegan{{"vegan"}, {}};
  EXPECT_TRUE(retrieve(index, {"tomato"}, vegan, 10).candidates.empty());
}

TEST(Retrieve, EmptyCorpusThrows) { EXPECT_THROW(build_index({}), EmptyCorpus); }

TEST(ListNet, UniformTenWayLossIsLn10) {
  std::vector<double> scores(10, 0.37);
  auto l = listnet_loss(scores, 4);
  EXPECT_NEAR(l.loss, std::log(10.0), 1e-9);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_NEAR(l.grad[i], i == 4 ? -0.9 : 0.1, 1e-12);
}

TEST(ListNet, GradientMatchesCentralDifferences) {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> nd(0.0, 2.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> s(10);
    for (auto& v : s) v = nd(gen);
    std::size_t pos = trial % 10;
    auto l = listnet_loss(s, pos);
    // Oracle loss: log-sum-exp minus positive score, computed independently.
    auto oracle = [&](const std::vector<double>& x) {
      double m = *std::max_element(x.begin(), x.end());
      double z = 0;
      for (double v : x) z += std::exp(v - m);
      return m + std::log(z) - x[pos];
    };
    EXPECT_NEAR(l.loss, oracle(s), 1e-12);
    const double h = 1e-5;
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto up = s, dn = s;
      up[i] += h;
      dn[i] -= h;
      double fd = (oracle(up) - oracle(dn)) / (2 * h);
      double rel = std::abs(fd - l.grad[i]) / std::max({std::abs(fd), std::abs(l.grad[i]), 1e-8});
      worst = std::max(worst, rel);
    }
  }
  EXPECT_LT(worst, 1e-5);
}

TEST(ListNet, NonFiniteThrows) {
  EXPECT_THROW(listnet_loss({0.0, std::nan("")}, 0), NonFiniteScore);
}

TEST(Ranker, ObjectiveGradientMatchesFiniteDifferences) {
  std::vector<FeatureList> lists;
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int q = 0; q < 5; ++q) {
    FeatureList fl;
    for (int r = 0; r < 6; ++r) fl.push_back({u(gen), u(gen), u(gen)});
    lists.push_back(fl);
  }
  std::vector<double> w{0.3, -0.2, 0.5};
  auto base = ranker_objective(w, lists, 1e-2);
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto up = w, dn = w;
    up[i] += 1e-6;
    dn[i] -= 1e-6;
    double fd = (ranker_objective(up, lists, 1e-2).loss - ranker_objective(dn, lists, 1e-2).loss) / 2e-6;
    EXPECT_NEAR(fd, base.grad[i], 1e-6);
  }
}

TEST(Metrics, HitAtKAndSplit) {
  WeakLabelSet gold;
  gold.entries.push_back({"q1", {"a"}, {}, std::nullopt});
  gold.entries.push_back({"q2", {"b"}, {}, std::nullopt});
  RankedResult r1{"q1", {}, {{"a", 1, {}}, {"x", 0.5, {}}}, {}};
  RankedResult r2{"q2", {}, {{"x", 1, {}}, {"y", 1, {}}, {"z", 1, {}}, {"b", 1, {}}}, {}};
  EXPECT_DOUBLE_EQ(hit_at_k({r1, r2}, gold, 3), 0.5);
  EXPECT_DOUBLE_EQ(hit_at_k({r1, r2}, gold, 6), 1.0);
  auto split = split_easy_hard({r1, r2}, gold, 3);
  EXPECT_EQ(split.easy, std::vector<std::string>{"q1"});
  EXPECT_EQ(split.hard, std::vector<std::string>{"q2"});
}

TEST(WeakLabels, OverlapRejected) {
  Json j = Json::array({{{"query", "q"}, {"positives", {"a"}}, {"negatives", {"a"}}}});
  EXPECT_THROW(parse_weak_labels(j), ValidationError);
}

TEST(Ranker, TrainedModelRoundTrips) {
  auto res = fixtures::bundled_resources();
  ASSERT_TRUE(res->models.ranker.has_value());
  auto back = RankerModel::from_json(res->models.ranker->to_json());
  EXPECT_EQ(back.weights, res->models.ranker->weights);
  EXPECT_EQ(back.feature_names, feature_names());
}
