#pragma once

// Task retrieval: BM25 over titles and ingredient names, query expansion,
// constraint filtering, a listwise-trained linear reranker and HIT-k metrics.

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "taco/errors.hpp"
#include "taco/model.hpp"

namespace taco::search {

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("cannot index an empty corpus") {}
};

class NonFiniteScore : public Error {
 public:
  NonFiniteScore() : Error("ranking score is not finite") {}
};

class NoUsableEntries : public Error {
 public:
  NoUsableEntries() : Error("weak label set has no usable entries") {}
};

class MissingGold : public Error {
 public:
  explicit MissingGold(const std::string& query) : Error("no gold labels for query '" + query + "'") {}
};

// ---------------------------------------------------------------------------
// Lexicon

/// Rule lemmatizer: an exception table, then plural and -ing/-ed stripping.
/// `known` (optional) lets -ing/-ed forms restore a silent e ("baking" -> "bake").
std::string lemmatize(const std::string& token, const std::set<std::string>* known = nullptr);

/// Greedy longest-prefix split into two in-vocabulary words of length >= 3.
std::optional<std::pair<std::string, std::string>> split_compound(const std::string& token,
                                                                   const std::set<std::string>& vocab);

/// Original tokens in order, then lemmas and compound parts not yet present.
/// Compound splitting applies only to tokens outside `vocab`.
std::vector<std::string> expand_query(std::string_view task_name, const std::set<std::string>& vocab);

// ---------------------------------------------------------------------------
// Index

struct Posting {
  std::size_t doc = 0;  // position in InvertedIndex::docs
  int tf = 0;
};

struct InvertedIndex {
  std::vector<TaskDocument> docs;
  std::unordered_map<std::string, std::size_t> doc_pos;
  std::map<std::string, std::vector<Posting>> postings;
  std::vector<int> doc_lengths;
  std::vector<std::vector<std::string>> title_tokens;
  double avg_doc_length = 0.0;
  std::set<std::string> vocabulary;

  std::size_t size() const { return docs.size(); }
  const TaskDocument& doc(const std::string& id) const;
  /// Vocabulary plus the lemmas of every indexed term; used for compound splitting.
  std::set<std::string> lexicon() const;
};

/// Indexes title and ingredient names. Throws EmptyCorpus.
InvertedIndex build_index(const std::vector<TaskDocument>& corpus);

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

double idf(const InvertedIndex& index, const std::string& term);
/// BM25 of one document (by position) for a set of unique query terms.
double bm25(const InvertedIndex& index, std::size_t doc, const std::vector<std::string>& terms,
            const Bm25Params& p = {});

bool satisfies(const TaskDocument& doc, const Constraints& c);

/// Top-k by BM25 (ties: doc id ascending) over documents satisfying the constraints.
RankedResult retrieve(const InvertedIndex& index, const std::vector<std::string>& expanded_tokens,
                      const Constraints& constraints, int k, const Bm25Params& p = {});

// ---------------------------------------------------------------------------
// Reranker

struct QueryInfo {
  std::string text;
  std::vector<std::string> expanded;
  std::optional<Domain> domain;
};

const std::vector<std::string>& feature_names();

/// bm25, query-in-title fraction, expanded-in-title fraction, title length,
/// exact title match, domain match (0.5 when the query domain is unknown).
std::vector<double> extract_features(const QueryInfo& q, const InvertedIndex& index, std::size_t doc);

struct ListLoss {
  double loss = 0.0;
  std::vector<double> grad;
};

/// -log softmax(scores)[positive]; gradient softmax - onehot. Throws NonFiniteScore.
ListLoss listnet_loss(const std::vector<double>& scores, std::size_t positive);

struct RankerModel {
  std::vector<std::string> feature_names;
  std::vector<double> weights;
  std::vector<double> center;  // per-feature standardization
  std::vector<double> scale;

  double score(const std::vector<double>& features) const;
  Json to_json() const;
  static RankerModel from_json(const Json& j);
};

struct RankerTrainConfig {
  int negatives_per_positive = 9;
  double learning_rate = 0.5;
  int max_epochs = 3000;
  double tolerance = 1e-6;
  double l2 = 1e-3;
  std::uint64_t seed = 7;
  int bm25_pool = 50;  // where padding negatives are drawn from first
};

struct WeakLabel {
  std::string query;
  std::vector<std::string> positives;
  std::vector<std::string> negatives;
  std::optional<Domain> domain;
};

struct WeakLabelSet {
  std::vector<WeakLabel> entries;
  const WeakLabel* find(const std::string& query) const;
};

/// Throws ParseError / ValidationError (overlap, unknown ids when an index is given).
WeakLabelSet parse_weak_labels(const Json& j, const InvertedIndex* index = nullptr);
WeakLabelSet load_weak_labels(const std::filesystem::path& path, const InvertedIndex* index = nullptr);

/// One training list: feature rows, the positive at row 0.
using FeatureList = std::vector<std::vector<double>>;

/// Mean ListNet loss over lists of standardized features plus 0.5*l2*|w|^2.
ListLoss ranker_objective(const std::vector<double>& weights, const std::vector<FeatureList>& lists,
                          double l2);

/// Builds the (1 positive + n negatives) lists with seeded sampling. Entries
/// short of negatives are padded from BM25 non-positives, then the rest of the
/// corpus. `skipped` receives the queries that yielded no list.
std::vector<FeatureList> build_training_lists(const WeakLabelSet& labels, const InvertedIndex& index,
                                              const RankerTrainConfig& config,
                                              std::vector<std::string>* skipped = nullptr);

/// Throws NoUsableEntries.
RankerModel train_reranker(const WeakLabelSet& labels, const InvertedIndex& index,
                           const RankerTrainConfig& config = {});

/// Rescores the top pool_size candidates and sorts them by model score (stable);
/// candidates past the pool keep their order after it.
RankedResult rerank(const RankerModel& model, const InvertedIndex& index, const QueryInfo& q,
                    RankedResult result, int pool_size = 25);

// ---------------------------------------------------------------------------
// Evaluation

double hit_at_k(const std::vector<RankedResult>& results, const WeakLabelSet& gold, int k);

struct EasyHard {
  std::vector<std::string> easy;
  std::vector<std::string> hard;
};
EasyHard split_easy_hard(const std::vector<RankedResult>& results, const WeakLabelSet& gold, int k);

}  // namespace taco::search
