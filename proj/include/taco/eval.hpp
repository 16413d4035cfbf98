#pragma once

// Module-level evaluation: intents, task names, domain, search HIT-k, QA.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "taco/engine.hpp"
#include "taco/errors.hpp"

namespace taco::eval {

class MissingDataset : public Error {
 public:
  explicit MissingDataset(const std::string& file) : Error("missing or empty dataset '" + file + "'"), file_(file) {}
  const std::string& file() const { return file_; }

 private:
  std::string file_;
};

/// Token-level F1 with multiset overlap. Both empty -> 1; one empty -> 0.
double span_f1(const std::vector<std::string>& predicted, const std::vector<std::string>& gold);

struct NluReport {
  int examples = 0;
  double intent_accuracy = 0.0;  // exact coarse-set match
  int task_examples = 0;
  double task_em = 0.0;
  double task_f1 = 0.0;
  int domain_examples = 0;
  double domain_accuracy = 0.0;
  std::vector<std::string> intent_errors;  // "text -> predicted (gold)", capped
  std::vector<std::string> task_errors;
};

/// Prediction hooks so oracle predictions can be injected.
struct NluPredictor {
  std::function<std::set<std::string>(const std::string&)> intents;
  std::function<std::optional<std::string>(const std::string&)> task_name;
  std::function<Domain(const std::string&)> domain;
};

NluPredictor model_predictor(const engine::Models& models);

NluReport evaluate_nlu(const std::vector<nlu::LabeledUtterance>& data, const NluPredictor& predictor);

struct HitRow {
  double hit3 = 0.0;
  double hit6 = 0.0;
};

struct SearchReport {
  int queries = 0;
  HitRow raw;
  HitRow expanded;
  HitRow reranked;
  int easy3 = 0;
  int hard3 = 0;
  double easy3_expanded = 0.0;
  double easy3_reranked = 0.0;
  double hard3_expanded = 0.0;  // 0 by construction
  double hard3_reranked = 0.0;
  double seconds = 0.0;
};

SearchReport evaluate_search(const engine::Resources& res, const search::WeakLabelSet& gold,
                             const engine::EngineConfig& config = {});

struct QaReport {
  qa::QaEvalReport mrc;
  int records = 0;
};

struct Report {
  NluReport nlu;
  SearchReport search;
  QaReport qa;
  std::uint64_t seed = 0;
  std::string to_text() const;
};

enum class Suite { All, Nlu, Search, Qa };
Suite suite_from_string(const std::string& s);

/// Held-out NLU evaluation data: the template split complementary to training.
std::vector<nlu::LabeledUtterance> heldout_nlu_data(const engine::DataPaths& paths, const engine::TrainOptions& opt,
                                                     int count);

/// Reads the bundled eval sets under `paths.root`. Throws MissingDataset.
Report evaluate_all(const engine::Resources& res, const engine::DataPaths& paths, Suite suite,
                    const engine::TrainOptions& opt = {});

}  // namespace taco::eval
