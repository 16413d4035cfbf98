#pragma once

// Turn orchestration: load context, understand, check safety, search, run the
// state machine, render, scrub, persist.

#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "taco/corpus.hpp"
#include "taco/dm.hpp"
#include "taco/errors.hpp"
#include "taco/model.hpp"
#include "taco/nlu.hpp"
#include "taco/qa.hpp"
#include "taco/response.hpp"
#include "taco/search.hpp"
#include "taco/store.hpp"

namespace taco::engine {

class SessionBusy : public Error {
 public:
  explicit SessionBusy(const std::string& id) : Error("session '" + id + "' already has a turn in flight") {}
};

/// Trained artifacts. Any of them may be retrained from the bundled data.
struct Models {
  nlu::IntentModel intents;
  nlu::DomainClassifier domain;
  qa::QuestionClassifier questions;
  std::optional<search::RankerModel> ranker;
};

struct Resources {
  std::vector<TaskDocument> corpus;
  std::map<std::string, std::size_t> by_id;
  search::InvertedIndex index;
  std::set<std::string> vocabulary;
  std::vector<nlu::AsrRule> asr_rules;
  Blacklist blacklist;
  SubstitutionTable substitutions;
  response::TemplateRegistry templates;
  std::vector<FaqPair> global_faqs;
  dm::TagVocabulary tags;
  Models models;

  const TaskDocument* doc(const std::string& id) const;
  response::DocLookup lookup() const;
};

struct TrainOptions {
  std::uint64_t seed = 7;
  int intent_examples = 6000;
  int question_examples = 3000;
  double holdout_fraction = 0.25;
};

/// Files under a data directory.
struct DataPaths {
  std::filesystem::path root;
  std::filesystem::path corpus() const { return root / "corpus.json"; }
  std::filesystem::path substitutions() const { return root / "substitutions.json"; }
  std::filesystem::path blacklists() const { return root / "blacklists"; }
  std::filesystem::path templates() const { return root / "templates.json"; }
  std::filesystem::path asr_rules() const { return root / "asr_rules.csv"; }
  std::filesystem::path faqs() const { return root / "faqs.json"; }
  std::filesystem::path intent_spec() const { return root / "simulator" / "intents.json"; }
  std::filesystem::path question_spec() const { return root / "simulator" / "questions.json"; }
  std::filesystem::path weak_labels_train() const { return root / "search" / "weak_labels_train.json"; }
  std::filesystem::path weak_labels_eval() const { return root / "search" / "weak_labels_eval.json"; }
  std::filesystem::path qa_eval() const { return root / "qa" / "qa_eval.json"; }
  std::filesystem::path models() const { return root / "models"; }
};

/// Bundled data directory: $TACO_DATA_DIR when set, else the source tree's data/.
std::filesystem::path default_data_dir();

/// Everything except the trained models.
Resources load_static_resources(const DataPaths& paths);

/// Trains intent, domain, question and ranker models from the bundled data.
Models train_models(const Resources& res, const DataPaths& paths, const TrainOptions& opt = {});
void save_models(const Models& m, const std::filesystem::path& dir);
/// nullopt when any model file is missing.
std::optional<Models> load_models(const std::filesystem::path& dir);

/// Static resources plus saved models, training them when absent.
std::shared_ptr<const Resources> load_resources(const DataPaths& paths, const TrainOptions& opt = {});

struct EngineConfig {
  std::uint64_t seed = 42;
  bool parallel = true;  // NLU sub-ops and responders on worker threads
  int search_k = 50;
  int rerank_pool = 25;
  qa::QAConfig qa;
};

/// Result of searching one request.
RankedResult run_search(const Resources& res, const std::string& task_name, std::optional<Domain> domain,
                        const Constraints& constraints, const EngineConfig& config);

/// Declared touch table: action=select/index=N, next, prev, detail, more, less, start.
IntentSet touch_to_intents(const std::vector<TouchArg>& args);

class Engine {
 public:
  Engine(std::shared_ptr<const Resources> res, std::shared_ptr<store::SessionStore> store, EngineConfig config = {});

  std::string create_session();
  /// Uses `preferred` when it is a valid, unused id; otherwise a suffixed variant.
  std::string create_session(const std::string& preferred);
  /// Throws NotFound for an unknown session, SessionBusy when a turn is in flight.
  Response handle_turn(const std::string& session_id, const TurnInput& input);
  std::vector<Json> transcript(const std::string& session_id);

  const Resources& resources() const { return *res_; }
  const EngineConfig& config() const { return config_; }
  store::SessionStore& store() { return *store_; }

  /// Used when a TurnInput carries no timestamp.
  std::function<TimestampMs()> clock;

 private:
  struct Understanding {
    IntentSet raw;
    IntentSet filtered;
    safety::SafetyVerdict verdict;
  };

  DialogueContext fresh_context(const std::string& session_id) const;
  Understanding understand(const DialogueContext& ctx, const TurnInput& input) const;
  Response render_plan(const DialogueContext& ctx, const dm::ResponderPlan& plan, const IntentSet& intents,
                       std::uint64_t rng_base) const;
  Response render_one(const std::string& id, const DialogueContext& ctx, const dm::ResponderPlan& plan,
                      const IntentSet& intents, std::uint64_t& rng) const;

  std::shared_ptr<const Resources> res_;
  std::shared_ptr<store::SessionStore> store_;
  EngineConfig config_;
  std::mutex mu_;
  std::set<std::string> in_flight_;
  std::uint64_t next_session_ = 1;
};

/// Engine-side responder ids (greeting, QA, fallbacks) plus everything the state machine emits.
std::vector<std::string> required_responders();

}  // namespace taco::engine
