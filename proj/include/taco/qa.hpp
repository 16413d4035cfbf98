#pragma once

// Question routing and answering: extractive in-context QA, FAQ retrieval,
// ingredient and substitute lookup; factual questions get a fixed stub.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "taco/corpus.hpp"
#include "taco/errors.hpp"
#include "taco/linear.hpp"
#include "taco/model.hpp"
#include "taco/nlu.hpp"

namespace taco::qa {

enum class QuestionType { MRC, FAQ, Factual, Ingredient, Substitute };

std::string to_string(QuestionType t);
QuestionType question_type_from_string(const std::string& s);
const std::vector<QuestionType>& all_question_types();

class EmptyQuestion : public Error {
 public:
  EmptyQuestion() : Error("question is blank") {}
};

struct QAConfig {
  double faq_threshold = 0.75;
  int context_window = 2;
  double no_answer_threshold = 0.25;
};

enum class AnswerKind { Extracted, Faq, IngredientInfo, SubstituteInfo, Unavailable, NoAnswer };

struct QAAnswer {
  AnswerKind kind = AnswerKind::NoAnswer;
  QuestionType source = QuestionType::MRC;
  std::string text;        // span, FAQ answer, suggestion or stub line
  double score = 0.0;      // extractive score or FAQ cosine
  std::string ingredient;  // Ingredient / Substitute
  std::optional<std::string> quantity;

  bool answered() const { return kind != AnswerKind::NoAnswer; }
};

inline constexpr const char* kNoAnswerToken = "[No Answer]";
inline constexpr const char* kFactualStub = "I can't look up general facts while offline, but I can help with this task.";

// ---------------------------------------------------------------------------
// Question type classifier

class QuestionClassifier {
 public:
  QuestionClassifier() = default;
  QuestionClassifier(NgramFeaturizer f, LinearOvR m) : featurizer_(std::move(f)), model_(std::move(m)) {}

  /// Question features followed by down-weighted step-context features.
  SparseVec features(std::string_view question, std::string_view step_context) const;
  /// Throws EmptyQuestion. Ingredient/Substitute are masked for DIY.
  QuestionType classify(std::string_view question, const std::optional<std::string>& current_step, Domain domain) const;

  Json to_json() const;
  static QuestionClassifier from_json(const Json& j);

 private:
  NgramFeaturizer featurizer_;
  LinearOvR model_;
};

struct QuestionExample {
  std::string question;
  std::string context;
  QuestionType type = QuestionType::MRC;
};

/// Fills question templates (labels are question type names) and pairs each
/// with a step context drawn from `contexts`.
std::vector<QuestionExample> simulate_questions(const nlu::SimulatorSpec& spec, const std::vector<std::string>& contexts,
                                                int count, std::uint64_t seed);

QuestionClassifier train_question_classifier(const std::vector<QuestionExample>& data,
                                             const nlu::IntentTrainConfig& config = {});

// ---------------------------------------------------------------------------
// Extractive QA

/// Scores each context sentence against the question. Replaceable by a learned model.
class MrcScorer {
 public:
  virtual ~MrcScorer() = default;
  virtual std::vector<double> score(const std::string& question, const std::vector<std::string>& sentences) const = 0;
};

/// IDF-weighted overlap normalized by question IDF mass, with an answer-type
/// bonus for "how long / how much / how many" and a focus weight on the noun
/// after "what"/"which".
class LexicalMrcScorer : public MrcScorer {
 public:
  std::vector<double> score(const std::string& question, const std::vector<std::string>& sentences) const override;
};

/// Full text of a step: instruction, detail and tips.
std::string step_text(const StepSegment& s);

/// Steps max(1, cursor-n)..cursor (1-based) joined by spaces.
std::string build_context(const std::vector<std::string>& steps, int cursor, int window);

QAAnswer answer_mrc(const std::string& question, const std::vector<std::string>& steps, int cursor,
                    const QAConfig& config = {}, const MrcScorer* scorer = nullptr);

// ---------------------------------------------------------------------------
// FAQ / ingredient / substitute

QAAnswer retrieve_faq(const std::string& question, const std::vector<FaqPair>& faqs, const QAConfig& config = {});

/// Cosine between two questions under the TF-IDF space of `collection`.
double faq_cosine(const std::string& a, const std::string& b, const std::vector<FaqPair>& collection);

/// Longest ingredient name (lemma-insensitive, whole word) named in the question.
std::optional<IngredientLine> find_ingredient(const std::string& question, const std::vector<IngredientLine>& lines);

QAAnswer answer_ingredient(const std::string& question, const TaskDocument& recipe);
QAAnswer answer_substitute(const std::string& question, const TaskDocument* recipe, const SubstitutionTable& table);

// ---------------------------------------------------------------------------
// Router

struct QAResources {
  const QuestionClassifier* classifier = nullptr;
  const SubstitutionTable* substitutions = nullptr;
  const std::vector<FaqPair>* global_faqs = nullptr;
  const MrcScorer* scorer = nullptr;
};

struct QAContext {
  const TaskDocument* task = nullptr;  // selected task, if any
  int step = 0;                        // 1-based cursor, 0 outside execution
  std::optional<Domain> domain;
};

QAAnswer route_and_answer(const std::string& question, const QAContext& ctx, const QAResources& res,
                          const QAConfig& config = {});

// ---------------------------------------------------------------------------
// Evaluation

struct QaEvalRecord {
  std::string context;
  std::string question;
  std::string gold;  // kNoAnswerToken when unanswerable
};

std::vector<QaEvalRecord> parse_qa_eval(const Json& j);

/// Lowercase, punctuation dropped, whitespace collapsed.
std::string normalize_answer(std::string_view s);

struct QaEvalReport {
  int answerable = 0;
  int answerable_correct = 0;
  int unanswerable = 0;
  int unanswerable_correct = 0;
  double answerable_em() const { return answerable ? double(answerable_correct) / answerable : 0.0; }
  double unanswerable_em() const { return unanswerable ? double(unanswerable_correct) / unanswerable : 0.0; }
};

QaEvalReport evaluate_mrc(const std::vector<QaEvalRecord>& records, const QAConfig& config = {},
                          const MrcScorer* scorer = nullptr);

}  // namespace taco::qa
