#pragma once

// Turn-level understanding: ASR correction, multi-label intent recognition,
// state filtering, navigation parsing, task-name extraction, domain
// classification, and the template simulator that produces training data.

#include <filesystem>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "taco/errors.hpp"
#include "taco/linear.hpp"
#include "taco/model.hpp"

namespace taco::nlu {

// ---------------------------------------------------------------------------
// ASR correction

struct AsrRule {
  std::string wrong;
  std::string right;
  std::set<Phase> applicable_phases;
};

/// CSV with header `wrong,right,phases`; phases separated by '|'.
std::vector<AsrRule> parse_asr_rules(std::string_view csv);
std::vector<AsrRule> load_asr_rules(const std::filesystem::path& path);

/// Whole-word, case-insensitive replacement of every rule scoped to `phase`,
/// applied in rule order. Output is lowercase and whitespace-normalized.
std::string correct_asr(std::string_view utterance, Phase phase, const std::vector<AsrRule>& rules);

/// Table lint: a rule's output may not contain any same-phase rule's input.
/// Returns human-readable problems (empty when the table is idempotent).
std::vector<std::string> lint_asr_rules(const std::vector<AsrRule>& rules);

// ---------------------------------------------------------------------------
// Navigation / parameter parsers

class UnparseableNavigation : public Error {
 public:
  UnparseableNavigation() : Error("no navigation pattern matched") {}
};

NavCommand parse_navigation(std::string_view utterance);

/// "one".."twenty", "first".."tenth", digits.
std::optional<int> parse_number(std::string_view word);

/// "the second one", "option 2", "number three" -> 2 / 2 / 3.
std::optional<int> parse_choice(std::string_view utterance);

/// "five minutes", "1 hour 30 minutes", "90 seconds", "half an hour".
std::optional<int> parse_duration_seconds(std::string_view utterance);

/// Item named in a list command ("add flour to my shopping list" -> "flour").
std::optional<std::string> parse_list_item(std::string_view utterance);

bool is_recommendation_request(std::string_view utterance);

// ---------------------------------------------------------------------------
// Intent recognition

struct PatternRule {
  std::string pattern;  // ECMAScript regex over the normalized utterance
  IntentLabel label;    // Navigation rules are refined by parse_navigation
};

/// Coarse labels the linear layer predicts (Sentiment split into affirm/negate).
const std::vector<std::string>& coarse_labels();
/// Coarse name of a fine label ("navigation.forward(2)" -> "navigation").
/// Neutral sentiment has no coarse name and returns "".
std::string coarse_name(const IntentLabel& l);
std::set<std::string> coarse_set(const IntentSet& s);

const std::vector<PatternRule>& default_pattern_rules();

class IntentModel {
 public:
  IntentModel() = default;
  IntentModel(std::vector<PatternRule> rules, NgramFeaturizer featurizer, LinearOvR linear);

  const std::vector<PatternRule>& pattern_rules() const { return rules_; }
  const NgramFeaturizer& featurizer() const { return featurizer_; }
  const LinearOvR& linear() const { return linear_; }
  LinearOvR& linear() { return linear_; }

  /// Pattern hits over the normalized utterance, in rule order.
  std::vector<IntentLabel> pattern_hits(const std::string& normalized) const;

  Json to_json() const;
  static IntentModel from_json(const Json& j);

 private:
  void compile();

  std::vector<PatternRule> rules_;
  std::vector<std::regex> compiled_;
  NgramFeaturizer featurizer_;
  LinearOvR linear_;
};

inline constexpr int kIntentModelVersion = 1;

/// Normalized text without filler tokens (um, uh, hmm, er) and without a
/// leading "well" / "so" / "okay so".
std::string strip_disfluencies(std::string_view utterance);

/// Clauses split at sentence punctuation and at "and", each normalized.
std::vector<std::string> split_clauses(std::string_view utterance);

/// Union of pattern hits (on the whole utterance and on each clause) and
/// linear labels at/above threshold; {Ignore} when empty. Also fills the command parameters (choice, timer, list item,
/// recommendation flag).
IntentSet recognize_intents(std::string_view utterance, const IntentModel& model);

/// Static allowed-intent table per (phase, sub_state).
const std::set<IntentKind>& allowed_intents(const DialogueState& state);
bool is_allowed(const DialogueState& state, IntentKind kind);

/// Drops labels the state does not allow; {Ignore} if nothing remains.
IntentSet filter_by_state(const IntentSet& intents, const DialogueState& state);

// ---------------------------------------------------------------------------
// Task name and domain

/// Contiguous span of the normalized utterance naming the task, with request
/// scaffolding stripped from both ends.
std::optional<std::string> extract_task_name(std::string_view utterance);

class DomainClassifier {
 public:
  DomainClassifier() = default;
  DomainClassifier(NgramFeaturizer f, LinearOvR m) : featurizer_(std::move(f)), model_(std::move(m)) {}

  /// Probability the task is a cooking task.
  double cooking_score(std::string_view task_name) const;
  /// Throws EmptyInput on a blank name.
  Domain classify(std::string_view task_name) const;

  Json to_json() const;
  static DomainClassifier from_json(const Json& j);

 private:
  NgramFeaturizer featurizer_;
  LinearOvR model_;
};

inline Domain classify_domain(std::string_view task_name, const DomainClassifier& c) {
  return c.classify(task_name);
}

// ---------------------------------------------------------------------------
// Simulator

struct SimulatorSpec {
  /// Coarse label (or "ignore") -> templates. `{slot}` placeholders; the task
  /// name span is marked with angle brackets, e.g. "how to <{diy_task}>".
  std::map<std::string, std::vector<std::string>> templates;
  std::map<std::string, std::vector<std::string>> slot_values;
  std::vector<std::string> noise_tokens;
  /// Slot -> domain it implies ("dish" -> cooking).
  std::map<std::string, Domain> domain_slots;

  double mix_probability = 0.25;
  double noise_probability = 0.1;
  /// When set, template keys must be intent coarse labels or "ignore".
  bool intent_labels = true;
};

SimulatorSpec parse_simulator_spec(const Json& j);
SimulatorSpec load_simulator_spec(const std::filesystem::path& path);
/// Throws SpecError on a placeholder without slot values.
void validate_simulator_spec(const SimulatorSpec& spec);

/// Splits each label's templates into (train, held-out) with disjoint templates.
std::pair<SimulatorSpec, SimulatorSpec> split_templates(const SimulatorSpec& spec,
                                                        double holdout_fraction,
                                                        std::uint64_t seed);

struct LabeledUtterance {
  std::string text;
  std::vector<std::string> labels;  // coarse names; {"ignore"} for exceptions
  std::optional<std::string> task_name;
  std::optional<Domain> domain;

  bool operator==(const LabeledUtterance&) const = default;
};

void to_json(Json& j, const LabeledUtterance& v);
void from_json(const Json& j, LabeledUtterance& v);

/// Connectives used to compose mixed-intent utterances.
const std::vector<std::string>& connectives();

std::vector<LabeledUtterance> simulate_training_data(const SimulatorSpec& spec, int count,
                                                     std::uint64_t seed);

// ---------------------------------------------------------------------------
// Training

struct IntentTrainConfig {
  NgramConfig ngrams;
  TrainConfig optimizer;
  int min_examples_per_label = 20;
};

/// Throws InsufficientData naming the first starved label.
IntentModel train_intent_model(const std::vector<LabeledUtterance>& data,
                               const IntentTrainConfig& config = {});

DomainClassifier train_domain_classifier(const std::vector<LabeledUtterance>& data,
                                         const IntentTrainConfig& config = {});

}  // namespace taco::nlu
