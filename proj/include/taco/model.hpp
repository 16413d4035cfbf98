#pragma once

// Shared domain vocabulary: task documents, intents, dialogue states, turn
// inputs and responses. Every type here is a plain value with a canonical
// snake_case JSON form (see the to_json/from_json overloads at the bottom).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace taco {

using Json = nlohmann::json;

/// Milliseconds since the Unix epoch. All clocks are injected as this type.
using TimestampMs = std::int64_t;

enum class Domain { Cooking, DIY };

std::string to_string(Domain d);
Domain domain_from_string(const std::string& s);

struct StepSegment {
  std::string instruction;
  std::optional<std::string> detail;
  std::optional<std::string> tips;

  bool operator==(const StepSegment&) const = default;
};

struct IngredientLine {
  std::string name;  // lowercase canonical
  std::optional<std::string> quantity;

  bool operator==(const IngredientLine&) const = default;
};

struct FaqPair {
  std::string question;
  std::string answer;

  bool operator==(const FaqPair&) const = default;
};

struct TaskDocument {
  std::string id;
  std::string title;
  Domain domain = Domain::DIY;
  std::optional<double> rating;
  std::optional<std::int64_t> popularity;
  std::optional<int> estimated_time;  // minutes
  std::vector<std::string> cuisine_tags;  // sorted, unique
  std::vector<std::string> diet_tags;     // sorted, unique
  std::vector<IngredientLine> ingredients;
  std::vector<StepSegment> steps;
  std::vector<FaqPair> faqs;

  bool operator==(const TaskDocument&) const = default;
};

// ---------------------------------------------------------------------------
// Intents

/// Top-level intent families.
enum class IntentType {
  Sentiment,
  TaskRequest,
  Navigation,
  DetailRequest,
  TaskComplete,
  Stop,
  Repeat,
  Help,
  Question,
  List,
  Timer,
  Ignore,
};

/// Fine-grained intent variant. Each IntentLabel carries exactly one.
enum class IntentKind {
  Affirm,
  Negate,
  Neutral,
  TaskRequest,
  MoreChoice,
  LessChoice,
  Forward,
  Backward,
  GoToStep,
  DetailRequest,
  TaskComplete,
  Stop,
  Repeat,
  Help,
  Question,
  ListAdd,
  ListRemove,
  TimerSet,
  TimerPause,
  TimerResume,
  TimerCancel,
  Ignore,
};

inline constexpr int kIntentKindCount = static_cast<int>(IntentKind::Ignore) + 1;

IntentType type_of(IntentKind k);
std::string to_string(IntentType t);

enum class NavKind { MoreChoice, LessChoice, Forward, Backward, GoToStep };

struct NavCommand {
  NavKind kind = NavKind::Forward;
  int steps = 1;  // X for Forward/Backward/GoToStep; unused for More/Less

  bool operator==(const NavCommand&) const = default;
};

class IntentLabel {
 public:
  IntentLabel() = default;
  /// Non-navigation labels.
  explicit IntentLabel(IntentKind kind);
  static IntentLabel navigation(NavCommand cmd);

  IntentKind kind() const { return kind_; }
  IntentType type() const { return type_of(kind_); }
  /// Present iff type() == Navigation.
  std::optional<NavCommand> nav() const;

  /// Stable identifier, e.g. "sentiment.negate", "navigation.forward(2)".
  std::string to_string() const;
  static IntentLabel parse(const std::string& s);

  auto operator<=>(const IntentLabel&) const = default;

 private:
  IntentKind kind_ = IntentKind::Ignore;
  int arg_ = 0;
};

/// Multi-label NLU result plus the fine-grained command parameters the
/// parsers extracted from the same utterance.
struct IntentSet {
  std::vector<IntentLabel> labels;  // sorted, unique, non-empty
  std::string raw_utterance;
  std::string corrected_utterance;

  std::optional<std::string> task_name;
  std::optional<Domain> domain;
  std::optional<int> choice;         // 1-based pick within the visible page
  bool wants_recommendation = false;  // "tell me your favorites"
  std::optional<int> timer_seconds;
  std::optional<std::string> list_item;

  bool has(IntentKind k) const;
  bool has(IntentType t) const;
  /// Affirm/Negate when present, Neutral otherwise.
  IntentKind sentiment() const;
  void add(IntentLabel l);
  void remove_type(IntentType t);
  static IntentSet ignore(std::string raw = {});

  bool operator==(const IntentSet&) const = default;
};

// ---------------------------------------------------------------------------
// Dialogue state

enum class Phase { TaskSearch, TaskPreparation, TaskExecution, Halt };
enum class SubState { Welcome, Clarification, Catalog, Comparison, Overview, Step, Completed, Halt };
enum class StepPart { Instruction, Detail, Tips };

std::string to_string(Phase p);
std::string to_string(SubState s);
std::string to_string(StepPart p);

Phase phase_of(SubState s);

struct DialogueState {
  SubState sub = SubState::Welcome;
  int page = 0;   // Catalog
  int step = 0;   // Step: 1-based
  StepPart part = StepPart::Instruction;
  std::optional<std::string> selected_task;

  Phase phase() const { return phase_of(sub); }

  static DialogueState welcome() { return {}; }
  static DialogueState clarification() { return {SubState::Clarification, 0, 0, StepPart::Instruction, {}}; }
  static DialogueState catalog(int page) { return {SubState::Catalog, page, 0, StepPart::Instruction, {}}; }
  static DialogueState comparison(int page) {
    return {SubState::Comparison, page, 0, StepPart::Instruction, {}};
  }
  static DialogueState overview(std::string task) {
    return {SubState::Overview, 0, 0, StepPart::Instruction, std::move(task)};
  }
  static DialogueState step_at(std::string task, int index, StepPart part = StepPart::Instruction) {
    return {SubState::Step, 0, index, part, std::move(task)};
  }
  static DialogueState completed(std::string task) {
    return {SubState::Completed, 0, 0, StepPart::Instruction, std::move(task)};
  }
  static DialogueState halt() { return {SubState::Halt, 0, 0, StepPart::Instruction, {}}; }

  /// Compact descriptor used in transcripts and test expectations,
  /// e.g. "TaskExecution.Step(2,Instruction)".
  std::string describe() const;

  bool operator==(const DialogueState&) const = default;
};

// ---------------------------------------------------------------------------
// Search results

struct Constraints {
  std::vector<std::string> diet;
  std::vector<std::string> cuisine;

  bool empty() const { return diet.empty() && cuisine.empty(); }
  bool operator==(const Constraints&) const = default;
};

struct Candidate {
  std::string doc_id;
  double bm25 = 0.0;
  std::optional<double> rerank;

  double sort_score() const { return rerank.value_or(bm25); }
  bool operator==(const Candidate&) const = default;
};

struct RankedResult {
  std::string query;
  std::vector<std::string> expanded_terms;
  std::vector<Candidate> candidates;
  Constraints constraints_applied;

  bool operator==(const RankedResult&) const = default;
};

// ---------------------------------------------------------------------------
// Utilities

enum class TimerState { Running, Paused, Cancelled, Fired };
std::string to_string(TimerState s);

struct TimerRecord {
  int id = 0;
  std::optional<std::string> label;
  int duration = 0;            // seconds
  TimestampMs started_at = 0;  // last (re)start
  TimerState state = TimerState::Running;
  int remaining = 0;  // seconds left at started_at (Running) or at pause (Paused)

  bool operator==(const TimerRecord&) const = default;
};

// ---------------------------------------------------------------------------
// Session context

struct DialogueContext {
  std::string session_id;
  DialogueState state;
  std::vector<DialogueState> state_history;  // back() is the top of the stack
  std::optional<RankedResult> search_results;
  std::optional<Constraints> clarification;
  std::optional<std::string> pending_query;  // task name awaiting clarification
  std::optional<Domain> task_domain;
  std::vector<std::string> shopping_list;
  std::vector<TimerRecord> timers;
  int turn_count = 0;
  std::int64_t version = 0;
  std::uint64_t rng_state = 0;
  std::string last_speech;

  bool operator==(const DialogueContext&) const = default;
};

// ---------------------------------------------------------------------------
// Turn I/O

struct TouchArg {
  std::string name;
  std::string value;
  bool operator==(const TouchArg&) const = default;
};

struct TurnInput {
  std::variant<std::string, std::vector<TouchArg>> kind;
  TimestampMs received_at = 0;

  bool is_utterance() const { return kind.index() == 0; }
  const std::string& utterance() const { return std::get<0>(kind); }
  const std::vector<TouchArg>& touch() const { return std::get<1>(kind); }

  static TurnInput say(std::string text, TimestampMs at = 0) { return {std::move(text), at}; }
  static TurnInput tap(std::vector<TouchArg> args, TimestampMs at = 0) {
    return {std::move(args), at};
  }
  bool operator==(const TurnInput&) const = default;
};

struct Card {
  std::string title;
  std::string subtitle;
  std::vector<TouchArg> action;
  bool operator==(const Card&) const = default;
};

enum class DisplayKind { Catalog, StepCard, InfoCard };

struct DisplayPayload {
  DisplayKind kind = DisplayKind::InfoCard;
  std::string title;
  std::string body;
  std::vector<Card> cards;
  bool operator==(const DisplayPayload&) const = default;
};

struct Response {
  std::string speech;
  std::optional<DisplayPayload> display;
  bool end_session = false;
  std::map<std::string, std::string> debug;

  bool operator==(const Response&) const = default;
};

/// True if `s` contains a `{name}` style placeholder.
bool has_placeholder(const std::string& s);

// ---------------------------------------------------------------------------
// JSON

void to_json(Json& j, const StepSegment& v);
void from_json(const Json& j, StepSegment& v);
void to_json(Json& j, const IngredientLine& v);
void from_json(const Json& j, IngredientLine& v);
void to_json(Json& j, const FaqPair& v);
void from_json(const Json& j, FaqPair& v);
void to_json(Json& j, const TaskDocument& v);
void from_json(const Json& j, TaskDocument& v);
void to_json(Json& j, const IntentLabel& v);
void from_json(const Json& j, IntentLabel& v);
void to_json(Json& j, const IntentSet& v);
void from_json(const Json& j, IntentSet& v);
void to_json(Json& j, const DialogueState& v);
void from_json(const Json& j, DialogueState& v);
void to_json(Json& j, const Constraints& v);
void from_json(const Json& j, Constraints& v);
void to_json(Json& j, const Candidate& v);
void from_json(const Json& j, Candidate& v);
void to_json(Json& j, const RankedResult& v);
void from_json(const Json& j, RankedResult& v);
void to_json(Json& j, const TimerRecord& v);
void from_json(const Json& j, TimerRecord& v);
void to_json(Json& j, const DialogueContext& v);
void from_json(const Json& j, DialogueContext& v);
void to_json(Json& j, const TouchArg& v);
void from_json(const Json& j, TouchArg& v);
void to_json(Json& j, const TurnInput& v);
void from_json(const Json& j, TurnInput& v);
void to_json(Json& j, const Card& v);
void from_json(const Json& j, Card& v);
void to_json(Json& j, const DisplayPayload& v);
void from_json(const Json& j, DisplayPayload& v);
void to_json(Json& j, const Response& v);
void from_json(const Json& j, Response& v);

}  // namespace taco
