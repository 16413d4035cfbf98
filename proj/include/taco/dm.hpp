#pragma once

// Hierarchical dialogue state machine: transition table, phase guards,
// history stack, clarification subflow and responder selection.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "taco/errors.hpp"
#include "taco/model.hpp"
#include "taco/response.hpp"
#include "taco/safety.hpp"

namespace taco::dm {

class EmptyHistory : public Error {
 public:
  EmptyHistory() : Error("state history is empty") {}
};

enum class ActionKind { Goto, PushGoto, PopReturn, Stay, StayWithResponder, EndSession };

/// What the dynamic part of a transition does once the table picked the action.
enum class Effect {
  Help,           // contextual help, state unchanged
  Say,            // fixed responder, state unchanged
  Repeat,
  Stop,
  Search,         // task request: clarification, catalog or safety redirect
  ClarifyAnswer,
  PageMove,
  Compare,
  Select,
  Pop,
  StartTask,
  StepMove,
  Detail,
  Ingredients,
  Complete,
  Answer,
  Utility,
  Halted,
};

std::string to_string(ActionKind k);
std::string to_string(Effect e);

struct TransitionAction {
  ActionKind kind = ActionKind::StayWithResponder;
  Effect effect = Effect::Help;
  std::vector<SubState> targets;  // every sub-state this entry may lead to besides staying put
  std::string responder;          // primary responder id
  bool fallback = false;          // loses to any non-fallback label in the same turn
};

class TransitionTable {
 public:
  std::map<std::pair<SubState, IntentKind>, TransitionAction> entries;

  const TransitionAction* find(SubState sub, IntentKind kind) const;
};

/// The compiled-in table. Total over every (sub-state, intent kind) pair;
/// pairs the state does not allow map to a help fallback.
const TransitionTable& default_table();

/// DOT-style listing of every non-fallback edge.
std::string dump_graph(const TransitionTable& table);

struct ModelCheckReport {
  std::set<SubState> reachable;
  bool execution_lock = true;
  bool coverage = true;
  bool halt_only_via_stop = true;
  std::vector<std::string> problems;

  bool ok() const { return execution_lock && coverage && halt_only_via_stop && problems.empty(); }
};

/// BFS over the table from Welcome: every reachable sub-state, whether any
/// path leaves TaskExecution for an earlier phase, and whether every allowed
/// (state, intent) pair has an entry.
ModelCheckReport model_check(const TransitionTable& table);

struct ResponderPlan {
  std::vector<std::string> responder_ids;
  DialogueContext context_snapshot;
  response::SlotValues slots;
  std::optional<response::UtilityAction> utility;
  std::optional<IntentLabel> applied;
  bool end_session = false;
};

/// Inputs gathered by the pipeline before the transition runs.
struct TurnExtras {
  std::optional<RankedResult> search;      // results for the request being handled
  std::optional<Constraints> constraints;  // parsed clarification answer
  std::vector<std::string> favorites;      // recommendation order
  response::DocLookup docs;
  TimestampMs now = 0;
};

inline constexpr std::size_t kHistoryLimit = 50;

/// Pure: identical inputs give identical outputs. Never throws for
/// well-formed contexts.
std::pair<DialogueContext, ResponderPlan> transition(const DialogueContext& ctx, const IntentSet& intents,
                                                     const safety::SafetyVerdict& safety, const TurnExtras& extras,
                                                     const TransitionTable& table = default_table());

/// Label the transition acts on: highest priority with a non-fallback action,
/// else the highest priority label.
IntentLabel pick_label(const IntentSet& intents, SubState sub, const TransitionTable& table = default_table());

/// Priority rank (lower wins).
int priority(IntentKind k);

/// Replaces the state, pushing the old one when it differs.
DialogueContext change_state(DialogueContext ctx, DialogueState next);

/// Page or step movement with clamping. GoToStep past the end leaves the context unchanged.
DialogueContext navigate(DialogueContext ctx, NavCommand cmd, const response::DocLookup& docs);

/// Instruction -> Detail -> Tips, skipping absent parts; "no_more_detail" when exhausted.
ResponderPlan handle_detail_request(const DialogueContext& ctx, const response::DocLookup& docs);

/// Enters Clarification for a cooking request.
DialogueContext clarify_recipe(DialogueContext ctx, const std::string& task_name);

struct TagVocabulary {
  std::set<std::string> diet;
  std::set<std::string> cuisine;
};

TagVocabulary tag_vocabulary(const std::vector<TaskDocument>& corpus);

/// Diet/cuisine tags named in a clarification answer (keywords and aliases);
/// empty for "no preference" style answers.
Constraints parse_constraints(std::string_view answer, const TagVocabulary& vocab);

/// Throws EmptyHistory. From TaskExecution a pre-execution top is refused and
/// the context comes back unchanged.
DialogueContext pop_state(DialogueContext ctx);

/// Concrete validity of a context against the corpus; nullopt when valid.
std::optional<std::string> check_state(const DialogueContext& ctx, const response::DocLookup& docs);

/// Responder ids the table and transition can emit.
std::vector<std::string> responder_ids_used();

}  // namespace taco::dm
