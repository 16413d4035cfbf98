#pragma once

// Keyword-based conversation tests and transcript export.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taco/engine.hpp"
#include "taco/errors.hpp"
#include "taco/model.hpp"

namespace taco::harness {

class EmptyTranscript : public Error {
 public:
  EmptyTranscript() : Error("transcript has no turns") {}
};

struct CaseTurn {
  TurnInput input;
  std::vector<std::string> require_keywords;
  std::vector<std::string> forbid_keywords;
  std::optional<std::string> expect_state;  // DialogueState::describe() form
  std::optional<bool> expect_end;
  bool forbid_repeat = false;  // response must differ from the previous one
};

struct ConversationCase {
  std::string name;
  std::vector<CaseTurn> turns;
};

/// Throws ParseError / ValidationError (no turns, keywords not lowercase).
ConversationCase parse_case(const Json& j);
Json case_to_json(const ConversationCase& c);
ConversationCase load_case(const std::filesystem::path& path);
/// Every *.json under `dir`, ordered by file name.
std::vector<ConversationCase> load_cases(const std::filesystem::path& dir);

/// Warnings such as a case whose turns assert nothing.
std::vector<std::string> lint_case(const ConversationCase& c);

/// Lowercase, punctuation removed, whitespace collapsed.
std::string normalize_for_match(std::string_view s);

struct CaseResult {
  std::string name;
  bool passed = true;
  int failing_turn = 0;  // 1-based; 0 when passed
  std::string reason;
  std::string actual;
  std::vector<Response> responses;
};

/// Fixed start time of harness sessions (15:00 UTC) and the spacing between turns.
inline constexpr TimestampMs kCaseEpochMs = 1767279600000;
inline constexpr TimestampMs kTurnSpacingMs = 1000;

/// Runs the turns in order against a fresh session of `engine`.
CaseResult run_case(const ConversationCase& c, engine::Engine& engine);

/// Cases run concurrently on isolated sessions; results keep the input order.
std::vector<CaseResult> run_suite(const std::vector<ConversationCase>& cases, engine::Engine& engine,
                                  bool parallel = true);

/// Case skeleton from recorded transcript entries; every term in `redactions`
/// is masked in utterances. Throws EmptyTranscript.
ConversationCase export_case(const std::vector<Json>& transcript, const std::vector<std::string>& redactions,
                             const std::string& name = "exported");

struct FuzzConfig {
  int turns = 100000;
  std::uint64_t seed = 7;
  int max_session_turns = 40;  // a fresh session starts after this many turns
  std::size_t max_samples = 20;
};

struct FuzzReport {
  int turns = 0;
  int sessions = 0;
  int violations = 0;
  int placeholder_violations = 0;
  std::vector<std::string> samples;  // first few violation descriptions
  std::map<std::string, int> sub_states;  // visits per sub-state after the turn
  double seconds = 0.0;
};

/// Random spoken and touch turns against `engine`. After every turn the stored
/// context must be a valid state of the declared graph, TaskExecution may not
/// fall back to an earlier phase, history moves by at most one entry, the turn
/// may not hit the error path, and no response may carry a `{slot}`.
FuzzReport fuzz(engine::Engine& engine, const FuzzConfig& config = {});

}  // namespace taco::harness
