#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "taco/corpus.hpp"
#include "taco/model.hpp"

namespace taco::safety {

enum class VerdictKind { Safe, Profane, DangerousTask, ProfessionalTask };

std::string to_string(VerdictKind k);

struct SafetyVerdict {
  VerdictKind kind = VerdictKind::Safe;
  std::optional<std::string> matched_term;

  bool safe() const { return kind == VerdictKind::Safe; }
  static SafetyVerdict ok() { return {}; }
  bool operator==(const SafetyVerdict&) const = default;
};

inline constexpr const char* kApologyLine = "Sorry, I can't say that. Let's get back to your task.";

/// Whole-word, case- and punctuation-insensitive match against profanity_terms.
SafetyVerdict check_profanity(std::string_view text, const Blacklist& blacklist);

/// Dangerous takes precedence over professional.
SafetyVerdict check_task_request(std::string_view task_name, const Blacklist& blacklist);

/// Drops profane sentences; an emptied response becomes kApologyLine.
Response scrub_response(Response response, const Blacklist& blacklist);

/// First phrase of `terms` occurring as a whole-word sequence in `text`.
std::optional<std::string> first_match(std::string_view text, const std::set<std::string>& terms);

}  // namespace taco::safety
