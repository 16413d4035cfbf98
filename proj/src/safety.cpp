#include "taco/safety.hpp"

#include "taco/text.hpp"

namespace taco::safety {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Safe: return "safe";
    case VerdictKind::Profane: return "profane";
    case VerdictKind::DangerousTask: return "dangerous_task";
    case VerdictKind::ProfessionalTask: return "professional_task";
  }
  return "safe";
}

std::optional<std::string> first_match(std::string_view text, const std::set<std::string>& terms) {
  auto tokens = text::tokenize(text);
  std::optional<std::string> best;
  std::size_t best_pos = text::npos;
  for (const auto& term : terms) {
    auto pos = text::find_phrase(tokens, text::tokenize(term));
    if (pos != text::npos && (best_pos == text::npos || pos < best_pos)) {
      best_pos = pos;
      best = term;
    }
  }
  return best;
}

SafetyVerdict check_profanity(std::string_view text, const Blacklist& blacklist) {
  if (auto m = first_match(text, blacklist.profanity_terms)) return {VerdictKind::Profane, m};
  return {};
}

SafetyVerdict check_task_request(std::string_view task_name, const Blacklist& blacklist) {
  if (auto m = first_match(task_name, blacklist.dangerous_terms)) return {VerdictKind::DangerousTask, m};
  if (auto m = first_match(task_name, blacklist.professional_terms)) return {VerdictKind::ProfessionalTask, m};
  return {};
}

Response scrub_response(Response response, const Blacklist& blacklist) {
  if (blacklist.profanity_terms.empty() || response.speech.empty()) return response;
  std::vector<std::string> kept;
  bool removed = false;
  for (auto sentence : text::split_sentences(response.speech)) {
    if (first_match(sentence, blacklist.profanity_terms)) {
      removed = true;
      continue;
    }
    kept.push_back(text::collapse_whitespace(sentence));
  }
  if (!removed) return response;
  response.speech = kept.empty() ? std::string(kApologyLine) : text::join(kept, " ");
  if (kept.empty()) response.end_session = false;
  response.debug["safety"] = "scrubbed";
  return response;
}

}  // namespace taco::safety
