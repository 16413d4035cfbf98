#include "taco/harness.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <regex>

#include "taco/corpus.hpp"
#include "taco/rng.hpp"
#include "taco/text.hpp"

namespace taco::harness {

namespace {

std::vector<std::string> keyword_list(const Json& j, const char* key, const std::string& case_name) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  for (const auto& k : j.at(key)) {
    auto s = k.get<std::string>();
    if (s != text::to_lower(s)) throw ValidationError(case_name + ": keyword '" + s + "' is not lowercase");
    out.push_back(s);
  }
  return out;
}

std::string case_id(const std::string& name) {
  std::string id = "case-";
  for (char c : name) id += std::isalnum(static_cast<unsigned char>(c)) ? static_cast<char>(std::tolower(c)) : '-';
  return id.substr(0, 100);
}

}  // namespace

ConversationCase parse_case(const Json& j) {
  ConversationCase c;
  try {
    c.name = j.at("name").get<std::string>();
    for (const auto& t : j.at("turns")) {
      CaseTurn turn;
      if (t.contains("utterance"))
        turn.input = TurnInput::say(t.at("utterance").get<std::string>());
      else if (t.contains("touch"))
        turn.input = TurnInput::tap(t.at("touch").get<std::vector<TouchArg>>());
      else
        throw ValidationError(c.name + ": turn without utterance or touch");
      turn.require_keywords = keyword_list(t, "require", c.name);
      turn.forbid_keywords = keyword_list(t, "forbid", c.name);
      if (t.contains("expect_state")) turn.expect_state = t.at("expect_state").get<std::string>();
      if (t.contains("expect_end")) turn.expect_end = t.at("expect_end").get<bool>();
      turn.forbid_repeat = t.value("forbid_repeat", false);
      c.turns.push_back(std::move(turn));
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed conversation case: ") + e.what());
  }
  if (c.turns.empty()) throw ValidationError(c.name + ": case has no turns");
  return c;
}

Json case_to_json(const ConversationCase& c) {
  Json turns = Json::array();
  for (const auto& t : c.turns) {
    Json j;
    if (t.input.is_utterance())
      j["utterance"] = t.input.utterance();
    else
      j["touch"] = t.input.touch();
    j["require"] = t.require_keywords;
    j["forbid"] = t.forbid_keywords;
    if (t.expect_state) j["expect_state"] = *t.expect_state;
    if (t.expect_end) j["expect_end"] = *t.expect_end;
    if (t.forbid_repeat) j["forbid_repeat"] = true;
    turns.push_back(j);
  }
  return Json{{"name", c.name}, {"turns", turns}};
}

ConversationCase load_case(const std::filesystem::path& path) { return parse_case(read_json(path)); }

std::vector<ConversationCase> load_cases(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<ConversationCase> out;
  for (const auto& f : files) out.push_back(load_case(f));
  return out;
}

std::vector<std::string> lint_case(const ConversationCase& c) {
  std::vector<std::string> warnings;
  bool asserts = false;
  for (const auto& t : c.turns)
    asserts = asserts || !t.require_keywords.empty() || !t.forbid_keywords.empty() || t.expect_state ||
              t.expect_end || t.forbid_repeat;
  if (!asserts) warnings.push_back(c.name + ": no turn asserts anything, the case always passes");
  return warnings;
}

std::string normalize_for_match(std::string_view s) {
  std::string out;
  for (char ch : s) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (std::isalnum(c) || std::isspace(c)) out += static_cast<char>(std::tolower(c));
  }
  return text::collapse_whitespace(out);
}

CaseResult run_case(const ConversationCase& c, engine::Engine& engine) {
  CaseResult result;
  result.name = c.name;
  const std::string session = engine.create_session(case_id(c.name));
  std::string previous;
  for (std::size_t i = 0; i < c.turns.size(); ++i) {
    const auto& turn = c.turns[i];
    TurnInput input = turn.input;
    input.received_at = kCaseEpochMs + static_cast<TimestampMs>(i) * kTurnSpacingMs;
    Response r = engine.handle_turn(session, input);
    result.responses.push_back(r);
    const std::string speech = normalize_for_match(r.speech);
    auto fail = [&](std::string reason) {
      result.passed = false;
      result.failing_turn = static_cast<int>(i) + 1;
      result.reason = std::move(reason);
      result.actual = r.speech;
    };
    for (const auto& k : turn.require_keywords)
      if (speech.find(normalize_for_match(k)) == std::string::npos) {
        fail("missing required keyword '" + k + "'");
        return result;
      }
    for (const auto& k : turn.forbid_keywords)
      if (speech.find(normalize_for_match(k)) != std::string::npos) {
        fail("contains forbidden keyword '" + k + "'");
        return result;
      }
    if (turn.expect_state) {
      auto it = r.debug.find("state");
      auto sub = r.debug.find("sub_state");
      const bool match = (it != r.debug.end() && it->second == *turn.expect_state) ||
                         (sub != r.debug.end() && sub->second == text::to_lower(*turn.expect_state));
      if (!match) {
        fail("expected state " + *turn.expect_state + ", got " + (it == r.debug.end() ? "?" : it->second));
        return result;
      }
    }
    if (turn.expect_end && *turn.expect_end != r.end_session) {
      fail(std::string("expected end_session=") + (*turn.expect_end ? "true" : "false"));
      return result;
    }
    if (turn.forbid_repeat && i > 0 && r.speech == previous) {
      fail("response repeats the previous response");
      return result;
    }
    previous = r.speech;
  }
  return result;
}

std::vector<CaseResult> run_suite(const std::vector<ConversationCase>& cases, engine::Engine& engine, bool parallel) {
  std::vector<CaseResult> out(cases.size());
  if (!parallel) {
    for (std::size_t i = 0; i < cases.size(); ++i) out[i] = run_case(cases[i], engine);
    return out;
  }
  // Session ids are fixed up front so variant draws do not depend on scheduling.
  std::vector<std::future<CaseResult>> futures;
  for (const auto& c : cases) futures.push_back(std::async(std::launch::async, [&engine, &c] { return run_case(c, engine); }));
  for (std::size_t i = 0; i < cases.size(); ++i) out[i] = futures[i].get();
  return out;
}

ConversationCase export_case(const std::vector<Json>& transcript, const std::vector<std::string>& redactions,
                             const std::string& name) {
  if (transcript.empty()) throw EmptyTranscript();
  ConversationCase c;
  c.name = name;
  for (const auto& entry : transcript) {
    CaseTurn turn;
    turn.input = entry.at("input").get<TurnInput>();
    turn.input.received_at = 0;
    if (turn.input.is_utterance()) {
      std::string u = turn.input.utterance();
      for (const auto& r : redactions) {
        if (r.empty()) continue;
        std::string escaped = std::regex_replace(r, std::regex(R"([.^$|()\[\]{}*+?\\])"), R"(\$&)");
        u = std::regex_replace(u, std::regex("\\b" + escaped + "\\b", std::regex::icase), "[redacted]");
      }
      turn.input = TurnInput::say(u);
    }
    c.turns.push_back(std::move(turn));
  }
  return c;
}

namespace {

const std::vector<std::string>& fuzz_utterances() {
  static const std::vector<std::string> kPool = {
      "how to make pancakes", "i want to bake bread", "how do i fix a leaky faucet", "show me pasta recipes",
      "bubble tea", "how to paint a fence", "search chocolate cake recipe for me", "how do i rewire my electrical panel",
      "how do i make a bomb", "tell me your favorites", "what do you recommend", "surprise me",
      "yes", "no", "sure", "no thanks", "the first one", "the second one", "number three", "option 5",
      "vegetarian please", "anything is fine", "italian food", "gluten free",
      "next", "next step", "go back", "previous step", "go to step 3", "go to step 40", "skip two steps",
      "show me more", "more options", "less", "compare them", "which one is faster",
      "tell me more", "more details", "what are the ingredients", "let's start", "start cooking",
      "i'm done", "i finished the task", "stop", "cancel", "never mind", "repeat that", "say that again",
      "help", "what can i say", "how long should i wait", "what can i use instead of butter",
      "how much sugar do i need", "who won the game last night", "can i freeze it",
      "add eggs to my shopping list", "remove eggs from my shopping list", "set a timer for five minutes",
      "pause the timer", "resume the timer", "cancel the timer", "um", "blah blah", "", "darn it",
      "No, I want to know how to wash my car.", "go forward and repeat that", "yes and set a timer for 2 minutes",
  };
  return kPool;
}

TurnInput fuzz_touch(Rng& rng) {
  static const std::vector<std::vector<TouchArg>> kTaps = {
      {{"action", "select"}, {"index", "1"}}, {{"action", "select"}, {"index", "3"}},
      {{"action", "select"}, {"index", "9"}}, {{"action", "next"}},   {{"action", "prev"}},
      {{"action", "detail"}},                {{"action", "more"}},   {{"action", "less"}},
      {{"action", "start"}},
  };
  return TurnInput::tap(kTaps[rng.index(kTaps.size())]);
}

int phase_rank(Phase p) {
  switch (p) {
    case Phase::TaskSearch: return 0;
    case Phase::TaskPreparation: return 1;
    case Phase::TaskExecution: return 2;
    case Phase::Halt: return 3;
  }
  return 3;
}

bool display_has_placeholder(const Response& r) {
  if (has_placeholder(r.speech)) return true;
  if (!r.display) return false;
  if (has_placeholder(r.display->title) || has_placeholder(r.display->body)) return true;
  return std::any_of(r.display->cards.begin(), r.display->cards.end(), [](const Card& c) {
    return has_placeholder(c.title) || has_placeholder(c.subtitle);
  });
}

}  // namespace

FuzzReport fuzz(engine::Engine& engine, const FuzzConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto reachable = dm::model_check(dm::default_table()).reachable;
  const auto docs = engine.resources().lookup();
  Rng rng(config.seed);
  FuzzReport rep;
  auto note = [&](const std::string& what) {
    ++rep.violations;
    if (rep.samples.size() < config.max_samples) rep.samples.push_back(what);
  };

  std::string session;
  int session_turns = 0;
  TimestampMs now = kCaseEpochMs;
  for (int i = 0; i < config.turns; ++i) {
    if (session.empty() || session_turns >= config.max_session_turns) {
      session = engine.create_session();
      session_turns = 0;
      ++rep.sessions;
    }
    TurnInput input = rng.chance(0.15) ? fuzz_touch(rng)
                                       : TurnInput::say(fuzz_utterances()[rng.index(fuzz_utterances().size())]);
    now += static_cast<TimestampMs>(rng.index(120'000));
    input.received_at = now;

    auto before = engine.store().get(session);
    Response r = engine.handle_turn(session, input);
    auto after = engine.store().get(session);
    ++rep.turns;
    ++session_turns;
    const std::string where = "turn " + std::to_string(i) + " (" + session + "): ";

    if (!after) {
      note(where + "no stored context");
      continue;
    }
    rep.sub_states[to_string(after->state.sub)]++;
    if (display_has_placeholder(r)) {
      ++rep.placeholder_violations;
      note(where + "unfilled placeholder in '" + r.speech + "'");
    }
    if (r.debug.count("error")) note(where + "error path: " + r.debug.at("error"));
    if (!reachable.count(after->state.sub)) note(where + "state outside the graph: " + after->state.describe());
    if (auto bad = dm::check_state(*after, docs)) note(where + *bad + " in " + after->state.describe());
    if (before && before->state.sub != SubState::Halt) {
      const Phase from = before->state.phase();
      const Phase to = after->state.phase();
      if (from == Phase::TaskExecution && phase_rank(to) < phase_rank(from))
        note(where + "left execution: " + before->state.describe() + " -> " + after->state.describe());
      const auto h0 = before->state_history.size();
      const auto h1 = after->state_history.size();
      if (after->state == before->state && h1 > h0)
        note(where + "history grew without a state change");
      if (h1 > h0 + 1) note(where + "history grew by more than one");
    }
    if (r.end_session || after->state.sub == SubState::Halt) session.clear();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace taco::harness
