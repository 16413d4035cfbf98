#include "taco/model.hpp"

#include <algorithm>
#include <array>
#include <regex>

#include "taco/errors.hpp"

namespace taco {

namespace {

struct KindName {
  IntentKind kind;
  const char* name;
};

constexpr std::array<KindName, kIntentKindCount> kKindNames{{
    {IntentKind::Affirm, "sentiment.affirm"},
    {IntentKind::Negate, "sentiment.negate"},
    {IntentKind::Neutral, "sentiment.neutral"},
    {IntentKind::TaskRequest, "task_request"},
    {IntentKind::MoreChoice, "navigation.more_choice"},
    {IntentKind::LessChoice, "navigation.less_choice"},
    {IntentKind::Forward, "navigation.forward"},
    {IntentKind::Backward, "navigation.backward"},
    {IntentKind::GoToStep, "navigation.go_to_step"},
    {IntentKind::DetailRequest, "detail_request"},
    {IntentKind::TaskComplete, "task_complete"},
    {IntentKind::Stop, "stop"},
    {IntentKind::Repeat, "repeat"},
    {IntentKind::Help, "help"},
    {IntentKind::Question, "question"},
    {IntentKind::ListAdd, "list.add"},
    {IntentKind::ListRemove, "list.remove"},
    {IntentKind::TimerSet, "timer.set"},
    {IntentKind::TimerPause, "timer.pause"},
    {IntentKind::TimerResume, "timer.resume"},
    {IntentKind::TimerCancel, "timer.cancel"},
    {IntentKind::Ignore, "ignore"},
}};

bool takes_count(IntentKind k) {
  return k == IntentKind::Forward || k == IntentKind::Backward || k == IntentKind::GoToStep;
}

template <typename E, std::size_t N>
E enum_from(const std::string& s, const std::array<const char*, N>& names, const char* what) {
  for (std::size_t i = 0; i < N; ++i)
    if (s == names[i]) return static_cast<E>(i);
  throw ParseError(std::string("unknown ") + what + " '" + s + "'");
}

constexpr std::array<const char*, 4> kPhaseNames{"TaskSearch", "TaskPreparation", "TaskExecution",
                                                  "Halt"};
constexpr std::array<const char*, 8> kSubNames{"Welcome", "Clarification", "Catalog",
                                                "Comparison", "Overview", "Step",
                                                "Completed", "Halt"};
constexpr std::array<const char*, 3> kPartNames{"Instruction", "Detail", "Tips"};
constexpr std::array<const char*, 4> kTimerNames{"running", "paused", "cancelled", "fired"};
constexpr std::array<const char*, 3> kDisplayNames{"catalog", "step_card", "info_card"};

template <typename T>
void put_opt(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void get_opt(const Json& j, const char* key, std::optional<T>& v) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    v.reset();
  } else {
    v = it->template get<T>();
  }
}

template <typename T>
void get_or(const Json& j, const char* key, T& v, T fallback = T{}) {
  auto it = j.find(key);
  v = (it == j.end() || it->is_null()) ? fallback : it->template get<T>();
}

}  // namespace

std::string to_string(Domain d) { return d == Domain::Cooking ? "cooking" : "diy"; }

Domain domain_from_string(const std::string& s) {
  if (s == "cooking" || s == "Cooking") return Domain::Cooking;
  if (s == "diy" || s == "DIY") return Domain::DIY;
  throw ParseError("unknown domain '" + s + "'");
}

IntentType type_of(IntentKind k) {
  switch (k) {
    case IntentKind::Affirm:
    case IntentKind::Negate:
    case IntentKind::Neutral:
      return IntentType::Sentiment;
    case IntentKind::TaskRequest:
      return IntentType::TaskRequest;
    case IntentKind::MoreChoice:
    case IntentKind::LessChoice:
    case IntentKind::Forward:
    case IntentKind::Backward:
    case IntentKind::GoToStep:
      return IntentType::Navigation;
    case IntentKind::DetailRequest:
      return IntentType::DetailRequest;
    case IntentKind::TaskComplete:
      return IntentType::TaskComplete;
    case IntentKind::Stop:
      return IntentType::Stop;
    case IntentKind::Repeat:
      return IntentType::Repeat;
    case IntentKind::Help:
      return IntentType::Help;
    case IntentKind::Question:
      return IntentType::Question;
    case IntentKind::ListAdd:
    case IntentKind::ListRemove:
      return IntentType::List;
    case IntentKind::TimerSet:
    case IntentKind::TimerPause:
    case IntentKind::TimerResume:
    case IntentKind::TimerCancel:
      return IntentType::Timer;
    case IntentKind::Ignore:
      return IntentType::Ignore;
  }
  return IntentType::Ignore;
}

std::string to_string(IntentType t) {
  static constexpr std::array<const char*, 12> kNames{
      "sentiment", "task_request", "navigation", "detail_request", "task_complete", "stop",
      "repeat",    "help",         "question",   "list",           "timer",         "ignore"};
  return kNames[static_cast<std::size_t>(t)];
}

IntentLabel::IntentLabel(IntentKind kind) : kind_(kind), arg_(takes_count(kind) ? 1 : 0) {}

IntentLabel IntentLabel::navigation(NavCommand cmd) {
  IntentLabel l;
  switch (cmd.kind) {
    case NavKind::MoreChoice: l.kind_ = IntentKind::MoreChoice; break;
    case NavKind::LessChoice: l.kind_ = IntentKind::LessChoice; break;
    case NavKind::Forward: l.kind_ = IntentKind::Forward; break;
    case NavKind::Backward: l.kind_ = IntentKind::Backward; break;
    case NavKind::GoToStep: l.kind_ = IntentKind::GoToStep; break;
  }
  l.arg_ = takes_count(l.kind_) ? std::max(1, cmd.steps) : 0;
  return l;
}

std::optional<NavCommand> IntentLabel::nav() const {
  switch (kind_) {
    case IntentKind::MoreChoice: return NavCommand{NavKind::MoreChoice, 0};
    case IntentKind::LessChoice: return NavCommand{NavKind::LessChoice, 0};
    case IntentKind::Forward: return NavCommand{NavKind::Forward, arg_};
    case IntentKind::Backward: return NavCommand{NavKind::Backward, arg_};
    case IntentKind::GoToStep: return NavCommand{NavKind::GoToStep, arg_};
    default: return std::nullopt;
  }
}

std::string IntentLabel::to_string() const {
  std::string s = kKindNames[static_cast<std::size_t>(kind_)].name;
  if (takes_count(kind_)) s += "(" + std::to_string(arg_) + ")";
  return s;
}

IntentLabel IntentLabel::parse(const std::string& s) {
  static const std::regex kRe(R"(^([a-z_.]+)(?:\((\d+)\))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, kRe)) throw ParseError("malformed intent label '" + s + "'");
  for (const auto& kn : kKindNames) {
    if (m[1] != kn.name) continue;
    IntentLabel l(kn.kind);
    if (takes_count(kn.kind)) {
      if (!m[2].matched) throw ParseError("intent label '" + s + "' needs a count");
      l.arg_ = std::stoi(m[2]);
      if (l.arg_ < 1) throw ParseError("intent count must be positive in '" + s + "'");
    } else if (m[2].matched) {
      throw ParseError("intent label '" + s + "' takes no count");
    }
    return l;
  }
  throw ParseError("unknown intent label '" + s + "'");
}

bool IntentSet::has(IntentKind k) const {
  return std::any_of(labels.begin(), labels.end(), [k](const auto& l) { return l.kind() == k; });
}

bool IntentSet::has(IntentType t) const {
  return std::any_of(labels.begin(), labels.end(), [t](const auto& l) { return l.type() == t; });
}

IntentKind IntentSet::sentiment() const {
  if (has(IntentKind::Affirm)) return IntentKind::Affirm;
  if (has(IntentKind::Negate)) return IntentKind::Negate;
  return IntentKind::Neutral;
}

void IntentSet::add(IntentLabel l) {
  auto it = std::lower_bound(labels.begin(), labels.end(), l);
  if (it == labels.end() || *it != l) labels.insert(it, l);
}

void IntentSet::remove_type(IntentType t) {
  std::erase_if(labels, [t](const auto& l) { return l.type() == t; });
}

IntentSet IntentSet::ignore(std::string raw) {
  IntentSet s;
  s.labels = {IntentLabel(IntentKind::Ignore)};
  s.raw_utterance = raw;
  s.corrected_utterance = std::move(raw);
  return s;
}

std::string to_string(Phase p) { return kPhaseNames[static_cast<std::size_t>(p)]; }
std::string to_string(SubState s) { return kSubNames[static_cast<std::size_t>(s)]; }
std::string to_string(StepPart p) { return kPartNames[static_cast<std::size_t>(p)]; }
std::string to_string(TimerState s) { return kTimerNames[static_cast<std::size_t>(s)]; }

Phase phase_of(SubState s) {
  switch (s) {
    case SubState::Welcome:
    case SubState::Clarification:
    case SubState::Catalog:
    case SubState::Comparison:
      return Phase::TaskSearch;
    case SubState::Overview:
      return Phase::TaskPreparation;
    case SubState::Step:
    case SubState::Completed:
      return Phase::TaskExecution;
    case SubState::Halt:
      return Phase::Halt;
  }
  return Phase::Halt;
}

std::string DialogueState::describe() const {
  std::string out = to_string(phase());
  if (sub == SubState::Halt) return out;
  out += "." + to_string(sub);
  if (sub == SubState::Catalog || sub == SubState::Comparison)
    out += "(" + std::to_string(page) + ")";
  if (sub == SubState::Step) out += "(" + std::to_string(step) + "," + to_string(part) + ")";
  return out;
}

bool has_placeholder(const std::string& s) {
  static const std::regex kRe(R"(\{[A-Za-z_][A-Za-z0-9_]*\})");
  return std::regex_search(s, kRe);
}

// ---------------------------------------------------------------------------
// JSON

void to_json(Json& j, const StepSegment& v) {
  j = Json{{"instruction", v.instruction}};
  put_opt(j, "detail", v.detail);
  put_opt(j, "tips", v.tips);
}
void from_json(const Json& j, StepSegment& v) {
  v.instruction = j.at("instruction").get<std::string>();
  get_opt(j, "detail", v.detail);
  get_opt(j, "tips", v.tips);
}

void to_json(Json& j, const IngredientLine& v) {
  j = Json{{"name", v.name}};
  put_opt(j, "quantity", v.quantity);
}
void from_json(const Json& j, IngredientLine& v) {
  v.name = j.at("name").get<std::string>();
  get_opt(j, "quantity", v.quantity);
}

void to_json(Json& j, const FaqPair& v) { j = Json{{"question", v.question}, {"answer", v.answer}}; }
void from_json(const Json& j, FaqPair& v) {
  v.question = j.at("question").get<std::string>();
  v.answer = j.at("answer").get<std::string>();
}

void to_json(Json& j, const TaskDocument& v) {
  j = Json{{"id", v.id},
           {"title", v.title},
           {"domain", to_string(v.domain)},
           {"cuisine_tags", v.cuisine_tags},
           {"diet_tags", v.diet_tags},
           {"ingredients", v.ingredients},
           {"steps", v.steps},
           {"faqs", v.faqs}};
  put_opt(j, "rating", v.rating);
  put_opt(j, "popularity", v.popularity);
  put_opt(j, "estimated_time", v.estimated_time);
}
void from_json(const Json& j, TaskDocument& v) {
  v.id = j.at("id").get<std::string>();
  v.title = j.at("title").get<std::string>();
  v.domain = domain_from_string(j.at("domain").get<std::string>());
  get_opt(j, "rating", v.rating);
  get_opt(j, "popularity", v.popularity);
  get_opt(j, "estimated_time", v.estimated_time);
  get_or(j, "cuisine_tags", v.cuisine_tags);
  get_or(j, "diet_tags", v.diet_tags);
  get_or(j, "ingredients", v.ingredients);
  get_or(j, "steps", v.steps);
  get_or(j, "faqs", v.faqs);
}

void to_json(Json& j, const IntentLabel& v) { j = v.to_string(); }
void from_json(const Json& j, IntentLabel& v) { v = IntentLabel::parse(j.get<std::string>()); }

void to_json(Json& j, const IntentSet& v) {
  j = Json{{"labels", v.labels},
           {"raw_utterance", v.raw_utterance},
           {"corrected_utterance", v.corrected_utterance},
           {"wants_recommendation", v.wants_recommendation}};
  put_opt(j, "task_name", v.task_name);
  if (v.domain) j["domain"] = to_string(*v.domain);
  put_opt(j, "choice", v.choice);
  put_opt(j, "timer_seconds", v.timer_seconds);
  put_opt(j, "list_item", v.list_item);
}
void from_json(const Json& j, IntentSet& v) {
  v.labels = j.at("labels").get<std::vector<IntentLabel>>();
  std::sort(v.labels.begin(), v.labels.end());
  v.labels.erase(std::unique(v.labels.begin(), v.labels.end()), v.labels.end());
  get_or(j, "raw_utterance", v.raw_utterance);
  get_or(j, "corrected_utterance", v.corrected_utterance);
  get_or(j, "wants_recommendation", v.wants_recommendation);
  get_opt(j, "task_name", v.task_name);
  if (j.contains("domain")) v.domain = domain_from_string(j.at("domain").get<std::string>());
  get_opt(j, "choice", v.choice);
  get_opt(j, "timer_seconds", v.timer_seconds);
  get_opt(j, "list_item", v.list_item);
}

void to_json(Json& j, const DialogueState& v) {
  j = Json{{"phase", to_string(v.phase())}};
  if (v.sub != SubState::Halt) {
    Json sub{{"kind", to_string(v.sub)}};
    if (v.sub == SubState::Catalog || v.sub == SubState::Comparison) sub["page"] = v.page;
    if (v.sub == SubState::Step) {
      sub["index"] = v.step;
      sub["part"] = to_string(v.part);
    }
    j["sub_state"] = sub;
  }
  put_opt(j, "selected_task", v.selected_task);
}
void from_json(const Json& j, DialogueState& v) {
  v = DialogueState{};
  auto phase = enum_from<Phase>(j.at("phase").get<std::string>(), kPhaseNames, "phase");
  if (phase == Phase::Halt) {
    v.sub = SubState::Halt;
  } else {
    const auto& sub = j.at("sub_state");
    v.sub = enum_from<SubState>(sub.at("kind").get<std::string>(), kSubNames, "sub_state");
    if (phase_of(v.sub) != phase) throw ParseError("sub_state does not belong to phase");
    get_or(sub, "page", v.page);
    get_or(sub, "index", v.step);
    if (sub.contains("part"))
      v.part = enum_from<StepPart>(sub.at("part").get<std::string>(), kPartNames, "part");
  }
  get_opt(j, "selected_task", v.selected_task);
}

void to_json(Json& j, const Constraints& v) { j = Json{{"diet", v.diet}, {"cuisine", v.cuisine}}; }
void from_json(const Json& j, Constraints& v) {
  get_or(j, "diet", v.diet);
  get_or(j, "cuisine", v.cuisine);
}

void to_json(Json& j, const Candidate& v) {
  j = Json{{"doc_id", v.doc_id}, {"bm25", v.bm25}};
  put_opt(j, "rerank", v.rerank);
}
void from_json(const Json& j, Candidate& v) {
  v.doc_id = j.at("doc_id").get<std::string>();
  v.bm25 = j.at("bm25").get<double>();
  get_opt(j, "rerank", v.rerank);
}

void to_json(Json& j, const RankedResult& v) {
  j = Json{{"query", v.query},
           {"expanded_terms", v.expanded_terms},
           {"candidates", v.candidates},
           {"constraints_applied", v.constraints_applied}};
}
void from_json(const Json& j, RankedResult& v) {
  v.query = j.at("query").get<std::string>();
  get_or(j, "expanded_terms", v.expanded_terms);
  get_or(j, "candidates", v.candidates);
  get_or(j, "constraints_applied", v.constraints_applied);
}

void to_json(Json& j, const TimerRecord& v) {
  j = Json{{"id", v.id},
           {"duration", v.duration},
           {"started_at", v.started_at},
           {"state", to_string(v.state)},
           {"remaining", v.remaining}};
  put_opt(j, "label", v.label);
}
void from_json(const Json& j, TimerRecord& v) {
  v.id = j.at("id").get<int>();
  get_opt(j, "label", v.label);
  v.duration = j.at("duration").get<int>();
  v.started_at = j.at("started_at").get<TimestampMs>();
  v.state = enum_from<TimerState>(j.at("state").get<std::string>(), kTimerNames, "timer state");
  v.remaining = j.at("remaining").get<int>();
}

void to_json(Json& j, const DialogueContext& v) {
  j = Json{{"session_id", v.session_id},
           {"state", v.state},
           {"state_history", v.state_history},
           {"shopping_list", v.shopping_list},
           {"timers", v.timers},
           {"turn_count", v.turn_count},
           {"version", v.version},
           {"rng_state", v.rng_state},
           {"last_speech", v.last_speech}};
  put_opt(j, "search_results", v.search_results);
  put_opt(j, "clarification", v.clarification);
  put_opt(j, "pending_query", v.pending_query);
  if (v.task_domain) j["task_domain"] = to_string(*v.task_domain);
}
void from_json(const Json& j, DialogueContext& v) {
  v.session_id = j.at("session_id").get<std::string>();
  v.state = j.at("state").get<DialogueState>();
  get_or(j, "state_history", v.state_history);
  get_opt(j, "search_results", v.search_results);
  get_opt(j, "clarification", v.clarification);
  get_opt(j, "pending_query", v.pending_query);
  v.task_domain.reset();
  if (j.contains("task_domain"))
    v.task_domain = domain_from_string(j.at("task_domain").get<std::string>());
  get_or(j, "shopping_list", v.shopping_list);
  get_or(j, "timers", v.timers);
  get_or(j, "turn_count", v.turn_count);
  get_or(j, "version", v.version);
  get_or(j, "rng_state", v.rng_state);
  get_or(j, "last_speech", v.last_speech);
}

void to_json(Json& j, const TouchArg& v) { j = Json{{"name", v.name}, {"value", v.value}}; }
void from_json(const Json& j, TouchArg& v) {
  v.name = j.at("name").get<std::string>();
  v.value = j.at("value").get<std::string>();
}

void to_json(Json& j, const TurnInput& v) {
  if (v.is_utterance()) {
    j = Json{{"utterance", v.utterance()}};
  } else {
    j = Json{{"touch", v.touch()}};
  }
  j["received_at"] = v.received_at;
}
void from_json(const Json& j, TurnInput& v) {
  if (j.contains("utterance")) {
    v.kind = j.at("utterance").get<std::string>();
  } else if (j.contains("touch")) {
    v.kind = j.at("touch").get<std::vector<TouchArg>>();
  } else {
    throw ParseError("turn input needs 'utterance' or 'touch'");
  }
  get_or(j, "received_at", v.received_at);
}

void to_json(Json& j, const Card& v) {
  j = Json{{"title", v.title}, {"subtitle", v.subtitle}, {"action", v.action}};
}
void from_json(const Json& j, Card& v) {
  v.title = j.at("title").get<std::string>();
  get_or(j, "subtitle", v.subtitle);
  get_or(j, "action", v.action);
}

void to_json(Json& j, const DisplayPayload& v) {
  j = Json{{"kind", kDisplayNames[static_cast<std::size_t>(v.kind)]},
           {"title", v.title},
           {"body", v.body},
           {"cards", v.cards}};
}
void from_json(const Json& j, DisplayPayload& v) {
  v.kind = enum_from<DisplayKind>(j.at("kind").get<std::string>(), kDisplayNames, "display kind");
  get_or(j, "title", v.title);
  get_or(j, "body", v.body);
  get_or(j, "cards", v.cards);
}

void to_json(Json& j, const Response& v) {
  j = Json{{"speech", v.speech}, {"end_session", v.end_session}, {"debug", v.debug}};
  put_opt(j, "display", v.display);
}
void from_json(const Json& j, Response& v) {
  v.speech = j.at("speech").get<std::string>();
  get_opt(j, "display", v.display);
  get_or(j, "end_session", v.end_session);
  get_or(j, "debug", v.debug);
}

}  // namespace taco
