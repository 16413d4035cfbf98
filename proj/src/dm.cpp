#include "taco/dm.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "taco/nlu.hpp"
#include "taco/text.hpp"
#include "taco/utility.hpp"

namespace taco::dm {

namespace {

using S = SubState;
using K = IntentKind;

const std::vector<S>& live_states() {
  static const std::vector<S> kStates = {S::Welcome, S::Clarification, S::Catalog, S::Comparison,
                                         S::Overview, S::Step,          S::Completed};
  return kStates;
}

std::vector<K> all_kinds() {
  std::vector<K> out;
  for (int i = 0; i < kIntentKindCount; ++i) out.push_back(static_cast<K>(i));
  return out;
}

std::string kind_name(K k) {
  auto s = IntentLabel(k).to_string();
  if (auto p = s.find('('); p != std::string::npos) s.erase(p);
  return s;
}

std::string node_name(S s) { return to_string(phase_of(s)) + "." + to_string(s); }

std::string help_id(S s) {
  switch (s) {
    case S::Welcome: return "help_welcome";
    case S::Clarification: return "help_clarification";
    case S::Catalog: return "help_catalog";
    case S::Comparison: return "help_comparison";
    case S::Overview: return "help_overview";
    case S::Step: return "help_step";
    case S::Completed: return "help_completed";
    case S::Halt: return "goodbye";
  }
  return "help_welcome";
}

/// Responder that presents a sub-state when the dialogue lands on it.
std::string present_id(S s) {
  switch (s) {
    case S::Welcome: return "ask_task";
    case S::Clarification: return "clarify_question";
    case S::Catalog: return "catalog_intro";
    case S::Comparison: return "comparison_intro";
    case S::Overview: return "overview";
    case S::Step: return "step";
    case S::Completed: return "task_complete";
    case S::Halt: return "goodbye";
  }
  return "ask_task";
}

TransitionAction act(ActionKind kind, Effect effect, std::vector<S> targets, std::string responder,
                     bool fallback = false) {
  return TransitionAction{kind, effect, std::move(targets), std::move(responder), fallback};
}

TransitionAction help_action(S s) { return act(ActionKind::StayWithResponder, Effect::Help, {}, help_id(s), true); }
TransitionAction say(std::string id) { return act(ActionKind::StayWithResponder, Effect::Say, {}, std::move(id)); }

std::string utility_responder(K k) {
  switch (k) {
    case K::ListAdd: return "list_add";
    case K::ListRemove: return "list_remove";
    case K::TimerSet: return "timer_set";
    case K::TimerPause: return "timer_pause";
    case K::TimerResume: return "timer_resume";
    case K::TimerCancel: return "timer_cancel";
    default: return "";
  }
}

TransitionTable build_table() {
  TransitionTable t;
  auto set = [&](S s, K k, TransitionAction a) { t.entries[{s, k}] = std::move(a); };

  for (S s : live_states())
    for (K k : all_kinds()) set(s, k, help_action(s));
  for (K k : all_kinds()) set(S::Halt, k, act(ActionKind::Stay, Effect::Halted, {}, "goodbye", true));

  const auto search = act(ActionKind::PushGoto, Effect::Search, {S::Clarification, S::Catalog, S::Halt}, "catalog_intro");
  const auto select = act(ActionKind::PushGoto, Effect::Select, {S::Overview}, "overview");
  const auto pop = act(ActionKind::PopReturn, Effect::Pop, {S::Welcome, S::Catalog, S::Comparison}, "");

  for (S s : live_states()) {
    set(s, K::Stop, act(ActionKind::EndSession, Effect::Stop, {S::Halt}, "goodbye"));
    set(s, K::Repeat, act(ActionKind::StayWithResponder, Effect::Repeat, {}, "repeat"));
    set(s, K::Help, act(ActionKind::StayWithResponder, Effect::Help, {}, help_id(s)));
    const auto& allowed = nlu::allowed_intents(DialogueState{s, 0, 0, StepPart::Instruction, {}});
    for (K k : allowed) {
      if (k == K::Question) set(s, k, act(ActionKind::StayWithResponder, Effect::Answer, {}, "qa_answer"));
      if (auto id = utility_responder(k); !id.empty())
        set(s, k, act(ActionKind::StayWithResponder, Effect::Utility, {}, id));
    }
  }

  set(S::Welcome, K::Affirm, say("ask_task"));
  set(S::Welcome, K::Negate, say("ask_task"));
  set(S::Welcome, K::TaskRequest, search);

  const auto answer = act(ActionKind::PushGoto, Effect::ClarifyAnswer, {S::Catalog, S::Welcome}, "catalog_intro");
  for (K k : {K::Affirm, K::Negate, K::Ignore}) set(S::Clarification, k, answer);
  set(S::Clarification, K::TaskRequest,
      act(ActionKind::PushGoto, Effect::ClarifyAnswer, {S::Catalog, S::Welcome, S::Halt}, "catalog_intro"));

  set(S::Catalog, K::Affirm, select);
  set(S::Catalog, K::Negate, say("ask_task"));
  set(S::Catalog, K::TaskRequest, search);
  for (K k : {K::MoreChoice, K::LessChoice, K::Backward})
    set(S::Catalog, k, act(ActionKind::PushGoto, Effect::PageMove, {S::Catalog}, "catalog_intro"));
  set(S::Catalog, K::DetailRequest, act(ActionKind::PushGoto, Effect::Compare, {S::Comparison}, "comparison_intro"));

  set(S::Comparison, K::Affirm, select);
  set(S::Comparison, K::Negate, pop);
  set(S::Comparison, K::Backward, pop);
  set(S::Comparison, K::TaskRequest, search);
  for (K k : {K::MoreChoice, K::LessChoice})
    set(S::Comparison, k, act(ActionKind::PushGoto, Effect::PageMove, {S::Comparison}, "comparison_intro"));

  const auto start = act(ActionKind::PushGoto, Effect::StartTask, {S::Step}, "step");
  set(S::Overview, K::Affirm, start);
  set(S::Overview, K::Forward, start);
  set(S::Overview, K::GoToStep, start);
  set(S::Overview, K::Negate, pop);
  set(S::Overview, K::Backward, pop);
  set(S::Overview, K::TaskRequest, search);
  set(S::Overview, K::DetailRequest, act(ActionKind::StayWithResponder, Effect::Ingredients, {}, "overview_details"));

  const auto move = act(ActionKind::PushGoto, Effect::StepMove, {S::Step}, "step");
  for (K k : {K::Affirm, K::Forward, K::Backward, K::GoToStep}) set(S::Step, k, move);
  set(S::Step, K::DetailRequest, act(ActionKind::PushGoto, Effect::Detail, {S::Step}, "step_detail"));
  set(S::Step, K::TaskComplete, act(ActionKind::PushGoto, Effect::Complete, {S::Completed}, "task_complete"));

  set(S::Completed, K::Affirm, say("completed_prompt"));
  set(S::Completed, K::Negate, say("completed_prompt"));
  set(S::Completed, K::Backward, move);
  set(S::Completed, K::GoToStep, move);
  return t;
}

const TaskDocument* selected_doc(const DialogueContext& c, const response::DocLookup& docs) {
  if (!c.state.selected_task || !docs) return nullptr;
  return docs(*c.state.selected_task);
}

int step_total(const DialogueContext& c, const response::DocLookup& docs) {
  const auto* d = selected_doc(c, docs);
  return d ? static_cast<int>(d->steps.size()) : 0;
}

std::size_t result_count(const DialogueContext& c) {
  return c.search_results ? c.search_results->candidates.size() : 0;
}

}  // namespace

std::string to_string(ActionKind k) {
  switch (k) {
    case ActionKind::Goto: return "goto";
    case ActionKind::PushGoto: return "push_goto";
    case ActionKind::PopReturn: return "pop_return";
    case ActionKind::Stay: return "stay";
    case ActionKind::StayWithResponder: return "stay_with_responder";
    case ActionKind::EndSession: return "end_session";
  }
  return "stay";
}

std::string to_string(Effect e) {
  static const char* kNames[] = {"help",       "say",        "repeat", "stop",  "search",   "clarify_answer",
                                 "page_move",  "compare",    "select", "pop",   "start_task", "step_move",
                                 "detail",     "ingredients", "complete", "answer", "utility", "halted"};
  return kNames[static_cast<int>(e)];
}

const TransitionAction* TransitionTable::find(SubState sub, IntentKind kind) const {
  auto it = entries.find({sub, kind});
  return it == entries.end() ? nullptr : &it->second;
}

const TransitionTable& default_table() {
  static const TransitionTable kTable = build_table();
  return kTable;
}

std::string dump_graph(const TransitionTable& table) {
  std::ostringstream out;
  out << "digraph taskbot {\n";
  out << "  // audit: edges are a superset of the documented flows; guard outcomes are listed as extra targets\n";
  for (S s : live_states()) out << "  \"" << node_name(s) << "\";\n";
  out << "  \"" << node_name(S::Halt) << "\";\n";
  for (const auto& [key, a] : table.entries) {
    if (a.fallback) continue;
    const std::string label = kind_name(key.second) + " / " + to_string(a.kind) + " " + to_string(a.effect) +
                              (a.responder.empty() ? "" : " [" + a.responder + "]");
    if (a.targets.empty()) {
      out << "  \"" << node_name(key.first) << "\" -> \"" << node_name(key.first) << "\" [label=\"" << label << "\"];\n";
      continue;
    }
    for (S target : a.targets)
      out << "  \"" << node_name(key.first) << "\" -> \"" << node_name(target) << "\" [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

ModelCheckReport model_check(const TransitionTable& table) {
  ModelCheckReport rep;
  auto successors = [&](S s, bool filtered) {
    std::set<S> next{s};
    const auto& allowed = nlu::allowed_intents(DialogueState{s, 0, 0, StepPart::Instruction, {}});
    for (K k : all_kinds()) {
      if (filtered && !allowed.count(k) && k != K::Ignore) continue;
      const auto* a = table.find(s, k);
      if (!a) continue;
      next.insert(a->targets.begin(), a->targets.end());
    }
    return next;
  };
  auto bfs = [&](S start, bool filtered) {
    std::set<S> seen{start};
    std::deque<S> queue{start};
    while (!queue.empty()) {
      S s = queue.front();
      queue.pop_front();
      for (S n : successors(s, filtered))
        if (seen.insert(n).second) queue.push_back(n);
    }
    return seen;
  };

  rep.reachable = bfs(S::Welcome, true);
  for (S s : live_states())
    if (!rep.reachable.count(s)) rep.problems.push_back("unreachable state " + node_name(s));

  // The lock is checked over every entry, not only the allowed ones.
  for (S s : live_states()) {
    if (phase_of(s) != Phase::TaskExecution) continue;
    for (S r : bfs(s, false)) {
      if (phase_of(r) == Phase::TaskSearch || phase_of(r) == Phase::TaskPreparation) {
        rep.execution_lock = false;
        rep.problems.push_back("execution lock broken: " + node_name(s) + " reaches " + node_name(r));
      }
    }
  }

  for (S s : live_states()) {
    for (K k : nlu::allowed_intents(DialogueState{s, 0, 0, StepPart::Instruction, {}})) {
      if (!table.find(s, k)) {
        rep.coverage = false;
        rep.problems.push_back("no entry for (" + node_name(s) + ", " + kind_name(k) + ")");
      }
    }
  }

  for (const auto& [key, a] : table.entries) {
    if (key.first == S::Halt) continue;
    if (std::find(a.targets.begin(), a.targets.end(), S::Halt) == a.targets.end()) continue;
    const bool legit = key.second == K::Stop || (key.second == K::TaskRequest && (a.effect == Effect::Search ||
                                                                                 a.effect == Effect::ClarifyAnswer));
    if (!legit) {
      rep.halt_only_via_stop = false;
      rep.problems.push_back("entry (" + node_name(key.first) + ", " + kind_name(key.second) + ") can reach Halt");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

int priority(IntentKind k) {
  switch (k) {
    case K::Stop: return 0;
    case K::MoreChoice:
    case K::LessChoice:
    case K::Forward:
    case K::Backward:
    case K::GoToStep:
    case K::TaskComplete: return 1;
    case K::DetailRequest: return 2;
    case K::TaskRequest: return 3;
    case K::Affirm:
    case K::Negate:
    case K::Neutral: return 4;
    case K::Repeat: return 5;
    case K::Question:
    case K::ListAdd:
    case K::ListRemove:
    case K::TimerSet:
    case K::TimerPause:
    case K::TimerResume:
    case K::TimerCancel: return 6;
    case K::Help: return 7;
    case K::Ignore: return 8;
  }
  return 8;
}

IntentLabel pick_label(const IntentSet& intents, SubState sub, const TransitionTable& table) {
  std::vector<IntentLabel> labels = intents.labels;
  if (labels.empty()) return IntentLabel(K::Ignore);
  std::stable_sort(labels.begin(), labels.end(),
                   [](const IntentLabel& a, const IntentLabel& b) { return priority(a.kind()) < priority(b.kind()); });
  for (const auto& l : labels) {
    const auto* a = table.find(sub, l.kind());
    if (a && !a->fallback) return l;
  }
  return labels.front();
}

DialogueContext change_state(DialogueContext ctx, DialogueState next) {
  if (next == ctx.state) return ctx;
  ctx.state_history.push_back(ctx.state);
  if (ctx.state_history.size() > kHistoryLimit)
    ctx.state_history.erase(ctx.state_history.begin(),
                            ctx.state_history.begin() + static_cast<std::ptrdiff_t>(ctx.state_history.size() - kHistoryLimit));
  ctx.state = std::move(next);
  return ctx;
}

DialogueContext navigate(DialogueContext ctx, NavCommand cmd, const response::DocLookup& docs) {
  const auto sub = ctx.state.sub;
  if (sub == S::Catalog || sub == S::Comparison) {
    const int pages = response::page_count(result_count(ctx));
    int page = ctx.state.page;
    if (cmd.kind == NavKind::MoreChoice) ++page;
    if (cmd.kind == NavKind::LessChoice || cmd.kind == NavKind::Backward) --page;
    page = std::clamp(page, 0, std::max(0, pages - 1));
    DialogueState next = ctx.state;
    next.page = page;
    return change_state(std::move(ctx), next);
  }
  if (sub == S::Step) {
    const int n = step_total(ctx, docs);
    if (n == 0) return ctx;
    int step = ctx.state.step;
    switch (cmd.kind) {
      case NavKind::Forward: step += cmd.steps; break;
      case NavKind::Backward: step -= cmd.steps; break;
      case NavKind::GoToStep:
        if (cmd.steps < 1 || cmd.steps > n) return ctx;
        step = cmd.steps;
        break;
      default: return ctx;
    }
    step = std::clamp(step, 1, n);
    auto next = DialogueState::step_at(*ctx.state.selected_task, step);
    return change_state(std::move(ctx), std::move(next));
  }
  return ctx;
}

ResponderPlan handle_detail_request(const DialogueContext& ctx, const response::DocLookup& docs) {
  ResponderPlan plan;
  plan.context_snapshot = ctx;
  const auto* doc = selected_doc(ctx, docs);
  const int i = ctx.state.step;
  if (ctx.state.sub != S::Step || !doc || i < 1 || i > static_cast<int>(doc->steps.size())) {
    plan.responder_ids = {help_id(ctx.state.sub)};
    return plan;
  }
  const auto& step = doc->steps[static_cast<std::size_t>(i - 1)];
  std::optional<StepPart> next;
  if (ctx.state.part == StepPart::Instruction) {
    if (step.detail) next = StepPart::Detail;
    else if (step.tips) next = StepPart::Tips;
  } else if (ctx.state.part == StepPart::Detail && step.tips) {
    next = StepPart::Tips;
  }
  if (!next) {
    plan.responder_ids = {"no_more_detail"};
    return plan;
  }
  plan.context_snapshot = change_state(ctx, DialogueState::step_at(*ctx.state.selected_task, i, *next));
  plan.responder_ids = {*next == StepPart::Detail ? "step_detail" : "step_tips"};
  return plan;
}

DialogueContext clarify_recipe(DialogueContext ctx, const std::string& task_name) {
  ctx.pending_query = task_name;
  return change_state(std::move(ctx), DialogueState::clarification());
}

TagVocabulary tag_vocabulary(const std::vector<TaskDocument>& corpus) {
  TagVocabulary v;
  for (const auto& d : corpus) {
    v.diet.insert(d.diet_tags.begin(), d.diet_tags.end());
    v.cuisine.insert(d.cuisine_tags.begin(), d.cuisine_tags.end());
  }
  return v;
}

Constraints parse_constraints(std::string_view answer, const TagVocabulary& vocab) {
  static const std::vector<std::pair<std::string, std::string>> kAliases = {
      {"veggie", "vegetarian"},       {"no meat", "vegetarian"},      {"meatless", "vegetarian"},
      {"without meat", "vegetarian"}, {"plant based", "vegan"},       {"nuts free", "nut-free"},
      {"nut free", "nut-free"},       {"no nuts", "nut-free"},        {"without nuts", "nut-free"},
      {"nut allergy", "nut-free"},    {"no gluten", "gluten-free"},   {"without gluten", "gluten-free"},
      {"no dairy", "dairy-free"},     {"lactose free", "dairy-free"}, {"without dairy", "dairy-free"},
  };
  const auto tokens = text::tokenize(answer);
  auto mentions = [&](const std::string& phrase) {
    auto p = text::tokenize(phrase);
    return !p.empty() && text::find_phrase(tokens, p) != text::npos;
  };
  Constraints c;
  for (const auto& tag : vocab.diet)
    if (mentions(tag)) c.diet.push_back(tag);
  for (const auto& tag : vocab.cuisine)
    if (mentions(tag)) c.cuisine.push_back(tag);
  for (const auto& [alias, tag] : kAliases)
    if (vocab.diet.count(tag) && mentions(alias)) c.diet.push_back(tag);
  for (auto* v : {&c.diet, &c.cuisine}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return c;
}

DialogueContext pop_state(DialogueContext ctx) {
  if (ctx.state_history.empty()) throw EmptyHistory();
  const DialogueState& top = ctx.state_history.back();
  if (ctx.state.phase() == Phase::TaskExecution && top.phase() != Phase::TaskExecution) return ctx;
  ctx.state = top;
  ctx.state_history.pop_back();
  return ctx;
}

std::optional<std::string> check_state(const DialogueContext& ctx, const response::DocLookup& docs) {
  const auto& st = ctx.state;
  if (ctx.state_history.size() > kHistoryLimit) return "history exceeds limit";
  switch (st.sub) {
    case S::Welcome:
    case S::Halt: return std::nullopt;
    case S::Clarification:
      if (!ctx.pending_query) return "clarification without a pending query";
      return std::nullopt;
    case S::Catalog:
    case S::Comparison: {
      const auto n = result_count(ctx);
      if (n == 0) return "catalog without results";
      if (st.page < 0 || st.page >= response::page_count(n)) return "catalog page out of range";
      return std::nullopt;
    }
    case S::Overview:
    case S::Step:
    case S::Completed: {
      const auto* doc = selected_doc(ctx, docs);
      if (!doc) return "selected task does not resolve";
      if (st.sub != S::Step) return std::nullopt;
      const int n = static_cast<int>(doc->steps.size());
      if (st.step < 1 || st.step > n) return "step index out of range";
      const auto& step = doc->steps[static_cast<std::size_t>(st.step - 1)];
      if (st.part == StepPart::Detail && !step.detail) return "detail part without detail";
      if (st.part == StepPart::Tips && !step.tips) return "tips part without tips";
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// transition

namespace {

struct Turn {
  DialogueContext& c;
  ResponderPlan& plan;
  const IntentLabel& label;
  const TransitionAction& action;
  const IntentSet& intents;
  const safety::SafetyVerdict& safety;
  const TurnExtras& extras;
};

void help(Turn& t) { t.plan.responder_ids = {help_id(t.c.state.sub)}; }

bool show_results(Turn& t) {
  if (!t.extras.search || t.extras.search->candidates.empty()) {
    t.plan.responder_ids = {"no_results"};
    return false;
  }
  t.c.search_results = *t.extras.search;
  t.c.pending_query.reset();
  t.c = change_state(t.c, DialogueState::catalog(0));
  t.plan.responder_ids = {"catalog_intro"};
  return true;
}

bool safety_redirect(Turn& t) {
  const std::string task = t.intents.task_name.value_or("that");
  if (t.safety.kind == safety::VerdictKind::DangerousTask) {
    t.c = change_state(t.c, DialogueState::halt());
    t.plan.responder_ids = {"dangerous_task"};
    t.plan.slots["task"] = task;
    t.plan.end_session = true;
    return true;
  }
  if (t.safety.kind == safety::VerdictKind::ProfessionalTask) {
    t.plan.responder_ids = {"professional_task"};
    t.plan.slots["task"] = task;
    return true;
  }
  return false;
}

void do_search(Turn& t) {
  if (safety_redirect(t)) return;
  if (t.intents.wants_recommendation) {
    if (t.extras.favorites.empty()) {
      t.plan.responder_ids = {"no_results"};
      return;
    }
    RankedResult r;
    r.query = "favorites";
    for (const auto& id : t.extras.favorites) r.candidates.push_back({id, 0.0, std::nullopt});
    t.c.search_results = r;
    t.c.pending_query.reset();
    t.c = change_state(t.c, DialogueState::catalog(0));
    t.plan.responder_ids = {"favorites_intro"};
    return;
  }
  if (!t.intents.task_name) {
    t.plan.responder_ids = {"ask_task"};
    return;
  }
  t.c.task_domain = t.intents.domain;
  if (t.intents.domain == Domain::Cooking && !t.c.clarification) {
    t.c = clarify_recipe(t.c, *t.intents.task_name);
    t.plan.responder_ids = {"clarify_question"};
    t.plan.slots["task"] = *t.intents.task_name;
    return;
  }
  show_results(t);
}

void do_clarify_answer(Turn& t) {
  if (t.label.kind() == K::TaskRequest && safety_redirect(t)) return;
  t.c.clarification = t.extras.constraints.value_or(Constraints{});
  if (t.label.kind() == K::TaskRequest && t.intents.task_name) {
    t.c.pending_query = t.intents.task_name;
    t.c.task_domain = t.intents.domain;
  }
  if (!show_results(t)) {
    t.c.pending_query.reset();
    t.c = change_state(t.c, DialogueState::welcome());
  }
}

void do_page_move(Turn& t) {
  if (result_count(t.c) == 0) return help(t);
  const auto nav = t.label.nav().value_or(NavCommand{NavKind::MoreChoice, 1});
  const int before = t.c.state.page;
  t.c = navigate(t.c, nav, t.extras.docs);
  const std::string intro = present_id(t.c.state.sub);
  if (t.c.state.page == before)
    t.plan.responder_ids = {nav.kind == NavKind::MoreChoice ? "catalog_last_page" : "catalog_first_page", intro};
  else
    t.plan.responder_ids = {intro};
}

void do_select(Turn& t) {
  if (result_count(t.c) == 0) return help(t);
  if (!t.intents.choice) {
    t.plan.responder_ids = {"catalog_choose"};
    return;
  }
  const int choice = *t.intents.choice;
  const std::size_t first = static_cast<std::size_t>(t.c.state.page) * response::kPageSize;
  const std::size_t on_page = std::min<std::size_t>(response::kPageSize, result_count(t.c) - first);
  if (choice < 1 || static_cast<std::size_t>(choice) > on_page) {
    t.plan.responder_ids = {"choice_invalid"};
    t.plan.slots["count"] = std::to_string(on_page);
    return;
  }
  const std::string& id = t.c.search_results->candidates[first + static_cast<std::size_t>(choice - 1)].doc_id;
  if (!t.extras.docs || !t.extras.docs(id)) return help(t);
  t.c = change_state(t.c, DialogueState::overview(id));
  t.plan.responder_ids = {"overview"};
}

void do_pop(Turn& t) {
  bool popped = false;
  try {
    DialogueContext n = pop_state(t.c);
    const auto& targets = t.action.targets;
    if (n.state != t.c.state && std::find(targets.begin(), targets.end(), n.state.sub) != targets.end() &&
        !check_state(n, t.extras.docs)) {
      t.c = std::move(n);
      popped = true;
    }
  } catch (const EmptyHistory&) {
  }
  if (!popped) {
    t.c = change_state(t.c, result_count(t.c) ? DialogueState::catalog(0) : DialogueState::welcome());
  }
  t.plan.responder_ids = {present_id(t.c.state.sub)};
}

void do_start(Turn& t) {
  const int n = step_total(t.c, t.extras.docs);
  if (n == 0) return help(t);
  int target = 1;
  if (auto nav = t.label.nav()) {
    if (nav->kind == NavKind::GoToStep) {
      if (nav->steps < 1 || nav->steps > n) {
        t.plan.responder_ids = {"cannot_go_to_step", help_id(t.c.state.sub)};
        t.plan.slots["total"] = std::to_string(n);
        return;
      }
      target = nav->steps;
    } else if (nav->kind == NavKind::Forward) {
      target = std::min(nav->steps, n);
    }
  }
  t.c = change_state(t.c, DialogueState::step_at(*t.c.state.selected_task, target));
  t.plan.responder_ids = {"step"};
}

void do_step_move(Turn& t) {
  const int n = step_total(t.c, t.extras.docs);
  if (n == 0) return help(t);
  const NavCommand nav = t.label.nav().value_or(NavCommand{NavKind::Forward, 1});
  if (nav.kind == NavKind::GoToStep && (nav.steps < 1 || nav.steps > n)) {
    t.plan.responder_ids = {"cannot_go_to_step", help_id(t.c.state.sub)};
    t.plan.slots["total"] = std::to_string(n);
    return;
  }
  if (t.c.state.sub == S::Completed) {
    const int target = nav.kind == NavKind::GoToStep ? nav.steps : std::max(1, n - nav.steps + 1);
    t.c = change_state(t.c, DialogueState::step_at(*t.c.state.selected_task, target));
    t.plan.responder_ids = {"step"};
    return;
  }
  const int i = t.c.state.step;
  if (nav.kind == NavKind::Forward && i >= n) {
    t.plan.responder_ids = {"last_step"};
    return;
  }
  if (nav.kind == NavKind::Backward && i <= 1 && t.c.state.part == StepPart::Instruction) {
    t.plan.responder_ids = {"first_step"};
    return;
  }
  t.c = navigate(t.c, nav, t.extras.docs);
  t.plan.responder_ids = {"step"};
}

void do_utility(Turn& t) {
  using response::UtilityKind;
  response::UtilityAction u;
  const auto now = t.extras.now;
  try {
    switch (t.label.kind()) {
      case K::ListAdd:
        if (!t.intents.list_item) {
          u.kind = UtilityKind::ListMissingItem;
          break;
        }
        t.c = utility::list_add(t.c, *t.intents.list_item);
        u = {UtilityKind::ListAdd, *t.intents.list_item, 0};
        break;
      case K::ListRemove:
        if (!t.intents.list_item) {
          u.kind = UtilityKind::ListMissingItem;
          break;
        }
        u = {UtilityKind::ListRemove, *t.intents.list_item, 0};
        t.c = utility::list_remove(t.c, *t.intents.list_item);
        break;
      case K::TimerSet:
        if (!t.intents.timer_seconds || *t.intents.timer_seconds <= 0) {
          u.kind = UtilityKind::TimerMissingDuration;
          break;
        }
        t.c = utility::timer_set(t.c, *t.intents.timer_seconds, now);
        u = {UtilityKind::TimerSet, "", *t.intents.timer_seconds};
        break;
      case K::TimerPause:
        t.c = utility::timer_pause(t.c, now);
        u = {UtilityKind::TimerPause, "", t.c.timers.back().remaining};
        break;
      case K::TimerResume:
        t.c = utility::timer_resume(t.c, now);
        u = {UtilityKind::TimerResume, "", t.c.timers.back().remaining};
        break;
      case K::TimerCancel:
        t.c = utility::timer_cancel(t.c, now);
        u.kind = UtilityKind::TimerCancel;
        break;
      default: return help(t);
    }
  } catch (const utility::ItemNotFound&) {
    u.kind = UtilityKind::ListNotFound;
  } catch (const utility::InvalidTimerState&) {
    u = {UtilityKind::TimerNone, "", 0};
  } catch (const EmptyInput&) {
    u = {UtilityKind::ListMissingItem, "", 0};
  }
  static const std::map<UtilityKind, std::string> kIds = {
      {UtilityKind::ListAdd, "list_add"},
      {UtilityKind::ListRemove, "list_remove"},
      {UtilityKind::ListMissingItem, "list_missing_item"},
      {UtilityKind::ListNotFound, "list_not_found"},
      {UtilityKind::TimerSet, "timer_set"},
      {UtilityKind::TimerPause, "timer_pause"},
      {UtilityKind::TimerResume, "timer_resume"},
      {UtilityKind::TimerCancel, "timer_cancel"},
      {UtilityKind::TimerMissingDuration, "timer_missing_duration"},
      {UtilityKind::TimerNone, "timer_none"},
      {UtilityKind::TimerFired, "timer_fired"},
  };
  t.plan.responder_ids = {kIds.at(u.kind)};
  t.plan.utility = u;
}

}  // namespace

std::pair<DialogueContext, ResponderPlan> transition(const DialogueContext& ctx, const IntentSet& intents,
                                                     const safety::SafetyVerdict& verdict, const TurnExtras& extras,
                                                     const TransitionTable& table) {
  DialogueContext c = ctx;
  ResponderPlan plan;
  if (c.state.sub == S::Halt) {
    plan.responder_ids = {"goodbye"};
    plan.end_session = true;
    plan.context_snapshot = c;
    return {c, plan};
  }
  if (verdict.kind == safety::VerdictKind::Profane) {
    plan.responder_ids = {"profanity_redirect"};
    plan.context_snapshot = c;
    return {c, plan};
  }
  const IntentLabel label = pick_label(intents, c.state.sub, table);
  const TransitionAction* action = table.find(c.state.sub, label.kind());
  plan.applied = label;
  if (!action) {
    plan.responder_ids = {help_id(c.state.sub)};
    plan.context_snapshot = c;
    return {c, plan};
  }
  Turn t{c, plan, label, *action, intents, verdict, extras};
  switch (action->effect) {
    case Effect::Help: help(t); break;
    case Effect::Say: plan.responder_ids = {action->responder}; break;
    case Effect::Repeat:
      if (c.last_speech.empty()) {
        help(t);
      } else {
        plan.responder_ids = {"repeat"};
        plan.slots["speech"] = c.last_speech;
      }
      break;
    case Effect::Stop:
      c = change_state(c, DialogueState::halt());
      plan.responder_ids = {"goodbye"};
      plan.end_session = true;
      break;
    case Effect::Search: do_search(t); break;
    case Effect::ClarifyAnswer: do_clarify_answer(t); break;
    case Effect::PageMove: do_page_move(t); break;
    case Effect::Compare:
      if (result_count(c) == 0) {
        help(t);
      } else {
        c = change_state(c, DialogueState::comparison(c.state.page));
        plan.responder_ids = {"comparison_intro"};
      }
      break;
    case Effect::Select: do_select(t); break;
    case Effect::Pop: do_pop(t); break;
    case Effect::StartTask: do_start(t); break;
    case Effect::StepMove: do_step_move(t); break;
    case Effect::Detail: {
      auto p = handle_detail_request(c, extras.docs);
      c = p.context_snapshot;
      plan.responder_ids = p.responder_ids;
      break;
    }
    case Effect::Ingredients: plan.responder_ids = {"overview_details"}; break;
    case Effect::Complete:
      if (const auto* doc = selected_doc(c, extras.docs)) {
        c = change_state(c, DialogueState::completed(*c.state.selected_task));
        plan.responder_ids = {"task_complete"};
        plan.slots["title"] = doc->title;
      } else {
        help(t);
      }
      break;
    case Effect::Answer: plan.responder_ids = {"qa_answer"}; break;
    case Effect::Utility: do_utility(t); break;
    case Effect::Halted:
      plan.responder_ids = {"goodbye"};
      plan.end_session = true;
      break;
  }
  if (plan.responder_ids.empty()) help(t);
  plan.context_snapshot = c;
  return {c, plan};
}

std::vector<std::string> responder_ids_used() {
  std::set<std::string> ids;
  for (const auto& [key, a] : default_table().entries)
    if (!a.responder.empty()) ids.insert(a.responder);
  for (S s : live_states()) {
    ids.insert(help_id(s));
    ids.insert(present_id(s));
  }
  for (const char* id : {"goodbye", "repeat", "ask_task", "clarify_question", "profanity_redirect", "dangerous_task",
                         "professional_task", "no_results", "catalog_intro", "favorites_intro", "catalog_first_page",
                         "catalog_last_page", "comparison_intro", "catalog_choose", "choice_invalid", "overview",
                         "overview_details", "step", "step_detail", "step_tips", "no_more_detail", "first_step",
                         "last_step", "cannot_go_to_step", "task_complete", "completed_prompt", "qa_answer",
                         "list_add", "list_remove", "list_missing_item", "list_not_found", "timer_set",
                         "timer_pause", "timer_resume", "timer_cancel", "timer_missing_duration", "timer_none",
                         "timer_fired"})
    ids.insert(id);
  return {ids.begin(), ids.end()};
}

}  // namespace taco::dm
