#include "taco/engine.hpp"

#include <chrono>
#include <fstream>
#include <future>

#include "taco/rng.hpp"
#include "taco/safety.hpp"
#include "taco/text.hpp"
#include "taco/utility.hpp"

namespace taco::engine {

const TaskDocument* Resources::doc(const std::string& id) const {
  auto it = by_id.find(id);
  return it == by_id.end() ? nullptr : &corpus[it->second];
}

response::DocLookup Resources::lookup() const {
  return [this](const std::string& id) { return doc(id); };
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("TACO_DATA_DIR"); env && *env) return env;
#ifdef TACO_SOURCE_DIR
  return std::filesystem::path(TACO_SOURCE_DIR) / "data";
#else
  return "data";
#endif
}

Resources load_static_resources(const DataPaths& paths) {
  Resources r;
  r.corpus = load_corpus(paths.corpus());
  for (std::size_t i = 0; i < r.corpus.size(); ++i) r.by_id[r.corpus[i].id] = i;
  r.index = search::build_index(r.corpus);
  r.vocabulary = r.index.lexicon();
  r.asr_rules = nlu::load_asr_rules(paths.asr_rules());
  r.blacklist = load_blacklist(paths.blacklists());
  r.substitutions = load_substitutions(paths.substitutions());
  r.templates = response::load_templates(paths.templates());
  if (std::filesystem::exists(paths.faqs())) r.global_faqs = read_json(paths.faqs()).get<std::vector<FaqPair>>();
  r.tags = dm::tag_vocabulary(r.corpus);
  return r;
}

Models train_models(const Resources& res, const DataPaths& paths, const TrainOptions& opt) {
  Models m;
  auto spec = nlu::load_simulator_spec(paths.intent_spec());
  auto [train_spec, held_out] = nlu::split_templates(spec, opt.holdout_fraction, opt.seed);
  auto data = nlu::simulate_training_data(train_spec, opt.intent_examples, opt.seed);
  m.intents = nlu::train_intent_model(data);
  auto domain_data = data;
  for (const auto& d : res.corpus) {
    auto add = [&](const std::string& s) {
      nlu::LabeledUtterance u;
      u.text = s;
      u.task_name = text::normalize_utterance(s);
      u.domain = d.domain;
      domain_data.push_back(std::move(u));
    };
    add(d.title);
    for (const auto& ing : d.ingredients) add(ing.name);
    for (const auto& s : d.steps) add(s.instruction);
  }
  m.domain = nlu::train_domain_classifier(domain_data);

  auto qspec = nlu::load_simulator_spec(paths.question_spec());
  std::vector<std::string> contexts;
  for (const auto& d : res.corpus)
    for (const auto& s : d.steps) contexts.push_back(s.instruction);
  m.questions = qa::train_question_classifier(qa::simulate_questions(qspec, contexts, opt.question_examples, opt.seed));

  if (std::filesystem::exists(paths.weak_labels_train())) {
    auto labels = search::load_weak_labels(paths.weak_labels_train(), &res.index);
    for (auto& e : labels.entries)
      if (!e.domain) e.domain = m.domain.classify(e.query);
    search::RankerTrainConfig cfg;
    cfg.seed = opt.seed;
    m.ranker = search::train_reranker(labels, res.index, cfg);
  }
  return m;
}

void save_models(const Models& m, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const Json& j) {
    std::ofstream out(dir / name);
    if (!out) throw IOError("cannot write " + (dir / name).string());
    out << j.dump() << '\n';
  };
  write("intent_model.json", m.intents.to_json());
  write("domain_model.json", m.domain.to_json());
  write("question_model.json", m.questions.to_json());
  if (m.ranker) write("ranker.json", m.ranker->to_json());
}

std::optional<Models> load_models(const std::filesystem::path& dir) {
  for (const char* f : {"intent_model.json", "domain_model.json", "question_model.json"})
    if (!std::filesystem::exists(dir / f)) return std::nullopt;
  Models m;
  m.intents = nlu::IntentModel::from_json(read_json(dir / "intent_model.json"));
  m.domain = nlu::DomainClassifier::from_json(read_json(dir / "domain_model.json"));
  m.questions = qa::QuestionClassifier::from_json(read_json(dir / "question_model.json"));
  if (std::filesystem::exists(dir / "ranker.json"))
    m.ranker = search::RankerModel::from_json(read_json(dir / "ranker.json"));
  return m;
}

std::shared_ptr<const Resources> load_resources(const DataPaths& paths, const TrainOptions& opt) {
  auto res = std::make_shared<Resources>(load_static_resources(paths));
  if (auto m = load_models(paths.models()))
    res->models = std::move(*m);
  else
    res->models = train_models(*res, paths, opt);
  return res;
}

// ---------------------------------------------------------------------------

RankedResult run_search(const Resources& res, const std::string& task_name, std::optional<Domain> domain,
                        const Constraints& constraints, const EngineConfig& config) {
  auto expanded = search::expand_query(task_name, res.vocabulary);
  auto result = search::retrieve(res.index, expanded, constraints, config.search_k);
  result.query = task_name;
  if (res.models.ranker) {
    search::QueryInfo q{task_name, expanded, domain};
    result = search::rerank(*res.models.ranker, res.index, q, std::move(result), config.rerank_pool);
  }
  return result;
}

IntentSet touch_to_intents(const std::vector<TouchArg>& args) {
  std::map<std::string, std::string> kv;
  for (const auto& a : args) kv[a.name] = a.value;
  IntentSet out;
  const std::string action = kv.count("action") ? kv["action"] : "";
  if (action == "select") {
    int index = 0;
    try {
      index = std::stoi(kv.count("index") ? kv["index"] : "");
    } catch (const std::exception&) {
      index = 0;
    }
    if (index >= 1) {
      out.add(IntentLabel(IntentKind::Affirm));
      out.choice = index;
    }
  } else if (action == "next") {
    out.add(IntentLabel::navigation({NavKind::Forward, 1}));
  } else if (action == "prev") {
    out.add(IntentLabel::navigation({NavKind::Backward, 1}));
  } else if (action == "more") {
    out.add(IntentLabel::navigation({NavKind::MoreChoice, 1}));
  } else if (action == "less") {
    out.add(IntentLabel::navigation({NavKind::LessChoice, 1}));
  } else if (action == "detail") {
    out.add(IntentLabel(IntentKind::DetailRequest));
  } else if (action == "start") {
    out.add(IntentLabel(IntentKind::Affirm));
  }
  if (out.labels.empty()) out.labels = {IntentLabel(IntentKind::Ignore)};
  return out;
}

std::vector<std::string> required_responders() {
  auto ids = dm::responder_ids_used();
  for (const char* id :
       {"greeting_morning", "greeting_afternoon", "greeting_evening", "welcome_prompt", "qa_answer", "qa_decline",
        "qa_factual", "ingredient_answer", "ingredient_present", "substitute_answer", "substitute_none",
        "error_apology", "catalog_item", "catalog_more", "comparison_item", "favorite_item", "overview_ingredients",
        "overview_prompt", "hint_next", "hint_detail", "hint_goto", "hint_last"})
    ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

// ---------------------------------------------------------------------------

Engine::Engine(std::shared_ptr<const Resources> res, std::shared_ptr<store::SessionStore> store, EngineConfig config)
    : res_(std::move(res)), store_(std::move(store)), config_(config) {
  clock = [] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::system_clock::now().time_since_epoch())
        .count();
  };
}

std::string Engine::create_session() {
  std::lock_guard lock(mu_);
  for (;;) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "session-%06llu", static_cast<unsigned long long>(next_session_++));
    if (store_->exists(buf)) continue;
    store_->create(buf);
    return buf;
  }
}

std::string Engine::create_session(const std::string& preferred) {
  store::check_session_id(preferred);
  std::lock_guard lock(mu_);
  std::string id = preferred;
  for (int n = 2; store_->exists(id); ++n) id = preferred + "-" + std::to_string(n);
  store_->create(id);
  return id;
}

std::vector<Json> Engine::transcript(const std::string& session_id) { return store_->transcript(session_id); }

DialogueContext Engine::fresh_context(const std::string& session_id) const {
  DialogueContext c;
  c.session_id = session_id;
  std::uint64_t h = config_.seed;
  for (char ch : session_id) h = mix_seed(h ^ static_cast<unsigned char>(ch));
  c.rng_state = h;
  return c;
}

namespace {

class InFlight {
 public:
  InFlight(std::mutex& mu, std::set<std::string>& set, const std::string& id) : mu_(mu), set_(set), id_(id) {
    std::lock_guard lock(mu_);
    if (!set_.insert(id_).second) throw SessionBusy(id_);
  }
  ~InFlight() {
    std::lock_guard lock(mu_);
    set_.erase(id_);
  }
  InFlight(const InFlight&) = delete;
  InFlight& operator=(const InFlight&) = delete;

 private:
  std::mutex& mu_;
  std::set<std::string>& set_;
  std::string id_;
};

template <typename F>
auto run(bool parallel, F&& f) {
  return std::async(parallel ? std::launch::async : std::launch::deferred, std::forward<F>(f));
}

int utc_hour(TimestampMs now) {
  auto h = (now / 1000 / 3600) % 24;
  return static_cast<int>(h < 0 ? h + 24 : h);
}

response::SlotValues declared_only(const response::TemplateRegistry& reg, const std::string& id,
                                   const response::SlotValues& slots) {
  response::SlotValues out;
  for (const auto& s : reg.get(id).slots)
    if (auto it = slots.find(s); it != slots.end()) out.insert(*it);
  return out;
}

std::string labels_string(const IntentSet& s) {
  std::vector<std::string> names;
  for (const auto& l : s.labels) names.push_back(l.to_string());
  return text::join(names, ",");
}

}  // namespace

Engine::Understanding Engine::understand(const DialogueContext& ctx, const TurnInput& input) const {
  const Resources& r = *res_;
  Understanding u;
  if (!input.is_utterance()) {
    u.raw = touch_to_intents(input.touch());
    u.filtered = nlu::filter_by_state(u.raw, ctx.state);
    return u;
  }
  const std::string corrected = nlu::correct_asr(input.utterance(), ctx.state.phase(), r.asr_rules);
  auto intents_f = run(config_.parallel, [&] { return nlu::recognize_intents(corrected, r.models.intents); });
  auto task_f = run(config_.parallel, [&]() -> std::pair<std::optional<std::string>, std::optional<Domain>> {
    auto name = nlu::extract_task_name(corrected);
    if (!name) return {std::nullopt, std::nullopt};
    return {name, r.models.domain.classify(*name)};
  });
  auto profanity_f = run(config_.parallel, [&] { return safety::check_profanity(input.utterance(), r.blacklist); });
  u.raw = intents_f.get();
  auto [name, domain] = task_f.get();
  u.verdict = profanity_f.get();
  u.raw.raw_utterance = input.utterance();
  u.raw.corrected_utterance = corrected;
  if (u.raw.has(IntentType::TaskRequest) && name) {
    u.raw.task_name = name;
    u.raw.domain = domain;
  }
  u.filtered = nlu::filter_by_state(u.raw, ctx.state);
  if (u.verdict.safe() && u.filtered.has(IntentType::TaskRequest) && u.filtered.task_name)
    u.verdict = safety::check_task_request(*u.filtered.task_name, r.blacklist);
  return u;
}

Response Engine::render_one(const std::string& id, const DialogueContext& ctx, const dm::ResponderPlan& plan,
                            const IntentSet& intents, std::uint64_t& rng) const {
  const Resources& r = *res_;
  const auto& reg = r.templates;
  const auto docs = r.lookup();
  const TaskDocument* doc = ctx.state.selected_task ? r.doc(*ctx.state.selected_task) : nullptr;
  Response out;
  if (id == "step" || id == "step_detail" || id == "step_tips") {
    if (!doc) throw NotFound("no selected task");
    return response::render_step(reg, *doc, ctx.state.step, ctx.state.part, rng);
  }
  if (id == "catalog_intro" || id == "comparison_intro") {
    if (!ctx.search_results) throw NotFound("no search results");
    if (ctx.search_results->query == "favorites" && ctx.state.page == 0 && id == "catalog_intro") {
      std::vector<std::string> ids;
      for (const auto& c : ctx.search_results->candidates) ids.push_back(c.doc_id);
      return response::render_favorites(reg, ids, docs, rng);
    }
    return id == "catalog_intro" ? response::render_catalog(reg, *ctx.search_results, ctx.state.page, docs, rng)
                                 : response::render_comparison(reg, *ctx.search_results, ctx.state.page, docs, rng);
  }
  if (id == "favorites_intro") {
    std::vector<std::string> ids;
    if (ctx.search_results)
      for (const auto& c : ctx.search_results->candidates) ids.push_back(c.doc_id);
    return response::render_favorites(reg, ids, docs, rng);
  }
  if (id == "overview") {
    if (!doc) throw NotFound("no selected task");
    return response::render_overview(reg, *doc, rng);
  }
  if (id == "overview_details") {
    if (!doc) throw NotFound("no selected task");
    std::vector<std::string> items;
    for (const auto& ing : doc->ingredients) items.push_back(ing.quantity ? *ing.quantity + " " + ing.name : ing.name);
    if (items.empty())
      for (std::size_t i = 0; i < doc->steps.size() && i < 3; ++i) items.push_back(doc->steps[i].instruction);
    out.speech = response::render(reg, id, {{"list", text::join(items, "; ")}}, rng);
    return out;
  }
  if (plan.utility && (id.rfind("list_", 0) == 0 || id.rfind("timer_", 0) == 0))
    return response::render_utility_ack(reg, *plan.utility, rng);
  if (id == "qa_answer") {
    qa::QAResources qres{&r.models.questions, &r.substitutions, &r.global_faqs, nullptr};
    qa::QAContext qctx;
    qctx.task = doc;
    if (ctx.state.sub == SubState::Step) qctx.step = ctx.state.step;
    if (ctx.state.sub == SubState::Completed && doc) qctx.step = static_cast<int>(doc->steps.size());
    qctx.domain = doc ? std::optional<Domain>(doc->domain) : ctx.task_domain;
    const std::string question = intents.corrected_utterance.empty() ? intents.raw_utterance : intents.corrected_utterance;
    qa::QAAnswer ans;
    try {
      ans = qa::route_and_answer(question, qctx, qres, config_.qa);
    } catch (const qa::EmptyQuestion&) {
    }
    out.debug["qa_type"] = qa::to_string(ans.source);
    switch (ans.kind) {
      case qa::AnswerKind::Extracted:
      case qa::AnswerKind::Faq: out.speech = response::render(reg, "qa_answer", {{"answer", ans.text}}, rng); break;
      case qa::AnswerKind::IngredientInfo:
        out.speech = ans.quantity ? response::render(reg, "ingredient_answer",
                                                     {{"quantity", *ans.quantity}, {"ingredient", ans.ingredient}}, rng)
                                  : response::render(reg, "ingredient_present", {{"ingredient", ans.ingredient}}, rng);
        break;
      case qa::AnswerKind::SubstituteInfo:
        out.speech = response::render(reg, "substitute_answer",
                                      {{"ingredient", ans.ingredient}, {"suggestion", ans.text}}, rng);
        break;
      case qa::AnswerKind::Unavailable: out.speech = response::render(reg, "qa_factual", {}, rng); break;
      case qa::AnswerKind::NoAnswer:
        out.speech = ans.source == qa::QuestionType::Substitute && !ans.ingredient.empty()
                         ? response::render(reg, "substitute_none", {{"ingredient", ans.ingredient}}, rng)
                         : response::render(reg, "qa_decline", {}, rng);
        break;
    }
    return out;
  }
  out.speech = response::render(reg, id, declared_only(reg, id, plan.slots), rng);
  return out;
}

Response Engine::render_plan(const DialogueContext& ctx, const dm::ResponderPlan& plan, const IntentSet& intents,
                             std::uint64_t rng_base) const {
  const auto& ids = plan.responder_ids;
  std::vector<Response> parts(ids.size());
  auto job = [&](std::size_t i) {
    std::uint64_t rng = mix_seed(rng_base + i + 1);
    return render_one(ids[i], ctx, plan, intents, rng);
  };
  if (config_.parallel && ids.size() > 1) {
    std::vector<std::future<Response>> futures;
    for (std::size_t i = 0; i < ids.size(); ++i) futures.push_back(std::async(std::launch::async, job, i));
    for (std::size_t i = 0; i < ids.size(); ++i) parts[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < ids.size(); ++i) parts[i] = job(i);
  }
  Response out;
  std::vector<std::string> speech;
  for (auto& p : parts) {
    speech.push_back(p.speech);
    if (p.display) out.display = p.display;
    for (auto& [k, v] : p.debug) out.debug[k] = v;
  }
  out.speech = response::join_speech(speech);
  out.end_session = plan.end_session;
  return out;
}

Response Engine::handle_turn(const std::string& session_id, const TurnInput& input) {
  store::check_session_id(session_id);
  InFlight guard(mu_, in_flight_, session_id);
  if (!store_->exists(session_id)) throw NotFound("unknown session '" + session_id + "'");

  const TimestampMs now = input.received_at ? input.received_at : clock();
  auto loaded = store_->get(session_id);
  const bool first_turn = !loaded;
  DialogueContext ctx = loaded.value_or(fresh_context(session_id));
  const std::int64_t version = ctx.version;
  const DialogueState before = ctx.state;
  bool reset = false;
  if (ctx.state.sub == SubState::Halt) {
    DialogueContext fresh = fresh_context(session_id);
    fresh.rng_state = ctx.rng_state;
    fresh.version = ctx.version;
    fresh.turn_count = ctx.turn_count;
    ctx = std::move(fresh);
    reset = true;
  }
  const std::uint64_t rng_base = mix_seed(ctx.rng_state);

  Response response;
  IntentSet logged;
  std::vector<std::string> responders;
  DialogueContext next = ctx;
  try {
    std::vector<Response> prefix;
    std::uint64_t aux_rng = mix_seed(rng_base ^ 0x5bd1e995ULL);
    for (const auto& fired : utility::fire_due_timers(ctx, now)) {
      response::UtilityAction a{response::UtilityKind::TimerFired, "", fired.duration};
      prefix.push_back(response::render_utility_ack(res_->templates, a, aux_rng));
    }
    if (first_turn || reset) prefix.push_back(response::greet(res_->templates, utc_hour(now), aux_rng));

    Understanding u = understand(ctx, input);
    logged = u.filtered;

    dm::TurnExtras extras;
    extras.docs = res_->lookup();
    extras.now = now;
    const IntentLabel label = dm::pick_label(u.filtered, ctx.state.sub);
    if (ctx.state.sub == SubState::Clarification && u.verdict.safe()) {
      Constraints c = input.is_utterance() ? dm::parse_constraints(u.filtered.corrected_utterance, res_->tags)
                                           : Constraints{};
      extras.constraints = c;
      std::optional<std::string> query = ctx.pending_query;
      std::optional<Domain> domain = ctx.task_domain;
      if (label.kind() == IntentKind::TaskRequest && u.filtered.task_name) {
        query = u.filtered.task_name;
        domain = u.filtered.domain;
      }
      if (query) extras.search = run_search(*res_, *query, domain, c, config_);
    } else if (label.kind() == IntentKind::TaskRequest && u.verdict.safe()) {
      if (u.filtered.wants_recommendation) {
        std::uint64_t fav_rng = mix_seed(rng_base ^ 0xfa7ULL);
        extras.favorites = response::shuffled_favorites(res_->templates, fav_rng);
      } else if (u.filtered.task_name && !(u.filtered.domain == Domain::Cooking && !ctx.clarification)) {
        Constraints c = u.filtered.domain == Domain::Cooking ? ctx.clarification.value_or(Constraints{}) : Constraints{};
        extras.search = run_search(*res_, *u.filtered.task_name, u.filtered.domain, c, config_);
      }
    }

    auto [after, plan] = dm::transition(ctx, u.filtered, u.verdict, extras);
    if ((first_turn || reset) && plan.applied && label.kind() != IntentKind::Help && plan.responder_ids.size() == 1 &&
        plan.responder_ids.front().rfind("help_", 0) == 0)
      plan.responder_ids.clear();
    responders = plan.responder_ids;
    Response body = plan.responder_ids.empty() ? Response{} : render_plan(after, plan, u.filtered, rng_base);
    std::vector<std::string> speech;
    for (const auto& p : prefix) speech.push_back(p.speech);
    speech.push_back(body.speech);
    response = body;
    response.speech = response::join_speech(speech);
    next = std::move(after);
  } catch (const std::exception& e) {
    std::uint64_t rng = mix_seed(rng_base ^ 0xe77ULL);
    response = Response{};
    response.speech = res_->templates.has("error_apology") ? response::render(res_->templates, "error_apology", {}, rng)
                                                          : "Sorry, something went wrong. Let's try that again.";
    response.debug["error"] = e.what();
    next = ctx;
    responders = {"error_apology"};
  }

  response = safety::scrub_response(std::move(response), res_->blacklist);
  response.debug["state"] = next.state.describe();
  response.debug["sub_state"] = text::to_lower(to_string(next.state.sub));
  response.debug["intents"] = labels_string(logged);
  response.debug["responders"] = text::join(responders, ",");

  next.last_speech = response.speech;
  next.turn_count = ctx.turn_count + 1;
  next.rng_state = mix_seed(rng_base + 0x100);
  next.version = version;
  const std::int64_t stored = store_->put(next);
  response.debug["version"] = std::to_string(stored);

  Json entry;
  entry["turn"] = next.turn_count;
  entry["input"] = input;
  entry["intents"] = logged;
  entry["state_before"] = before;
  entry["state_after"] = next.state;
  entry["response"] = response;
  entry["version"] = stored;
  store_->append_transcript(session_id, entry);
  return response;
}

}  // namespace taco::engine
