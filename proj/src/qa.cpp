#include "taco/qa.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <regex>
#include <set>

#include "taco/rng.hpp"
#include "taco/search.hpp"
#include "taco/text.hpp"

namespace taco::qa {

std::string to_string(QuestionType t) {
  switch (t) {
    case QuestionType::MRC: return "mrc";
    case QuestionType::FAQ: return "faq";
    case QuestionType::Factual: return "factual";
    case QuestionType::Ingredient: return "ingredient";
    case QuestionType::Substitute: return "substitute";
  }
  return "mrc";
}

QuestionType question_type_from_string(const std::string& s) {
  for (auto t : all_question_types())
    if (to_string(t) == s) return t;
  throw ParseError("unknown question type '" + s + "'");
}

const std::vector<QuestionType>& all_question_types() {
  static const std::vector<QuestionType> kTypes = {QuestionType::MRC, QuestionType::FAQ, QuestionType::Factual,
                                                   QuestionType::Ingredient, QuestionType::Substitute};
  return kTypes;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kContextWeight = 0.5;

std::vector<std::string> type_names() {
  std::vector<std::string> out;
  for (auto t : all_question_types()) out.push_back(to_string(t));
  return out;
}

}  // namespace

SparseVec QuestionClassifier::features(std::string_view question, std::string_view step_context) const {
  SparseVec x = featurizer_.transform(question);
  if (!step_context.empty()) {
    const int offset = static_cast<int>(featurizer_.size());
    for (auto [i, v] : featurizer_.transform(step_context)) x.emplace_back(offset + i, kContextWeight * v);
  }
  return x;
}

QuestionType QuestionClassifier::classify(std::string_view question, const std::optional<std::string>& current_step,
                                          Domain domain) const {
  if (text::normalize_utterance(question).empty()) throw EmptyQuestion();
  auto x = features(question, current_step.value_or(""));
  auto logits = model_.logits(x);
  std::size_t best = 0;
  double best_logit = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < all_question_types().size() && i < logits.size(); ++i) {
    auto t = all_question_types()[i];
    if (domain == Domain::DIY && (t == QuestionType::Ingredient || t == QuestionType::Substitute)) continue;
    if (logits[i] > best_logit) {
      best_logit = logits[i];
      best = i;
    }
  }
  return all_question_types()[best];
}

Json QuestionClassifier::to_json() const {
  return Json{{"featurizer", featurizer_.to_json()}, {"linear", model_.to_json()}};
}

QuestionClassifier QuestionClassifier::from_json(const Json& j) {
  return QuestionClassifier(NgramFeaturizer::from_json(j.at("featurizer")), LinearOvR::from_json(j.at("linear")));
}

std::vector<QuestionExample> simulate_questions(const nlu::SimulatorSpec& spec, const std::vector<std::string>& contexts,
                                                int count, std::uint64_t seed) {
  auto utterances = nlu::simulate_training_data(spec, count, seed);
  Rng rng(mix_seed(seed));
  std::vector<QuestionExample> out;
  out.reserve(utterances.size());
  for (const auto& u : utterances) {
    QuestionExample e;
    e.question = u.text;
    e.type = question_type_from_string(u.labels.at(0));
    if (!contexts.empty()) e.context = contexts[rng.index(contexts.size())];
    out.push_back(std::move(e));
  }
  return out;
}

QuestionClassifier train_question_classifier(const std::vector<QuestionExample>& data,
                                             const nlu::IntentTrainConfig& config) {
  if (data.empty()) throw InsufficientData(to_string(QuestionType::MRC));
  std::vector<std::string> texts;
  for (const auto& e : data) {
    texts.push_back(e.question);
    if (!e.context.empty()) texts.push_back(e.context);
  }
  NgramFeaturizer featurizer(config.ngrams);
  featurizer.fit(texts);
  QuestionClassifier shell(featurizer, LinearOvR());
  std::vector<SparseVec> xs;
  std::vector<std::vector<int>> targets;
  for (const auto& e : data) {
    xs.push_back(shell.features(e.question, e.context));
    targets.push_back({static_cast<int>(e.type)});
  }
  auto model = train_ovr(xs, targets, type_names(), 2 * featurizer.size(), config.optimizer,
                         config.min_examples_per_label);
  return QuestionClassifier(std::move(featurizer), std::move(model));
}

// ---------------------------------------------------------------------------
// Extractive QA

namespace {

std::vector<std::string> content_lemmas(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& t : text::tokenize(s))
    if (!text::is_stopword(t)) out.push_back(search::lemmatize(t));
  return out;
}

enum class AnswerType { Any, Duration, Quantity };

const std::regex& duration_re() {
  static const std::regex kRe(
      "\\b(\\d+|a|an|one|two|three|four|five|six|seven|eight|nine|ten|few|several|fifteen|twenty|thirty)"
      "(?: to \\d+)? (seconds?|minutes?|hours?|days?|mins?)\\b",
      std::regex::icase);
  return kRe;
}

const std::regex& quantity_re() {
  static const std::regex kRe(
      "\\b(\\d+(?:[./]\\d+)?|one|two|three|four|half|a) ?(cups?|tablespoons?|teaspoons?|tbsp|tsp|ounces?|oz|"
      "grams?|g|pounds?|lbs?|inch(?:es)?|feet|foot|coats?|pieces?|cloves?|pinch|dash)\\b",
      std::regex::icase);
  return kRe;
}

}  // namespace

std::vector<double> LexicalMrcScorer::score(const std::string& question, const std::vector<std::string>& sentences) const {
  std::string q = text::normalize_utterance(question);
  AnswerType type = AnswerType::Any;
  static const std::regex kHowLong("\\bhow long\\b");
  static const std::regex kHowMuch("\\bhow (much|many)\\b");
  if (std::regex_search(q, kHowLong)) {
    type = AnswerType::Duration;
    q = std::regex_replace(q, kHowLong, " ");
  } else if (std::regex_search(q, kHowMuch)) {
    type = AnswerType::Quantity;
    q = std::regex_replace(q, kHowMuch, " ");
  }
  std::string focus;
  static const std::regex kFocus("\\b(?:what|which) (?:kind of |type of |sort of )?([a-z]+)\\b");
  std::smatch m;
  if (std::regex_search(q, m, kFocus) && !text::is_stopword(m[1].str())) focus = search::lemmatize(m[1].str());

  auto q_terms = content_lemmas(q);
  std::vector<std::set<std::string>> sent_terms;
  for (const auto& s : sentences) {
    auto t = content_lemmas(s);
    sent_terms.emplace_back(t.begin(), t.end());
  }
  const double n = static_cast<double>(sentences.size());
  auto idf = [&](const std::string& term) {
    double df = 0.0;
    for (const auto& st : sent_terms) df += st.count(term) ? 1.0 : 0.0;
    return std::log((n + 1.0) / (df + 0.5));
  };
  std::set<std::string> uniq(q_terms.begin(), q_terms.end());
  std::map<std::string, double> weight;
  double mass = 0.0;
  for (const auto& t : uniq) {
    double w = idf(t) * (t == focus ? 2.0 : 1.0);
    weight[t] = w;
    mass += w;
  }
  std::vector<double> scores(sentences.size(), 0.0);
  if (mass <= 0.0) return scores;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    double overlap = 0.0;
    for (const auto& [t, w] : weight)
      if (sent_terms[i].count(t)) overlap += w;
    if (overlap <= 0.0) continue;
    double s = overlap / mass;
    if (type == AnswerType::Duration && std::regex_search(sentences[i], duration_re())) s += 0.5;
    if (type == AnswerType::Quantity && std::regex_search(sentences[i], quantity_re())) s += 0.5;
    scores[i] = s;
  }
  return scores;
}

std::string step_text(const StepSegment& s) {
  std::vector<std::string> parts{s.instruction};
  if (s.detail) parts.push_back(*s.detail);
  if (s.tips) parts.push_back(*s.tips);
  return text::join(parts, " ");
}

std::string build_context(const std::vector<std::string>& steps, int cursor, int window) {
  if (steps.empty() || cursor < 1) return "";
  cursor = std::min(cursor, static_cast<int>(steps.size()));
  int first = std::max(1, cursor - std::max(0, window));
  std::vector<std::string> parts;
  for (int i = first; i <= cursor; ++i) parts.push_back(steps[static_cast<std::size_t>(i - 1)]);
  return text::join(parts, " ");
}

QAAnswer answer_mrc(const std::string& question, const std::vector<std::string>& steps, int cursor,
                    const QAConfig& config, const MrcScorer* scorer) {
  QAAnswer out;
  out.source = QuestionType::MRC;
  const std::string context = build_context(steps, cursor, config.context_window);
  if (context.empty() || text::normalize_utterance(question).empty()) return out;
  std::vector<std::string> sentences;
  for (auto s : text::split_sentences(context)) {
    std::string t(s);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    if (!t.empty()) sentences.push_back(t);
  }
  if (sentences.empty()) return out;
  static const LexicalMrcScorer kDefault;
  auto scores = (scorer ? scorer : &kDefault)->score(question, sentences);
  std::size_t best = 0;
  auto density = [&](std::size_t i) {
    return scores[i] / static_cast<double>(std::max<std::size_t>(1, text::tokenize(sentences[i]).size()));
  };
  for (std::size_t i = 1; i < sentences.size(); ++i) {
    if (scores[i] > scores[best] + 1e-12 || (std::abs(scores[i] - scores[best]) <= 1e-12 && density(i) > density(best)))
      best = i;
  }
  out.score = scores[best];
  if (out.score >= config.no_answer_threshold) {
    out.kind = AnswerKind::Extracted;
    out.text = sentences[best];
  }
  return out;
}

// ---------------------------------------------------------------------------
// FAQ

namespace {

using TermVec = std::map<std::string, double>;

std::vector<std::string> faq_terms(std::string_view s) { return content_lemmas(s); }

struct FaqSpace {
  std::map<std::string, int> df;
  double n = 0.0;

  explicit FaqSpace(const std::vector<FaqPair>& faqs) : n(static_cast<double>(faqs.size())) {
    for (const auto& f : faqs) {
      auto t = faq_terms(f.question);
      for (const auto& term : std::set<std::string>(t.begin(), t.end())) ++df[term];
    }
  }
  double idf(const std::string& t) const {
    auto it = df.find(t);
    double d = it == df.end() ? 0.0 : it->second;
    return std::log((1.0 + n) / (1.0 + d)) + 1.0;
  }
  TermVec embed(std::string_view s) const {
    TermVec v;
    for (const auto& t : faq_terms(s)) v[t] += 1.0;
    double norm = 0.0;
    for (auto& [t, w] : v) {
      w *= idf(t);
      norm += w * w;
    }
    norm = std::sqrt(norm);
    if (norm > 0)
      for (auto& [t, w] : v) w /= norm;
    return v;
  }
};

double cosine(const TermVec& a, const TermVec& b) {
  double s = 0.0;
  for (const auto& [t, w] : a)
    if (auto it = b.find(t); it != b.end()) s += w * it->second;
  return s;
}

}  // namespace

double faq_cosine(const std::string& a, const std::string& b, const std::vector<FaqPair>& collection) {
  FaqSpace space(collection);
  return cosine(space.embed(a), space.embed(b));
}

QAAnswer retrieve_faq(const std::string& question, const std::vector<FaqPair>& faqs, const QAConfig& config) {
  QAAnswer out;
  out.source = QuestionType::FAQ;
  if (faqs.empty()) return out;
  FaqSpace space(faqs);
  auto q = space.embed(question);
  std::size_t best = 0;
  double best_sim = -1.0;
  for (std::size_t i = 0; i < faqs.size(); ++i) {
    double sim = cosine(q, space.embed(faqs[i].question));
    if (sim > best_sim + 1e-12) {
      best_sim = sim;
      best = i;
    }
  }
  out.score = std::max(0.0, best_sim);
  if (best_sim >= config.faq_threshold) {
    out.kind = AnswerKind::Faq;
    out.text = faqs[best].answer;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ingredients

namespace {

std::vector<std::string> lemma_tokens(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& t : text::tokenize(s)) out.push_back(search::lemmatize(t));
  return out;
}

}  // namespace

std::optional<IngredientLine> find_ingredient(const std::string& question, const std::vector<IngredientLine>& lines) {
  auto q = lemma_tokens(question);
  std::optional<IngredientLine> best;
  std::size_t best_len = 0;
  for (const auto& line : lines) {
    auto name = lemma_tokens(line.name);
    if (name.empty()) continue;
    if (text::find_phrase(q, name) != text::npos) {
      std::size_t len = line.name.size();
      if (!best || len > best_len) {
        best = line;
        best_len = len;
      }
    }
  }
  return best;
}

QAAnswer answer_ingredient(const std::string& question, const TaskDocument& recipe) {
  QAAnswer out;
  out.source = QuestionType::Ingredient;
  if (auto line = find_ingredient(question, recipe.ingredients)) {
    out.kind = AnswerKind::IngredientInfo;
    out.ingredient = line->name;
    out.quantity = line->quantity;
    out.text = line->quantity ? *line->quantity + " " + line->name : line->name;
  }
  return out;
}

QAAnswer answer_substitute(const std::string& question, const TaskDocument* recipe, const SubstitutionTable& table) {
  QAAnswer out;
  out.source = QuestionType::Substitute;
  std::optional<IngredientLine> hit;
  if (recipe) hit = find_ingredient(question, recipe->ingredients);
  if (!hit) {
    std::vector<IngredientLine> keys;
    for (const auto& [k, v] : table.entries) keys.push_back({k, std::nullopt});
    hit = find_ingredient(question, keys);
  }
  if (!hit) return out;
  out.ingredient = hit->name;
  const auto* suggestions = table.find(hit->name);
  if (!suggestions) {
    // A recipe line like "sweetened condensed milk" can still hit a shorter table key.
    std::vector<IngredientLine> keys;
    for (const auto& [k, v] : table.entries) keys.push_back({k, std::nullopt});
    if (auto inner = find_ingredient(hit->name, keys)) suggestions = table.find(inner->name);
  }
  if (!suggestions || suggestions->empty()) {
    out.text = "no_substitute";
    return out;
  }
  out.kind = AnswerKind::SubstituteInfo;
  out.text = suggestions->front();
  return out;
}

// ---------------------------------------------------------------------------

QAAnswer route_and_answer(const std::string& question, const QAContext& ctx, const QAResources& res,
                          const QAConfig& config) {
  const Domain domain = ctx.domain.value_or(ctx.task ? ctx.task->domain : Domain::DIY);
  std::optional<std::string> step_ctx;
  if (ctx.task && ctx.step >= 1 && ctx.step <= static_cast<int>(ctx.task->steps.size()))
    step_ctx = ctx.task->steps[static_cast<std::size_t>(ctx.step - 1)].instruction;
  QuestionType type = QuestionType::MRC;
  if (res.classifier) type = res.classifier->classify(question, step_ctx, domain);

  QAAnswer out;
  switch (type) {
    case QuestionType::MRC: {
      if (ctx.task && ctx.step >= 1) {
        std::vector<std::string> steps;
        for (const auto& s : ctx.task->steps) steps.push_back(step_text(s));
        out = answer_mrc(question, steps, ctx.step, config, res.scorer);
      }
      out.source = QuestionType::MRC;
      break;
    }
    case QuestionType::FAQ: {
      const std::vector<FaqPair>* faqs = ctx.task && !ctx.task->faqs.empty() ? &ctx.task->faqs : res.global_faqs;
      out = faqs ? retrieve_faq(question, *faqs, config) : QAAnswer{};
      if (!out.answered() && ctx.task && res.global_faqs && faqs != res.global_faqs)
        out = retrieve_faq(question, *res.global_faqs, config);
      out.source = QuestionType::FAQ;
      break;
    }
    case QuestionType::Factual:
      out.kind = AnswerKind::Unavailable;
      out.text = kFactualStub;
      out.source = QuestionType::Factual;
      break;
    case QuestionType::Ingredient:
      if (ctx.task && ctx.task->domain == Domain::Cooking) out = answer_ingredient(question, *ctx.task);
      out.source = QuestionType::Ingredient;
      break;
    case QuestionType::Substitute:
      if (res.substitutions) out = answer_substitute(question, ctx.task, *res.substitutions);
      out.source = QuestionType::Substitute;
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<QaEvalRecord> parse_qa_eval(const Json& j) {
  if (!j.is_array()) throw ParseError("QA eval file must be a JSON array");
  std::vector<QaEvalRecord> out;
  for (const auto& r : j) {
    QaEvalRecord rec;
    rec.context = r.at("context").get<std::string>();
    rec.question = r.at("question").get<std::string>();
    rec.gold = r.at("gold_answer").get<std::string>();
    out.push_back(std::move(rec));
  }
  return out;
}

std::string normalize_answer(std::string_view s) { return text::join(text::tokenize(s), " "); }

QaEvalReport evaluate_mrc(const std::vector<QaEvalRecord>& records, const QAConfig& config, const MrcScorer* scorer) {
  QaEvalReport rep;
  for (const auto& r : records) {
    auto ans = answer_mrc(r.question, {r.context}, 1, config, scorer);
    const bool unanswerable = r.gold == kNoAnswerToken;
    if (unanswerable) {
      ++rep.unanswerable;
      if (!ans.answered()) ++rep.unanswerable_correct;
    } else {
      ++rep.answerable;
      if (ans.answered() && normalize_answer(ans.text) == normalize_answer(r.gold)) ++rep.answerable_correct;
    }
  }
  return rep;
}

}  // namespace taco::qa
