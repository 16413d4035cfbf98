#include "taco/eval.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "taco/rng.hpp"
#include "taco/text.hpp"

namespace taco::eval {

double span_f1(const std::vector<std::string>& predicted, const std::vector<std::string>& gold) {
  if (predicted.empty() && gold.empty()) return 1.0;
  if (predicted.empty() || gold.empty()) return 0.0;
  std::map<std::string, int> counts;
  for (const auto& t : gold) ++counts[t];
  int overlap = 0;
  for (const auto& t : predicted)
    if (auto it = counts.find(t); it != counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  if (overlap == 0) return 0.0;
  const double p = static_cast<double>(overlap) / static_cast<double>(predicted.size());
  const double r = static_cast<double>(overlap) / static_cast<double>(gold.size());
  return 2.0 * p * r / (p + r);
}

NluPredictor model_predictor(const engine::Models& models) {
  NluPredictor p;
  p.intents = [&models](const std::string& u) { return nlu::coarse_set(nlu::recognize_intents(u, models.intents)); };
  p.task_name = [](const std::string& u) { return nlu::extract_task_name(u); };
  p.domain = [&models](const std::string& name) { return models.domain.classify(name); };
  return p;
}

namespace {

constexpr std::size_t kMaxErrors = 200;

std::string join_set(const std::set<std::string>& s) { return text::join({s.begin(), s.end()}, "+"); }

}  // namespace

NluReport evaluate_nlu(const std::vector<nlu::LabeledUtterance>& data, const NluPredictor& predictor) {
  NluReport rep;
  int intent_ok = 0, task_ok = 0, domain_ok = 0;
  double f1 = 0.0;
  for (const auto& ex : data) {
    ++rep.examples;
    std::set<std::string> gold(ex.labels.begin(), ex.labels.end());
    auto predicted = predictor.intents(ex.text);
    if (predicted == gold)
      ++intent_ok;
    else if (rep.intent_errors.size() < kMaxErrors)
      rep.intent_errors.push_back(ex.text + " -> " + join_set(predicted) + " (" + join_set(gold) + ")");
    if (ex.task_name) {
      ++rep.task_examples;
      auto pred = predictor.task_name(ex.text);
      const auto gold_tokens = text::tokenize(*ex.task_name);
      const auto pred_tokens = pred ? text::tokenize(*pred) : std::vector<std::string>{};
      if (pred_tokens == gold_tokens)
        ++task_ok;
      else if (rep.task_errors.size() < kMaxErrors)
        rep.task_errors.push_back(ex.text + " -> " + pred.value_or("<none>") + " (" + *ex.task_name + ")");
      f1 += span_f1(pred_tokens, gold_tokens);
      if (ex.domain) {
        ++rep.domain_examples;
        if (predictor.domain(*ex.task_name) == *ex.domain) ++domain_ok;
      }
    }
  }
  auto frac = [](int a, int b) { return b ? static_cast<double>(a) / b : 0.0; };
  rep.intent_accuracy = frac(intent_ok, rep.examples);
  rep.task_em = frac(task_ok, rep.task_examples);
  rep.task_f1 = rep.task_examples ? f1 / rep.task_examples : 0.0;
  rep.domain_accuracy = frac(domain_ok, rep.domain_examples);
  return rep;
}

SearchReport evaluate_search(const engine::Resources& res, const search::WeakLabelSet& gold,
                             const engine::EngineConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  std::vector<RankedResult> raw, expanded, reranked;
  for (const auto& e : gold.entries) {
    ++rep.queries;
    auto r = search::retrieve(res.index, text::tokenize(e.query), {}, config.search_k);
    r.query = e.query;
    raw.push_back(r);
    auto terms = search::expand_query(e.query, res.vocabulary);
    auto x = search::retrieve(res.index, terms, {}, config.search_k);
    x.query = e.query;
    expanded.push_back(x);
    if (res.models.ranker) {
      std::optional<Domain> domain = e.domain;
      if (!domain) domain = res.models.domain.classify(e.query);
      search::QueryInfo q{e.query, terms, domain};
      reranked.push_back(search::rerank(*res.models.ranker, res.index, q, x, config.rerank_pool));
    } else {
      reranked.push_back(x);
    }
  }
  auto row = [&](const std::vector<RankedResult>& rs) {
    return HitRow{search::hit_at_k(rs, gold, 3), search::hit_at_k(rs, gold, 6)};
  };
  rep.raw = row(raw);
  rep.expanded = row(expanded);
  rep.reranked = row(reranked);

  auto split = search::split_easy_hard(expanded, gold, 3);
  rep.easy3 = static_cast<int>(split.easy.size());
  rep.hard3 = static_cast<int>(split.hard.size());
  auto subset = [&](const std::vector<RankedResult>& rs, const std::vector<std::string>& queries) {
    std::set<std::string> keep(queries.begin(), queries.end());
    std::vector<RankedResult> out;
    for (const auto& r : rs)
      if (keep.count(r.query)) out.push_back(r);
    return out.empty() ? 0.0 : search::hit_at_k(out, gold, 3);
  };
  rep.easy3_expanded = subset(expanded, split.easy);
  rep.easy3_reranked = subset(reranked, split.easy);
  rep.hard3_expanded = subset(expanded, split.hard);
  rep.hard3_reranked = subset(reranked, split.hard);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

Suite suite_from_string(const std::string& s) {
  if (s == "all") return Suite::All;
  if (s == "nlu") return Suite::Nlu;
  if (s == "search") return Suite::Search;
  if (s == "qa") return Suite::Qa;
  throw ParseError("unknown suite '" + s + "' (expected all|nlu|search|qa)");
}

std::vector<nlu::LabeledUtterance> heldout_nlu_data(const engine::DataPaths& paths, const engine::TrainOptions& opt,
                                                     int count) {
  if (!std::filesystem::exists(paths.intent_spec())) throw MissingDataset(paths.intent_spec().string());
  auto spec = nlu::load_simulator_spec(paths.intent_spec());
  auto held_out = nlu::split_templates(spec, opt.holdout_fraction, opt.seed).second;
  return nlu::simulate_training_data(held_out, count, mix_seed(opt.seed ^ 0xe7a1ULL));
}

namespace {

Json require_dataset(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw MissingDataset(path.string());
  Json j;
  try {
    j = read_json(path);
  } catch (const Error&) {
    throw MissingDataset(path.string());
  }
  if (j.is_null() || (j.is_array() && j.empty())) throw MissingDataset(path.string());
  return j;
}

std::string pct(double v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%5.1f", 100.0 * v);
  return buf;
}

}  // namespace

Report evaluate_all(const engine::Resources& res, const engine::DataPaths& paths, Suite suite,
                    const engine::TrainOptions& opt) {
  Report rep;
  rep.seed = opt.seed;
  if (suite == Suite::All || suite == Suite::Nlu) {
    const auto file = paths.root / "eval" / "nlu_eval.json";
    auto data = require_dataset(file).get<std::vector<nlu::LabeledUtterance>>();
    rep.nlu = evaluate_nlu(data, model_predictor(res.models));
  }
  if (suite == Suite::All || suite == Suite::Search) {
    require_dataset(paths.weak_labels_eval());
    auto gold = search::load_weak_labels(paths.weak_labels_eval(), &res.index);
    rep.search = evaluate_search(res, gold);
  }
  if (suite == Suite::All || suite == Suite::Qa) {
    auto records = qa::parse_qa_eval(require_dataset(paths.qa_eval()));
    rep.qa.records = static_cast<int>(records.size());
    rep.qa.mrc = qa::evaluate_mrc(records);
  }
  return rep;
}

std::string Report::to_text() const {
  std::ostringstream o;
  o << "NOTE: bundled evaluation sets are synthetic (simulator templates held out from training, plus\n"
       "hand-written QA fixtures). Numbers are not comparable to figures measured on live traffic.\n"
       "Span F1 uses the index tokenizer (lowercase, split on non-alphanumerics).\n\n";
  o << "seed " << seed << "\n\n";
  o << "NLU                          value   n\n";
  o << "  intent exact-set acc       " << pct(nlu.intent_accuracy) << "  " << nlu.examples << "\n";
  o << "  task name EM               " << pct(nlu.task_em) << "  " << nlu.task_examples << "\n";
  o << "  task name span F1          " << pct(nlu.task_f1) << "  " << nlu.task_examples << "\n";
  o << "  domain accuracy            " << pct(nlu.domain_accuracy) << "  " << nlu.domain_examples << "\n\n";
  o << "Search (" << search.queries << " queries)   HIT-3  HIT-6  Easy-3 Hard-3\n";
  o << "  raw query                  " << pct(search.raw.hit3) << "  " << pct(search.raw.hit6) << "\n";
  o << "  + expansion                " << pct(search.expanded.hit3) << "  " << pct(search.expanded.hit6) << "  "
    << pct(search.easy3_expanded) << "  " << pct(search.hard3_expanded) << "\n";
  o << "  + expansion + rerank       " << pct(search.reranked.hit3) << "  " << pct(search.reranked.hit6) << "  "
    << pct(search.easy3_reranked) << "  " << pct(search.hard3_reranked) << "\n";
  o << "  easy/hard split (k=3)      " << search.easy3 << " / " << search.hard3 << "\n\n";
  o << "QA (extractive)              EM      n\n";
  o << "  answerable                 " << pct(qa.mrc.answerable_em()) << "  " << qa.mrc.answerable << "\n";
  o << "  unanswerable               " << pct(qa.mrc.unanswerable_em()) << "  " << qa.mrc.unanswerable << "\n";
  return o.str();
}

}  // namespace taco::eval
