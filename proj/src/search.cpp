#include "taco/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "taco/corpus.hpp"
#include "taco/rng.hpp"
#include "taco/text.hpp"

namespace taco::search {

namespace {

const std::map<std::string, std::string>& lemma_exceptions() {
  static const std::map<std::string, std::string> kTable = {
      // irregular plurals
      {"children", "child"}, {"men", "man"}, {"women", "woman"}, {"feet", "foot"}, {"teeth", "tooth"},
      {"geese", "goose"}, {"mice", "mouse"}, {"people", "person"}, {"knives", "knife"},
      {"leaves", "leaf"}, {"loaves", "loaf"}, {"halves", "half"}, {"shelves", "shelf"},
      {"wolves", "wolf"}, {"calves", "calf"}, {"lives", "life"}, {"wives", "wife"},
      {"scarves", "scarf"}, {"thieves", "thief"}, {"potatoes", "potato"}, {"tomatoes", "tomato"},
      {"mangoes", "mango"}, {"heroes", "hero"}, {"echoes", "echo"}, {"cacti", "cactus"},
      {"fungi", "fungus"}, {"radii", "radius"}, {"dice", "die"}, {"oxen", "ox"},
      {"sheep", "sheep"}, {"fish", "fish"}, {"deer", "deer"}, {"series", "series"},
      {"species", "species"}, {"shrimp", "shrimp"}, {"salmon", "salmon"}, {"moose", "moose"},
      {"cookies", "cookie"}, {"brownies", "brownie"}, {"smoothies", "smoothie"},
      {"pies", "pie"}, {"ties", "tie"}, {"lies", "lie"}, {"dies", "die"}, {"movies", "movie"},
      {"zombies", "zombie"}, {"calories", "calorie"}, {"veggies", "veggie"}, {"hoagies", "hoagie"},
      {"pierogies", "pierogi"}, {"sauces", "sauce"}, {"pieces", "piece"}, {"spices", "spice"},
      {"slices", "slice"}, {"juices", "juice"}, {"prices", "price"}, {"surfaces", "surface"},
      {"fences", "fence"}, {"faucets", "faucet"}, {"houses", "house"}, {"horses", "horse"},
      {"cheeses", "cheese"}, {"noses", "nose"}, {"hoses", "hose"}, {"vases", "vase"},
      {"cases", "case"}, {"bases", "base"}, {"glasses", "glass"}, {"dresses", "dress"},
      {"boxes", "box"}, {"bushes", "bush"}, {"dishes", "dish"}, {"brushes", "brush"},
      {"sandwiches", "sandwich"}, {"peaches", "peach"}, {"batches", "batch"},
      {"radishes", "radish"}, {"squashes", "squash"}, {"lunches", "lunch"}, {"torches", "torch"},
      {"tortillas", "tortilla"}, {"gas", "gas"}, {"bus", "bus"}, {"hummus", "hummus"},
      {"asparagus", "asparagus"}, {"couscous", "couscous"}, {"octopus", "octopus"},
      {"citrus", "citrus"}, {"grass", "grass"}, {"moss", "moss"}, {"floss", "floss"},
      {"gloss", "gloss"}, {"lens", "lens"}, {"pants", "pants"}, {"scissors", "scissors"},
      {"pliers", "pliers"}, {"news", "news"}, {"molasses", "molasses"}, {"chips", "chip"},
      // irregular verbs
      {"made", "make"}, {"making", "make"}, {"baking", "bake"}, {"baked", "bake"},
      {"took", "take"}, {"taken", "take"}, {"taking", "take"}, {"ate", "eat"}, {"eaten", "eat"},
      {"went", "go"}, {"gone", "go"}, {"going", "go"}, {"done", "do"}, {"doing", "do"},
      {"did", "do"}, {"built", "build"}, {"bought", "buy"}, {"brought", "bring"},
      {"caught", "catch"}, {"fought", "fight"}, {"taught", "teach"}, {"thought", "think"},
      {"kept", "keep"}, {"slept", "sleep"}, {"swept", "sweep"}, {"left", "left"}, {"felt", "feel"},
      {"dealt", "deal"}, {"knelt", "kneel"}, {"spent", "spend"}, {"sent", "send"},
      {"lent", "lend"}, {"bent", "bend"}, {"held", "hold"}, {"told", "tell"}, {"sold", "sell"},
      {"found", "find"}, {"ground", "ground"}, {"wound", "wind"}, {"bound", "bind"},
      {"froze", "freeze"}, {"frozen", "freeze"}, {"freezing", "freeze"}, {"chose", "choose"},
      {"chosen", "choose"}, {"wrote", "write"}, {"written", "write"}, {"writing", "write"},
      {"drove", "drive"}, {"driven", "drive"}, {"rode", "ride"}, {"ridden", "ride"},
      {"rose", "rose"}, {"broke", "break"}, {"broken", "break"}, {"spoke", "speak"},
      {"woke", "wake"}, {"wore", "wear"}, {"worn", "wear"}, {"tore", "tear"}, {"torn", "tear"},
      {"began", "begin"}, {"begun", "begin"}, {"ran", "run"}, {"sang", "sing"},
      {"sank", "sink"}, {"drank", "drink"}, {"drunk", "drink"}, {"shrank", "shrink"},
      {"hung", "hang"}, {"dug", "dig"}, {"stuck", "stick"}, {"struck", "strike"},
      {"threw", "throw"}, {"thrown", "throw"}, {"grew", "grow"}, {"grown", "grow"},
      {"knew", "know"}, {"known", "know"}, {"drew", "draw"}, {"drawn", "draw"},
      {"flew", "fly"}, {"blew", "blow"}, {"blown", "blow"}, {"shook", "shake"},
      {"shaken", "shake"}, {"stood", "stand"}, {"understood", "understand"}, {"fed", "feed"},
      {"led", "lead"}, {"bled", "bleed"}, {"fled", "flee"}, {"sped", "speed"}, {"laid", "lay"},
      {"paid", "pay"}, {"said", "say"}, {"fried", "fry"}, {"dried", "dry"}, {"tried", "try"},
      {"was", "be"}, {"were", "be"}, {"been", "be"}, {"being", "be"}, {"has", "have"},
      {"had", "have"}, {"having", "have"}, {"does", "do"}, {"is", "be"}, {"are", "be"},
      {"this", "this"}, {"its", "its"}, {"his", "his"}, {"yes", "yes"}, {"us", "us"},
      {"always", "always"}, {"perhaps", "perhaps"}, {"across", "across"}, {"less", "less"},
      {"unless", "unless"}, {"stainless", "stainless"}, {"wireless", "wireless"},
      {"nothing", "nothing"}, {"something", "something"}, {"anything", "anything"},
      {"everything", "everything"}, {"thing", "thing"}, {"things", "thing"}, {"king", "king"},
      {"ring", "ring"}, {"spring", "spring"}, {"string", "string"}, {"wing", "wing"},
      {"wings", "wing"}, {"swing", "swing"}, {"sing", "sing"}, {"bring", "bring"},
      {"ceiling", "ceiling"}, {"siding", "siding"}, {"flooring", "flooring"},
      {"stuffing", "stuffing"}, {"icing", "icing"}, {"frosting", "frosting"},
      {"dressing", "dressing"}, {"pudding", "pudding"}, {"dumpling", "dumpling"},
      {"dumplings", "dumpling"}, {"filling", "filling"}, {"topping", "topping"},
      {"toppings", "topping"}, {"seasoning", "seasoning"}, {"caulking", "caulk"},
      {"plumbing", "plumbing"}, {"wiring", "wiring"}, {"lighting", "lighting"},
      {"painting", "paint"}, {"morning", "morning"}, {"evening", "evening"},
      {"bed", "bed"}, {"shed", "shed"}, {"red", "red"}, {"seed", "seed"}, {"need", "need"},
      {"feed", "feed"}, {"weed", "weed"}, {"speed", "speed"}, {"bleed", "bleed"},
      {"breed", "breed"}, {"hundred", "hundred"}, {"sacred", "sacred"}, {"naked", "naked"},
  };
  return kTable;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

std::string strip_verb_suffix(const std::string& stem, const std::set<std::string>* known) {
  if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] && !is_vowel(stem.back()) &&
      stem.back() != 'l' && stem.back() != 's' && stem.back() != 'z' && stem.back() != 'f')
    return stem.substr(0, stem.size() - 1);  // "chopp" -> "chop"
  if (known && !known->count(stem) && known->count(stem + "e")) return stem + "e";
  return stem;
}

bool all_digits(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::string lemmatize(const std::string& w, const std::set<std::string>* known) {
  if (auto it = lemma_exceptions().find(w); it != lemma_exceptions().end()) return it->second;
  if (w.size() <= 3 || all_digits(w)) return w;
  auto ends = [&](std::string_view suf) { return w.size() > suf.size() && w.ends_with(suf); };
  if (ends("ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
  if (ends("sses")) return w.substr(0, w.size() - 2);
  if (ends("ss") || ends("us") || ends("is")) return w;
  if (ends("ches") || ends("shes") || ends("xes") || ends("zes") || ends("oes"))
    return w.substr(0, w.size() - 2);
  if (ends("s") && !ends("'s")) return w.substr(0, w.size() - 1);
  if (ends("ing") && w.size() >= 6) return strip_verb_suffix(w.substr(0, w.size() - 3), known);
  if (ends("ied") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
  if (ends("ed") && w.size() >= 5) {
    std::string without_d = w.substr(0, w.size() - 1);
    if (known && known->count(without_d)) return without_d;  // "baked" -> "bake"
    return strip_verb_suffix(w.substr(0, w.size() - 2), known);
  }
  return w;
}

std::optional<std::pair<std::string, std::string>> split_compound(const std::string& token,
                                                                   const std::set<std::string>& vocab) {
  constexpr std::size_t kMinPart = 3;
  if (token.size() < 2 * kMinPart) return std::nullopt;
  for (std::size_t len = token.size() - kMinPart; len >= kMinPart; --len) {
    std::string head = token.substr(0, len);
    std::string tail = token.substr(len);
    if (vocab.count(head) && vocab.count(tail)) return std::make_pair(head, tail);
  }
  return std::nullopt;
}

std::vector<std::string> expand_query(std::string_view task_name, const std::set<std::string>& vocab) {
  std::vector<std::string> out = text::tokenize(task_name);
  const std::size_t n = out.size();
  auto append = [&](const std::string& t) {
    if (!t.empty() && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const std::string tok = out[i];
    append(lemmatize(tok, &vocab));
    if (!vocab.count(tok) && !vocab.count(lemmatize(tok, &vocab))) {
      if (auto parts = split_compound(tok, vocab)) {
        append(parts->first);
        append(parts->second);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

const TaskDocument& InvertedIndex::doc(const std::string& id) const {
  auto it = doc_pos.find(id);
  if (it == doc_pos.end()) throw NotFound("unknown document '" + id + "'");
  return docs[it->second];
}

std::set<std::string> InvertedIndex::lexicon() const {
  std::set<std::string> out = vocabulary;
  for (const auto& t : vocabulary) out.insert(lemmatize(t));
  return out;
}

InvertedIndex build_index(const std::vector<TaskDocument>& corpus) {
  if (corpus.empty()) throw EmptyCorpus();
  InvertedIndex idx;
  idx.docs = corpus;
  long total = 0;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    const auto& doc = corpus[d];
    if (!idx.doc_pos.emplace(doc.id, d).second) throw ValidationError("duplicate document id '" + doc.id + "'");
    auto tokens = text::tokenize(doc.title);
    idx.title_tokens.push_back(tokens);
    for (const auto& ing : doc.ingredients) {
      auto more = text::tokenize(ing.name);
      tokens.insert(tokens.end(), more.begin(), more.end());
    }
    std::map<std::string, int> tf;
    for (const auto& t : tokens) ++tf[t];
    for (const auto& [term, count] : tf) {
      idx.postings[term].push_back({d, count});
      idx.vocabulary.insert(term);
    }
    idx.doc_lengths.push_back(static_cast<int>(tokens.size()));
    total += static_cast<long>(tokens.size());
  }
  idx.avg_doc_length = static_cast<double>(total) / static_cast<double>(corpus.size());
  return idx;
}

double idf(const InvertedIndex& index, const std::string& term) {
  auto it = index.postings.find(term);
  if (it == index.postings.end()) return 0.0;
  double n = static_cast<double>(index.size());
  double df = static_cast<double>(it->second.size());
  return std::max(0.0, std::log((n - df + 0.5) / (df + 0.5)));
}

namespace {

std::vector<std::string> unique_terms(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens)
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  return out;
}

double bm25_term(const InvertedIndex& index, std::size_t doc, int tf, double term_idf, const Bm25Params& p) {
  double len = static_cast<double>(index.doc_lengths[doc]);
  double norm = p.k1 * (1.0 - p.b + p.b * len / index.avg_doc_length);
  return term_idf * (tf * (p.k1 + 1.0)) / (tf + norm);
}

}  // namespace

double bm25(const InvertedIndex& index, std::size_t doc, const std::vector<std::string>& terms,
            const Bm25Params& p) {
  double score = 0.0;
  for (const auto& term : unique_terms(terms)) {
    auto it = index.postings.find(term);
    if (it == index.postings.end()) continue;
    auto hit = std::find_if(it->second.begin(), it->second.end(), [&](const Posting& x) { return x.doc == doc; });
    if (hit != it->second.end()) score += bm25_term(index, doc, hit->tf, idf(index, term), p);
  }
  return score;
}

bool satisfies(const TaskDocument& doc, const Constraints& c) {
  for (const auto& d : c.diet)
    if (!std::binary_search(doc.diet_tags.begin(), doc.diet_tags.end(), d)) return false;
  if (!c.cuisine.empty()) {
    bool any = std::any_of(c.cuisine.begin(), c.cuisine.end(), [&](const std::string& t) {
      return std::binary_search(doc.cuisine_tags.begin(), doc.cuisine_tags.end(), t);
    });
    if (!any) return false;
  }
  return true;
}

RankedResult retrieve(const InvertedIndex& index, const std::vector<std::string>& expanded_tokens,
                      const Constraints& constraints, int k, const Bm25Params& p) {
  RankedResult result;
  result.query = text::join(expanded_tokens, " ");
  result.expanded_terms = expanded_tokens;
  result.constraints_applied = constraints;
  if (k < 1) return result;
  std::vector<double> scores(index.size(), 0.0);
  std::vector<char> hit(index.size(), 0);
  for (const auto& term : unique_terms(expanded_tokens)) {
    auto it = index.postings.find(term);
    if (it == index.postings.end()) continue;
    double w = idf(index, term);
    for (const auto& post : it->second) {
      scores[post.doc] += bm25_term(index, post.doc, post.tf, w, p);
      hit[post.doc] = 1;
    }
  }
  std::vector<std::size_t> order;
  for (std::size_t d = 0; d < index.size(); ++d)
    if (hit[d] && satisfies(index.docs[d], constraints)) order.push_back(d);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return index.docs[a].id < index.docs[b].id;
  });
  if (order.size() > static_cast<std::size_t>(k)) order.resize(static_cast<std::size_t>(k));
  for (auto d : order) result.candidates.push_back({index.docs[d].id, scores[d], std::nullopt});
  return result;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& feature_names() {
  static const std::vector<std::string> kNames = {"bm25",        "query_in_title", "expanded_in_title",
                                                  "title_length", "exact_title",   "domain_match"};
  return kNames;
}

std::vector<double> extract_features(const QueryInfo& q, const InvertedIndex& index, std::size_t doc) {
  const auto& title = index.title_tokens[doc];
  std::set<std::string> title_set(title.begin(), title.end());
  auto query_tokens = text::tokenize(q.text);
  auto frac_in_title = [&](const std::vector<std::string>& toks) {
    if (toks.empty()) return 0.0;
    double in = 0.0;
    for (const auto& t : toks) in += title_set.count(t) ? 1.0 : 0.0;
    return in / static_cast<double>(toks.size());
  };
  double domain = 0.5;
  if (q.domain) domain = *q.domain == index.docs[doc].domain ? 1.0 : 0.0;
  return {bm25(index, doc, q.expanded),
          frac_in_title(query_tokens),
          frac_in_title(q.expanded),
          static_cast<double>(title.size()),
          query_tokens == title ? 1.0 : 0.0,
          domain};
}

ListLoss listnet_loss(const std::vector<double>& scores, std::size_t positive) {
  if (scores.empty() || positive >= scores.size()) throw SpecError("listnet_loss: positive index out of range");
  for (double s : scores)
    if (!std::isfinite(s)) throw NonFiniteScore();
  double mx = *std::max_element(scores.begin(), scores.end());
  double z = 0.0;
  for (double s : scores) z += std::exp(s - mx);
  double log_z = std::log(z);
  ListLoss out;
  out.loss = -(scores[positive] - mx - log_z);
  out.grad.resize(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) out.grad[i] = std::exp(scores[i] - mx - log_z);
  out.grad[positive] -= 1.0;
  return out;
}

double RankerModel::score(const std::vector<double>& f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) s += weights[i] * (f[i] - center[i]) / scale[i];
  return s;
}

Json RankerModel::to_json() const {
  return Json{{"feature_names", feature_names}, {"weights", weights}, {"center", center}, {"scale", scale}};
}

RankerModel RankerModel::from_json(const Json& j) {
  RankerModel m;
  m.feature_names = j.at("feature_names").get<std::vector<std::string>>();
  m.weights = j.at("weights").get<std::vector<double>>();
  m.center = j.at("center").get<std::vector<double>>();
  m.scale = j.at("scale").get<std::vector<double>>();
  if (m.weights.size() != m.feature_names.size() || m.center.size() != m.weights.size() ||
      m.scale.size() != m.weights.size())
    throw ParseError("ranker model: feature count mismatch");
  return m;
}

const WeakLabel* WeakLabelSet::find(const std::string& query) const {
  for (const auto& e : entries)
    if (e.query == query) return &e;
  return nullptr;
}

WeakLabelSet parse_weak_labels(const Json& j, const InvertedIndex* index) {
  if (!j.is_array()) throw ParseError("weak labels must be a JSON array");
  WeakLabelSet set;
  for (const auto& e : j) {
    WeakLabel w;
    w.query = e.at("query").get<std::string>();
    w.positives = e.value("positives", std::vector<std::string>{});
    w.negatives = e.value("negatives", std::vector<std::string>{});
    if (e.contains("domain")) w.domain = domain_from_string(e.at("domain").get<std::string>());
    if (w.positives.size() > 3) throw ValidationError("weak label '" + w.query + "': more than 3 positives");
    for (const auto& p : w.positives) {
      if (std::find(w.negatives.begin(), w.negatives.end(), p) != w.negatives.end())
        throw ValidationError("weak label '" + w.query + "': '" + p + "' is both positive and negative");
    }
    if (index) {
      for (const auto* ids : {&w.positives, &w.negatives})
        for (const auto& id : *ids)
          if (!index->doc_pos.count(id))
            throw ValidationError("weak label '" + w.query + "': unknown document '" + id + "'");
    }
    set.entries.push_back(std::move(w));
  }
  return set;
}

WeakLabelSet load_weak_labels(const std::filesystem::path& path, const InvertedIndex* index) {
  return parse_weak_labels(read_json(path), index);
}

ListLoss ranker_objective(const std::vector<double>& weights, const std::vector<FeatureList>& lists, double l2) {
  ListLoss out;
  out.grad.assign(weights.size(), 0.0);
  if (lists.empty()) return out;
  std::vector<double> scores;
  for (const auto& list : lists) {
    scores.assign(list.size(), 0.0);
    for (std::size_t r = 0; r < list.size(); ++r)
      for (std::size_t f = 0; f < weights.size(); ++f) scores[r] += weights[f] * list[r][f];
    auto ll = listnet_loss(scores, 0);
    out.loss += ll.loss;
    for (std::size_t r = 0; r < list.size(); ++r)
      for (std::size_t f = 0; f < weights.size(); ++f) out.grad[f] += ll.grad[r] * list[r][f];
  }
  const double n = static_cast<double>(lists.size());
  out.loss /= n;
  for (std::size_t f = 0; f < weights.size(); ++f) {
    out.grad[f] = out.grad[f] / n + l2 * weights[f];
    out.loss += 0.5 * l2 * weights[f] * weights[f];
  }
  return out;
}

namespace {

QueryInfo query_info(const WeakLabel& e, const std::set<std::string>& lexicon) {
  return {e.query, expand_query(e.query, lexicon), e.domain};
}

}  // namespace

std::vector<FeatureList> build_training_lists(const WeakLabelSet& labels, const InvertedIndex& index,
                                              const RankerTrainConfig& config, std::vector<std::string>* skipped) {
  if (config.negatives_per_positive < 1) throw SpecError("negatives_per_positive must be >= 1");
  const auto n = static_cast<std::size_t>(config.negatives_per_positive);
  const auto lexicon = index.lexicon();
  Rng rng(config.seed);
  std::vector<FeatureList> lists;
  for (const auto& e : labels.entries) {
    std::vector<std::size_t> pos;
    for (const auto& id : e.positives)
      if (auto it = index.doc_pos.find(id); it != index.doc_pos.end()) pos.push_back(it->second);
    if (pos.empty()) {
      if (skipped) skipped->push_back(e.query);
      continue;
    }
    auto is_pos = [&](std::size_t d) { return std::find(pos.begin(), pos.end(), d) != pos.end(); };
    std::vector<std::size_t> neg;
    for (const auto& id : e.negatives)
      if (auto it = index.doc_pos.find(id); it != index.doc_pos.end() && !is_pos(it->second)) neg.push_back(it->second);
    rng.shuffle(neg.begin(), neg.end());
    auto q = query_info(e, lexicon);
    if (neg.size() < n) {
      auto pool = retrieve(index, q.expanded, {}, config.bm25_pool);
      for (const auto& c : pool.candidates) {
        if (neg.size() >= n) break;
        auto d = index.doc_pos.at(c.doc_id);
        if (!is_pos(d) && std::find(neg.begin(), neg.end(), d) == neg.end()) neg.push_back(d);
      }
    }
    if (neg.size() < n) {
      std::vector<std::size_t> rest;
      for (std::size_t d = 0; d < index.size(); ++d)
        if (!is_pos(d) && std::find(neg.begin(), neg.end(), d) == neg.end()) rest.push_back(d);
      rng.shuffle(rest.begin(), rest.end());
      for (auto d : rest) {
        if (neg.size() >= n) break;
        neg.push_back(d);
      }
    }
    if (neg.empty()) {
      if (skipped) skipped->push_back(e.query);
      continue;
    }
    if (neg.size() > n) neg.resize(n);
    for (auto p : pos) {
      FeatureList list;
      list.push_back(extract_features(q, index, p));
      for (auto d : neg) list.push_back(extract_features(q, index, d));
      lists.push_back(std::move(list));
    }
  }
  return lists;
}

RankerModel train_reranker(const WeakLabelSet& labels, const InvertedIndex& index, const RankerTrainConfig& config) {
  auto lists = build_training_lists(labels, index, config);
  if (lists.empty()) throw NoUsableEntries();
  const std::size_t nf = feature_names().size();

  RankerModel model;
  model.feature_names = feature_names();
  model.center.assign(nf, 0.0);
  model.scale.assign(nf, 0.0);
  double rows = 0.0;
  for (const auto& list : lists)
    for (const auto& r : list) {
      for (std::size_t f = 0; f < nf; ++f) model.center[f] += r[f];
      rows += 1.0;
    }
  for (auto& c : model.center) c /= rows;
  for (const auto& list : lists)
    for (const auto& r : list)
      for (std::size_t f = 0; f < nf; ++f) model.scale[f] += (r[f] - model.center[f]) * (r[f] - model.center[f]);
  for (auto& s : model.scale) s = std::sqrt(s / rows) > 1e-12 ? std::sqrt(s / rows) : 1.0;
  for (auto& list : lists)
    for (auto& r : list)
      for (std::size_t f = 0; f < nf; ++f) r[f] = (r[f] - model.center[f]) / model.scale[f];

  std::vector<double> w(nf, 0.0);
  double prev = ranker_objective(w, lists, config.l2).loss;
  for (int epoch = 0; epoch < config.max_epochs; ++epoch) {
    auto lg = ranker_objective(w, lists, config.l2);
    for (std::size_t f = 0; f < nf; ++f) w[f] -= config.learning_rate * lg.grad[f];
    double loss = ranker_objective(w, lists, config.l2).loss;
    double rel = std::abs(prev - loss) / std::max(1e-12, std::abs(prev));
    prev = loss;
    if (rel < config.tolerance) break;
  }
  model.weights = std::move(w);
  return model;
}

RankedResult rerank(const RankerModel& model, const InvertedIndex& index, const QueryInfo& q, RankedResult result,
                    int pool_size) {
  const std::size_t pool = std::min(result.candidates.size(), static_cast<std::size_t>(std::max(0, pool_size)));
  if (pool == 0) return result;
  for (std::size_t i = 0; i < pool; ++i) {
    auto& c = result.candidates[i];
    double s = model.score(extract_features(q, index, index.doc_pos.at(c.doc_id)));
    if (!std::isfinite(s)) throw NonFiniteScore();
    c.rerank = s;
  }
  std::stable_sort(result.candidates.begin(), result.candidates.begin() + static_cast<std::ptrdiff_t>(pool),
                   [](const Candidate& a, const Candidate& b) { return *a.rerank > *b.rerank; });
  return result;
}

// ---------------------------------------------------------------------------

namespace {

bool has_positive(const RankedResult& r, const WeakLabel& g, int k) {
  const auto top = std::min(r.candidates.size(), static_cast<std::size_t>(std::max(0, k)));
  for (std::size_t i = 0; i < top; ++i)
    if (std::find(g.positives.begin(), g.positives.end(), r.candidates[i].doc_id) != g.positives.end()) return true;
  return false;
}

const WeakLabel& gold_for(const RankedResult& r, const WeakLabelSet& gold) {
  const auto* g = gold.find(r.query);
  if (!g) throw MissingGold(r.query);
  return *g;
}

}  // namespace

double hit_at_k(const std::vector<RankedResult>& results, const WeakLabelSet& gold, int k) {
  if (results.empty()) return 0.0;
  double hits = 0.0;
  for (const auto& r : results) hits += has_positive(r, gold_for(r, gold), k) ? 1.0 : 0.0;
  return hits / static_cast<double>(results.size());
}

EasyHard split_easy_hard(const std::vector<RankedResult>& results, const WeakLabelSet& gold, int k) {
  EasyHard out;
  for (const auto& r : results) (has_positive(r, gold_for(r, gold), k) ? out.easy : out.hard).push_back(r.query);
  return out;
}

}  // namespace taco::search
