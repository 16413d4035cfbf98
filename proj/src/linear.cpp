#include "taco/linear.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "taco/errors.hpp"
#include "taco/text.hpp"

namespace taco {

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

namespace {

// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double dot(const std::vector<double>& w, const SparseVec& x) {
  double s = w.back();  // bias
  for (auto [i, v] : x) s += w[static_cast<std::size_t>(i)] * v;
  return s;
}

}  // namespace

std::vector<std::string> NgramFeaturizer::grams(std::string_view input) const {
  auto words = text::tokenize(text::normalize_utterance(input));
  std::vector<std::string> out;
  for (int n = cfg_.word_min; n <= cfg_.word_max && n > 0; ++n) {
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= words.size(); ++i) {
      std::string g = "w:";
      for (int k = 0; k < n; ++k) {
        if (k) g += ' ';
        g += words[i + static_cast<std::size_t>(k)];
      }
      out.push_back(std::move(g));
    }
  }
  if (cfg_.char_max > 0) {
    for (const auto& w : words) {
      std::string padded = "^" + w + "$";
      for (int n = std::max(1, cfg_.char_min); n <= cfg_.char_max; ++n) {
        for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= padded.size(); ++i) {
          out.push_back("c:" + padded.substr(i, static_cast<std::size_t>(n)));
        }
      }
    }
  }
  return out;
}

void NgramFeaturizer::fit(const std::vector<std::string>& texts) {
  std::map<std::string, int> counts;
  for (const auto& t : texts)
    for (auto& g : grams(t)) ++counts[g];
  vocab_.clear();
  int next = 0;
  for (const auto& [g, c] : counts)
    if (c >= cfg_.min_count) vocab_.emplace(g, next++);
}

SparseVec NgramFeaturizer::transform(std::string_view input) const {
  std::map<int, double> acc;
  for (const auto& g : grams(input)) {
    auto it = vocab_.find(g);
    if (it != vocab_.end()) acc[it->second] += 1.0;
  }
  double norm = 0.0;
  for (auto& [i, v] : acc) norm += v * v;
  norm = std::sqrt(norm);
  SparseVec out;
  out.reserve(acc.size());
  for (auto& [i, v] : acc) out.emplace_back(i, v / norm);
  return out;
}

Json NgramFeaturizer::to_json() const {
  std::vector<std::string> vocab(vocab_.size());
  for (const auto& [g, i] : vocab_) vocab[static_cast<std::size_t>(i)] = g;
  return Json{{"word_min", cfg_.word_min}, {"word_max", cfg_.word_max},
              {"char_min", cfg_.char_min}, {"char_max", cfg_.char_max},
              {"min_count", cfg_.min_count}, {"vocabulary", vocab}};
}

NgramFeaturizer NgramFeaturizer::from_json(const Json& j) {
  NgramConfig cfg;
  cfg.word_min = j.at("word_min").get<int>();
  cfg.word_max = j.at("word_max").get<int>();
  cfg.char_min = j.at("char_min").get<int>();
  cfg.char_max = j.at("char_max").get<int>();
  cfg.min_count = j.value("min_count", 1);
  NgramFeaturizer f(cfg);
  int i = 0;
  for (const auto& g : j.at("vocabulary")) f.vocab_.emplace(g.get<std::string>(), i++);
  return f;
}

LossAndGrad logistic_loss(const std::vector<double>& weights, const std::vector<SparseVec>& xs,
                          const std::vector<int>& ys, double l2) {
  LossAndGrad out;
  out.grad.assign(weights.size(), 0.0);
  const double n = static_cast<double>(std::max<std::size_t>(1, xs.size()));
  for (std::size_t e = 0; e < xs.size(); ++e) {
    double z = dot(weights, xs[e]);
    double y = ys[e] ? 1.0 : 0.0;
    out.loss += softplus(z) - y * z;
    double r = (sigmoid(z) - y) / n;
    for (auto [i, v] : xs[e]) out.grad[static_cast<std::size_t>(i)] += r * v;
    out.grad.back() += r;
  }
  out.loss /= n;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    out.loss += 0.5 * l2 * weights[i] * weights[i];
    out.grad[i] += l2 * weights[i];
  }
  return out;
}

BinaryFit fit_logistic(const std::vector<SparseVec>& xs, const std::vector<int>& ys,
                       std::size_t n_features, const TrainConfig& cfg) {
  BinaryFit fit;
  std::vector<double> w(n_features + 1, 0.0);
  std::vector<double> prev = w;
  std::vector<double> look(w.size());
  double prev_loss = logistic_loss(w, xs, ys, cfg.l2).loss;
  double t = 1.0;
  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    double momentum = (t - 1.0) / t_next;
    for (std::size_t i = 0; i < w.size(); ++i) look[i] = w[i] + momentum * (w[i] - prev[i]);
    auto lg = logistic_loss(look, xs, ys, cfg.l2);
    prev = w;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = look[i] - cfg.learning_rate * lg.grad[i];
    t = t_next;
    double loss = logistic_loss(w, xs, ys, cfg.l2).loss;
    fit.epochs = epoch;
    if (loss > prev_loss) t = 1.0;  // restart momentum when the objective goes up
    double rel = std::abs(prev_loss - loss) / std::max(1e-12, std::abs(prev_loss));
    prev_loss = loss;
    if (rel < cfg.tolerance) break;
  }
  fit.weights = std::move(w);
  fit.final_loss = prev_loss;
  return fit;
}

LinearOvR::LinearOvR(std::vector<std::string> labels, std::size_t n_features)
    : labels_(std::move(labels)), n_features_(n_features) {
  weights_.assign(labels_.size(), std::vector<double>(n_features_ + 1, 0.0));
  thresholds_.assign(labels_.size(), 0.5);
}

int LinearOvR::label_index(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

double LinearOvR::logit(std::size_t label, const SparseVec& x) const {
  const auto& w = weights_[label];
  double s = w.back();
  for (auto [i, v] : x)
    if (static_cast<std::size_t>(i) < n_features_) s += w[static_cast<std::size_t>(i)] * v;
  return s;
}

double LinearOvR::probability(std::size_t label, const SparseVec& x) const {
  return sigmoid(logit(label, x));
}

std::vector<double> LinearOvR::logits(const SparseVec& x) const {
  std::vector<double> out(labels_.size());
  for (std::size_t l = 0; l < labels_.size(); ++l) out[l] = logit(l, x);
  return out;
}

void LinearOvR::set_threshold(std::size_t label, double t) {
  if (!(t > 0.0 && t < 1.0)) throw SpecError("decision threshold must lie in (0,1)");
  thresholds_[label] = t;
}

Json LinearOvR::to_json() const {
  return Json{{"labels", labels_},
              {"n_features", n_features_},
              {"weights", weights_},
              {"thresholds", thresholds_}};
}

LinearOvR LinearOvR::from_json(const Json& j) {
  LinearOvR m(j.at("labels").get<std::vector<std::string>>(), j.at("n_features").get<std::size_t>());
  m.weights_ = j.at("weights").get<std::vector<std::vector<double>>>();
  m.thresholds_ = j.at("thresholds").get<std::vector<double>>();
  if (m.weights_.size() != m.labels_.size() || m.thresholds_.size() != m.labels_.size())
    throw ParseError("linear model: label/weight count mismatch");
  for (const auto& w : m.weights_)
    if (w.size() != m.n_features_ + 1) throw ParseError("linear model: feature space mismatch");
  return m;
}

LinearOvR train_ovr(const std::vector<SparseVec>& xs, const std::vector<std::vector<int>>& targets,
                    std::vector<std::string> labels, std::size_t n_features,
                    const TrainConfig& cfg, int min_positives) {
  if (labels.empty()) throw InsufficientData("<no labels>");
  std::vector<int> counts(labels.size(), 0);
  for (const auto& t : targets)
    for (int l : t) ++counts[static_cast<std::size_t>(l)];
  for (std::size_t l = 0; l < labels.size(); ++l)
    if (counts[l] < min_positives) throw InsufficientData(labels[l]);

  LinearOvR model(labels, n_features);
  std::vector<int> ys(xs.size());
  for (std::size_t l = 0; l < labels.size(); ++l) {
    for (std::size_t e = 0; e < xs.size(); ++e) {
      const auto& t = targets[e];
      ys[e] = std::find(t.begin(), t.end(), static_cast<int>(l)) != t.end() ? 1 : 0;
    }
    model.weights(l) = fit_logistic(xs, ys, n_features, cfg).weights;
  }
  return model;
}

}  // namespace taco
