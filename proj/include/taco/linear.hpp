#pragma once

// Sparse n-gram features and one-vs-rest logistic models. Shared by the intent
// recognizer, the domain classifier and the question-type classifier.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taco/model.hpp"

namespace taco {

using SparseVec = std::vector<std::pair<int, double>>;

struct NgramConfig {
  int word_min = 1;
  int word_max = 3;
  int char_min = 1;
  int char_max = 3;
  int min_count = 1;
};

/// Word and character n-grams over normalized text, L2-normalized.
class NgramFeaturizer {
 public:
  NgramFeaturizer() = default;
  explicit NgramFeaturizer(NgramConfig cfg) : cfg_(cfg) {}

  void fit(const std::vector<std::string>& texts);
  SparseVec transform(std::string_view text) const;
  /// Raw n-gram strings, before vocabulary lookup.
  std::vector<std::string> grams(std::string_view text) const;

  std::size_t size() const { return vocab_.size(); }
  const NgramConfig& config() const { return cfg_; }

  Json to_json() const;
  static NgramFeaturizer from_json(const Json& j);

 private:
  NgramConfig cfg_;
  std::map<std::string, int> vocab_;
};

struct TrainConfig {
  double learning_rate = 1.0;
  int max_epochs = 400;
  double tolerance = 1e-6;  // relative loss change
  double l2 = 1e-4;
};

/// Mean logistic loss over the examples plus 0.5*l2*|w|^2 (bias unregularized).
/// `weights` holds the feature weights followed by the bias; the gradient has
/// the same layout.
struct LossAndGrad {
  double loss = 0.0;
  std::vector<double> grad;
};
LossAndGrad logistic_loss(const std::vector<double>& weights, const std::vector<SparseVec>& xs,
                          const std::vector<int>& ys, double l2);

struct BinaryFit {
  std::vector<double> weights;  // features..., bias
  double final_loss = 0.0;
  int epochs = 0;
};

/// Accelerated (Nesterov) gradient descent until the relative loss change drops
/// below cfg.tolerance or cfg.max_epochs is reached.
BinaryFit fit_logistic(const std::vector<SparseVec>& xs, const std::vector<int>& ys,
                       std::size_t n_features, const TrainConfig& cfg);

/// One-vs-rest linear classifier with per-label thresholds.
class LinearOvR {
 public:
  LinearOvR() = default;
  LinearOvR(std::vector<std::string> labels, std::size_t n_features);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t n_features() const { return n_features_; }
  int label_index(std::string_view label) const;

  double logit(std::size_t label, const SparseVec& x) const;
  double probability(std::size_t label, const SparseVec& x) const;
  std::vector<double> logits(const SparseVec& x) const;

  double threshold(std::size_t label) const { return thresholds_[label]; }
  void set_threshold(std::size_t label, double t);

  std::vector<double>& weights(std::size_t label) { return weights_[label]; }
  const std::vector<double>& weights(std::size_t label) const { return weights_[label]; }

  Json to_json() const;
  static LinearOvR from_json(const Json& j);

 private:
  std::vector<std::string> labels_;
  std::size_t n_features_ = 0;
  std::vector<std::vector<double>> weights_;  // per label: features..., bias
  std::vector<double> thresholds_;
};

/// Trains one binary model per label. `targets[i]` holds the label indices of
/// example i. Throws InsufficientData if a label has fewer than `min_positives`.
LinearOvR train_ovr(const std::vector<SparseVec>& xs, const std::vector<std::vector<int>>& targets,
                    std::vector<std::string> labels, std::size_t n_features,
                    const TrainConfig& cfg, int min_positives = 20);

double sigmoid(double z);

}  // namespace taco
