#pragma once

// Shared loaded resources for tests; models come from data/models.

#include <memory>

#include "taco/engine.hpp"

namespace taco::fixtures {

inline engine::DataPaths bundled_paths() { return {engine::default_data_dir()}; }

inline std::shared_ptr<const engine::Resources> bundled_resources() {
  static auto res = engine::load_resources(bundled_paths());
  return res;
}

inline TaskDocument make_doc(std::string id, std::string title, Domain domain,
                             std::vector<std::string> steps, std::vector<std::string> ingredients = {}) {
  TaskDocument d;
  d.id = std::move(id);
  d.title = std::move(title);
  d.domain = domain;
  for (auto& s : steps) d.steps.push_back(StepSegment{std::move(s), std::nullopt, std::nullopt});
  for (auto& i : ingredients) d.ingredients.push_back(IngredientLine{std::move(i), std::nullopt});
  return d;
}

}  // namespace taco::fixtures
