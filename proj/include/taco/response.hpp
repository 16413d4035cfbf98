#pragma once

// Template registry and response composition.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taco/errors.hpp"
#include "taco/model.hpp"

namespace taco::response {

class MissingSlot : public Error {
 public:
  explicit MissingSlot(std::string name) : Error("missing slot '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UnknownSlot : public Error {
 public:
  explicit UnknownSlot(std::string name) : Error("undeclared slot '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class EmptyVariantList : public Error {
 public:
  EmptyVariantList() : Error("no template variants to choose from") {}
};

class EmptyFavorites : public Error {
 public:
  EmptyFavorites() : Error("favorites list is empty") {}
};

class UnknownResponder : public Error {
 public:
  explicit UnknownResponder(const std::string& id) : Error("unknown responder '" + id + "'") {}
};

using SlotValues = std::map<std::string, std::string>;

struct Responder {
  std::vector<std::string> slots;
  std::vector<std::string> variants;
};

struct Favorite {
  std::string task_id;
  std::string blurb;
};

class TemplateRegistry {
 public:
  std::map<std::string, Responder> entries;
  std::vector<Favorite> favorites;

  bool has(const std::string& id) const { return entries.count(id) > 0; }
  /// Throws UnknownResponder.
  const Responder& get(const std::string& id) const;

  /// Problems found: undeclared or unused placeholders, too few variants on
  /// high-frequency responders, favorites intro missing required words,
  /// missing responder ids from `required`.
  std::vector<std::string> lint(const std::vector<std::string>& required = {}) const;
};

TemplateRegistry parse_templates(const Json& j);
TemplateRegistry load_templates(const std::filesystem::path& path);

/// Placeholder names in order of appearance (escaped braces skipped).
std::vector<std::string> placeholders(std::string_view text);

/// Replaces `{name}` placeholders; `{{` and `}}` produce literal braces.
/// When `declared` is given, keys outside it raise UnknownSlot.
std::string fill_slots(std::string_view text, const SlotValues& values,
                       const std::vector<std::string>* declared = nullptr);

/// Uniform draw driven by a splitmix state that is advanced in place.
std::size_t draw_index(std::size_t n, std::uint64_t& rng_state);
const std::string& select_variant(const std::vector<std::string>& variants, std::uint64_t& rng_state);

/// select_variant + strict fill_slots for one responder.
std::string render(const TemplateRegistry& reg, const std::string& id, const SlotValues& values,
                   std::uint64_t& rng_state);

/// "5 minutes", "1 hour and 30 minutes", "45 seconds".
std::string format_duration(int seconds);

using DocLookup = std::function<const TaskDocument*(const std::string&)>;

inline constexpr int kPageSize = 3;

int page_count(std::size_t results);

Response render_step(const TemplateRegistry& reg, const TaskDocument& doc, int index, StepPart part,
                     std::uint64_t& rng_state);

Response render_catalog(const TemplateRegistry& reg, const RankedResult& result, int page, const DocLookup& docs,
                        std::uint64_t& rng_state);

/// Introduces the first three of `task_ids` that resolve, with their curated blurbs.
Response render_favorites(const TemplateRegistry& reg, const std::vector<std::string>& task_ids, const DocLookup& docs,
                          std::uint64_t& rng_state);

/// Favorite ids in an order drawn from the generator.
std::vector<std::string> shuffled_favorites(const TemplateRegistry& reg, std::uint64_t& rng_state);

Response render_overview(const TemplateRegistry& reg, const TaskDocument& doc, std::uint64_t& rng_state);
Response render_comparison(const TemplateRegistry& reg, const RankedResult& result, int page, const DocLookup& docs,
                           std::uint64_t& rng_state);

enum class UtilityKind { ListAdd, ListRemove, ListMissingItem, ListNotFound, TimerSet, TimerPause, TimerResume,
                         TimerCancel, TimerMissingDuration, TimerNone, TimerFired };

struct UtilityAction {
  UtilityKind kind = UtilityKind::ListAdd;
  std::string item;
  int seconds = 0;
};

Response render_utility_ack(const TemplateRegistry& reg, const UtilityAction& action, std::uint64_t& rng_state);

/// Morning [5,12), afternoon [12,18), evening otherwise; plus the welcome prompt.
Response greet(const TemplateRegistry& reg, int hour, std::uint64_t& rng_state);

/// Joins non-empty speech fragments with single spaces.
std::string join_speech(const std::vector<std::string>& parts);

}  // namespace taco::response
