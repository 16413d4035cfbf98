#pragma once

// Local shopping list and timers. Time always comes from the caller.

#include <optional>
#include <string>
#include <vector>

#include "taco/errors.hpp"
#include "taco/model.hpp"

namespace taco::utility {

class ItemNotFound : public Error {
 public:
  explicit ItemNotFound(const std::string& item) : Error("'" + item + "' is not on the list") {}
};

class InvalidTimerState : public Error {
 public:
  InvalidTimerState(std::string current, std::string requested)
      : Error("cannot " + requested + " a timer that is " + current),
        current_(std::move(current)),
        requested_(std::move(requested)) {}
  const std::string& current() const { return current_; }
  const std::string& requested() const { return requested_; }

 private:
  std::string current_;
  std::string requested_;
};

/// Appends unless already present (case-insensitive). Throws EmptyInput on a blank item.
DialogueContext list_add(DialogueContext ctx, const std::string& item);
/// Removes the first case-insensitive match. Throws ItemNotFound.
DialogueContext list_remove(DialogueContext ctx, const std::string& item);

/// Seconds left on a timer at `now` (never negative).
int timer_remaining(const TimerRecord& t, TimestampMs now);

DialogueContext timer_set(DialogueContext ctx, int duration_seconds, TimestampMs now,
                          std::optional<std::string> label = std::nullopt);
/// Acts on the most recently created timer that is not finished.
DialogueContext timer_pause(DialogueContext ctx, TimestampMs now);
DialogueContext timer_resume(DialogueContext ctx, TimestampMs now);
DialogueContext timer_cancel(DialogueContext ctx, TimestampMs now);

/// Marks every running timer whose time is up as Fired; returns the fired records.
std::vector<TimerRecord> fire_due_timers(DialogueContext& ctx, TimestampMs now);

/// Most recent Running or Paused timer.
const TimerRecord* active_timer(const DialogueContext& ctx);

}  // namespace taco::utility
