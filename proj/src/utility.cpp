#include "taco/utility.hpp"

#include <algorithm>

#include "taco/text.hpp"

namespace taco::utility {

namespace {

std::string key(const std::string& s) { return text::collapse_whitespace(text::to_lower(s)); }

TimerRecord* latest_live(DialogueContext& ctx) {
  for (auto it = ctx.timers.rbegin(); it != ctx.timers.rend(); ++it)
    if (it->state == TimerState::Running || it->state == TimerState::Paused) return &*it;
  return nullptr;
}

std::string current_name(DialogueContext& ctx) {
  if (ctx.timers.empty()) return "absent";
  return to_string(ctx.timers.back().state);
}

}  // namespace

DialogueContext list_add(DialogueContext ctx, const std::string& item) {
  auto k = key(item);
  if (k.empty()) throw EmptyInput("list item is blank");
  bool present = std::any_of(ctx.shopping_list.begin(), ctx.shopping_list.end(),
                             [&](const std::string& s) { return key(s) == k; });
  if (!present) ctx.shopping_list.push_back(text::collapse_whitespace(item));
  return ctx;
}

DialogueContext list_remove(DialogueContext ctx, const std::string& item) {
  auto k = key(item);
  if (k.empty()) throw EmptyInput("list item is blank");
  auto it = std::find_if(ctx.shopping_list.begin(), ctx.shopping_list.end(),
                         [&](const std::string& s) { return key(s) == k; });
  if (it == ctx.shopping_list.end()) throw ItemNotFound(item);
  ctx.shopping_list.erase(it);
  return ctx;
}

int timer_remaining(const TimerRecord& t, TimestampMs now) {
  if (t.state != TimerState::Running) return t.state == TimerState::Paused ? t.remaining : 0;
  auto elapsed = static_cast<int>(std::max<TimestampMs>(0, now - t.started_at) / 1000);
  return std::max(0, t.remaining - elapsed);
}

DialogueContext timer_set(DialogueContext ctx, int duration_seconds, TimestampMs now, std::optional<std::string> label) {
  if (duration_seconds <= 0) throw InvalidTimerState("unset", "set a non-positive");
  TimerRecord t;
  t.id = ctx.timers.empty() ? 1 : ctx.timers.back().id + 1;
  t.label = std::move(label);
  t.duration = duration_seconds;
  t.started_at = now;
  t.state = TimerState::Running;
  t.remaining = duration_seconds;
  ctx.timers.push_back(std::move(t));
  return ctx;
}

DialogueContext timer_pause(DialogueContext ctx, TimestampMs now) {
  fire_due_timers(ctx, now);
  auto* t = latest_live(ctx);
  if (!t || t->state != TimerState::Running) throw InvalidTimerState(t ? to_string(t->state) : current_name(ctx), "pause");
  t->remaining = timer_remaining(*t, now);
  t->started_at = now;
  t->state = TimerState::Paused;
  return ctx;
}

DialogueContext timer_resume(DialogueContext ctx, TimestampMs now) {
  fire_due_timers(ctx, now);
  auto* t = latest_live(ctx);
  if (!t || t->state != TimerState::Paused) throw InvalidTimerState(t ? to_string(t->state) : current_name(ctx), "resume");
  t->started_at = now;
  t->state = TimerState::Running;
  return ctx;
}

DialogueContext timer_cancel(DialogueContext ctx, TimestampMs now) {
  fire_due_timers(ctx, now);
  auto* t = latest_live(ctx);
  if (!t) throw InvalidTimerState(current_name(ctx), "cancel");
  t->remaining = timer_remaining(*t, now);
  t->started_at = now;
  t->state = TimerState::Cancelled;
  return ctx;
}

std::vector<TimerRecord> fire_due_timers(DialogueContext& ctx, TimestampMs now) {
  std::vector<TimerRecord> fired;
  for (auto& t : ctx.timers) {
    if (t.state == TimerState::Running && timer_remaining(t, now) == 0) {
      t.state = TimerState::Fired;
      t.remaining = 0;
      fired.push_back(t);
    }
  }
  return fired;
}

const TimerRecord* active_timer(const DialogueContext& ctx) {
  for (auto it = ctx.timers.rbegin(); it != ctx.timers.rend(); ++it)
    if (it->state == TimerState::Running || it->state == TimerState::Paused) return &*it;
  return nullptr;
}

}  // namespace taco::utility
