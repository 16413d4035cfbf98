#include "taco/response.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "taco/corpus.hpp"
#include "taco/rng.hpp"
#include "taco/text.hpp"

namespace taco::response {

const Responder& TemplateRegistry::get(const std::string& id) const {
  auto it = entries.find(id);
  if (it == entries.end()) throw UnknownResponder(id);
  return it->second;
}

std::vector<std::string> placeholders(std::string_view s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '{') {
      if (i + 1 < s.size() && s[i + 1] == '{') {
        ++i;
        continue;
      }
      auto close = s.find('}', i);
      if (close == std::string_view::npos) break;
      out.emplace_back(s.substr(i + 1, close - i - 1));
      i = close;
    } else if (s[i] == '}' && i + 1 < s.size() && s[i + 1] == '}') {
      ++i;
    }
  }
  return out;
}

std::string fill_slots(std::string_view s, const SlotValues& values, const std::vector<std::string>* declared) {
  if (declared) {
    for (const auto& [k, v] : values)
      if (std::find(declared->begin(), declared->end(), k) == declared->end()) throw UnknownSlot(k);
  }
  std::string out;
  out.reserve(s.size() + 32);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '{' && i + 1 < s.size() && s[i + 1] == '{') {
      out.push_back('{');
      ++i;
    } else if (c == '}' && i + 1 < s.size() && s[i + 1] == '}') {
      out.push_back('}');
      ++i;
    } else if (c == '{') {
      auto close = s.find('}', i);
      if (close == std::string_view::npos) throw ParseError("unterminated placeholder in template");
      std::string name(s.substr(i + 1, close - i - 1));
      auto it = values.find(name);
      if (it == values.end()) throw MissingSlot(name);
      out += it->second;
      i = close;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::size_t draw_index(std::size_t n, std::uint64_t& rng_state) {
  rng_state = mix_seed(rng_state);
  return static_cast<std::size_t>(rng_state % n);
}

const std::string& select_variant(const std::vector<std::string>& variants, std::uint64_t& rng_state) {
  if (variants.empty()) throw EmptyVariantList();
  return variants[draw_index(variants.size(), rng_state)];
}

std::string render(const TemplateRegistry& reg, const std::string& id, const SlotValues& values,
                   std::uint64_t& rng_state) {
  const auto& r = reg.get(id);
  return fill_slots(select_variant(r.variants, rng_state), values, &r.slots);
}

TemplateRegistry parse_templates(const Json& j) {
  TemplateRegistry reg;
  for (const auto& [id, body] : j.at("responders").items()) {
    Responder r;
    r.slots = body.value("slots", std::vector<std::string>{});
    r.variants = body.at("variants").get<std::vector<std::string>>();
    if (r.variants.empty()) throw ValidationError("responder '" + id + "' has no variants");
    for (const auto& v : r.variants)
      for (const auto& p : placeholders(v))
        if (std::find(r.slots.begin(), r.slots.end(), p) == r.slots.end())
          throw ValidationError("responder '" + id + "': placeholder {" + p + "} is not declared");
    reg.entries.emplace(id, std::move(r));
  }
  if (j.contains("favorites"))
    for (const auto& f : j.at("favorites"))
      reg.favorites.push_back({f.at("task_id").get<std::string>(), f.at("blurb").get<std::string>()});
  return reg;
}

TemplateRegistry load_templates(const std::filesystem::path& path) { return parse_templates(read_json(path)); }

std::vector<std::string> TemplateRegistry::lint(const std::vector<std::string>& required) const {
  std::vector<std::string> problems;
  for (const auto& [id, r] : entries) {
    std::set<std::string> used;
    for (const auto& v : r.variants)
      for (const auto& p : placeholders(v)) {
        used.insert(p);
        if (std::find(r.slots.begin(), r.slots.end(), p) == r.slots.end())
          problems.push_back(id + ": placeholder {" + p + "} not declared");
      }
    for (const auto& s : r.slots)
      if (!used.count(s)) problems.push_back(id + ": declared slot '" + s + "' never used");
  }
  for (const char* id : {"step", "catalog_intro", "help_welcome", "help_catalog", "help_step", "help_overview"}) {
    auto it = entries.find(id);
    if (it != entries.end() && it->second.variants.size() < 2)
      problems.push_back(std::string(id) + ": high-frequency responder needs at least 2 variants");
  }
  if (auto it = entries.find("favorites_intro"); it != entries.end()) {
    for (const auto& v : it->second.variants) {
      auto lower = text::to_lower(v);
      for (const char* word : {"recipe", "task", "favorite"})
        if (lower.find(word) == std::string::npos)
          problems.push_back(std::string("favorites_intro: variant lacks the word '") + word + "'");
    }
  }
  if (favorites.empty()) problems.push_back("favorites: list is empty");
  for (const auto& id : required)
    if (!entries.count(id)) problems.push_back("missing responder '" + id + "'");
  return problems;
}

std::string format_duration(int seconds) {
  if (seconds <= 0) return "0 seconds";
  int h = seconds / 3600;
  int m = (seconds % 3600) / 60;
  int s = seconds % 60;
  auto unit = [](int n, const char* word) { return std::to_string(n) + " " + word + (n == 1 ? "" : "s"); };
  std::vector<std::string> parts;
  if (h) parts.push_back(unit(h, "hour"));
  if (m) parts.push_back(unit(m, "minute"));
  if (s) parts.push_back(unit(s, "second"));
  if (parts.size() == 1) return parts[0];
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += (i + 1 == parts.size()) ? " and " : ", ";
    out += parts[i];
  }
  return out;
}

std::string join_speech(const std::vector<std::string>& parts) {
  std::vector<std::string> kept;
  for (const auto& p : parts) {
    auto t = text::collapse_whitespace(p);
    if (!t.empty()) kept.push_back(t);
  }
  return text::join(kept, " ");
}

int page_count(std::size_t results) {
  return static_cast<int>((results + kPageSize - 1) / kPageSize);
}

namespace {

const char* ordinal(int i) {
  static const char* kOrdinals[] = {"first", "second", "third", "fourth", "fifth", "sixth"};
  return (i >= 1 && i <= 6) ? kOrdinals[i - 1] : "next";
}

std::string format_rating(double r) {
  std::ostringstream os;
  double rounded = std::round(r * 10.0) / 10.0;
  if (std::abs(rounded - std::round(rounded)) < 1e-9)
    os << static_cast<int>(std::round(rounded));
  else
    os << rounded;
  return os.str();
}

std::string meta_clause(const TaskDocument& doc) {
  std::vector<std::string> parts;
  if (doc.rating) parts.push_back("rated " + format_rating(*doc.rating) + " stars");
  if (doc.estimated_time) parts.push_back("takes about " + format_duration(*doc.estimated_time * 60));
  if (parts.empty()) return "";
  return ", " + text::join(parts, " and ");
}

std::string strip_terminal(std::string s) {
  while (!s.empty() && (s.back() == '.' || s.back() == ' ')) s.pop_back();
  return s;
}

Card select_card(const TaskDocument& doc, int index_on_page) {
  Card c;
  c.title = doc.title;
  c.subtitle = strip_terminal(meta_clause(doc).empty() ? to_string(doc.domain) : meta_clause(doc).substr(2));
  c.action = {{"action", "select"}, {"index", std::to_string(index_on_page)}};
  return c;
}

}  // namespace

Response render_step(const TemplateRegistry& reg, const TaskDocument& doc, int index, StepPart part,
                     std::uint64_t& rng_state) {
  const int total = static_cast<int>(doc.steps.size());
  index = std::clamp(index, 1, std::max(1, total));
  const auto& step = doc.steps[static_cast<std::size_t>(index - 1)];
  const bool last = index == total;

  std::string body;
  switch (part) {
    case StepPart::Instruction:
      body = render(reg, "step",
                    {{"index", std::to_string(index)}, {"total", std::to_string(total)}, {"instruction", step.instruction}},
                    rng_state);
      break;
    case StepPart::Detail:
      body = render(reg, "step_detail", {{"index", std::to_string(index)}, {"detail", step.detail.value_or("")}},
                    rng_state);
      break;
    case StepPart::Tips:
      body = render(reg, "step_tips", {{"index", std::to_string(index)}, {"tips", step.tips.value_or("")}}, rng_state);
      break;
  }

  std::vector<std::pair<std::string, SlotValues>> hints;
  if (last)
    hints.push_back({"hint_last", {}});
  else
    hints.push_back({"hint_next", {}});
  bool more_detail = (part == StepPart::Instruction && (step.detail || step.tips)) ||
                     (part == StepPart::Detail && step.tips);
  if (more_detail) hints.push_back({"hint_detail", {}});
  if (total > 1 && !last) {
    int target = 1 + static_cast<int>(draw_index(static_cast<std::size_t>(total), rng_state));
    if (target == index) target = index == 1 ? total : 1;
    hints.push_back({"hint_goto", {{"step", std::to_string(target)}}});
  }
  std::string hint;
  if (last) {
    hint = render(reg, "hint_last", {}, rng_state);
  } else {
    const auto& h = hints[draw_index(hints.size(), rng_state)];
    hint = render(reg, h.first, h.second, rng_state);
  }

  Response r;
  r.speech = join_speech({body, hint});
  DisplayPayload d;
  d.kind = DisplayKind::StepCard;
  d.title = doc.title + " - Step " + std::to_string(index) + " of " + std::to_string(total);
  d.body = part == StepPart::Instruction ? step.instruction
                                         : (part == StepPart::Detail ? step.detail.value_or("") : step.tips.value_or(""));
  Card next{"Next", "", {{"action", "next"}}};
  Card prev{"Back", "", {{"action", "prev"}}};
  if (index > 1) d.cards.push_back(prev);
  if (more_detail) d.cards.push_back({"Details", "", {{"action", "detail"}}});
  if (!last) d.cards.push_back(next);
  r.display = d;
  return r;
}

Response render_catalog(const TemplateRegistry& reg, const RankedResult& result, int page, const DocLookup& docs,
                        std::uint64_t& rng_state) {
  Response r;
  const int pages = page_count(result.candidates.size());
  if (pages == 0) {
    r.speech = render(reg, "no_results", {}, rng_state);
    return r;
  }
  page = std::clamp(page, 0, pages - 1);
  const std::size_t begin = static_cast<std::size_t>(page) * kPageSize;
  const std::size_t end = std::min(result.candidates.size(), begin + kPageSize);

  std::vector<std::string> parts;
  parts.push_back(render(reg, "catalog_intro", {}, rng_state));
  DisplayPayload d;
  d.kind = DisplayKind::Catalog;
  d.title = "Results";
  for (std::size_t i = begin; i < end; ++i) {
    const TaskDocument* doc = docs(result.candidates[i].doc_id);
    if (!doc) continue;
    int on_page = static_cast<int>(i - begin) + 1;
    parts.push_back(render(reg, "catalog_item",
                           {{"ordinal", ordinal(on_page)}, {"title", strip_terminal(doc->title)}, {"meta", meta_clause(*doc)}},
                           rng_state));
    d.cards.push_back(select_card(*doc, on_page));
  }
  parts.push_back(render(reg, "catalog_choose", {}, rng_state));
  if (page + 1 < pages) {
    parts.push_back(render(reg, "catalog_more", {}, rng_state));
    d.cards.push_back({"More", "", {{"action", "more"}}});
  }
  if (page > 0) d.cards.push_back({"Less", "", {{"action", "less"}}});
  r.speech = join_speech(parts);
  r.display = d;
  return r;
}

Response render_comparison(const TemplateRegistry& reg, const RankedResult& result, int page, const DocLookup& docs,
                           std::uint64_t& rng_state) {
  Response r;
  const int pages = page_count(result.candidates.size());
  if (pages == 0) {
    r.speech = render(reg, "no_results", {}, rng_state);
    return r;
  }
  page = std::clamp(page, 0, pages - 1);
  const std::size_t begin = static_cast<std::size_t>(page) * kPageSize;
  const std::size_t end = std::min(result.candidates.size(), begin + kPageSize);
  std::vector<std::string> parts;
  parts.push_back(render(reg, "comparison_intro", {}, rng_state));
  DisplayPayload d;
  d.kind = DisplayKind::Catalog;
  d.title = "Compare";
  for (std::size_t i = begin; i < end; ++i) {
    const TaskDocument* doc = docs(result.candidates[i].doc_id);
    if (!doc) continue;
    int on_page = static_cast<int>(i - begin) + 1;
    std::string facts = std::to_string(doc->steps.size()) + " steps";
    if (!doc->ingredients.empty()) facts += ", " + std::to_string(doc->ingredients.size()) + " ingredients";
    facts += meta_clause(*doc);
    parts.push_back(render(reg, "comparison_item",
                           {{"ordinal", ordinal(on_page)}, {"title", strip_terminal(doc->title)}, {"facts", facts}},
                           rng_state));
    d.cards.push_back(select_card(*doc, on_page));
  }
  parts.push_back(render(reg, "catalog_choose", {}, rng_state));
  r.speech = join_speech(parts);
  r.display = d;
  return r;
}

Response render_favorites(const TemplateRegistry& reg, const std::vector<std::string>& task_ids, const DocLookup& docs,
                          std::uint64_t& rng_state) {
  if (reg.favorites.empty() || task_ids.empty()) throw EmptyFavorites();
  Response r;
  std::vector<std::string> parts;
  parts.push_back(render(reg, "favorites_intro", {}, rng_state));
  DisplayPayload d;
  d.kind = DisplayKind::Catalog;
  d.title = "Favorites";
  int shown = 0;
  for (const auto& id : task_ids) {
    if (shown == kPageSize) break;
    auto fav = std::find_if(reg.favorites.begin(), reg.favorites.end(), [&](const Favorite& f) { return f.task_id == id; });
    const TaskDocument* doc = docs(id);
    if (!doc) continue;
    ++shown;
    std::string blurb = fav == reg.favorites.end() ? "" : fav->blurb;
    parts.push_back(render(reg, "favorite_item",
                           {{"ordinal", ordinal(shown)}, {"title", strip_terminal(doc->title)}, {"blurb", blurb}},
                           rng_state));
    d.cards.push_back(select_card(*doc, shown));
  }
  if (shown == 0) throw EmptyFavorites();
  parts.push_back(render(reg, "catalog_choose", {}, rng_state));
  r.speech = join_speech(parts);
  r.display = d;
  return r;
}

std::vector<std::string> shuffled_favorites(const TemplateRegistry& reg, std::uint64_t& rng_state) {
  std::vector<std::string> ids;
  for (const auto& f : reg.favorites) ids.push_back(f.task_id);
  for (std::size_t n = ids.size(); n > 1; --n) std::swap(ids[n - 1], ids[draw_index(n, rng_state)]);
  return ids;
}

Response render_overview(const TemplateRegistry& reg, const TaskDocument& doc, std::uint64_t& rng_state) {
  std::string details = std::to_string(doc.steps.size()) + (doc.steps.size() == 1 ? " step" : " steps");
  if (doc.estimated_time) details += " and takes about " + format_duration(*doc.estimated_time * 60);
  std::string needs;
  if (!doc.ingredients.empty()) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < doc.ingredients.size() && i < 6; ++i) names.push_back(doc.ingredients[i].name);
    needs = render(reg, "overview_ingredients",
                   {{"count", std::to_string(doc.ingredients.size())}, {"list", text::join(names, ", ")}}, rng_state);
  }
  Response r;
  r.speech = join_speech({render(reg, "overview", {{"title", strip_terminal(doc.title)}, {"details", details}}, rng_state),
                          needs, render(reg, "overview_prompt", {}, rng_state)});
  DisplayPayload d;
  d.kind = DisplayKind::InfoCard;
  d.title = doc.title;
  std::vector<std::string> lines;
  for (const auto& ing : doc.ingredients) lines.push_back(ing.quantity ? *ing.quantity + " " + ing.name : ing.name);
  d.body = text::join(lines, "\n");
  d.cards.push_back({"Start", "", {{"action", "start"}}});
  r.display = d;
  return r;
}

Response render_utility_ack(const TemplateRegistry& reg, const UtilityAction& a, std::uint64_t& rng_state) {
  Response r;
  switch (a.kind) {
    case UtilityKind::ListAdd: r.speech = render(reg, "list_add", {{"item", a.item}}, rng_state); break;
    case UtilityKind::ListRemove: r.speech = render(reg, "list_remove", {{"item", a.item}}, rng_state); break;
    case UtilityKind::ListMissingItem: r.speech = render(reg, "list_missing_item", {}, rng_state); break;
    case UtilityKind::ListNotFound: r.speech = render(reg, "list_not_found", {{"item", a.item}}, rng_state); break;
    case UtilityKind::TimerSet:
      r.speech = render(reg, "timer_set", {{"duration", format_duration(a.seconds)}}, rng_state);
      break;
    case UtilityKind::TimerPause:
      r.speech = render(reg, "timer_pause", {{"duration", format_duration(a.seconds)}}, rng_state);
      break;
    case UtilityKind::TimerResume:
      r.speech = render(reg, "timer_resume", {{"duration", format_duration(a.seconds)}}, rng_state);
      break;
    case UtilityKind::TimerCancel: r.speech = render(reg, "timer_cancel", {}, rng_state); break;
    case UtilityKind::TimerMissingDuration: r.speech = render(reg, "timer_missing_duration", {}, rng_state); break;
    case UtilityKind::TimerNone: r.speech = render(reg, "timer_none", {}, rng_state); break;
    case UtilityKind::TimerFired:
      r.speech = render(reg, "timer_fired", {{"duration", format_duration(a.seconds)}}, rng_state);
      break;
  }
  return r;
}

Response greet(const TemplateRegistry& reg, int hour, std::uint64_t& rng_state) {
  hour = ((hour % 24) + 24) % 24;
  const char* id = (hour >= 5 && hour < 12) ? "greeting_morning" : (hour >= 12 && hour < 18) ? "greeting_afternoon"
                                                                                             : "greeting_evening";
  Response r;
  r.speech = join_speech({render(reg, id, {}, rng_state), render(reg, "welcome_prompt", {}, rng_state)});
  return r;
}

}  // namespace taco::response
