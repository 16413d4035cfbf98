#include "taco/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "taco/text.hpp"

namespace taco {

namespace {

constexpr std::string_view kTipMarkers[] = {"tips:", "tip:", "note:", "warning:"};

/// Returns the sentence with its tip marker stripped, or nullopt.
std::optional<std::string> strip_tip_marker(std::string_view sentence) {
  for (auto marker : kTipMarkers) {
    if (text::starts_with_icase(sentence, marker)) {
      auto rest = text::collapse_whitespace(sentence.substr(marker.size()));
      if (!rest.empty()) return rest;
    }
  }
  return std::nullopt;
}

[[noreturn]] void invalid(const std::string& id, const std::string& field, const std::string& why) {
  throw ValidationError("document '" + id + "': field '" + field + "' " + why);
}

std::vector<std::string> canonical_tags(const std::vector<std::string>& tags) {
  std::set<std::string> out;
  for (const auto& t : tags) {
    auto c = canonicalize(t);
    if (!c.empty()) out.insert(c);
  }
  return {out.begin(), out.end()};
}

}  // namespace

StepSegment segment_step(std::string_view raw_step, std::size_t instruction_budget) {
  auto normalized = text::collapse_whitespace(raw_step);
  if (normalized.empty()) throw EmptyStep();

  std::vector<std::string> body;
  std::vector<std::string> tips;
  for (auto sentence : text::split_sentences(normalized)) {
    if (auto tip = strip_tip_marker(sentence)) {
      tips.push_back(std::move(*tip));
    } else {
      body.emplace_back(sentence);
    }
  }
  if (body.empty()) {
    // Nothing but tips: the tips become the instruction.
    body = std::move(tips);
    tips.clear();
  }

  StepSegment seg;
  std::size_t i = 0;
  seg.instruction = body[i++];
  while (i < body.size() && seg.instruction.size() + 1 + body[i].size() <= instruction_budget) {
    seg.instruction += ' ';
    seg.instruction += body[i++];
  }
  if (i < body.size()) {
    std::vector<std::string> rest(body.begin() + static_cast<std::ptrdiff_t>(i), body.end());
    seg.detail = text::join(rest, " ");
  }
  if (!tips.empty()) seg.tips = text::join(tips, " ");
  return seg;
}

std::string canonicalize(std::string_view s) { return text::collapse_whitespace(text::to_lower(s)); }

void validate_document(const TaskDocument& doc) {
  const auto& id = doc.id.empty() ? std::string("<missing id>") : doc.id;
  if (doc.id.empty()) invalid(id, "id", "is empty");
  if (text::collapse_whitespace(doc.title).empty()) invalid(id, "title", "is empty");
  if (doc.steps.empty()) invalid(id, "steps", "is empty");
  for (std::size_t i = 0; i < doc.steps.size(); ++i) {
    const auto& s = doc.steps[i];
    auto where = "steps[" + std::to_string(i) + "]";
    if (text::collapse_whitespace(s.instruction).empty()) invalid(id, where + ".instruction", "is empty");
    if (s.detail && text::collapse_whitespace(*s.detail).empty()) invalid(id, where + ".detail", "is blank");
    if (s.tips && text::collapse_whitespace(*s.tips).empty()) invalid(id, where + ".tips", "is blank");
  }
  if (doc.domain == Domain::DIY) {
    if (!doc.diet_tags.empty()) invalid(id, "diet_tags", "must be empty for DIY tasks");
    if (!doc.cuisine_tags.empty()) invalid(id, "cuisine_tags", "must be empty for DIY tasks");
  }
  if (doc.rating && (*doc.rating < 0.0 || *doc.rating > 5.0)) invalid(id, "rating", "outside [0,5]");
  if (doc.popularity && *doc.popularity < 0) invalid(id, "popularity", "is negative");
  if (doc.estimated_time && *doc.estimated_time < 0) invalid(id, "estimated_time", "is negative");
  for (std::size_t i = 0; i < doc.ingredients.size(); ++i) {
    const auto& name = doc.ingredients[i].name;
    if (name.empty() || name != canonicalize(name))
      invalid(id, "ingredients[" + std::to_string(i) + "].name", "is empty or not canonical");
  }
  for (std::size_t i = 0; i < doc.faqs.size(); ++i) {
    if (doc.faqs[i].question.empty() || doc.faqs[i].answer.empty())
      invalid(id, "faqs[" + std::to_string(i) + "]", "has an empty side");
  }
}

std::vector<TaskDocument> parse_corpus(const Json& j, std::size_t instruction_budget) {
  if (!j.is_array()) throw ParseError("corpus must be a JSON array");
  std::vector<TaskDocument> docs;
  std::set<std::string> seen;
  for (const auto& rec : j) {
    auto id = rec.is_object() && rec.contains("id") && rec["id"].is_string()
                  ? rec["id"].get<std::string>()
                  : std::string("<missing id>");
    TaskDocument doc;
    try {
      Json copy = rec;
      Json steps = Json::array();
      if (copy.contains("steps")) {
        for (const auto& s : copy["steps"]) {
          if (s.is_string()) {
            try {
              steps.push_back(segment_step(s.get<std::string>(), instruction_budget));
            } catch (const EmptyStep&) {
              invalid(id, "steps", "contains a blank step");
            }
          } else {
            steps.push_back(s);
          }
        }
        copy["steps"] = steps;
      }
      doc = copy.get<TaskDocument>();
    } catch (const Json::exception& e) {
      throw ValidationError("document '" + id + "': " + e.what());
    } catch (const ParseError& e) {
      throw ValidationError("document '" + id + "': " + e.what());
    }
    for (auto& ing : doc.ingredients) ing.name = canonicalize(ing.name);
    doc.cuisine_tags = canonical_tags(doc.cuisine_tags);
    doc.diet_tags = canonical_tags(doc.diet_tags);
    validate_document(doc);
    if (!seen.insert(doc.id).second) invalid(doc.id, "id", "is duplicated");
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::filesystem::path& path) {
  auto text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

std::vector<TaskDocument> load_corpus(const std::filesystem::path& path,
                                      std::size_t instruction_budget) {
  return parse_corpus(read_json(path), instruction_budget);
}

const std::vector<std::string>* SubstitutionTable::find(const std::string& ingredient) const {
  auto it = entries.find(canonicalize(ingredient));
  return it == entries.end() ? nullptr : &it->second;
}

SubstitutionTable parse_substitutions(const Json& j) {
  if (!j.is_object()) throw ParseError("substitution table must be a JSON object");
  SubstitutionTable table;
  for (const auto& [key, value] : j.items()) {
    auto name = canonicalize(key);
    if (name.empty()) throw ValidationError("substitution table: empty ingredient name");
    if (!value.is_array()) throw ParseError("substitution table: '" + key + "' is not a list");
    std::vector<std::string> suggestions;
    for (const auto& s : value) {
      auto sug = text::collapse_whitespace(s.get<std::string>());
      if (!sug.empty()) suggestions.push_back(sug);
    }
    if (suggestions.empty())
      throw ValidationError("substitution table: '" + name + "' has no suggestions");
    auto& slot = table.entries[name];
    slot.insert(slot.end(), suggestions.begin(), suggestions.end());
  }
  return table;
}

SubstitutionTable load_substitutions(const std::filesystem::path& path) {
  return parse_substitutions(read_json(path));
}

std::set<std::string> parse_phrase_list(std::string_view text) {
  std::set<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto phrase = canonicalize(line);
    if (!phrase.empty()) out.insert(phrase);
  }
  return out;
}

Blacklist load_blacklist(const std::filesystem::path& dangerous,
                         const std::filesystem::path& professional,
                         const std::filesystem::path& profanity) {
  Blacklist b;
  b.dangerous_terms = parse_phrase_list(read_file(dangerous));
  b.professional_terms = parse_phrase_list(read_file(professional));
  b.profanity_terms = parse_phrase_list(read_file(profanity));
  return b;
}

Blacklist load_blacklist(const std::filesystem::path& dir) {
  return load_blacklist(dir / "dangerous.txt", dir / "professional.txt", dir / "profanity.txt");
}

}  // namespace taco
