#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "taco/errors.hpp"
#include "taco/model.hpp"

namespace taco {

class EmptyStep : public Error {
 public:
  EmptyStep() : Error("step text is blank") {}
};

inline constexpr std::size_t kDefaultInstructionBudget = 280;

/// Splits raw step text into a voice-sized instruction, the remaining detail,
/// and tip sentences (those opening with "tip:", "tips:", "note:" or
/// "warning:", marker removed). Throws EmptyStep on blank input.
StepSegment segment_step(std::string_view raw_step,
                         std::size_t instruction_budget = kDefaultInstructionBudget);

/// Lowercase, trimmed, internal whitespace collapsed.
std::string canonicalize(std::string_view s);

/// Parses a corpus JSON array. Steps may be raw strings (segmented here) or
/// pre-segmented objects. Throws ParseError / ValidationError.
std::vector<TaskDocument> parse_corpus(const Json& j,
                                       std::size_t instruction_budget = kDefaultInstructionBudget);
std::vector<TaskDocument> load_corpus(const std::filesystem::path& path,
                                      std::size_t instruction_budget = kDefaultInstructionBudget);

/// Throws ValidationError naming the document id and field.
void validate_document(const TaskDocument& doc);

struct SubstitutionTable {
  std::map<std::string, std::vector<std::string>> entries;

  const std::vector<std::string>* find(const std::string& ingredient) const;
};

SubstitutionTable parse_substitutions(const Json& j);
SubstitutionTable load_substitutions(const std::filesystem::path& path);

struct Blacklist {
  std::set<std::string> dangerous_terms;
  std::set<std::string> professional_terms;
  std::set<std::string> profanity_terms;
};

/// One phrase per line, '#' starts a comment; phrases are canonicalized.
std::set<std::string> parse_phrase_list(std::string_view text);
Blacklist load_blacklist(const std::filesystem::path& dangerous,
                         const std::filesystem::path& professional,
                         const std::filesystem::path& profanity);
/// Loads dangerous.txt / professional.txt / profanity.txt from a directory.
Blacklist load_blacklist(const std::filesystem::path& dir);

/// Reads a whole file; throws IOError.
std::string read_file(const std::filesystem::path& path);
/// Reads and parses a JSON file; throws IOError / ParseError.
Json read_json(const std::filesystem::path& path);

}  // namespace taco
