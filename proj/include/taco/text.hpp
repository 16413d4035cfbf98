#pragma once

#include <string>
#include <string_view>
#include <vector>

// Small text helpers shared by every module. All matching in the engine is
// ASCII-lowercase; non-ASCII bytes are treated as word characters.
namespace taco::text {

std::string to_lower(std::string_view s);

/// Trims and collapses runs of whitespace to one space.
std::string collapse_whitespace(std::string_view s);

/// Lowercase, punctuation replaced by spaces (apostrophes inside words kept),
/// whitespace collapsed.
std::string normalize_utterance(std::string_view s);

/// Index tokenizer: lowercase, split on non-alphanumerics, drop empties.
std::vector<std::string> tokenize(std::string_view s);

/// Splits on sentence terminators (. ! ?) followed by whitespace or end of
/// text. Returned views point into `s` and keep their terminator.
std::vector<std::string_view> split_sentences(std::string_view s);

/// Whole-word phrase search over token sequences. Returns the token offset of
/// the first match or npos.
std::size_t find_phrase(const std::vector<std::string>& tokens,
                        const std::vector<std::string>& phrase);

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

bool is_stopword(std::string_view token);

bool starts_with_icase(std::string_view s, std::string_view prefix);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace taco::text
