#include "taco/text.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace taco::text {

namespace {

bool is_word_char(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (unsigned char c : s) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(c));
  }
  return out;
}

std::string normalize_utterance(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto c = static_cast<unsigned char>(s[i]);
    if (is_word_char(c)) {
      out.push_back(static_cast<char>(std::tolower(c)));
    } else if (c == '\'' && i > 0 && i + 1 < s.size() &&
               is_word_char(static_cast<unsigned char>(s[i - 1])) &&
               is_word_char(static_cast<unsigned char>(s[i + 1]))) {
      out.push_back('\'');
    } else {
      out.push_back(' ');
    }
  }
  return collapse_whitespace(out);
}

std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> tokens;
  std::string cur;
  for (unsigned char c : s) {
    if (is_word_char(c)) {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::vector<std::string_view> split_sentences(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  auto skip_space = [&](std::size_t i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i;
  };
  start = skip_space(0);
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c != '.' && c != '!' && c != '?') continue;
    std::size_t end = i + 1;
    while (end < s.size() && (s[end] == '.' || s[end] == '!' || s[end] == '?' ||
                              s[end] == '"' || s[end] == ')'))
      ++end;
    if (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end]))) continue;
    out.push_back(s.substr(start, end - start));
    start = skip_space(end);
    i = start == 0 ? 0 : start - 1;
  }
  if (start < s.size()) {
    auto tail = s.substr(start);
    while (!tail.empty() && std::isspace(static_cast<unsigned char>(tail.back())))
      tail.remove_suffix(1);
    if (!tail.empty()) out.push_back(tail);
  }
  return out;
}

std::size_t find_phrase(const std::vector<std::string>& tokens,
                        const std::vector<std::string>& phrase) {
  if (phrase.empty() || phrase.size() > tokens.size()) return npos;
  auto it = std::search(tokens.begin(), tokens.end(), phrase.begin(), phrase.end());
  return it == tokens.end() ? npos : static_cast<std::size_t>(it - tokens.begin());
}

bool is_stopword(std::string_view token) {
  static const std::unordered_set<std::string_view> kStop = {
      "a",     "an",    "the",   "and",  "or",    "but",   "if",    "of",    "to",
      "in",    "on",    "at",    "by",   "for",   "with",  "from",  "into",  "about",
      "as",    "is",    "are",   "was",  "were",  "be",    "been",  "being", "am",
      "do",    "does",  "did",   "i",    "me",    "my",    "you",   "your",  "we",
      "our",   "it",    "its",   "they", "them",  "their", "this",  "that",  "these",
      "those", "what",  "which", "who",  "whom",  "how",   "when",  "where", "why",
      "can",   "could", "should", "would", "will", "shall", "may",  "might", "must",
      "so",    "than",  "too",   "very", "just",  "not",   "no",    "yes",   "please",
      "sorry", "alexa", "there", "here", "any",   "some",  "s",     "t",     "have",
      "has",   "had",   "then",  "up",   "out",   "over",  "under", "again", "also"};
  return kStop.count(token) > 0;
}

bool starts_with_icase(std::string_view s, std::string_view prefix) {
  if (prefix.size() > s.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i])))
      return false;
  }
  return true;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

}  // namespace taco::text
