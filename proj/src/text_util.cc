#include "qalign/text_util.h"

#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_set>

namespace qalign {

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string Join(const std::vector<std::string>& tokens,
                 std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.append(separator);
    out.append(tokens[i]);
  }
  return out;
}

bool IsPunctuation(std::string_view token) {
  return std::none_of(token.begin(), token.end(), [](unsigned char c) {
    return std::isalnum(c) != 0;
  });
}

bool IsFunctionWord(std::string_view token) {
  static const std::unordered_set<std::string> kWords = {
      "a",     "an",    "the",   "this",  "that",  "these", "those",
      "some",  "any",   "each",  "every", "no",    "of",    "in",
      "on",    "at",    "to",    "for",   "from",  "by",    "with",
      "about", "as",    "into",  "onto",  "over",  "under", "after",
      "before", "since", "than", "and",   "or",    "but",   "nor",
      "if",    "so",    "yet",   "be",    "is",    "are",   "was",
      "were",  "been",  "being", "am",    "has",   "have",  "had",
      "do",    "does",  "did",   "will",  "would", "can",   "could",
      "shall", "should", "may",  "might", "must",  "not",   "it",
      "its",   "he",    "she",   "they",  "we",    "i",     "you",
      "him",   "her",   "them",  "us",    "me",    "his",   "their",
      "our",   "my",    "your",  "who",   "whom",  "which", "what",
      "there", "here",  "'s",    "'",     "n't",   "also",  "very",
  };
  return kWords.count(ToLower(token)) > 0;
}

}  // namespace qalign
