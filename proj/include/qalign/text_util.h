#ifndef QALIGN_TEXT_UTIL_H_
#define QALIGN_TEXT_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace qalign {

// ASCII lowercasing; bytes outside A-Z pass through unchanged.
std::string ToLower(std::string_view s);

std::string Join(const std::vector<std::string>& tokens,
                 std::string_view separator = " ");

// True if the token has no ASCII letter or digit ("," "--" "'s" is false).
bool IsPunctuation(std::string_view token);

// Closed-class English words: determiners, pronouns, prepositions,
// conjunctions and auxiliaries. Lookup is on the lowercased token.
bool IsFunctionWord(std::string_view token);

}  // namespace qalign

#endif  // QALIGN_TEXT_UTIL_H_
