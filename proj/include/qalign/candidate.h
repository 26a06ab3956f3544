#ifndef QALIGN_CANDIDATE_H_
#define QALIGN_CANDIDATE_H_

#include <string>
#include <string_view>

#include "qalign/types.h"

namespace qalign {

inline constexpr std::string_view kPredicateOpen = "[P]";
inline constexpr std::string_view kPredicateClose = "[/P]";
inline constexpr std::string_view kQuestionSep = "[Q]";
inline constexpr std::string_view kAnswerOpen = "[A]";
inline constexpr std::string_view kAnswerClose = "[/A]";

// Raised when a QA's indices do not fit the sentence it is serialized with.
class OwnershipError : public Error {
 public:
  using Error::Error;
};

// Encodes one side of a candidate alignment for a cross-encoder:
//
//   <question, predicate in [P] [/P]> [Q] <context> <sentence, predicate in
//   [P] [/P], each answer span in [A] [/A]>
//
// Tokens are joined by single spaces. When spans share a start, the longer
// one opens first; [A] opens before [P] on the same token.
std::string SerializeCandidate(const QARelation& qa, const SentenceText& sent);

// Drops the five markup tokens from a space-separated serialization.
Tokens StripCandidateMarkup(std::string_view serialized);

}  // namespace qalign

#endif  // QALIGN_CANDIDATE_H_
