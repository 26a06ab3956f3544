#ifndef QALIGN_VALIDATE_H_
#define QALIGN_VALIDATE_H_

#include <string>
#include <vector>

#include "qalign/types.h"

namespace qalign {

enum class Severity { kError, kWarning };

// One broken invariant. `field` is a path into the checked value, e.g.
// "qas_a[2].answers[0]" or "alignments[1].left".
struct Violation {
  Severity severity = Severity::kError;
  std::string field;
  std::string message;

  std::string ToString() const;
};

std::vector<Violation> ValidateSentence(const SentenceText& sentence,
                                        const std::string& prefix);

// Checks a QA against the sentence it is meant to belong to.
std::vector<Violation> ValidateQa(const QARelation& qa,
                                  const SentenceText& sentence,
                                  const std::string& prefix);

// Returns an empty list iff every SentencePairInstance invariant holds.
std::vector<Violation> ValidatePair(const SentencePairInstance& pair);

// Checks an alignment set against its pair. Reusing a QA id across
// alignments is an error for MODEL sets, a warning for GOLD sets, and
// accepted for LEMMA and ECB_INDUCED sets, which emit every qualifying
// pair. LEMMA, MODEL and ECB_INDUCED sets must be 1:1.
std::vector<Violation> ValidateAlignmentSet(const AlignmentSet& set,
                                            const SentencePairInstance& pair);

bool HasErrors(const std::vector<Violation>& violations);

}  // namespace qalign

#endif  // QALIGN_VALIDATE_H_
