#ifndef QALIGN_LEMMA_H_
#define QALIGN_LEMMA_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qalign/types.h"

namespace qalign {

// Rule-based English lemmatizer: an embedded table of irregular forms plus
// suffix rules for -s/-es/-ies/-ed/-ied/-ing. The result is lowercased, and
// Lemmatize(Lemmatize(w)) == Lemmatize(w) for every w.
std::string Lemmatize(std::string_view word);

// The embedded irregular-form table (form -> lemma), lowercased.
const std::map<std::string, std::string>& LemmaExceptions();

// Per-token dependency heads for a sentence; -1 marks the root.
using HeadIndices = std::vector<int>;

// Head token of an answer span. With dependency heads, the leftmost token
// of the span whose head lies outside the span; otherwise the rightmost
// token that is not a function word or punctuation, falling back to the
// rightmost token.
int AnswerHead(const AnswerSpan& span, const SentenceText& sent,
               const HeadIndices* heads = nullptr);

// Heads for one side of a pair, if available.
struct PairHeads {
  std::optional<HeadIndices> a;
  std::optional<HeadIndices> b;
};

// True iff the two predicates share a lemma and some answer of each QA has
// a head sharing a lemma with the other's.
bool LemmaCriterion(const QARelation& qa_a, const SentenceText& sent_a,
                    const QARelation& qa_b, const SentenceText& sent_b,
                    const PairHeads& heads = {});

// The lemma baseline: a 1:1 alignment for every cross-side QA pair meeting
// LemmaCriterion, in (qas_a order, qas_b order). Not decoded to a matching.
AlignmentSet LemmaAlign(const SentencePairInstance& pair,
                        const PairHeads& heads = {});

}  // namespace qalign

#endif  // QALIGN_LEMMA_H_
