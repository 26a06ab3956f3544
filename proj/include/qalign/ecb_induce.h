#ifndef QALIGN_ECB_INDUCE_H_
#define QALIGN_ECB_INDUCE_H_

#include "qalign/coref.h"
#include "qalign/types.h"

namespace qalign {

class InductionError : public Error {
 public:
  using Error::Error;
};

// True iff both predicate tokens lie inside event mentions of a shared
// cluster and some answer of each QA overlaps an entity mention, the two
// mentions sharing a cluster.
bool InductionCriterion(const QARelation& qa_a, const SentenceText& sent_a,
                        const QARelation& qa_b, const SentenceText& sent_b,
                        const CorefIndex& coref);

// A 1:1 alignment for every cross-side QA pair meeting InductionCriterion,
// in (qas_a, qas_b) order. Provenance ECB_INDUCED; not node-disjoint.
// Throws InductionError naming the doc_id when a side's document is not
// annotated.
AlignmentSet Induce(const SentencePairInstance& pair, const CorefIndex& coref);

struct CoverageComparison {
  double induced_covered_by_gold = 1.0;
  double gold_covered_by_induced = 1.0;
};

CoverageComparison Compare(const AlignmentSet& induced, const AlignmentSet& gold);

}  // namespace qalign

#endif  // QALIGN_ECB_INDUCE_H_
