#ifndef QALIGN_SELFCHECK_FIXTURES_H_
#define QALIGN_SELFCHECK_FIXTURES_H_

// Hand-built instances shared by the unit tests, the acceptance binary and
// `align selfcheck`.

#include <string>
#include <vector>

#include "qalign/coref.h"
#include "qalign/fusion.h"
#include "qalign/types.h"

namespace qalign::fixtures {

Tokens Split(const std::string& text);

QARelation MakeQa(const std::string& id, int predicate_index,
                  const std::string& question, int question_predicate_index,
                  std::vector<AnswerSpan> answers);

struct AlignedPair {
  SentencePairInstance pair;
  AlignmentSet gold;
};

// "purchased" vs "sold": two gold alignments, no shared predicate lemma.
AlignedPair PurchaseSale();

// The fired-coach pair: one QA pair shares predicate and head lemmas.
AlignedPair FiredCoach();

struct InductionCase {
  AlignedPair aligned;
  CorefAnnotation coref;
};

// "the man" and "he" corefer, so both "Who came ?" QAs induce an alignment
// against the single target QA.
InductionCase RedundantMentions();

// charged / filed corefer and the two drivers corefer, but the clausal
// Why-argument has no entity mention, so its gold alignment is not induced.
InductionCase ChargedFiled();

// The dog-handling cluster: three sources with "use" / "dogs" aligned
// between the first and third.
FusionInstance DogsCluster();
Tokens DogsFuseAlignOutput();
Tokens DogsBaselineOutput();

// Every aligned pair above.
std::vector<AlignedPair> AllAlignedPairs();

}  // namespace qalign::fixtures

#endif  // QALIGN_SELFCHECK_FIXTURES_H_
