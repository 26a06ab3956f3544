#ifndef QALIGN_EVAL_H_
#define QALIGN_EVAL_H_

#include <string>
#include <vector>

#include "qalign/types.h"

namespace qalign {

class EvalError : public Error {
 public:
  using Error::Error;
};

// Precision is 1 without predictions, recall is 1 without gold, and F1 is 1
// when both are empty; otherwise F1 = 2tp / (2tp + fp + fn).
struct PRF {
  long tp = 0;
  long fp = 0;
  long fn = 0;
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;

  static PRF FromCounts(long tp, long fp, long fn);
};

// An alignment is a hit iff its (left, right) sets equal a gold alignment's.
// Duplicate alignments count once. Throws EvalError on a pair_id mismatch.
PRF ExactMatchF1(const AlignmentSet& pred, const AlignmentSet& gold);

struct CorpusF1Result {
  PRF micro;
  double mean_pair_f1 = 1.0;
  std::vector<std::string> warnings;
};

// Micro average over pairs matched by pair_id. A pair present on one side
// only is scored against an empty set, with a warning. An empty corpus
// scores 1.0 with a warning.
CorpusF1Result CorpusF1(const std::vector<AlignmentSet>& preds,
                        const std::vector<AlignmentSet>& golds);

struct Agreement {
  double f1 = 1.0;
  bool full_agreement = true;
};

Agreement Agree(const AlignmentSet& a1, const AlignmentSet& a2);

// True iff some ref alignment contains src's left and right id sets.
bool IsCovered(const Alignment& src, const AlignmentSet& ref);

struct CoverageCounts {
  long covered = 0;
  long total = 0;
  double rate() const {
    return total == 0 ? 1.0 : static_cast<double>(covered) / static_cast<double>(total);
  }
};

// Counts over the distinct alignments of src.
CoverageCounts CountCovered(const AlignmentSet& src, const AlignmentSet& ref);

// Fraction of src alignments covered by ref; 1.0 for an empty src.
double Coverage(const AlignmentSet& src, const AlignmentSet& ref);

struct PairEval {
  std::string pair_id;
  PRF prf;
  bool full_agreement = true;
};

struct EvalReport {
  PRF corpus;
  std::vector<PairEval> per_pair;  // sorted by pair_id
  double full_agreement_rate = 1.0;
  double mean_pair_f1 = 1.0;
  double pred_covered_by_gold = 1.0;  // micro over pairs
  double gold_covered_by_pred = 1.0;
  std::vector<std::string> warnings;
};

EvalReport Evaluate(const std::vector<AlignmentSet>& preds,
                    const std::vector<AlignmentSet>& golds);

}  // namespace qalign

#endif  // QALIGN_EVAL_H_
