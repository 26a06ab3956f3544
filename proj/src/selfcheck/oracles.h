#ifndef QALIGN_SELFCHECK_ORACLES_H_
#define QALIGN_SELFCHECK_ORACLES_H_

// Deliberately naive reference implementations, written independently of
// the library code they check.

#include <utility>
#include <vector>

#include "qalign/coref.h"
#include "qalign/types.h"

namespace qalign::oracle {

using EdgeList = std::vector<std::pair<QaId, QaId>>;

struct BruteMatching {
  double weight = 0.0;  // summed in sorted edge order
  EdgeList edges;       // sorted
};

// Enumerates every matching of the edges with score >= tau. Returns the
// heaviest; among equally heavy ones (exact comparison), the one whose
// sorted edge list is lexicographically smallest.
BruteMatching BruteForceMatching(const std::vector<ScoredEdge>& edges, double tau);

struct Counts {
  long tp = 0;
  long fp = 0;
  long fn = 0;
};

// Exact-match counts by pairwise comparison of id lists.
Counts NaiveCounts(const AlignmentSet& pred, const AlignmentSet& gold);

// Harmonic mean of precision and recall with the empty-set conventions.
double NaiveF1(const Counts& c);

// Covered / total over distinct src alignments; 1 for an empty src.
double NaiveCoverage(const AlignmentSet& src, const AlignmentSet& ref);

// Bigram F1 by matching bigrams one by one, without maps.
double NaiveRouge2(const Tokens& a, const Tokens& b);

// Induction by direct enumeration over the raw mention and cluster lists.
EdgeList NaiveInduce(const SentencePairInstance& pair, const CorefAnnotation& coref);

}  // namespace qalign::oracle

#endif  // QALIGN_SELFCHECK_ORACLES_H_
