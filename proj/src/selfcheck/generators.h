#ifndef QALIGN_SELFCHECK_GENERATORS_H_
#define QALIGN_SELFCHECK_GENERATORS_H_

// Seeded random instances for property checks.

#include <random>
#include <vector>

#include "qalign/fusion.h"
#include "qalign/types.h"

namespace qalign::gen {

using Rng = std::mt19937_64;

// Bipartite graph with 0..max_side QAs per side ("l0".., "r0"..); each
// cross edge present with probability 1/2, score uniform in [0, 1).
std::vector<ScoredEdge> RandomGraph(Rng& rng, int max_side);

// Same shape, scores k/64 so that sums are exact and ties are common.
std::vector<ScoredEdge> RandomDyadicGraph(Rng& rng, int max_side);

// Up to max_alignments alignments over ids a0..a5 / b0..b5, mostly 1:1,
// sometimes 2:1 or 1:2, with occasional duplicates.
AlignmentSet RandomAlignmentSet(Rng& rng, const std::string& pair_id,
                                int max_alignments);

// A second set that shares some alignments with `base`.
AlignmentSet PerturbedCopy(Rng& rng, const AlignmentSet& base);

// 0..max_len tokens over a small vocabulary, mixed case.
Tokens RandomTokens(Rng& rng, int max_len);

// A valid pair with 1..4 QAs per side over random sentences.
SentencePairInstance RandomPair(Rng& rng, const std::string& pair_id);

// A valid fusion instance (2-4 sources, QAs with non-crossing answers,
// random 1:1 alignments between source pairs).
FusionInstance RandomFusionInstance(Rng& rng, const std::string& cluster_id);

}  // namespace qalign::gen

#endif  // QALIGN_SELFCHECK_GENERATORS_H_
