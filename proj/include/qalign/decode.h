#ifndef QALIGN_DECODE_H_
#define QALIGN_DECODE_H_

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qalign/types.h"

namespace qalign {

class DecodeError : public Error {
 public:
  using Error::Error;
};

// A node-disjoint set of (left_qa, right_qa) edges.
struct Matching {
  std::set<std::pair<QaId, QaId>> edges;
  double total_weight = 0.0;  // summed in sorted edge order
};

// Sum of edge weights taken in sorted (left, right) order. Decoder output
// and oracles both use this so totals compare exactly.
double SortedSum(const std::vector<ScoredEdge>& edges);

// Maximum total-weight matching over the given edges (all of them; no
// threshold). Among optimal matchings, returns the one whose sorted edge
// list is lexicographically smallest. Duplicate (left, right) edges keep
// their highest score. Throws DecodeError on a negative or NaN weight.
Matching MaxWeightMatching(const std::vector<ScoredEdge>& edges);

// Keeps edges with score >= tau.
std::vector<ScoredEdge> Threshold(const std::vector<ScoredEdge>& edges,
                                  double tau);

// Threshold, then MaxWeightMatching; every matched edge becomes a 1:1
// alignment (sorted). Provenance MODEL. Throws DecodeError when a score or
// tau lies outside [0, 1].
AlignmentSet Decode(const std::string& pair_id,
                    const std::vector<ScoredEdge>& edges,
                    const DecoderConfig& config = {});

}  // namespace qalign

#endif  // QALIGN_DECODE_H_
