#ifndef QALIGN_FUSION_H_
#define QALIGN_FUSION_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qalign/types.h"
#include "qalign/validate.h"

namespace qalign {

inline constexpr std::string_view kSentenceSeparator = "</s>";

class FusionError : public Error {
 public:
  using Error::Error;
};

// Alignments between the QAs of sources[first] (left ids) and
// sources[second] (right ids).
struct SourcePairAlignments {
  int first = 0;
  int second = 1;
  std::vector<Alignment> alignments;

  friend bool operator==(const SourcePairAlignments&,
                         const SourcePairAlignments&) = default;
};

// A fusion cluster: 2-4 source sentences with their QAs, the reference
// fused sentence and the predicted alignments between source pairs.
struct FusionInstance {
  std::string cluster_id;
  std::vector<SentenceText> sources;
  std::vector<std::vector<QARelation>> qas;  // parallel to sources
  Tokens target;
  std::vector<SourcePairAlignments> pair_alignments;

  friend bool operator==(const FusionInstance&, const FusionInstance&) = default;
};

// A system output for a fusion cluster.
struct FusionOutput {
  std::string cluster_id;
  Tokens tokens;

  friend bool operator==(const FusionOutput&, const FusionOutput&) = default;
};

std::vector<Violation> ValidateFusionInstance(const FusionInstance& instance);

enum class MarkupKind { kArgument, kPredicate };

// One markup span emitted into the augmented input.
struct MarkupSpan {
  int source = 0;
  AnswerSpan span;
  MarkupKind kind = MarkupKind::kPredicate;
  int component = 0;  // alignment component id (internal numbering)
  int index = 0;      // printed index k in [Pk] / [Ak]

  friend bool operator==(const MarkupSpan&, const MarkupSpan&) = default;
};

// Aligned predicates and aligned arguments grouped into connected
// components across all source pairs. A span nested in another span of the
// same kind is dropped (outermost wins); crossing spans of the same kind
// raise FusionError. Indices are assigned per kind, starting at 1, in
// order of first appearance over the sources. Result is in emission order.
std::vector<MarkupSpan> ComputeFusionMarkup(const FusionInstance& instance);

// Sources joined by "</s>", with aligned predicates wrapped as
// "[Pk] ... [\Pk]" and aligned arguments as "[Ak] ... [\Ak]". Questions are
// not included.
std::string AugmentFusionInput(const FusionInstance& instance);

// Drops [Pk] [\Pk] [Ak] [\Ak] and </s> tokens.
Tokens StripFusionMarkup(std::string_view augmented);

// For each output word, the indices of sources holding a token with the
// same lowercase lemma.
std::vector<std::set<int>> LinkOutputWords(const Tokens& output,
                                           const std::vector<Tokens>& sources);

struct ConsolidationReport {
  std::vector<std::set<int>> per_word_contributors;  // LinkOutputWords
  std::vector<std::set<int>> per_word_attribution;   // longest-match resolved
  bool is_consolidating = false;
  std::set<int> contributing_sources;
};

// Attributes each output word to the source(s) sharing the longest
// contiguous lemma sequence that covers the word (ties keep every tied
// source). The output is consolidating iff at least two sources are each
// the sole attributed source of some content word.
ConsolidationReport ClassifyConsolidating(const Tokens& output,
                                          const std::vector<Tokens>& sources);

// Fraction of consolidating reports; 0 for an empty list.
double ConsolidationRate(const std::vector<ConsolidationReport>& reports);

}  // namespace qalign

#endif  // QALIGN_FUSION_H_
