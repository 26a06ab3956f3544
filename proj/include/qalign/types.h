#ifndef QALIGN_TYPES_H_
#define QALIGN_TYPES_H_

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qalign {

using Tokens = std::vector<std::string>;
using QaId = std::string;

enum class CorpusTag { kEcb, kDuc, kMn, kOther };
enum class Split { kTrain, kDev, kTest };
enum class Provenance { kGold, kLemma, kModel, kEcbInduced };

std::string_view ToString(CorpusTag tag);
std::string_view ToString(Split split);
std::string_view ToString(Provenance provenance);

// The Parse* functions accept exactly the upper-case wire names ("ECB",
// "TRAIN", "ECB_INDUCED", ...) and return nullopt for anything else.
std::optional<CorpusTag> ParseCorpusTag(std::string_view s);
std::optional<Split> ParseSplit(std::string_view s);
std::optional<Provenance> ParseProvenance(std::string_view s);

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Token span [start, end) over the tokens of its owning sentence.
struct AnswerSpan {
  int start = 0;
  int end = 0;

  int length() const { return end - start; }
  bool Contains(int index) const { return index >= start && index < end; }
  bool Overlaps(const AnswerSpan& other) const {
    return start < other.end && other.start < end;
  }
  bool ValidFor(std::size_t num_tokens) const {
    return start >= 0 && start < end && end <= static_cast<int>(num_tokens);
  }

  friend auto operator<=>(const AnswerSpan&, const AnswerSpan&) = default;
};

struct SentenceText {
  std::string doc_id;
  std::string sent_id;
  Tokens tokens;
  Tokens context_tokens;  // predecessor sentence, possibly empty
  CorpusTag corpus_tag = CorpusTag::kOther;

  friend bool operator==(const SentenceText&, const SentenceText&) = default;
};

// One QA-SRL relation: a question about the predicate at predicate_index
// answered by one or more spans of the owning sentence.
struct QARelation {
  QaId qa_id;
  int predicate_index = 0;
  Tokens question_tokens;
  int question_predicate_index = 0;
  std::vector<AnswerSpan> answers;

  // First question token, lowercased. Empty for an empty question.
  std::string wh_word() const;

  friend bool operator==(const QARelation&, const QARelation&) = default;
};

struct SentencePairInstance {
  std::string pair_id;
  SentenceText a;
  SentenceText b;
  std::vector<QARelation> qas_a;
  std::vector<QARelation> qas_b;
  Split split = Split::kTrain;

  // Lookup by id; nullptr when absent.
  const QARelation* FindA(std::string_view qa_id) const;
  const QARelation* FindB(std::string_view qa_id) const;

  friend bool operator==(const SentencePairInstance&,
                         const SentencePairInstance&) = default;
};

// A grouping of QA ids from side A with QA ids from side B. The id sets are
// kept sorted, so equality is set equality.
struct Alignment {
  std::set<QaId> left;
  std::set<QaId> right;

  Alignment() = default;
  Alignment(std::set<QaId> l, std::set<QaId> r)
      : left(std::move(l)), right(std::move(r)) {}
  static Alignment OneToOne(QaId l, QaId r) {
    return Alignment({std::move(l)}, {std::move(r)});
  }

  bool is_one_to_one() const { return left.size() == 1 && right.size() == 1; }

  friend auto operator<=>(const Alignment&, const Alignment&) = default;
};

struct AlignmentSet {
  std::string pair_id;
  std::vector<Alignment> alignments;
  Provenance provenance = Provenance::kGold;

  bool Contains(const Alignment& alignment) const;

  friend bool operator==(const AlignmentSet&, const AlignmentSet&) = default;
};

// Candidate 1:1 link with a probability score.
struct ScoredEdge {
  QaId left_qa;
  QaId right_qa;
  double score = 0.0;

  friend bool operator==(const ScoredEdge&, const ScoredEdge&) = default;
};

struct DecoderConfig {
  double tau = 0.5;
};

}  // namespace qalign

#endif  // QALIGN_TYPES_H_
