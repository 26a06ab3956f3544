#ifndef QALIGN_SCORER_H_
#define QALIGN_SCORER_H_

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qalign/lemma.h"
#include "qalign/types.h"

namespace qalign {

// Raised when a scorer fails or breaks its contract.
class ScorerError : public Error {
 public:
  using Error::Error;
};

// One cross-side QA pair of a sentence pair, with both sides serialized.
struct Candidate {
  const SentencePairInstance* pair = nullptr;
  const QARelation* left = nullptr;
  const QARelation* right = nullptr;
  std::string text_a;
  std::string text_b;
};

// |qas_a| * |qas_b| candidates ordered by (left qa_id, right qa_id).
std::vector<Candidate> BuildCandidates(const SentencePairInstance& pair);

class Scorer {
 public:
  virtual ~Scorer() = default;
  // One probability per candidate, in input order.
  virtual std::vector<double> Score(std::span<const Candidate> candidates) = 0;
};

class ConstantScorer : public Scorer {
 public:
  // Throws ScorerError unless value lies in [0, 1].
  explicit ConstantScorer(double value);
  std::vector<double> Score(std::span<const Candidate> candidates) override;

 private:
  double value_;
};

// 1.0 when the lemma criterion holds for the candidate, else 0.0.
class LemmaScorer : public Scorer {
 public:
  LemmaScorer() = default;
  // Heads keyed by pair_id.
  explicit LemmaScorer(std::map<std::string, PairHeads> heads)
      : heads_(std::move(heads)) {}
  std::vector<double> Score(std::span<const Candidate> candidates) override;

 private:
  std::map<std::string, PairHeads> heads_;
};

// 1.0 on the 1:1 alignments of the gold set for the candidate's pair, else
// 0.0. Many-to-many gold alignments never score.
class GoldOracleScorer : public Scorer {
 public:
  explicit GoldOracleScorer(const std::vector<AlignmentSet>& gold);
  std::vector<double> Score(std::span<const Candidate> candidates) override;

 private:
  std::map<std::string, std::set<std::pair<QaId, QaId>>> edges_;
};

// Scores every candidate of the pair; edges come back in (left, right) id
// order. Throws ScorerError naming the failing candidates when the scorer
// fails or returns a score outside [0, 1].
std::vector<ScoredEdge> ScoreAll(const SentencePairInstance& pair, Scorer& scorer);

// Same for many pairs with a single Score call, so an external scorer can
// batch across pairs.
std::vector<std::vector<ScoredEdge>> ScoreCorpus(
    const std::vector<SentencePairInstance>& pairs, Scorer& scorer);

}  // namespace qalign

#endif  // QALIGN_SCORER_H_
