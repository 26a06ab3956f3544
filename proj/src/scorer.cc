#include "qalign/scorer.h"

#include <algorithm>
#include <cmath>
#include <exception>

#include "qalign/candidate.h"

namespace qalign {

std::vector<Candidate> BuildCandidates(const SentencePairInstance& pair) {
  std::vector<const QARelation*> left, right;
  for (const QARelation& qa : pair.qas_a) left.push_back(&qa);
  for (const QARelation& qa : pair.qas_b) right.push_back(&qa);
  auto by_id = [](const QARelation* x, const QARelation* y) {
    return x->qa_id < y->qa_id;
  };
  std::sort(left.begin(), left.end(), by_id);
  std::sort(right.begin(), right.end(), by_id);

  std::vector<std::string> text_b;
  for (const QARelation* qb : right) text_b.push_back(SerializeCandidate(*qb, pair.b));
  std::vector<Candidate> out;
  out.reserve(left.size() * right.size());
  for (const QARelation* qa : left) {
    const std::string text_a = SerializeCandidate(*qa, pair.a);
    for (std::size_t j = 0; j < right.size(); ++j) {
      out.push_back({&pair, qa, right[j], text_a, text_b[j]});
    }
  }
  return out;
}

ConstantScorer::ConstantScorer(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ScorerError("constant score must lie in [0, 1]");
  }
}

std::vector<double> ConstantScorer::Score(std::span<const Candidate> candidates) {
  return std::vector<double>(candidates.size(), value_);
}

std::vector<double> LemmaScorer::Score(std::span<const Candidate> candidates) {
  static const PairHeads kNoHeads;
  std::vector<double> out;
  out.reserve(candidates.size());
  for (const Candidate& c : candidates) {
    auto it = heads_.find(c.pair->pair_id);
    const PairHeads& heads = it == heads_.end() ? kNoHeads : it->second;
    out.push_back(
        LemmaCriterion(*c.left, c.pair->a, *c.right, c.pair->b, heads) ? 1.0 : 0.0);
  }
  return out;
}

GoldOracleScorer::GoldOracleScorer(const std::vector<AlignmentSet>& gold) {
  for (const AlignmentSet& set : gold) {
    auto& edges = edges_[set.pair_id];
    for (const Alignment& a : set.alignments) {
      if (a.is_one_to_one()) edges.insert({*a.left.begin(), *a.right.begin()});
    }
  }
}

std::vector<double> GoldOracleScorer::Score(std::span<const Candidate> candidates) {
  std::vector<double> out;
  out.reserve(candidates.size());
  for (const Candidate& c : candidates) {
    auto it = edges_.find(c.pair->pair_id);
    const bool hit =
        it != edges_.end() && it->second.count({c.left->qa_id, c.right->qa_id}) > 0;
    out.push_back(hit ? 1.0 : 0.0);
  }
  return out;
}

namespace {

std::string Describe(std::span<const Candidate> candidates) {
  std::string out;
  const std::size_t shown = std::min<std::size_t>(candidates.size(), 8);
  for (std::size_t i = 0; i < shown; ++i) {
    const Candidate& c = candidates[i];
    if (!out.empty()) out += ", ";
    out += c.pair->pair_id + ":" + c.left->qa_id + "/" + c.right->qa_id;
  }
  if (shown < candidates.size()) {
    out += ", ... (" + std::to_string(candidates.size()) + " total)";
  }
  return out;
}

std::vector<double> CheckedScore(std::span<const Candidate> candidates,
                                 Scorer& scorer) {
  std::vector<double> scores;
  try {
    scores = scorer.Score(candidates);
  } catch (const std::exception& e) {
    throw ScorerError(std::string(e.what()) + " [candidates: " +
                      Describe(candidates) + "]");
  }
  if (scores.size() != candidates.size()) {
    throw ScorerError("scorer returned " + std::to_string(scores.size()) +
                      " scores for " + std::to_string(candidates.size()) +
                      " candidates [candidates: " + Describe(candidates) + "]");
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!(scores[i] >= 0.0 && scores[i] <= 1.0)) {
      throw ScorerError("score outside [0, 1] for candidate " +
                        Describe(candidates.subspan(i, 1)));
    }
  }
  return scores;
}

std::vector<ScoredEdge> ToEdges(std::span<const Candidate> candidates,
                                const std::vector<double>& scores,
                                std::size_t offset) {
  std::vector<ScoredEdge> out;
  out.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out.push_back({candidates[i].left->qa_id, candidates[i].right->qa_id,
                   scores[offset + i]});
  }
  return out;
}

}  // namespace

std::vector<ScoredEdge> ScoreAll(const SentencePairInstance& pair, Scorer& scorer) {
  const std::vector<Candidate> candidates = BuildCandidates(pair);
  if (candidates.empty()) return {};
  return ToEdges(candidates, CheckedScore(candidates, scorer), 0);
}

std::vector<std::vector<ScoredEdge>> ScoreCorpus(
    const std::vector<SentencePairInstance>& pairs, Scorer& scorer) {
  std::vector<Candidate> all;
  std::vector<std::size_t> starts;
  for (const SentencePairInstance& pair : pairs) {
    starts.push_back(all.size());
    std::vector<Candidate> c = BuildCandidates(pair);
    all.insert(all.end(), std::make_move_iterator(c.begin()),
               std::make_move_iterator(c.end()));
  }
  starts.push_back(all.size());
  const std::vector<double> scores =
      all.empty() ? std::vector<double>{} : CheckedScore(all, scorer);
  std::vector<std::vector<ScoredEdge>> out;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    std::span<const Candidate> slice(all.data() + starts[p], starts[p + 1] - starts[p]);
    out.push_back(ToEdges(slice, scores, starts[p]));
  }
  return out;
}

}  // namespace qalign
