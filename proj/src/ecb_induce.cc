#include "qalign/ecb_induce.h"

#include <algorithm>

#include "qalign/eval.h"

namespace qalign {

namespace {

bool Intersect(const std::set<std::string>& x, const std::set<std::string>& y) {
  return std::any_of(x.begin(), x.end(),
                     [&](const std::string& c) { return y.count(c) > 0; });
}

std::set<std::string> AnswerClusters(const QARelation& qa, const SentenceText& sent,
                                     const CorefIndex& coref) {
  std::set<std::string> out;
  for (const AnswerSpan& span : qa.answers) {
    std::set<std::string> c =
        coref.ClustersOverlapping({sent.doc_id, sent.sent_id}, MentionKind::kEntity, span);
    out.insert(c.begin(), c.end());
  }
  return out;
}

}  // namespace

bool InductionCriterion(const QARelation& qa_a, const SentenceText& sent_a,
                        const QARelation& qa_b, const SentenceText& sent_b,
                        const CorefIndex& coref) {
  const std::set<std::string> ea = coref.ClustersContaining(
      {sent_a.doc_id, sent_a.sent_id}, MentionKind::kEvent, qa_a.predicate_index);
  const std::set<std::string> eb = coref.ClustersContaining(
      {sent_b.doc_id, sent_b.sent_id}, MentionKind::kEvent, qa_b.predicate_index);
  if (!Intersect(ea, eb)) return false;
  return Intersect(AnswerClusters(qa_a, sent_a, coref),
                   AnswerClusters(qa_b, sent_b, coref));
}

AlignmentSet Induce(const SentencePairInstance& pair, const CorefIndex& coref) {
  for (const SentenceText* sent : {&pair.a, &pair.b}) {
    if (!coref.CoversDoc(sent->doc_id)) {
      throw InductionError("no coreference annotation for document '" +
                           sent->doc_id + "' (pair " + pair.pair_id + ")");
    }
  }
  AlignmentSet out;
  out.pair_id = pair.pair_id;
  out.provenance = Provenance::kEcbInduced;
  for (const QARelation& qa : pair.qas_a) {
    for (const QARelation& qb : pair.qas_b) {
      if (InductionCriterion(qa, pair.a, qb, pair.b, coref)) {
        out.alignments.push_back(Alignment::OneToOne(qa.qa_id, qb.qa_id));
      }
    }
  }
  return out;
}

CoverageComparison Compare(const AlignmentSet& induced, const AlignmentSet& gold) {
  return {Coverage(induced, gold), Coverage(gold, induced)};
}

}  // namespace qalign
