#include "qalign/validate.h"

#include <map>
#include <set>

namespace qalign {

std::string Violation::ToString() const {
  return std::string(severity == Severity::kError ? "error" : "warning") +
         ": " + field + ": " + message;
}

bool HasErrors(const std::vector<Violation>& violations) {
  for (const Violation& v : violations) {
    if (v.severity == Severity::kError) return true;
  }
  return false;
}

std::vector<Violation> ValidateSentence(const SentenceText& sentence,
                                        const std::string& prefix) {
  std::vector<Violation> out;
  if (sentence.tokens.empty()) {
    out.push_back({Severity::kError, prefix + ".tokens", "sentence has no tokens"});
  }
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (sentence.tokens[i].empty()) {
      out.push_back({Severity::kError,
                     prefix + ".tokens[" + std::to_string(i) + "]",
                     "empty token"});
    }
  }
  return out;
}

std::vector<Violation> ValidateQa(const QARelation& qa,
                                  const SentenceText& sentence,
                                  const std::string& prefix) {
  std::vector<Violation> out;
  const int n = static_cast<int>(sentence.tokens.size());
  if (qa.predicate_index < 0 || qa.predicate_index >= n) {
    out.push_back({Severity::kError, prefix + ".predicate_index",
                   "index " + std::to_string(qa.predicate_index) +
                       " outside sentence of " + std::to_string(n) + " tokens"});
  }
  const int q = static_cast<int>(qa.question_tokens.size());
  if (qa.question_predicate_index < 0 || qa.question_predicate_index >= q) {
    out.push_back({Severity::kError, prefix + ".question_predicate_index",
                   "index " + std::to_string(qa.question_predicate_index) +
                       " outside question of " + std::to_string(q) + " tokens"});
  }
  if (qa.answers.empty()) {
    out.push_back({Severity::kError, prefix + ".answers", "no answer spans"});
  }
  for (std::size_t i = 0; i < qa.answers.size(); ++i) {
    const AnswerSpan& span = qa.answers[i];
    if (!span.ValidFor(sentence.tokens.size())) {
      out.push_back({Severity::kError,
                     prefix + ".answers[" + std::to_string(i) + "]",
                     "span [" + std::to_string(span.start) + "," +
                         std::to_string(span.end) + ") invalid for sentence of " +
                         std::to_string(n) + " tokens"});
    }
  }
  return out;
}

namespace {

void ValidateSide(const std::vector<QARelation>& qas,
                  const SentenceText& sentence, const std::string& side,
                  std::vector<Violation>* out) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < qas.size(); ++i) {
    const std::string prefix = side + "[" + std::to_string(i) + "]";
    const QARelation& qa = qas[i];
    if (qa.qa_id.empty()) {
      out->push_back({Severity::kError, prefix + ".qa_id", "empty qa_id"});
    } else if (!seen.insert(qa.qa_id).second) {
      out->push_back({Severity::kError, prefix + ".qa_id",
                      "duplicate qa_id '" + qa.qa_id + "'"});
    }
    for (Violation& v : ValidateQa(qa, sentence, prefix)) {
      out->push_back(std::move(v));
    }
  }
}

}  // namespace

std::vector<Violation> ValidatePair(const SentencePairInstance& pair) {
  std::vector<Violation> out;
  if (pair.pair_id.empty()) {
    out.push_back({Severity::kError, "pair_id", "empty pair_id"});
  }
  for (Violation& v : ValidateSentence(pair.a, "a")) out.push_back(std::move(v));
  for (Violation& v : ValidateSentence(pair.b, "b")) out.push_back(std::move(v));
  ValidateSide(pair.qas_a, pair.a, "qas_a", &out);
  ValidateSide(pair.qas_b, pair.b, "qas_b", &out);
  return out;
}

std::vector<Violation> ValidateAlignmentSet(const AlignmentSet& set,
                                            const SentencePairInstance& pair) {
  std::vector<Violation> out;
  if (set.pair_id != pair.pair_id) {
    out.push_back({Severity::kError, "pair_id",
                   "alignment set for '" + set.pair_id +
                       "' checked against pair '" + pair.pair_id + "'"});
  }
  const bool must_be_one_to_one = set.provenance != Provenance::kGold;
  std::map<std::string, int> left_uses;
  std::map<std::string, int> right_uses;
  std::set<Alignment> seen;
  for (std::size_t i = 0; i < set.alignments.size(); ++i) {
    const std::string prefix = "alignments[" + std::to_string(i) + "]";
    const Alignment& al = set.alignments[i];
    if (al.left.empty()) {
      out.push_back({Severity::kError, prefix + ".left", "empty side"});
    }
    if (al.right.empty()) {
      out.push_back({Severity::kError, prefix + ".right", "empty side"});
    }
    for (const QaId& id : al.left) {
      if (pair.FindA(id) == nullptr) {
        out.push_back({Severity::kError, prefix + ".left",
                       "unknown side-A qa_id '" + id + "'"});
      }
      ++left_uses[id];
    }
    for (const QaId& id : al.right) {
      if (pair.FindB(id) == nullptr) {
        out.push_back({Severity::kError, prefix + ".right",
                       "unknown side-B qa_id '" + id + "'"});
      }
      ++right_uses[id];
    }
    if (!seen.insert(al).second) {
      out.push_back({Severity::kError, prefix, "duplicate alignment"});
    }
    if (must_be_one_to_one && !al.is_one_to_one()) {
      out.push_back({Severity::kError, prefix,
                     "many-to-many alignment in a " +
                         std::string(ToString(set.provenance)) + " set"});
    }
  }

  Severity reuse_severity;
  switch (set.provenance) {
    case Provenance::kModel:
      reuse_severity = Severity::kError;
      break;
    case Provenance::kGold:
      reuse_severity = Severity::kWarning;
      break;
    default:
      return out;
  }
  for (const auto& [id, uses] : left_uses) {
    if (uses > 1) {
      out.push_back({reuse_severity, "alignments",
                     "side-A qa_id '" + id + "' used in " +
                         std::to_string(uses) + " alignments"});
    }
  }
  for (const auto& [id, uses] : right_uses) {
    if (uses > 1) {
      out.push_back({reuse_severity, "alignments",
                     "side-B qa_id '" + id + "' used in " +
                         std::to_string(uses) + " alignments"});
    }
  }
  return out;
}

}  // namespace qalign
