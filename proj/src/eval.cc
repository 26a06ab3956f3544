#include "qalign/eval.h"

#include <algorithm>
#include <map>
#include <set>

namespace qalign {

namespace {

std::set<Alignment> Distinct(const AlignmentSet& s) {
  return {s.alignments.begin(), s.alignments.end()};
}

bool Includes(const std::set<QaId>& outer, const std::set<QaId>& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

// Pairs up prediction and gold sets by pair_id; absent sides become empty.
struct Joined {
  std::vector<std::pair<AlignmentSet, AlignmentSet>> pairs;  // (pred, gold)
  std::vector<std::string> warnings;
};

Joined Join(const std::vector<AlignmentSet>& preds,
            const std::vector<AlignmentSet>& golds) {
  std::map<std::string, const AlignmentSet*> p, g;
  Joined out;
  for (const AlignmentSet& s : preds) {
    if (!p.emplace(s.pair_id, &s).second) {
      throw EvalError("duplicate prediction for pair " + s.pair_id);
    }
  }
  for (const AlignmentSet& s : golds) {
    if (!g.emplace(s.pair_id, &s).second) {
      throw EvalError("duplicate gold for pair " + s.pair_id);
    }
  }
  std::set<std::string> ids;
  for (const auto& [id, s] : p) ids.insert(id);
  for (const auto& [id, s] : g) ids.insert(id);
  for (const std::string& id : ids) {
    AlignmentSet empty;
    empty.pair_id = id;
    auto pi = p.find(id);
    auto gi = g.find(id);
    if (pi == p.end()) out.warnings.push_back("pair " + id + " has no prediction");
    if (gi == g.end()) out.warnings.push_back("pair " + id + " has no gold");
    out.pairs.emplace_back(pi == p.end() ? empty : *pi->second,
                           gi == g.end() ? empty : *gi->second);
  }
  if (ids.empty()) out.warnings.push_back("empty corpus");
  return out;
}

}  // namespace

PRF PRF::FromCounts(long tp, long fp, long fn) {
  PRF out;
  out.tp = tp;
  out.fp = fp;
  out.fn = fn;
  out.precision = tp + fp == 0 ? 1.0 : static_cast<double>(tp) / (tp + fp);
  out.recall = tp + fn == 0 ? 1.0 : static_cast<double>(tp) / (tp + fn);
  // Equal to the harmonic mean of P and R whenever both are defined.
  const long denom = 2 * tp + fp + fn;
  out.f1 = denom == 0 ? 1.0 : static_cast<double>(2 * tp) / denom;
  return out;
}

PRF ExactMatchF1(const AlignmentSet& pred, const AlignmentSet& gold) {
  if (pred.pair_id != gold.pair_id) {
    throw EvalError("pair_id mismatch: '" + pred.pair_id + "' vs '" +
                    gold.pair_id + "'");
  }
  const std::set<Alignment> p = Distinct(pred);
  const std::set<Alignment> g = Distinct(gold);
  long tp = 0;
  for (const Alignment& a : p) tp += static_cast<long>(g.count(a));
  return PRF::FromCounts(tp, static_cast<long>(p.size()) - tp,
                         static_cast<long>(g.size()) - tp);
}

CorpusF1Result CorpusF1(const std::vector<AlignmentSet>& preds,
                        const std::vector<AlignmentSet>& golds) {
  Joined joined = Join(preds, golds);
  CorpusF1Result out;
  out.warnings = std::move(joined.warnings);
  long tp = 0, fp = 0, fn = 0;
  double f1_sum = 0.0;
  for (const auto& [p, g] : joined.pairs) {
    const PRF prf = ExactMatchF1(p, g);
    tp += prf.tp;
    fp += prf.fp;
    fn += prf.fn;
    f1_sum += prf.f1;
  }
  out.micro = PRF::FromCounts(tp, fp, fn);
  if (!joined.pairs.empty()) out.mean_pair_f1 = f1_sum / joined.pairs.size();
  return out;
}

Agreement Agree(const AlignmentSet& a1, const AlignmentSet& a2) {
  Agreement out;
  out.f1 = ExactMatchF1(a1, a2).f1;
  out.full_agreement = Distinct(a1) == Distinct(a2);
  return out;
}

bool IsCovered(const Alignment& src, const AlignmentSet& ref) {
  return std::any_of(ref.alignments.begin(), ref.alignments.end(),
                     [&](const Alignment& r) {
                       return Includes(r.left, src.left) &&
                              Includes(r.right, src.right);
                     });
}

CoverageCounts CountCovered(const AlignmentSet& src, const AlignmentSet& ref) {
  CoverageCounts out;
  for (const Alignment& a : Distinct(src)) {
    ++out.total;
    if (IsCovered(a, ref)) ++out.covered;
  }
  return out;
}

double Coverage(const AlignmentSet& src, const AlignmentSet& ref) {
  return CountCovered(src, ref).rate();
}

EvalReport Evaluate(const std::vector<AlignmentSet>& preds,
                    const std::vector<AlignmentSet>& golds) {
  Joined joined = Join(preds, golds);
  EvalReport out;
  out.warnings = std::move(joined.warnings);
  long tp = 0, fp = 0, fn = 0;
  long full = 0;
  double f1_sum = 0.0;
  CoverageCounts pred_cov, gold_cov;
  for (const auto& [p, g] : joined.pairs) {
    PairEval pe;
    pe.pair_id = g.pair_id;
    pe.prf = ExactMatchF1(p, g);
    pe.full_agreement = Agree(p, g).full_agreement;
    tp += pe.prf.tp;
    fp += pe.prf.fp;
    fn += pe.prf.fn;
    f1_sum += pe.prf.f1;
    full += pe.full_agreement ? 1 : 0;
    const CoverageCounts pc = CountCovered(p, g);
    const CoverageCounts gc = CountCovered(g, p);
    pred_cov.covered += pc.covered;
    pred_cov.total += pc.total;
    gold_cov.covered += gc.covered;
    gold_cov.total += gc.total;
    out.per_pair.push_back(std::move(pe));
  }
  out.corpus = PRF::FromCounts(tp, fp, fn);
  if (!joined.pairs.empty()) {
    const double n = static_cast<double>(joined.pairs.size());
    out.full_agreement_rate = full / n;
    out.mean_pair_f1 = f1_sum / n;
  }
  out.pred_covered_by_gold = pred_cov.rate();
  out.gold_covered_by_pred = gold_cov.rate();
  return out;
}

}  // namespace qalign
