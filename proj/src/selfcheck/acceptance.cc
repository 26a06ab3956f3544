#include "selfcheck/acceptance.h"

#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>

#include "qalign/dataset.h"
#include "qalign/decode.h"
#include "qalign/ecb_induce.h"
#include "qalign/eval.h"
#include "qalign/fusion.h"
#include "qalign/jsonl.h"
#include "qalign/lemma.h"
#include "qalign/scorer.h"
#include "qalign/text_util.h"
#include "selfcheck/fixtures.h"
#include "selfcheck/generators.h"
#include "selfcheck/oracles.h"

namespace qalign::acceptance {

namespace {

// Collects the first few failure messages of a check.
class Failures {
 public:
  void Add(const std::string& message) {
    ++count_;
    if (first_.size() < 3) first_.push_back(message);
  }
  bool empty() const { return count_ == 0; }
  std::string Summary() const {
    std::ostringstream out;
    out << count_ << " failure(s)";
    for (const std::string& m : first_) out << "; " << m;
    return out.str();
  }

 private:
  int count_ = 0;
  std::vector<std::string> first_;
};

std::string Str(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

std::string EdgesStr(const oracle::EdgeList& edges) {
  std::string out = "{";
  for (const auto& [l, r] : edges) {
    if (out.size() > 1) out += ",";
    out += l + "-" + r;
  }
  return out + "}";
}

oracle::EdgeList EdgesOf(const AlignmentSet& set) {
  oracle::EdgeList out;
  for (const Alignment& a : set.alignments) {
    if (a.is_one_to_one()) out.emplace_back(*a.left.begin(), *a.right.begin());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Result Finish(std::string id, std::string name, const Failures& failures,
              std::string ok_detail) {
  Result r;
  r.id = std::move(id);
  r.name = std::move(name);
  r.status = failures.empty() ? Status::kPass : Status::kFail;
  r.detail = failures.empty() ? std::move(ok_detail) : failures.Summary();
  return r;
}

Result DecoderOracle(std::uint64_t seed) {
  gen::Rng rng(seed ^ 0xA1);
  Failures failures;
  const double tau = 0.5;
  const auto start = std::chrono::steady_clock::now();
  int nonempty = 0;
  for (int g = 0; g < 1000; ++g) {
    const std::vector<ScoredEdge> edges = gen::RandomGraph(rng, 6);
    const AlignmentSet decoded = Decode("g" + std::to_string(g), edges, {tau});
    std::map<std::pair<QaId, QaId>, double> score;
    for (const ScoredEdge& e : edges) score[{e.left_qa, e.right_qa}] = e.score;
    std::vector<ScoredEdge> chosen;
    for (const auto& [l, r] : EdgesOf(decoded)) chosen.push_back({l, r, score[{l, r}]});
    const double got = SortedSum(chosen);
    const oracle::BruteMatching want = oracle::BruteForceMatching(edges, tau);
    if (!chosen.empty()) ++nonempty;
    if (got != want.weight) {
      failures.Add("graph " + std::to_string(g) + ": decode " + Str(got) +
                   " != brute force " + Str(want.weight));
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 10.0) failures.Add("runtime " + Str(seconds) + " s >= 10 s");
  std::ostringstream detail;
  detail << "1000 graphs equal to brute force (" << nonempty
         << " with a non-empty matching), " << seconds << " s";
  return Finish("A1", "decoder_oracle_equivalence", failures, detail.str());
}

Result PerfectOracle(std::uint64_t seed) {
  Failures failures;
  std::vector<fixtures::AlignedPair> cases = fixtures::AllAlignedPairs();
  // Random pairs with a random node-disjoint gold matching.
  gen::Rng rng(seed ^ 0xA2);
  for (int i = 0; i < 50; ++i) {
    fixtures::AlignedPair c;
    c.pair = gen::RandomPair(rng, "random-" + std::to_string(i));
    c.gold.pair_id = c.pair.pair_id;
    std::vector<std::size_t> right(c.pair.qas_b.size());
    for (std::size_t k = 0; k < right.size(); ++k) right[k] = k;
    std::shuffle(right.begin(), right.end(), rng);
    for (std::size_t k = 0; k < c.pair.qas_a.size() && k < right.size(); ++k) {
      if (std::bernoulli_distribution(0.7)(rng)) {
        c.gold.alignments.push_back(Alignment::OneToOne(
            c.pair.qas_a[k].qa_id, c.pair.qas_b[right[k]].qa_id));
      }
    }
    cases.push_back(std::move(c));
  }
  std::vector<AlignmentSet> golds;
  for (const auto& c : cases) golds.push_back(c.gold);
  GoldOracleScorer scorer(golds);
  for (const auto& c : cases) {
    const AlignmentSet decoded = Decode(c.pair.pair_id, ScoreAll(c.pair, scorer), {0.5});
    AlignmentSet gold_1to1 = c.gold;
    std::erase_if(gold_1to1.alignments,
                  [](const Alignment& a) { return !a.is_one_to_one(); });
    const PRF prf = ExactMatchF1(decoded, gold_1to1);
    if (prf.f1 != 1.0) {
      failures.Add(c.pair.pair_id + ": F1 " + Str(prf.f1) + ", decoded " +
                   EdgesStr(EdgesOf(decoded)) + " gold " + EdgesStr(EdgesOf(gold_1to1)));
    }
  }
  return Finish("A2", "perfect_oracle_identity", failures,
                std::to_string(cases.size()) + " pairs reproduced with F1 = 1.0");
}

Result MetricOracles(std::uint64_t seed) {
  gen::Rng rng(seed ^ 0xA3);
  Failures failures;
  for (int i = 0; i < 500; ++i) {
    const std::string id = "p" + std::to_string(i);
    AlignmentSet x = gen::RandomAlignmentSet(rng, id, 8);
    AlignmentSet y = std::bernoulli_distribution(0.7)(rng)
                         ? gen::PerturbedCopy(rng, x)
                         : gen::RandomAlignmentSet(rng, id, 8);
    const PRF got = ExactMatchF1(x, y);
    const oracle::Counts want = oracle::NaiveCounts(x, y);
    const std::string at = "pair " + std::to_string(i) + ": ";
    if (got.tp != want.tp || got.fp != want.fp || got.fn != want.fn) {
      failures.Add(at + "counts differ from the naive comparison");
    }
    // Counts are compared exactly; F1 comes from two different formulas.
    if (std::abs(got.f1 - oracle::NaiveF1(want)) > 1e-12) {
      failures.Add(at + "F1 " + Str(got.f1) + " vs harmonic mean " +
                   Str(oracle::NaiveF1(want)));
    }
    if (Coverage(x, y) != oracle::NaiveCoverage(x, y) ||
        Coverage(y, x) != oracle::NaiveCoverage(y, x)) {
      failures.Add(at + "coverage differs from the naive comparison");
    }
    if (ExactMatchF1(x, x).f1 != 1.0 || ExactMatchF1(y, y).f1 != 1.0) {
      failures.Add(at + "F1(x, x) != 1");
    }
    if (ExactMatchF1(y, x).f1 != got.f1) failures.Add(at + "F1 not symmetric");
  }
  return Finish("A3", "metric_oracles", failures,
                "500 set pairs: counts and coverage exact, F1 within 1e-12, "
                "self-F1 = 1, symmetric");
}

Result RougeChecks(std::uint64_t seed) {
  Failures failures;
  const double fixed = Rouge2(fixtures::Split("a b c d"), fixtures::Split("b c e"));
  if (fixed != 0.4) failures.Add("rouge2(a b c d, b c e) = " + Str(fixed));
  gen::Rng rng(seed ^ 0xA4);
  for (int i = 0; i < 200; ++i) {
    const Tokens a = gen::RandomTokens(rng, 15);
    const Tokens b = gen::RandomTokens(rng, 15);
    const std::string at = "sentence " + std::to_string(i) + ": ";
    if (std::abs(Rouge2(a, b) - Rouge2(b, a)) > 1e-9) failures.Add(at + "not symmetric");
    if (std::abs(Rouge2(a, a) - 1.0) > 1e-9) failures.Add(at + "self score != 1");
    if (std::abs(Rouge2(a, b) - oracle::NaiveRouge2(a, b)) > 1e-9) {
      failures.Add(at + "differs from naive bigram matching");
    }
  }
  return Finish("A4", "rouge2_checks", failures,
                "rouge2 = 0.4 on the fixed example; 200 sentences symmetric, "
                "self = 1, equal to naive matching");
}

Result LemmaFixtures() {
  Failures failures;
  const fixtures::AlignedPair purchase = fixtures::PurchaseSale();
  const AlignmentSet none = LemmaAlign(purchase.pair);
  if (!none.alignments.empty()) {
    failures.Add("purchase/sale pair: expected no alignments, got " +
                 EdgesStr(EdgesOf(none)));
  }
  if (purchase.gold.alignments.size() != 2) failures.Add("purchase/sale gold size != 2");
  const fixtures::AlignedPair fired = fixtures::FiredCoach();
  const AlignmentSet one = LemmaAlign(fired.pair);
  const oracle::EdgeList expected = {{"a1", "b1"}};
  if (one.alignments.size() != 1 || EdgesOf(one) != expected) {
    failures.Add("fired-coach pair: expected {a1-b1}, got " + EdgesStr(EdgesOf(one)));
  }
  std::vector<AlignmentSet> preds;
  std::vector<AlignmentSet> golds;
  for (const auto& c : fixtures::AllAlignedPairs()) {
    preds.push_back(LemmaAlign(c.pair));
    golds.push_back(c.gold);
  }
  const PRF micro = CorpusF1(preds, golds).micro;
  if (micro.precision < micro.recall) {
    failures.Add("precision " + Str(micro.precision) + " below recall " +
                 Str(micro.recall));
  }
  std::ostringstream detail;
  detail << "0 and 1 alignments as derived; fixture P " << micro.precision << " R "
         << micro.recall;
  return Finish("A5", "lemma_baseline_fixtures", failures, detail.str());
}

Result InductionFixtures() {
  Failures failures;
  const fixtures::InductionCase redundant = fixtures::RedundantMentions();
  const CorefIndex redundant_index(redundant.coref);
  const AlignmentSet got = Induce(redundant.aligned.pair, redundant_index);
  const oracle::EdgeList want = {{"a1", "b1"}, {"a2", "b1"}};
  if (EdgesOf(got) != want || got.alignments.size() != 2) {
    failures.Add("redundant mentions: expected " + EdgesStr(want) + ", got " +
                 EdgesStr(EdgesOf(got)));
  }
  if (oracle::NaiveInduce(redundant.aligned.pair, redundant.coref) != want) {
    failures.Add("redundant mentions: naive enumeration disagrees");
  }

  const fixtures::InductionCase miss = fixtures::ChargedFiled();
  const CorefIndex miss_index(miss.coref);
  const AlignmentSet induced = Induce(miss.aligned.pair, miss_index);
  const oracle::EdgeList want_miss = {{"a1", "b1"}};
  if (EdgesOf(induced) != want_miss) {
    failures.Add("charged/filed: expected " + EdgesStr(want_miss) + ", got " +
                 EdgesStr(EdgesOf(induced)));
  }
  if (oracle::NaiveInduce(miss.aligned.pair, miss.coref) != want_miss) {
    failures.Add("charged/filed: naive enumeration disagrees");
  }
  if (IsCovered(Alignment::OneToOne("a2", "b2"), induced)) {
    failures.Add("charged/filed: the clausal argument alignment is covered");
  }
  const CoverageComparison cmp = Compare(induced, miss.aligned.gold);
  if (cmp.induced_covered_by_gold != 1.0 || cmp.gold_covered_by_induced != 0.5) {
    failures.Add("charged/filed: coverage " + Str(cmp.induced_covered_by_gold) + " / " +
                 Str(cmp.gold_covered_by_induced) + ", expected 1 / 0.5");
  }
  return Finish("A6", "ecb_induction_fixtures", failures,
                "two redundant induced alignments; uncovered gold alignment as derived");
}

Result FusionChecks(std::uint64_t seed) {
  Failures failures;
  gen::Rng rng(seed ^ 0xA7);
  int marked = 0;
  for (int i = 0; i < 200; ++i) {
    const FusionInstance f = gen::RandomFusionInstance(rng, "c" + std::to_string(i));
    Tokens want;
    for (const SentenceText& s : f.sources) {
      want.insert(want.end(), s.tokens.begin(), s.tokens.end());
    }
    try {
      const std::string augmented = AugmentFusionInput(f);
      if (augmented.find("[P") != std::string::npos) ++marked;
      if (StripFusionMarkup(augmented) != want) {
        failures.Add("instance " + std::to_string(i) + ": stripped tokens differ");
      }
    } catch (const std::exception& e) {
      failures.Add("instance " + std::to_string(i) + ": " + e.what());
    }
  }
  const FusionInstance dogs = fixtures::DogsCluster();
  std::vector<Tokens> sources;
  for (const SentenceText& s : dogs.sources) sources.push_back(s.tokens);
  const ConsolidationReport fused =
      ClassifyConsolidating(fixtures::DogsFuseAlignOutput(), sources);
  const ConsolidationReport baseline =
      ClassifyConsolidating(fixtures::DogsBaselineOutput(), sources);
  if (!fused.is_consolidating) failures.Add("aligned-input output not consolidating");
  if (baseline.is_consolidating) failures.Add("baseline output classified consolidating");
  return Finish("A7", "fusion_roundtrip_and_consolidation", failures,
                "200 round-trips exact (" + std::to_string(marked) +
                    " with markup); fixture outputs classified as derived");
}

Result DatasetLemmaScores(const std::string& dir) {
  Result r{"A8", "lemma_baseline_dataset_f1", Status::kSkipped, ""};
  if (dir.empty()) {
    r.detail = "QA_ALIGN_DATASET_DIR not set";
    return r;
  }
  namespace fs = std::filesystem;
  Failures failures;
  std::ostringstream detail;
  const std::pair<const char*, double> splits[] = {{"dev", 50.0}, {"test", 45.0}};
  for (const auto& [split, target] : splits) {
    const fs::path pairs_path = fs::path(dir) / (std::string(split) + ".pairs.jsonl");
    const fs::path gold_path = fs::path(dir) / (std::string(split) + ".gold.jsonl");
    if (!fs::exists(pairs_path) || !fs::exists(gold_path)) {
      r.detail = "missing " + pairs_path.string() + " or " + gold_path.string();
      return r;
    }
    try {
      const auto pairs = ReadJsonlFile<SentencePairInstance>(pairs_path.string());
      const auto golds = ReadJsonlFile<AlignmentSet>(gold_path.string());
      std::vector<AlignmentSet> preds;
      for (const auto& p : pairs) preds.push_back(LemmaAlign(p));
      const double f1 = 100.0 * CorpusF1(preds, golds).micro.f1;
      detail << split << " F1 " << f1 << " (target " << target << " +/- 3); ";
      if (std::abs(f1 - target) > 3.0) {
        failures.Add(std::string(split) + " F1 " + Str(f1) + " outside " +
                     Str(target) + " +/- 3");
      }
    } catch (const std::exception& e) {
      failures.Add(e.what());
    }
  }
  return Finish("A8", "lemma_baseline_dataset_f1", failures, detail.str());
}

Result Guard(const std::string& id, const std::string& name,
             const std::function<Result()>& check) {
  try {
    return check();
  } catch (const std::exception& e) {
    return {id, name, Status::kFail, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<Result> RunAll(const Options& options) {
  const std::uint64_t seed = options.seed;
  return {
      Guard("A1", "decoder_oracle_equivalence", [&] { return DecoderOracle(seed); }),
      Guard("A2", "perfect_oracle_identity", [&] { return PerfectOracle(seed); }),
      Guard("A3", "metric_oracles", [&] { return MetricOracles(seed); }),
      Guard("A4", "rouge2_checks", [&] { return RougeChecks(seed); }),
      Guard("A5", "lemma_baseline_fixtures", [&] { return LemmaFixtures(); }),
      Guard("A6", "ecb_induction_fixtures", [&] { return InductionFixtures(); }),
      Guard("A7", "fusion_roundtrip_and_consolidation",
            [&] { return FusionChecks(seed); }),
      Guard("A8", "lemma_baseline_dataset_f1",
            [&] { return DatasetLemmaScores(options.dataset_dir); }),
  };
}

std::string Format(const Result& result) {
  const char* status = result.status == Status::kPass   ? "PASS"
                       : result.status == Status::kFail ? "FAIL"
                                                        : "SKIPPED";
  return std::string(status) + " " + result.id + " " + result.name + ": " + result.detail;
}

bool AllPassed(const std::vector<Result>& results) {
  for (const Result& r : results) {
    if (r.status == Status::kFail) return false;
  }
  return true;
}

}  // namespace qalign::acceptance
