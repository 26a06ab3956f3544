#include "doctest.h"
#include "qalign/eval.h"
#include "selfcheck/generators.h"
#include "selfcheck/oracles.h"

using namespace qalign;

namespace {

AlignmentSet Set(const std::string& pair_id, std::vector<Alignment> alignments) {
  return AlignmentSet{pair_id, std::move(alignments), Provenance::kGold};
}

const Alignment kX = Alignment::OneToOne("a1", "b1");
const Alignment kY = Alignment::OneToOne("a2", "b2");
const Alignment kZ = Alignment::OneToOne("a3", "b3");
const Alignment kW = Alignment({"a4", "a5"}, {"b4"});

}  // namespace

TEST_CASE("exact match examples") {
  const PRF same = ExactMatchF1(Set("p", {kX, kY, kZ}), Set("p", {kX, kY, kZ}));
  CHECK(same.precision == 1.0);
  CHECK(same.recall == 1.0);
  CHECK(same.f1 == 1.0);

  const PRF r = ExactMatchF1(Set("p", {kX, kY}), Set("p", {kX, kZ, kW}));
  CHECK(r.tp == 1);
  CHECK(r.fp == 1);
  CHECK(r.fn == 2);
  CHECK(r.precision == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.recall == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(r.f1 == doctest::Approx(0.4).epsilon(1e-15));

  const PRF empty = ExactMatchF1(Set("p", {}), Set("p", {}));
  CHECK(empty.f1 == 1.0);

  const PRF no_pred = ExactMatchF1(Set("p", {}), Set("p", {kX}));
  CHECK(no_pred.precision == 1.0);
  CHECK(no_pred.recall == 0.0);
  CHECK(no_pred.f1 == 0.0);

  CHECK_THROWS_AS(ExactMatchF1(Set("p", {}), Set("q", {})), EvalError);
}

TEST_CASE("many-to-many gold is a recall miss for 1:1 predictions") {
  const PRF r = ExactMatchF1(Set("p", {Alignment::OneToOne("a4", "b4")}), Set("p", {kW}));
  CHECK(r.tp == 0);
  CHECK(r.fp == 1);
  CHECK(r.fn == 1);
}

TEST_CASE("duplicates count once") {
  const PRF r = ExactMatchF1(Set("p", {kX, kX}), Set("p", {kX}));
  CHECK(r.tp == 1);
  CHECK(r.fp == 0);
  CHECK(r.fn == 0);
}

TEST_CASE("corpus examples") {
  const CorpusF1Result perfect =
      CorpusF1({Set("p1", {kX}), Set("p2", {kY})}, {Set("p1", {kX}), Set("p2", {kY})});
  CHECK(perfect.micro.f1 == 1.0);
  CHECK(perfect.warnings.empty());

  // pair1 tp1 fp1 fn0, pair2 tp0 fp0 fn1.
  const CorpusF1Result mixed =
      CorpusF1({Set("p1", {kX, kY}), Set("p2", {})}, {Set("p1", {kX}), Set("p2", {kZ})});
  CHECK(mixed.micro.tp == 1);
  CHECK(mixed.micro.fp == 1);
  CHECK(mixed.micro.fn == 1);
  CHECK(mixed.micro.precision == 0.5);
  CHECK(mixed.micro.recall == 0.5);
  CHECK(mixed.micro.f1 == 0.5);

  const CorpusF1Result empty = CorpusF1({}, {});
  CHECK(empty.micro.f1 == 1.0);
  CHECK(!empty.warnings.empty());

  const CorpusF1Result one_sided = CorpusF1({Set("p1", {kX})}, {});
  CHECK(one_sided.micro.fp == 1);
  REQUIRE(one_sided.warnings.size() == 1);
  CHECK(one_sided.warnings[0].find("p1") != std::string::npos);
}

TEST_CASE("agreement examples") {
  const Agreement same = Agree(Set("p", {kX, kY}), Set("p", {kY, kX}));
  CHECK(same.f1 == 1.0);
  CHECK(same.full_agreement);

  const Agreement disjoint = Agree(Set("p", {kX}), Set("p", {kY}));
  CHECK(disjoint.f1 == 0.0);
  CHECK(!disjoint.full_agreement);

  const Agreement partial = Agree(Set("p", {kX, kY}), Set("p", {kX}));
  CHECK(partial.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(!partial.full_agreement);
}

TEST_CASE("coverage examples") {
  CHECK(Coverage(Set("p", {kX}), Set("p", {kX, kY})) == 1.0);
  CHECK(IsCovered(Alignment::OneToOne("a4", "b4"), Set("p", {kW})));
  CHECK(IsCovered(Alignment({"a4", "a5"}, {"b4"}), Set("p", {kW})));
  CHECK(!IsCovered(Alignment({"a4", "a6"}, {"b4"}), Set("p", {kW})));
  CHECK(!IsCovered(Alignment::OneToOne("a4", "b5"), Set("p", {kW})));
  CHECK(Coverage(Set("p", {}), Set("p", {kX})) == 1.0);
  CHECK(Coverage(Set("p", {kX, kY}), Set("p", {kX})) == 0.5);
  const CoverageCounts c = CountCovered(Set("p", {kX, kX, kY}), Set("p", {kY}));
  CHECK(c.covered == 1);
  CHECK(c.total == 2);
}

TEST_CASE("metric properties on random sets") {
  gen::Rng rng(43);
  for (int i = 0; i < 500; ++i) {
    const AlignmentSet a = gen::RandomAlignmentSet(rng, "p", 6);
    const AlignmentSet b = gen::PerturbedCopy(rng, a);
    INFO("case " << i);

    CHECK(ExactMatchF1(a, a).f1 == 1.0);
    CHECK(Coverage(a, a) == 1.0);
    const PRF ab = ExactMatchF1(a, b);
    const PRF ba = ExactMatchF1(b, a);
    CHECK(ab.f1 == ba.f1);
    CHECK(ab.precision == ba.recall);

    const oracle::Counts want = oracle::NaiveCounts(a, b);
    CHECK(ab.tp == want.tp);
    CHECK(ab.fp == want.fp);
    CHECK(ab.fn == want.fn);
    CHECK(std::abs(ab.f1 - oracle::NaiveF1(want)) <= 1e-12);
    CHECK(Coverage(a, b) == oracle::NaiveCoverage(a, b));

    // Adding ref alignments never lowers coverage.
    AlignmentSet bigger = b;
    const AlignmentSet extra = gen::RandomAlignmentSet(rng, "p", 3);
    bigger.alignments.insert(bigger.alignments.end(), extra.alignments.begin(),
                             extra.alignments.end());
    CHECK(Coverage(a, bigger) >= Coverage(a, b));

    CHECK(CorpusF1({a}, {b}).micro.f1 == ab.f1);
  }
}

TEST_CASE("evaluate report") {
  const std::vector<AlignmentSet> preds = {Set("p2", {kX}), Set("p1", {kX, kY})};
  const std::vector<AlignmentSet> golds = {Set("p1", {kX}), Set("p2", {kX})};
  const EvalReport r = Evaluate(preds, golds);
  REQUIRE(r.per_pair.size() == 2);
  CHECK(r.per_pair[0].pair_id == "p1");
  CHECK(r.per_pair[1].pair_id == "p2");
  CHECK(!r.per_pair[0].full_agreement);
  CHECK(r.per_pair[1].full_agreement);
  CHECK(r.full_agreement_rate == 0.5);
  CHECK(r.corpus.tp == 2);
  CHECK(r.corpus.fp == 1);
  CHECK(r.corpus.fn == 0);
  CHECK(r.mean_pair_f1 == doctest::Approx((2.0 / 3.0 + 1.0) / 2.0).epsilon(1e-15));
  CHECK(r.pred_covered_by_gold == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(r.gold_covered_by_pred == 1.0);
  CHECK(r.warnings.empty());
}
