#include "doctest.h"
#include "qalign/ecb_induce.h"
#include "qalign/eval.h"
#include "selfcheck/fixtures.h"
#include "selfcheck/generators.h"
#include "selfcheck/oracles.h"

using namespace qalign;

namespace {

oracle::EdgeList Edges(const AlignmentSet& set) {
  oracle::EdgeList out;
  for (const Alignment& a : set.alignments) {
    REQUIRE(a.is_one_to_one());
    out.emplace_back(*a.left.begin(), *a.right.begin());
  }
  return out;
}

// Random mentions over both sentences, spread over two clusters per kind.
CorefAnnotation RandomCoref(gen::Rng& rng, const SentencePairInstance& p) {
  CorefAnnotation c;
  c.doc_ids = {p.a.doc_id, p.b.doc_id};
  std::uniform_int_distribution<int> count(0, 8);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<CorefCluster> clusters = {{"ev0", MentionKind::kEvent, {}},
                                        {"ev1", MentionKind::kEvent, {}},
                                        {"en0", MentionKind::kEntity, {}},
                                        {"en1", MentionKind::kEntity, {}}};
  int next = 0;
  for (const SentenceText* s : {&p.a, &p.b}) {
    const int len = static_cast<int>(s->tokens.size());
    for (int k = count(rng); k > 0; --k) {
      const int start = std::uniform_int_distribution<int>(0, len - 1)(rng);
      const int end = std::uniform_int_distribution<int>(start + 1, std::min(len, start + 3))(rng);
      Mention m;
      m.mention_id = "m" + std::to_string(next++);
      m.doc_id = s->doc_id;
      m.sent_id = s->sent_id;
      m.span = {start, end};
      const bool event = coin(rng) == 1;
      m.kind = event ? MentionKind::kEvent : MentionKind::kEntity;
      clusters[(event ? 0 : 2) + coin(rng)].mention_ids.push_back(m.mention_id);
      c.mentions.push_back(m);
    }
  }
  for (CorefCluster& cl : clusters) {
    if (!cl.mention_ids.empty()) c.clusters.push_back(cl);
  }
  return c;
}

}  // namespace

TEST_CASE("redundant mentions induce two alignments") {
  const fixtures::InductionCase f = fixtures::RedundantMentions();
  REQUIRE(ValidateCoref(f.coref).empty());
  const AlignmentSet out = Induce(f.aligned.pair, CorefIndex(f.coref));
  CHECK(out.provenance == Provenance::kEcbInduced);
  CHECK(out.pair_id == f.aligned.pair.pair_id);
  CHECK(Edges(out) == oracle::EdgeList{{"a1", "b1"}, {"a2", "b1"}});
  CHECK(Edges(out) == oracle::NaiveInduce(f.aligned.pair, f.coref));
}

TEST_CASE("charged / filed: the clausal argument is not induced") {
  const fixtures::InductionCase f = fixtures::ChargedFiled();
  REQUIRE(ValidateCoref(f.coref).empty());
  const AlignmentSet out = Induce(f.aligned.pair, CorefIndex(f.coref));
  CHECK(Edges(out) == oracle::EdgeList{{"a1", "b1"}});
  CHECK(Edges(out) == oracle::NaiveInduce(f.aligned.pair, f.coref));
  const CoverageComparison cmp = Compare(out, f.aligned.gold);
  CHECK(cmp.induced_covered_by_gold == 1.0);
  CHECK(cmp.gold_covered_by_induced == 0.5);
  CHECK(!IsCovered(Alignment::OneToOne("a2", "b2"), out));
}

TEST_CASE("no shared event cluster induces nothing") {
  fixtures::InductionCase f = fixtures::ChargedFiled();
  f.coref.clusters = {{"ent-driver", MentionKind::kEntity, {"c1", "c2"}},
                      {"evt-charge", MentionKind::kEvent, {"c3"}},
                      {"evt-file", MentionKind::kEvent, {"c4"}}};
  CHECK(Induce(f.aligned.pair, CorefIndex(f.coref)).alignments.empty());
}

TEST_CASE("missing document coverage names the doc") {
  fixtures::InductionCase f = fixtures::ChargedFiled();
  f.aligned.pair.b.doc_id = "docZ";
  try {
    Induce(f.aligned.pair, CorefIndex(f.coref));
    FAIL("expected InductionError");
  } catch (const InductionError& e) {
    CHECK(std::string(e.what()).find("docZ") != std::string::npos);
  }
  // An annotated document without mentions is covered.
  f.coref.doc_ids.push_back("docZ");
  CHECK(Induce(f.aligned.pair, CorefIndex(f.coref)).alignments.empty());
}

TEST_CASE("compare identical and strictly contained sets") {
  const AlignmentSet gold = fixtures::ChargedFiled().aligned.gold;
  const CoverageComparison same = Compare(gold, gold);
  CHECK(same.induced_covered_by_gold == 1.0);
  CHECK(same.gold_covered_by_induced == 1.0);
  AlignmentSet part = gold;
  part.alignments.pop_back();
  const CoverageComparison sub = Compare(part, gold);
  CHECK(sub.induced_covered_by_gold == 1.0);
  CHECK(sub.gold_covered_by_induced < 1.0);
}

TEST_CASE("induce equals exhaustive enumeration on random instances") {
  gen::Rng rng(47);
  int nonempty = 0;
  for (int i = 0; i < 2000; ++i) {
    const SentencePairInstance p = gen::RandomPair(rng, "p" + std::to_string(i));
    const CorefAnnotation coref = RandomCoref(rng, p);
    REQUIRE(ValidateCoref(coref).empty());
    const CorefIndex index(coref);
    const AlignmentSet out = Induce(p, index);
    INFO("instance " << i);
    CHECK(Edges(out) == oracle::NaiveInduce(p, coref));
    for (const Alignment& a : out.alignments) {
      CHECK(InductionCriterion(*p.FindA(*a.left.begin()), p.a, *p.FindB(*a.right.begin()),
                               p.b, index));
    }
    nonempty += out.alignments.empty() ? 0 : 1;
  }
  // The generator must exercise the positive branch.
  INFO("non-empty " << nonempty);
  CHECK(nonempty > 100);
}
