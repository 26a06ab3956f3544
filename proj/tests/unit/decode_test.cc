#include <chrono>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "qalign/decode.h"
#include "qalign/scorer.h"
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

oracle::EdgeList Edges(const Matching& m) {
  return oracle::EdgeList(m.edges.begin(), m.edges.end());
}

// Always fails.
class BrokenScorer : public Scorer {
 public:
  std::vector<double> Score(std::span<const Candidate>) override {
    throw std::runtime_error("model crashed");
  }
};

class FixedScorer : public Scorer {
 public:
  explicit FixedScorer(std::vector<double> v) : v_(std::move(v)) {}
  std::vector<double> Score(std::span<const Candidate>) override { return v_; }

 private:
  std::vector<double> v_;
};

}  // namespace

TEST_CASE("decode examples") {
  const std::vector<ScoredEdge> edges = {
      {"a1", "b1", 0.9}, {"a1", "b2", 0.8}, {"a2", "b2", 0.85}};
  const AlignmentSet out = Decode("p", edges, {0.5});
  CHECK(out.provenance == Provenance::kModel);
  CHECK(out.pair_id == "p");
  CHECK(Edges(out) == oracle::EdgeList{{"a1", "b1"}, {"a2", "b2"}});
  CHECK(MaxWeightMatching(edges).total_weight == 0.9 + 0.85);

  CHECK(Decode("p", {{"a1", "b1", 0.49}}, {0.5}).alignments.empty());
  CHECK(Decode("p", {}, {0.5}).alignments.empty());
  // Scores equal to tau survive.
  CHECK(Decode("p", {{"a1", "b1", 0.5}}, {0.5}).alignments.size() == 1);
}

TEST_CASE("weight beats cardinality") {
  // Two edges of 0.3 + 0.3 versus one of 0.7.
  const std::vector<ScoredEdge> edges = {
      {"a1", "b1", 0.7}, {"a1", "b2", 0.3}, {"a2", "b1", 0.3}};
  CHECK(Edges(MaxWeightMatching(edges)) == oracle::EdgeList{{"a1", "b1"}});
}

TEST_CASE("ties prefer the lexicographically smallest edge list") {
  const std::vector<ScoredEdge> edges = {
      {"a1", "b1", 0.5}, {"a1", "b2", 0.5}, {"a2", "b1", 0.5}, {"a2", "b2", 0.5}};
  CHECK(Edges(MaxWeightMatching(edges)) == oracle::EdgeList{{"a1", "b1"}, {"a2", "b2"}});
  const std::vector<ScoredEdge> star = {{"a2", "b1", 0.75}, {"a1", "b1", 0.75}};
  CHECK(Edges(MaxWeightMatching(star)) == oracle::EdgeList{{"a1", "b1"}});
  // A zero-weight edge adds nothing and the empty list sorts first.
  CHECK(MaxWeightMatching({{"a1", "b1", 0.0}}).edges.empty());
  CHECK(Edges(MaxWeightMatching({{"a1", "b1", 0.25}})).size() == 1);
}

TEST_CASE("dyadic weights: edges and tie-break equal brute force exactly") {
  gen::Rng rng(17);
  for (int g = 0; g < 1500; ++g) {
    const std::vector<ScoredEdge> edges = gen::RandomDyadicGraph(rng, 5);
    const oracle::BruteMatching want = oracle::BruteForceMatching(edges, 0.5);
    const AlignmentSet got = Decode("p", edges, {0.5});
    INFO("graph " << g);
    CHECK(Edges(got) == want.edges);
  }
}

TEST_CASE("random graphs: weight equals brute force") {
  gen::Rng rng(23);
  for (int g = 0; g < 500; ++g) {
    const std::vector<ScoredEdge> edges = gen::RandomGraph(rng, 6);
    const Matching m = MaxWeightMatching(Threshold(edges, 0.3));
    CHECK(m.total_weight == oracle::BruteForceMatching(edges, 0.3).weight);
  }
}

TEST_CASE("decode output is node-disjoint and above tau") {
  gen::Rng rng(29);
  for (int g = 0; g < 300; ++g) {
    const std::vector<ScoredEdge> edges = gen::RandomGraph(rng, 7);
    const double tau = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const AlignmentSet out = Decode("p", edges, {tau});
    std::set<QaId> left, right;
    for (const auto& [l, r] : Edges(out)) {
      CHECK(left.insert(l).second);
      CHECK(right.insert(r).second);
      bool found = false;
      for (const ScoredEdge& e : edges) {
        found = found || (e.left_qa == l && e.right_qa == r && e.score >= tau);
      }
      CHECK(found);
    }
  }
}

TEST_CASE("threshold surviving sets shrink as tau grows") {
  gen::Rng rng(31);
  for (int g = 0; g < 200; ++g) {
    const std::vector<ScoredEdge> edges = gen::RandomGraph(rng, 6);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double t1 = unit(rng), t2 = unit(rng);
    if (t2 < t1) std::swap(t1, t2);
    const auto low = Threshold(edges, t1);
    for (const ScoredEdge& e : Threshold(edges, t2)) {
      CHECK(std::find(low.begin(), low.end(), e) != low.end());
    }
  }
}

TEST_CASE("duplicate edges keep their highest score") {
  const std::vector<ScoredEdge> edges = {
      {"a1", "b1", 0.2}, {"a1", "b1", 0.9}, {"a2", "b1", 0.6}};
  const Matching m = MaxWeightMatching(edges);
  CHECK(Edges(m) == oracle::EdgeList{{"a1", "b1"}});
  CHECK(m.total_weight == 0.9);
}

TEST_CASE("decode rejects bad input") {
  CHECK_THROWS_AS(Decode("p", {{"a", "b", 1.5}}, {0.5}), DecodeError);
  CHECK_THROWS_AS(Decode("p", {{"a", "b", -0.1}}, {0.5}), DecodeError);
  CHECK_THROWS_AS(Decode("p", {{"a", "b", std::nan("")}}, {0.5}), DecodeError);
  CHECK_THROWS_AS(Decode("p", {}, {1.5}), DecodeError);
  CHECK_THROWS_AS(MaxWeightMatching({{"a", "b", -1.0}}), DecodeError);
}

TEST_CASE("30 by 30 graph decodes quickly") {
  gen::Rng rng(37);
  std::vector<ScoredEdge> edges;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 30; ++i) {
    for (int j = 0; j < 30; ++j) {
      edges.push_back({"a" + std::to_string(i), "b" + std::to_string(j), unit(rng)});
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const AlignmentSet out = Decode("p", edges, {0.5});
  const double s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(s < 5.0);
  CHECK(out.alignments.size() <= 30);
  CHECK(out.alignments.size() >= 20);
}

TEST_CASE("score_all") {
  const SentencePairInstance p = fixtures::FiredCoach().pair;  // 3 x 3
  ConstantScorer constant(0.7);
  const std::vector<ScoredEdge> edges = ScoreAll(p, constant);
  REQUIRE(edges.size() == 9);
  for (const ScoredEdge& e : edges) CHECK(e.score == 0.7);
  CHECK(edges[0].left_qa == "a1");
  CHECK(edges[0].right_qa == "b1");
  CHECK(edges[1].right_qa == "b2");
  CHECK(edges[3].left_qa == "a2");

  SentencePairInstance two = p;
  two.qas_b.pop_back();
  CHECK(ScoreAll(two, constant).size() == 6);
  SentencePairInstance empty = p;
  empty.qas_a.clear();
  CHECK(ScoreAll(empty, constant).empty());

  CHECK_THROWS_AS(ConstantScorer(1.2), ScorerError);
  CHECK(Decode(p.pair_id, edges, {0.5}).alignments.size() == 3);
  ConstantScorer low(0.3);
  CHECK(Decode(p.pair_id, ScoreAll(p, low), {0.5}).alignments.empty());
}

TEST_CASE("candidates are sorted by qa id and serialized") {
  SentencePairInstance p = fixtures::FiredCoach().pair;
  std::reverse(p.qas_a.begin(), p.qas_a.end());
  const std::vector<Candidate> c = BuildCandidates(p);
  REQUIRE(c.size() == 9);
  CHECK(c[0].left->qa_id == "a1");
  CHECK(c[8].left->qa_id == "a3");
  CHECK(c[8].right->qa_id == "b3");
  CHECK(c[0].text_a.rfind("Who did someone [P] fire [/P] ?", 0) == 0);
  CHECK(c[0].pair == &p);
}

TEST_CASE("scorer failures name candidates") {
  const SentencePairInstance p = fixtures::PurchaseSale().pair;
  BrokenScorer broken;
  try {
    ScoreAll(p, broken);
    FAIL("expected ScorerError");
  } catch (const ScorerError& e) {
    const std::string what = e.what();
    CHECK(what.find("model crashed") != std::string::npos);
    CHECK(what.find("a1") != std::string::npos);
    CHECK(what.find("b2") != std::string::npos);
  }
  FixedScorer out_of_range({0.1, 0.2, 1.7, 0.3});
  try {
    ScoreAll(p, out_of_range);
    FAIL("expected ScorerError");
  } catch (const ScorerError& e) {
    const std::string what = e.what();
    CHECK(what.find("a2") != std::string::npos);  // third candidate: a2-b1
    CHECK(what.find("b1") != std::string::npos);
  }
  FixedScorer short_list({0.1});
  CHECK_THROWS_AS(ScoreAll(p, short_list), ScorerError);
}

TEST_CASE("gold oracle scorer with decode reproduces gold") {
  for (const auto& c : fixtures::AllAlignedPairs()) {
    GoldOracleScorer oracle_scorer({c.gold});
    const AlignmentSet out = Decode(c.pair.pair_id, ScoreAll(c.pair, oracle_scorer), {0.5});
    std::set<Alignment> want(c.gold.alignments.begin(), c.gold.alignments.end());
    std::set<Alignment> got(out.alignments.begin(), out.alignments.end());
    CHECK(got == want);
  }
  // Many-to-many gold never scores.
  const auto c = fixtures::FiredCoach();
  AlignmentSet m2m = c.gold;
  m2m.alignments = {Alignment({"a1", "a2"}, {"b1"})};
  GoldOracleScorer scorer({m2m});
  for (const ScoredEdge& e : ScoreAll(c.pair, scorer)) CHECK(e.score == 0.0);
}

TEST_CASE("lemma scorer mirrors the lemma criterion") {
  const auto c = fixtures::FiredCoach();
  LemmaScorer scorer;
  const auto edges = ScoreAll(c.pair, scorer);
  int ones = 0;
  for (const ScoredEdge& e : edges) {
    if (e.score == 1.0) {
      ++ones;
      CHECK(e.left_qa == "a1");
      CHECK(e.right_qa == "b1");
    }
  }
  CHECK(ones == 1);
}

TEST_CASE("score_corpus batches across pairs") {
  std::vector<SentencePairInstance> pairs;
  for (const auto& c : fixtures::AllAlignedPairs()) pairs.push_back(c.pair);
  ConstantScorer scorer(0.6);
  const auto all = ScoreCorpus(pairs, scorer);
  REQUIRE(all.size() == pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    CHECK(all[i] == ScoreAll(pairs[i], scorer));
  }
}
