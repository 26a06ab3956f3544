#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "qalign/fusion.h"
#include "selfcheck/fixtures.h"
#include "selfcheck/generators.h"

using namespace qalign;

namespace {

Tokens Toks(const std::string& text) { return fixtures::Split(text); }

SentenceText Source(int i, const std::string& text) {
  SentenceText s;
  s.doc_id = "d" + std::to_string(i);
  s.sent_id = "0";
  s.tokens = Toks(text);
  return s;
}

std::vector<Tokens> SourceTokens(const FusionInstance& f) {
  std::vector<Tokens> out;
  for (const SentenceText& s : f.sources) out.push_back(s.tokens);
  return out;
}

struct Node {
  MarkupKind kind;
  int source;
  AnswerSpan span;
  friend bool operator==(const Node&, const Node&) = default;
};

// Connectivity by repeated relaxation over alignment-induced edges.
std::vector<int> NaiveComponents(const FusionInstance& f, std::vector<Node>* nodes) {
  auto id_of = [&](const Node& n) {
    for (std::size_t i = 0; i < nodes->size(); ++i) {
      if ((*nodes)[i] == n) return static_cast<int>(i);
    }
    nodes->push_back(n);
    return static_cast<int>(nodes->size() - 1);
  };
  std::vector<std::pair<int, int>> links;
  for (const SourcePairAlignments& pa : f.pair_alignments) {
    for (const Alignment& al : pa.alignments) {
      std::vector<int> preds, args;
      for (int side = 0; side < 2; ++side) {
        const int source = side == 0 ? pa.first : pa.second;
        for (const QaId& id : side == 0 ? al.left : al.right) {
          for (const QARelation& qa : f.qas[source]) {
            if (qa.qa_id != id) continue;
            preds.push_back(id_of({MarkupKind::kPredicate, source,
                                   {qa.predicate_index, qa.predicate_index + 1}}));
            for (const AnswerSpan& s : qa.answers) {
              args.push_back(id_of({MarkupKind::kArgument, source, s}));
            }
          }
        }
      }
      for (int p : preds) links.emplace_back(preds.front(), p);
      for (int a : args) links.emplace_back(args.front(), a);
    }
  }
  std::vector<int> label(nodes->size());
  std::iota(label.begin(), label.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [x, y] : links) {
      const int m = std::min(label[x], label[y]);
      if (label[x] != m || label[y] != m) {
        label[x] = label[y] = m;
        changed = true;
      }
    }
  }
  return label;
}

}  // namespace

TEST_CASE("dogs cluster augmented input") {
  const FusionInstance dogs = fixtures::DogsCluster();
  REQUIRE(ValidateFusionInstance(dogs).empty());
  CHECK(AugmentFusionInput(dogs) ==
        "Law enforcement agencies [P1] use [\\P1] [A1] dogs [\\A1] worldwide. </s> "
        "Dogs perform many different law-enforcement tasks around the world. </s> "
        "City and county police agencies, customs departments, fire departments, the "
        "Secret Service, highway patrol, border patrol, military bases and some prisons "
        "in the US and many other countries [P1] use [\\P1] [A1] dogs [\\A1] to help in "
        "law enforcement work.");
}

TEST_CASE("no alignments means no markup") {
  FusionInstance f = fixtures::DogsCluster();
  f.pair_alignments.clear();
  CHECK(AugmentFusionInput(f) ==
        "Law enforcement agencies use dogs worldwide. </s> Dogs perform many different "
        "law-enforcement tasks around the world. </s> City and county police agencies, "
        "customs departments, fire departments, the Secret Service, highway patrol, "
        "border patrol, military bases and some prisons in the US and many other "
        "countries use dogs to help in law enforcement work.");
  CHECK(ComputeFusionMarkup(f).empty());
}

TEST_CASE("a chain of pairwise alignments shares one index") {
  FusionInstance f;
  f.cluster_id = "chain";
  f.sources = {Source(0, "x saw y"), Source(1, "y was seen by x"), Source(2, "z saw y")};
  f.qas = {{fixtures::MakeQa("q", 1, "Who saw ?", 1, {{0, 1}})},
           {fixtures::MakeQa("q", 2, "Who saw ?", 1, {{4, 5}})},
           {fixtures::MakeQa("q", 1, "Who saw ?", 1, {{0, 1}})}};
  f.target = Toks("x saw y");
  f.pair_alignments = {{0, 1, {Alignment::OneToOne("q", "q")}},
                       {1, 2, {Alignment::OneToOne("q", "q")}}};
  CHECK(AugmentFusionInput(f) ==
        "[A1] x [\\A1] [P1] saw [\\P1] y </s> y was [P1] seen [\\P1] by [A1] x [\\A1] </s> "
        "[A1] z [\\A1] [P1] saw [\\P1] y");
}

TEST_CASE("nested spans: outermost wins; crossing spans throw") {
  FusionInstance f;
  f.cluster_id = "nest";
  f.sources = {Source(0, "a b c d"), Source(1, "e f g h")};
  f.qas = {{fixtures::MakeQa("q1", 3, "Who ?", 0, {{0, 3}}),
            fixtures::MakeQa("q2", 3, "Who ?", 0, {{1, 2}})},
           {fixtures::MakeQa("q1", 3, "Who ?", 0, {{0, 1}}),
            fixtures::MakeQa("q2", 3, "Who ?", 0, {{1, 2}})}};
  f.target = Toks("a");
  f.pair_alignments = {{0, 1, {Alignment::OneToOne("q1", "q1"), Alignment::OneToOne("q2", "q2")}}};
  CHECK(AugmentFusionInput(f) ==
        "[A1] a b c [\\A1] [P1] d [\\P1] </s> [A1] e [\\A1] [A2] f [\\A2] g [P1] h [\\P1]");

  f.qas[0][1].answers = {{2, 4}};
  try {
    AugmentFusionInput(f);
    FAIL("expected FusionError");
  } catch (const FusionError& e) {
    const std::string what = e.what();
    CHECK(what.find("'a b c'") != std::string::npos);
    CHECK(what.find("'c d'") != std::string::npos);
  }
}

TEST_CASE("invalid instances are rejected") {
  FusionInstance f = fixtures::DogsCluster();
  f.pair_alignments[0].alignments = {Alignment::OneToOne("q9", "q1")};
  CHECK_THROWS_AS(AugmentFusionInput(f), FusionError);
  FusionInstance one = fixtures::DogsCluster();
  one.sources.resize(1);
  one.qas.resize(1);
  one.pair_alignments.clear();
  CHECK(!ValidateFusionInstance(one).empty());
}

TEST_CASE("random instances: round trip and index consistency") {
  gen::Rng rng(59);
  for (int i = 0; i < 300; ++i) {
    const FusionInstance f = gen::RandomFusionInstance(rng, "c" + std::to_string(i));
    INFO("instance " << i);
    Tokens all;
    for (const SentenceText& s : f.sources) all.insert(all.end(), s.tokens.begin(), s.tokens.end());
    CHECK(StripFusionMarkup(AugmentFusionInput(f)) == all);
    CHECK(AugmentFusionInput(f) == AugmentFusionInput(f));

    std::vector<Node> nodes;
    const std::vector<int> label = NaiveComponents(f, &nodes);
    const std::vector<MarkupSpan> markup = ComputeFusionMarkup(f);
    // Generated spans never nest, so every node is emitted exactly once.
    REQUIRE(markup.size() == nodes.size());
    auto label_of = [&](const MarkupSpan& m) {
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (nodes[k] == Node{m.kind, m.source, m.span}) return label[k];
      }
      FAIL("markup span without a node");
      return -1;
    };
    for (const MarkupSpan& x : markup) {
      for (const MarkupSpan& y : markup) {
        if (x.kind != y.kind) continue;
        CHECK((x.index == y.index) == (label_of(x) == label_of(y)));
      }
    }
  }
}

TEST_CASE("link output words") {
  const std::vector<Tokens> sources = {Toks("the dogs use sticks"), Toks("a cat uses dogs"),
                                       Toks("dogs bark")};
  const auto links = LinkOutputWords(Toks("Dogs used bark sticks novel"), sources);
  REQUIRE(links.size() == 5);
  CHECK(links[0] == std::set<int>{0, 1, 2});
  CHECK(links[1] == std::set<int>{0, 1});
  CHECK(links[2] == std::set<int>{2});
  CHECK(links[3] == std::set<int>{0});
  CHECK(links[4].empty());
}

TEST_CASE("dogs consolidation") {
  const FusionInstance dogs = fixtures::DogsCluster();
  const ConsolidationReport fused =
      ClassifyConsolidating(fixtures::DogsFuseAlignOutput(), SourceTokens(dogs));
  CHECK(fused.is_consolidating);
  CHECK(fused.contributing_sources == std::set<int>{0, 2});
  const ConsolidationReport baseline =
      ClassifyConsolidating(fixtures::DogsBaselineOutput(), SourceTokens(dogs));
  CHECK(!baseline.is_consolidating);
  CHECK(ClassifyConsolidating(Toks("dogs"), {Toks("dogs run"), Toks("the dogs")})
            .is_consolidating == false);
  CHECK(ConsolidationRate({fused, baseline}) == 0.5);
}

TEST_CASE("consolidation is invariant under source reordering") {
  gen::Rng rng(61);
  for (int i = 0; i < 300; ++i) {
    const FusionInstance f = gen::RandomFusionInstance(rng, "c");
    std::vector<Tokens> sources = SourceTokens(f);
    const Tokens output = gen::RandomTokens(rng, 12);
    const ConsolidationReport before = ClassifyConsolidating(output, sources);
    std::vector<int> perm(sources.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Tokens> shuffled;
    for (int p : perm) shuffled.push_back(sources[p]);
    const ConsolidationReport after = ClassifyConsolidating(output, shuffled);
    CHECK(before.is_consolidating == after.is_consolidating);
    std::set<int> mapped;
    for (int s : after.contributing_sources) mapped.insert(perm[s]);
    CHECK(mapped == before.contributing_sources);
  }
}

TEST_CASE("consolidation rate") {
  ConsolidationReport yes;
  yes.is_consolidating = true;
  const ConsolidationReport no;
  CHECK(ConsolidationRate({}) == 0.0);
  CHECK(ConsolidationRate({yes, yes}) == 1.0);
  CHECK(ConsolidationRate({no, no}) == 0.0);
  std::vector<ConsolidationReport> ten(10, no);
  ten[1] = ten[4] = ten[7] = yes;
  CHECK(ConsolidationRate(ten) == doctest::Approx(0.3).epsilon(1e-15));
}
