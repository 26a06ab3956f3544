#include <algorithm>
#include <random>

#include "doctest.h"
#include "qalign/candidate.h"
#include "qalign/text_util.h"
#include "qalign/types.h"
#include "qalign/validate.h"
#include "selfcheck/fixtures.h"
#include "selfcheck/generators.h"

using namespace qalign;
using fixtures::MakeQa;

namespace {

int Count(const Tokens& tokens, const std::string& t) {
  return static_cast<int>(std::count(tokens.begin(), tokens.end(), t));
}

Tokens SplitSpaces(const std::string& s) { return fixtures::Split(s); }

bool HasField(const std::vector<Violation>& v, const std::string& field) {
  return std::any_of(v.begin(), v.end(),
                     [&](const Violation& x) { return x.field == field; });
}

}  // namespace

TEST_CASE("enum wire names round-trip") {
  for (CorpusTag t : {CorpusTag::kEcb, CorpusTag::kDuc, CorpusTag::kMn, CorpusTag::kOther}) {
    CHECK(ParseCorpusTag(ToString(t)) == t);
  }
  for (Split s : {Split::kTrain, Split::kDev, Split::kTest}) CHECK(ParseSplit(ToString(s)) == s);
  for (Provenance p : {Provenance::kGold, Provenance::kLemma, Provenance::kModel,
                       Provenance::kEcbInduced}) {
    CHECK(ParseProvenance(ToString(p)) == p);
  }
  CHECK(ToString(Provenance::kEcbInduced) == "ECB_INDUCED");
  CHECK_FALSE(ParseSplit("dev").has_value());
  CHECK_FALSE(ParseCorpusTag("").has_value());
}

TEST_CASE("answer span geometry") {
  const AnswerSpan s{2, 5};
  CHECK(s.length() == 3);
  CHECK(s.Contains(2));
  CHECK_FALSE(s.Contains(5));
  CHECK(s.Overlaps({4, 6}));
  CHECK_FALSE(s.Overlaps({5, 6}));
  CHECK(s.ValidFor(5));
  CHECK_FALSE(s.ValidFor(4));
  CHECK_FALSE(AnswerSpan{3, 3}.ValidFor(10));
}

TEST_CASE("wh word and alignment shape") {
  CHECK(MakeQa("q", 0, "Who did someone fire ?", 3, {{0, 1}}).wh_word() == "who");
  CHECK(Alignment::OneToOne("a", "b").is_one_to_one());
  CHECK_FALSE(Alignment({"a1", "a2"}, {"b"}).is_one_to_one());
  CHECK(Alignment({"a2", "a1"}, {"b"}) == Alignment({"a1", "a2"}, {"b"}));
}

TEST_CASE("text utilities") {
  CHECK(ToLower("MiXeD 76ers") == "mixed 76ers");
  CHECK(Join({"a", "b", "c"}) == "a b c");
  CHECK(Join({}, "-") == "");
  CHECK(IsPunctuation(","));
  CHECK(IsPunctuation("--"));
  CHECK_FALSE(IsPunctuation("'s"));
  CHECK_FALSE(IsPunctuation("76ers"));
  CHECK(IsFunctionWord("The"));
  CHECK_FALSE(IsFunctionWord("coach"));
}

TEST_CASE("validate_pair") {
  const SentencePairInstance good = fixtures::FiredCoach().pair;
  CHECK(ValidatePair(good).empty());

  SUBCASE("span end beyond the sentence") {
    SentencePairInstance p = good;
    p.qas_b[0].answers[0].end = static_cast<int>(p.b.tokens.size()) + 1;
    const auto v = ValidatePair(p);
    REQUIRE(v.size() == 1);
    CHECK(v[0].field == "qas_b[0].answers[0]");
    CHECK(v[0].severity == Severity::kError);
  }
  SUBCASE("duplicate qa_id on side A") {
    SentencePairInstance p = good;
    p.qas_a[2].qa_id = "a1";
    const auto v = ValidatePair(p);
    REQUIRE(v.size() == 1);
    CHECK(v[0].field == "qas_a[2].qa_id");
    CHECK(v[0].message.find("'a1'") != std::string::npos);
  }
  SUBCASE("each invariant is detected") {
    SentencePairInstance p = good;
    p.a.tokens.clear();
    CHECK(HasErrors(ValidatePair(p)));
    p = good;
    p.b.tokens[1] = "";
    CHECK(HasErrors(ValidatePair(p)));
    p = good;
    p.qas_a[0].predicate_index = -1;
    CHECK(HasField(ValidatePair(p), "qas_a[0].predicate_index"));
    p = good;
    p.qas_a[0].question_predicate_index = 99;
    CHECK(HasField(ValidatePair(p), "qas_a[0].question_predicate_index"));
    p = good;
    p.qas_b[1].answers.clear();
    CHECK(HasField(ValidatePair(p), "qas_b[1].answers"));
    p = good;
    p.pair_id = "";
    CHECK(HasField(ValidatePair(p), "pair_id"));
  }
}

TEST_CASE("validate_pair is sound and complete under random mutation") {
  gen::Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    SentencePairInstance p = gen::RandomPair(rng, "p" + std::to_string(i));
    REQUIRE(ValidatePair(p).empty());
    const int n = static_cast<int>(p.a.tokens.size());
    switch (i % 5) {
      case 0:
        p.qas_a[0].predicate_index = n;
        break;
      case 1:
        p.qas_a[0].answers[0] = {n - 1, n + 1};
        break;
      case 2:
        p.qas_a[0].answers[0] = {1, 1};
        break;
      case 3:
        p.qas_b.push_back(p.qas_b[0]);
        break;
      case 4:
        p.qas_a[0].question_predicate_index =
            static_cast<int>(p.qas_a[0].question_tokens.size());
        break;
    }
    CHECK(HasErrors(ValidatePair(p)));
  }
}

TEST_CASE("validate_alignment_set by provenance") {
  const SentencePairInstance pair = fixtures::FiredCoach().pair;
  AlignmentSet set;
  set.pair_id = pair.pair_id;
  set.alignments = {Alignment::OneToOne("a1", "b1"), Alignment::OneToOne("a1", "b2")};

  set.provenance = Provenance::kGold;
  auto v = ValidateAlignmentSet(set, pair);
  REQUIRE(v.size() == 1);
  CHECK(v[0].severity == Severity::kWarning);
  CHECK_FALSE(HasErrors(v));

  set.provenance = Provenance::kModel;
  CHECK(HasErrors(ValidateAlignmentSet(set, pair)));

  set.provenance = Provenance::kEcbInduced;
  CHECK(ValidateAlignmentSet(set, pair).empty());

  set.provenance = Provenance::kLemma;
  set.alignments = {Alignment({"a1", "a2"}, {"b1"})};
  CHECK(HasErrors(ValidateAlignmentSet(set, pair)));

  set.provenance = Provenance::kGold;
  CHECK(ValidateAlignmentSet(set, pair).empty());
  set.alignments = {Alignment::OneToOne("a1", "zz")};
  CHECK(HasField(ValidateAlignmentSet(set, pair), "alignments[0].right"));
  set.alignments = {Alignment::OneToOne("a1", "b1"), Alignment::OneToOne("a1", "b1")};
  CHECK(HasErrors(ValidateAlignmentSet(set, pair)));
  set.alignments = {Alignment({}, {"b1"})};
  CHECK(HasField(ValidateAlignmentSet(set, pair), "alignments[0].left"));
}

TEST_CASE("serialize_candidate on the fired-coach pair") {
  const SentencePairInstance p = fixtures::FiredCoach().pair;
  const std::string a = SerializeCandidate(p.qas_a[0], p.a);
  // Prefix printed in the source example; the remainder differs only in
  // the tokenization of punctuation.
  const std::string printed_a =
      "Who did someone [P] fire [/P] ? [Q] The Philadelphia 76ers [P] fired [/P] "
      "[A] coach Maurice Cheeks [/A] on Saturday";
  CHECK(a.rfind(printed_a, 0) == 0);
  CHECK(a == printed_a +
                 " , one day after the team continued its slide with a season-worst "
                 "offensive effort , dpa reported .");

  const std::string b = SerializeCandidate(p.qas_b[0], p.b);
  CHECK(b.rfind("Who was [P] fired [/P] ? [Q] If you don't know by now", 0) == 0);
  CHECK(b.find("[A] Maurice Cheeks [/A] became the fifth coach [P] fired [/P] within "
               "the first quarter of the season") != std::string::npos);
}

TEST_CASE("serialize_candidate degenerate and multi-span cases") {
  SentenceText one;
  one.doc_id = "d";
  one.sent_id = "0";
  one.tokens = {"w"};
  const QARelation qa = MakeQa("q", 0, "w", 0, {{0, 1}});
  CHECK(SerializeCandidate(qa, one) == "[P] w [/P] [Q] [A] [P] w [/P] [/A]");

  SentenceText six;
  six.doc_id = "d";
  six.sent_id = "1";
  six.tokens = SplitSpaces("u v w x y z");
  const QARelation two = MakeQa("q", 2, "What w ?", 1, {{0, 2}, {4, 6}});
  CHECK(SerializeCandidate(two, six) ==
        "What [P] w [/P] ? [Q] [A] u v [/A] [P] w [/P] x [A] y z [/A]");

  // Answer order in the QA does not matter: spans are emitted by position.
  const QARelation swapped = MakeQa("q", 2, "What w ?", 1, {{4, 6}, {0, 2}});
  CHECK(SerializeCandidate(swapped, six) == SerializeCandidate(two, six));

  const QARelation foreign = MakeQa("q", 9, "What w ?", 1, {{0, 1}});
  CHECK_THROWS_AS(SerializeCandidate(foreign, six), OwnershipError);
  const QARelation bad_span = MakeQa("q", 1, "What w ?", 1, {{5, 7}});
  CHECK_THROWS_AS(SerializeCandidate(bad_span, six), OwnershipError);
}

TEST_CASE("serialize_candidate markup counts and stripping on random QAs") {
  gen::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const SentencePairInstance p = gen::RandomPair(rng, "p");
    for (const QARelation& qa : p.qas_a) {
      const std::string s = SerializeCandidate(qa, p.a);
      const Tokens t = SplitSpaces(s);
      CHECK(Count(t, "[Q]") == 1);
      CHECK(Count(t, "[P]") == 2);
      CHECK(Count(t, "[/P]") == 2);
      CHECK(Count(t, "[A]") == static_cast<int>(qa.answers.size()));
      CHECK(Count(t, "[/A]") == static_cast<int>(qa.answers.size()));
      Tokens want = qa.question_tokens;
      want.insert(want.end(), p.a.context_tokens.begin(), p.a.context_tokens.end());
      want.insert(want.end(), p.a.tokens.begin(), p.a.tokens.end());
      CHECK(StripCandidateMarkup(s) == want);
      CHECK(SerializeCandidate(qa, p.a) == s);
    }
  }
}
