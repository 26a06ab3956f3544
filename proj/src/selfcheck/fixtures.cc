#include "selfcheck/fixtures.h"

#include <sstream>

namespace qalign::fixtures {

Tokens Split(const std::string& text) {
  Tokens out;
  std::istringstream in(text);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

QARelation MakeQa(const std::string& id, int predicate_index,
                  const std::string& question, int question_predicate_index,
                  std::vector<AnswerSpan> answers) {
  QARelation qa;
  qa.qa_id = id;
  qa.predicate_index = predicate_index;
  qa.question_tokens = Split(question);
  qa.question_predicate_index = question_predicate_index;
  qa.answers = std::move(answers);
  return qa;
}

namespace {

SentenceText Sentence(const std::string& doc, const std::string& sent,
                      const std::string& text, const std::string& context = "") {
  SentenceText s;
  s.doc_id = doc;
  s.sent_id = sent;
  s.tokens = Split(text);
  s.context_tokens = Split(context);
  s.corpus_tag = CorpusTag::kOther;
  return s;
}

AlignmentSet Gold(const std::string& pair_id, std::vector<Alignment> alignments) {
  AlignmentSet g;
  g.pair_id = pair_id;
  g.provenance = Provenance::kGold;
  g.alignments = std::move(alignments);
  return g;
}

Mention MakeMention(const std::string& id, const std::string& doc,
                    const std::string& sent, AnswerSpan span, MentionKind kind) {
  Mention m;
  m.mention_id = id;
  m.doc_id = doc;
  m.sent_id = sent;
  m.span = span;
  m.kind = kind;
  return m;
}

}  // namespace

AlignedPair PurchaseSale() {
  AlignedPair out;
  SentencePairInstance& p = out.pair;
  p.pair_id = "fixture:purchase-sale";
  p.split = Split::kDev;
  // 0    1         2   3        4   5 6 7       8
  // Wade purchased the painting for $ 7 million .
  p.a = Sentence("docA", "1", "Wade purchased the painting for $ 7 million .");
  // 0   1       2    3   4        5  6    7   8 9 10      11
  // The gallery sold the painting to Wade for $ 7 million .
  p.b = Sentence("docB", "1", "The gallery sold the painting to Wade for $ 7 million .");
  p.qas_a = {MakeQa("a1", 1, "Who purchased something ?", 1, {{0, 1}}),
             MakeQa("a2", 1, "What did someone purchase ?", 3, {{2, 4}})};
  p.qas_b = {MakeQa("b1", 2, "Who was something sold to ?", 3, {{6, 7}}),
             MakeQa("b2", 2, "What was sold ?", 2, {{3, 5}})};
  out.gold = Gold(p.pair_id, {Alignment::OneToOne("a1", "b1"),
                              Alignment::OneToOne("a2", "b2")});
  return out;
}

AlignedPair FiredCoach() {
  AlignedPair out;
  SentencePairInstance& p = out.pair;
  p.pair_id = "fixture:fired-coach";
  p.split = Split::kDev;
  // 0   1            2     3     4     5       6      7  8        9
  // The Philadelphia 76ers fired coach Maurice Cheeks on Saturday ,
  p.a = Sentence("docA", "3",
                 "The Philadelphia 76ers fired coach Maurice Cheeks on Saturday , "
                 "one day after the team continued its slide with a season-worst "
                 "offensive effort , dpa reported .");
  // 0     1 2       3      4      5   6     7     8     9      10  11    12
  // Today , Maurice Cheeks became the fifth coach fired within the first quarter
  // 13 14  15     16
  // of the season .
  p.b = Sentence("docB", "7",
                 "Today , Maurice Cheeks became the fifth coach fired within the "
                 "first quarter of the season .",
                 "If you don't know by now : you disappoint in the NBA , you get "
                 "canned .");
  p.qas_a = {MakeQa("a1", 3, "Who did someone fire ?", 3, {{4, 7}}),
             MakeQa("a2", 3, "When did someone fire someone ?", 3, {{7, 9}}),
             MakeQa("a3", 3, "Who fired someone ?", 1, {{0, 3}})};
  p.qas_b = {MakeQa("b1", 8, "Who was fired ?", 2, {{2, 4}}),
             MakeQa("b2", 4, "Who became something ?", 1, {{2, 4}}),
             MakeQa("b3", 4, "What did someone become ?", 3, {{5, 16}})};
  out.gold = Gold(p.pair_id, {Alignment::OneToOne("a1", "b1")});
  return out;
}

InductionCase RedundantMentions() {
  InductionCase out;
  SentencePairInstance& p = out.aligned.pair;
  p.pair_id = "fixture:redundant-mentions";
  p.split = Split::kDev;
  // 0   1   2    3  4    5  6    7
  // The man said he came at noon .
  p.a = Sentence("docA", "5", "The man said he came at noon .");
  // 0 1        2       3  4    5
  // A neighbor arrived at noon .
  p.b = Sentence("docB", "2", "A neighbor arrived at noon .");
  p.qas_a = {MakeQa("a1", 4, "Who came ?", 1, {{3, 4}}),
             MakeQa("a2", 4, "Who came ?", 1, {{0, 2}}),
             MakeQa("a3", 4, "When did someone come ?", 3, {{5, 7}})};
  p.qas_b = {MakeQa("b1", 2, "Who arrived ?", 1, {{0, 2}})};
  out.aligned.gold = Gold(p.pair_id, {Alignment::OneToOne("a2", "b1")});

  CorefAnnotation& c = out.coref;
  c.doc_ids = {"docA", "docB"};
  c.mentions = {MakeMention("m1", "docA", "5", {0, 2}, MentionKind::kEntity),
                MakeMention("m2", "docA", "5", {3, 4}, MentionKind::kEntity),
                MakeMention("m3", "docB", "2", {0, 2}, MentionKind::kEntity),
                MakeMention("m4", "docA", "5", {4, 5}, MentionKind::kEvent),
                MakeMention("m5", "docB", "2", {2, 3}, MentionKind::kEvent)};
  c.clusters = {{"ent-man", MentionKind::kEntity, {"m1", "m2", "m3"}},
                {"evt-arrive", MentionKind::kEvent, {"m4", "m5"}}};
  return out;
}

InductionCase ChargedFiled() {
  InductionCase out;
  SentencePairInstance& p = out.aligned.pair;
  p.pair_id = "fixture:charged-filed";
  p.split = Split::kDev;
  // 0     1      2  3      4   5 6   7 8   9 10     11
  // Woman Killed In Queens Hit - And - Run , Driver Charged
  p.a = Sentence("docA", "0", "Woman Killed In Queens Hit - And - Run , Driver Charged");
  // 0           1     2       3       4   5      6   7       8 9     10 11     12
  // Prosecutors filed charges against the driver for killing a woman in Queens .
  p.b = Sentence("docB", "4",
                 "Prosecutors filed charges against the driver for killing a woman "
                 "in Queens .");
  p.qas_a = {MakeQa("a1", 11, "Who was charged ?", 2, {{10, 11}}),
             MakeQa("a2", 11, "Why was someone charged ?", 3, {{0, 9}})};
  p.qas_b = {MakeQa("b1", 1, "Who were charges filed against ?", 3, {{4, 6}}),
             MakeQa("b2", 1, "Why were charges filed ?", 3, {{6, 12}}),
             MakeQa("b3", 1, "Who filed something ?", 1, {{0, 1}})};
  out.aligned.gold = Gold(p.pair_id, {Alignment::OneToOne("a1", "b1"),
                                      Alignment::OneToOne("a2", "b2")});

  CorefAnnotation& c = out.coref;
  c.doc_ids = {"docA", "docB"};
  c.mentions = {MakeMention("c1", "docA", "0", {10, 11}, MentionKind::kEntity),
                MakeMention("c2", "docB", "4", {4, 6}, MentionKind::kEntity),
                MakeMention("c3", "docA", "0", {11, 12}, MentionKind::kEvent),
                MakeMention("c4", "docB", "4", {1, 2}, MentionKind::kEvent)};
  c.clusters = {{"ent-driver", MentionKind::kEntity, {"c1", "c2"}},
                {"evt-charge", MentionKind::kEvent, {"c3", "c4"}}};
  return out;
}

FusionInstance DogsCluster() {
  FusionInstance f;
  f.cluster_id = "fixture:dogs";
  // Tokenized on whitespace as printed, punctuation attached.
  f.sources = {
      Sentence("d1", "1", "Law enforcement agencies use dogs worldwide."),
      Sentence("d2", "1",
               "Dogs perform many different law-enforcement tasks around the world."),
      Sentence("d3", "1",
               "City and county police agencies, customs departments, fire "
               "departments, the Secret Service, highway patrol, border patrol, "
               "military bases and some prisons in the US and many other countries "
               "use dogs to help in law enforcement work."),
  };
  const int use3 = 28;  // "use" in the third source
  f.qas = {
      {MakeQa("q1", 3, "What does someone use ?", 3, {{4, 5}}),
       MakeQa("q2", 3, "Who uses something ?", 1, {{0, 3}})},
      {MakeQa("q1", 1, "What performs something ?", 1, {{0, 1}})},
      {MakeQa("q1", use3, "What does someone use ?", 3, {{use3 + 1, use3 + 2}}),
       MakeQa("q2", use3, "Why does someone use something ?", 3,
              {{use3 + 2, use3 + 7}})},
  };
  f.target = Split("Law enforcement agencies use dogs to help in law enforcement");
  f.pair_alignments = {{0, 2, {Alignment::OneToOne("q1", "q1")}}};
  return f;
}

Tokens DogsFuseAlignOutput() {
  return Split("Law enforcement agencies use dogs to help in law enforcement");
}

Tokens DogsBaselineOutput() {
  return Split("Dogs perform many different law-enforcement tasks around the world");
}

std::vector<AlignedPair> AllAlignedPairs() {
  return {PurchaseSale(), FiredCoach(), RedundantMentions().aligned,
          ChargedFiled().aligned};
}

}  // namespace qalign::fixtures
