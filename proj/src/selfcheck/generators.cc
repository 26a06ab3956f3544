#include "selfcheck/generators.h"

#include <algorithm>
#include <string>

namespace qalign::gen {

namespace {

int Uniform(Rng& rng, int lo, int hi) {  // inclusive
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Coin(Rng& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

const char* const kVocab[] = {
    "the", "a",     "dog",   "dogs",  "police", "use",   "used",   "man",
    "he",  "came",  "at",    "noon",  "fired",  "coach", "team",   "won",
    "win", "Game",  "of",    "in",    "The",    "DOG",   "city",   "work",
    ",",   ".",     "'s",    "sold",  "bought", "price", "report", "reported"};

std::vector<ScoredEdge> Graph(Rng& rng, int max_side, bool dyadic) {
  const int nl = Uniform(rng, 0, max_side);
  const int nr = Uniform(rng, 0, max_side);
  std::vector<ScoredEdge> edges;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < nl; ++i) {
    for (int j = 0; j < nr; ++j) {
      if (!Coin(rng)) continue;
      const double w = dyadic ? Uniform(rng, 0, 64) / 64.0 : unit(rng);
      edges.push_back({"l" + std::to_string(i), "r" + std::to_string(j), w});
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return edges;
}

std::set<QaId> Ids(Rng& rng, char side, int count) {
  std::set<QaId> out;
  while (static_cast<int>(out.size()) < count) {
    out.insert(std::string(1, side) + std::to_string(Uniform(rng, 0, 5)));
  }
  return out;
}

Alignment RandomAlignment(Rng& rng) {
  const int shape = Uniform(rng, 0, 9);
  const int nl = shape == 8 ? 2 : 1;
  const int nr = shape == 9 ? 2 : 1;
  return Alignment(Ids(rng, 'a', nl), Ids(rng, 'b', nr));
}

QARelation RandomQa(Rng& rng, const std::string& id, int num_tokens) {
  QARelation qa;
  qa.qa_id = id;
  qa.predicate_index = Uniform(rng, 0, num_tokens - 1);
  qa.question_tokens = {"What", "did", "someone", "do", "?"};
  qa.question_predicate_index = 3;
  const int start = Uniform(rng, 0, num_tokens - 1);
  const int end = Uniform(rng, start + 1, num_tokens);
  qa.answers.push_back({start, end});
  return qa;
}

}  // namespace

std::vector<ScoredEdge> RandomGraph(Rng& rng, int max_side) {
  return Graph(rng, max_side, false);
}

std::vector<ScoredEdge> RandomDyadicGraph(Rng& rng, int max_side) {
  return Graph(rng, max_side, true);
}

AlignmentSet RandomAlignmentSet(Rng& rng, const std::string& pair_id,
                                int max_alignments) {
  AlignmentSet set;
  set.pair_id = pair_id;
  const int n = Uniform(rng, 0, max_alignments);
  for (int i = 0; i < n; ++i) {
    if (!set.alignments.empty() && Coin(rng, 0.1)) {
      set.alignments.push_back(set.alignments[Uniform(
          rng, 0, static_cast<int>(set.alignments.size()) - 1)]);
    } else {
      set.alignments.push_back(RandomAlignment(rng));
    }
  }
  return set;
}

AlignmentSet PerturbedCopy(Rng& rng, const AlignmentSet& base) {
  AlignmentSet out;
  out.pair_id = base.pair_id;
  for (const Alignment& a : base.alignments) {
    if (Coin(rng, 0.6)) out.alignments.push_back(a);
  }
  const int extra = Uniform(rng, 0, 3);
  for (int i = 0; i < extra; ++i) out.alignments.push_back(RandomAlignment(rng));
  std::shuffle(out.alignments.begin(), out.alignments.end(), rng);
  return out;
}

Tokens RandomTokens(Rng& rng, int max_len) {
  constexpr int kVocabSize = sizeof(kVocab) / sizeof(kVocab[0]);
  Tokens out;
  const int n = Uniform(rng, 0, max_len);
  for (int i = 0; i < n; ++i) out.push_back(kVocab[Uniform(rng, 0, kVocabSize - 1)]);
  return out;
}

SentencePairInstance RandomPair(Rng& rng, const std::string& pair_id) {
  SentencePairInstance p;
  p.pair_id = pair_id;
  p.split = Split::kDev;
  auto sentence = [&](const std::string& doc) {
    SentenceText s;
    s.doc_id = doc;
    s.sent_id = "0";
    Tokens t;
    while (t.size() < 3) t = RandomTokens(rng, 12);
    s.tokens = t;
    s.context_tokens = RandomTokens(rng, 5);
    return s;
  };
  p.a = sentence(pair_id + "/A");
  p.b = sentence(pair_id + "/B");
  const int na = Uniform(rng, 1, 4);
  const int nb = Uniform(rng, 1, 4);
  for (int i = 0; i < na; ++i) {
    p.qas_a.push_back(RandomQa(rng, "a" + std::to_string(i),
                               static_cast<int>(p.a.tokens.size())));
  }
  for (int i = 0; i < nb; ++i) {
    p.qas_b.push_back(RandomQa(rng, "b" + std::to_string(i),
                               static_cast<int>(p.b.tokens.size())));
  }
  return p;
}

FusionInstance RandomFusionInstance(Rng& rng, const std::string& cluster_id) {
  FusionInstance f;
  f.cluster_id = cluster_id;
  const int n = Uniform(rng, 2, 4);
  for (int s = 0; s < n; ++s) {
    SentenceText sent;
    sent.doc_id = cluster_id + "/" + std::to_string(s);
    sent.sent_id = "0";
    Tokens t;
    while (t.size() < 4) t = RandomTokens(rng, 14);
    sent.tokens = t;
    const int len = static_cast<int>(t.size());
    // Answers come from disjoint chunks of the sentence, so aligned
    // argument spans never cross.
    std::vector<AnswerSpan> chunks;
    for (int start = 0; start < len;) {
      const int end = std::min(len, start + Uniform(rng, 1, 3));
      chunks.push_back({start, end});
      start = end;
    }
    std::vector<QARelation> qas;
    const int nq = Uniform(rng, 1, 3);
    for (int q = 0; q < nq; ++q) {
      QARelation qa;
      qa.qa_id = "q" + std::to_string(q);
      qa.predicate_index = Uniform(rng, 0, len - 1);
      qa.question_tokens = {"Who", "did", "?"};
      qa.question_predicate_index = 1;
      qa.answers.push_back(chunks[Uniform(rng, 0, static_cast<int>(chunks.size()) - 1)]);
      if (Coin(rng, 0.2)) {
        const AnswerSpan extra =
            chunks[Uniform(rng, 0, static_cast<int>(chunks.size()) - 1)];
        if (extra != qa.answers.front()) qa.answers.push_back(extra);
      }
      qas.push_back(std::move(qa));
    }
    f.sources.push_back(std::move(sent));
    f.qas.push_back(std::move(qas));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!Coin(rng, 0.6)) continue;
      SourcePairAlignments pa{i, j, {}};
      for (const QARelation& qa : f.qas[i]) {
        if (!Coin(rng)) continue;
        const auto& right = f.qas[j];
        const QARelation& other =
            right[Uniform(rng, 0, static_cast<int>(right.size()) - 1)];
        pa.alignments.push_back(Alignment::OneToOne(qa.qa_id, other.qa_id));
      }
      f.pair_alignments.push_back(std::move(pa));
    }
  }
  f.target = RandomTokens(rng, 10);
  return f;
}

}  // namespace qalign::gen
