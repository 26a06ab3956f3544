#include "qalign/dataset.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "qalign/text_util.h"
#include "qalign/validate.h"

namespace qalign {

namespace {

using Bigram = std::pair<std::string, std::string>;

std::map<Bigram, int> BigramCounts(const Tokens& lowered) {
  std::map<Bigram, int> counts;
  for (std::size_t i = 0; i + 1 < lowered.size(); ++i) {
    ++counts[{lowered[i], lowered[i + 1]}];
  }
  return counts;
}

Tokens Lowered(const Tokens& tokens) {
  Tokens out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) out.push_back(ToLower(t));
  return out;
}

std::string PairId(std::string_view source, const SentenceRef& a,
                   const SentenceRef& b) {
  return std::string(source) + ":" + a.doc_id + ":" + a.sent_id + "+" +
         b.doc_id + ":" + b.sent_id;
}

SentencePairInstance MakePair(const SentenceStore& store, std::string_view source,
                              CorpusTag tag, const SentenceRef& a,
                              const SentenceRef& b, Split split) {
  SentencePairInstance pair;
  pair.pair_id = PairId(source, a, b);
  pair.a = store.WithContext(a.doc_id, a.sent_id, tag);
  pair.b = store.WithContext(b.doc_id, b.sent_id, tag);
  pair.split = split;
  return pair;
}

// Orders the two sentences of a pair canonically.
std::pair<SentenceRef, SentenceRef> Canonical(SentenceRef x, SentenceRef y) {
  if (y < x) std::swap(x, y);
  return {std::move(x), std::move(y)};
}

}  // namespace

double Rouge2(const Tokens& a, const Tokens& b) {
  const Tokens la = Lowered(a);
  const Tokens lb = Lowered(b);
  if (la == lb) return 1.0;
  const std::map<Bigram, int> ca = BigramCounts(la);
  const std::map<Bigram, int> cb = BigramCounts(lb);
  const int na = la.size() < 2 ? 0 : static_cast<int>(la.size()) - 1;
  const int nb = lb.size() < 2 ? 0 : static_cast<int>(lb.size()) - 1;
  if (na == 0 || nb == 0) return 0.0;
  int overlap = 0;
  for (const auto& [bigram, count] : ca) {
    auto it = cb.find(bigram);
    if (it != cb.end()) overlap += std::min(count, it->second);
  }
  // 2PR/(P+R) with P = overlap/na and R = overlap/nb.
  return 2.0 * overlap / (na + nb);
}

double SpanIou(const std::vector<AnswerSpan>& a, const std::vector<AnswerSpan>& b) {
  std::set<int> ca;
  std::set<int> cb;
  for (const AnswerSpan& s : a) {
    for (int i = s.start; i < s.end; ++i) ca.insert(i);
  }
  for (const AnswerSpan& s : b) {
    for (int i = s.start; i < s.end; ++i) cb.insert(i);
  }
  std::set<int> both = ca;
  both.insert(cb.begin(), cb.end());
  if (both.empty()) return 0.0;
  int shared = 0;
  for (int i : ca) shared += static_cast<int>(cb.count(i));
  return static_cast<double>(shared) / static_cast<double>(both.size());
}

SentenceStore::SentenceStore(const std::vector<SentenceText>& sentences) {
  for (const SentenceText& s : sentences) Add(s);
}

void SentenceStore::Add(SentenceText sentence) {
  auto key = std::make_pair(sentence.doc_id, sentence.sent_id);
  if (sentences_.count(key)) {
    throw DataError("duplicate sentence " + sentence.doc_id + "/" +
                    sentence.sent_id);
  }
  docs_[sentence.doc_id].push_back(sentence.sent_id);
  sentences_.emplace(std::move(key), std::move(sentence));
}

const SentenceText* SentenceStore::Find(const std::string& doc_id,
                                        const std::string& sent_id) const {
  auto it = sentences_.find({doc_id, sent_id});
  return it == sentences_.end() ? nullptr : &it->second;
}

const std::vector<std::string>& SentenceStore::SentenceIds(
    const std::string& doc_id) const {
  static const std::vector<std::string> kEmpty;
  auto it = docs_.find(doc_id);
  return it == docs_.end() ? kEmpty : it->second;
}

SentenceText SentenceStore::WithContext(const std::string& doc_id,
                                        const std::string& sent_id,
                                        CorpusTag tag) const {
  const SentenceText* found = Find(doc_id, sent_id);
  if (found == nullptr) {
    throw DataError("unknown sentence " + doc_id + "/" + sent_id);
  }
  SentenceText out = *found;
  out.corpus_tag = tag;
  out.context_tokens.clear();
  const std::vector<std::string>& ids = SentenceIds(doc_id);
  auto it = std::find(ids.begin(), ids.end(), sent_id);
  if (it != ids.begin()) out.context_tokens = Find(doc_id, *std::prev(it))->tokens;
  return out;
}

std::vector<EcbCandidate> RankEcbCandidates(const SentenceStore& sentences,
                                            const CorefIndex& coref,
                                            const Topic& topic) {
  struct Info {
    SentenceRef ref;
    std::set<std::string> verbal_events;
    std::set<std::string> clusters;
  };
  std::vector<Info> infos;
  for (const std::string& doc : topic.doc_ids) {
    if (!sentences.HasDoc(doc)) {
      throw DataError("topic " + topic.topic_id + " lists unknown document " + doc);
    }
    for (const std::string& sent : sentences.SentenceIds(doc)) {
      Info info{{doc, sent}, {}, {}};
      for (const CorefIndex::Entry& e : coref.InSentence({doc, sent})) {
        info.clusters.insert(e.cluster_id);
        if (e.mention->kind == MentionKind::kEvent && e.mention->verbal) {
          info.verbal_events.insert(e.cluster_id);
        }
      }
      if (!info.verbal_events.empty()) infos.push_back(std::move(info));
    }
  }

  std::vector<EcbCandidate> out;
  for (std::size_t i = 0; i < infos.size(); ++i) {
    for (std::size_t j = i + 1; j < infos.size(); ++j) {
      const Info& x = infos[i];
      const Info& y = infos[j];
      if (x.ref.doc_id == y.ref.doc_id) continue;
      bool shares_event = std::any_of(
          x.verbal_events.begin(), x.verbal_events.end(),
          [&](const std::string& c) { return y.verbal_events.count(c) > 0; });
      if (!shares_event) continue;
      int shared = 0;
      for (const std::string& c : x.clusters) shared += static_cast<int>(y.clusters.count(c));
      auto [a, b] = Canonical(x.ref, y.ref);
      out.push_back({std::move(a), std::move(b), shared});
    }
  }
  std::sort(out.begin(), out.end(), [](const EcbCandidate& x, const EcbCandidate& y) {
    if (x.shared_clusters != y.shared_clusters) {
      return x.shared_clusters > y.shared_clusters;
    }
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return out;
}

std::vector<SentencePairInstance> BuildEcbPairs(const SentenceStore& sentences,
                                                const CorefAnnotation& coref,
                                                const std::vector<Topic>& topics,
                                                const EcbOptions& options) {
  std::vector<const Topic*> selected;
  if (options.only_topics.empty()) {
    for (const Topic& t : topics) selected.push_back(&t);
  } else {
    for (const std::string& id : options.only_topics) {
      auto it = std::find_if(topics.begin(), topics.end(),
                             [&](const Topic& t) { return t.topic_id == id; });
      if (it == topics.end()) throw DataError("unknown topic id " + id);
      selected.push_back(&*it);
    }
  }

  const CorefIndex index(coref);
  std::vector<SentencePairInstance> out;
  for (const Topic* topic : selected) {
    std::vector<EcbCandidate> ranked = RankEcbCandidates(sentences, index, *topic);
    std::vector<std::size_t> keep;
    const std::size_t n = ranked.size();
    const std::size_t top = std::min<std::size_t>(n, std::max(0, options.top_k));
    for (std::size_t i = 0; i < top; ++i) keep.push_back(i);
    const std::size_t bottom = std::min<std::size_t>(n - top, std::max(0, options.bottom_k));
    for (std::size_t i = n - bottom; i < n; ++i) keep.push_back(i);

    for (std::size_t i : keep) {
      SentencePairInstance pair = MakePair(sentences, "ecb", CorpusTag::kEcb,
                                           ranked[i].a, ranked[i].b, topic->split);
      if (Rouge2(pair.a.tokens, pair.b.tokens) > options.max_rouge2) continue;
      out.push_back(std::move(pair));
    }
  }
  return out;
}

std::vector<SentencePairInstance> BuildDucPairs(
    const SentenceStore& sentences, const std::vector<ScuCluster>& clusters) {
  std::vector<SentencePairInstance> out;
  std::set<std::pair<SentenceRef, SentenceRef>> seen;
  for (const ScuCluster& cluster : clusters) {
    std::vector<SentenceRef> members;
    for (const ScuContributor& c : cluster.contributors) {
      SentenceRef ref{c.doc_id, c.sent_id};
      if (std::find(members.begin(), members.end(), ref) == members.end()) {
        members.push_back(std::move(ref));
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        auto key = Canonical(members[i], members[j]);
        if (!seen.insert(key).second) continue;
        out.push_back(MakePair(sentences, "duc", CorpusTag::kDuc, key.first,
                               key.second, cluster.split));
      }
    }
  }
  return out;
}

std::vector<SentencePairInstance> BuildMnPairs(
    const SentenceStore& sentences,
    const std::vector<SpanAlignmentRecord>& records, const MnOptions& options) {
  std::vector<SentenceRef> anchors;
  std::map<SentenceRef, std::vector<const SpanAlignmentRecord*>> by_anchor;
  for (const SpanAlignmentRecord& r : records) {
    auto& group = by_anchor[r.summary_sent];
    if (group.empty()) anchors.push_back(r.summary_sent);
    group.push_back(&r);
  }

  std::vector<SentencePairInstance> out;
  std::set<std::pair<SentenceRef, SentenceRef>> seen;
  for (const SentenceRef& anchor : anchors) {
    const auto& group = by_anchor[anchor];
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        const SpanAlignmentRecord& x = *group[i];
        const SpanAlignmentRecord& y = *group[j];
        if (x.doc_sent.doc_id == y.doc_sent.doc_id) continue;
        if (SpanIou(x.spans, y.spans) < options.min_iou) continue;
        auto key = Canonical(x.doc_sent, y.doc_sent);
        if (!seen.insert(key).second) continue;
        out.push_back(MakePair(sentences, "mn", CorpusTag::kMn, key.first,
                               key.second, x.split));
      }
    }
  }
  return out;
}

void AttachQas(const std::vector<QaAttachment>& qas,
               std::vector<SentencePairInstance>* pairs) {
  std::map<std::pair<std::string, std::string>, const QaAttachment*> index;
  for (const QaAttachment& a : qas) index[{a.doc_id, a.sent_id}] = &a;
  auto attach = [&](const SentenceText& sent, std::vector<QARelation>* out) {
    auto it = index.find({sent.doc_id, sent.sent_id});
    if (it == index.end()) return;
    for (const QARelation& qa : it->second->qas) {
      std::vector<Violation> problems =
          ValidateQa(qa, sent, sent.doc_id + "/" + sent.sent_id + ":" + qa.qa_id);
      if (!problems.empty()) throw DataError(problems.front().ToString());
    }
    *out = it->second->qas;
  };
  for (SentencePairInstance& pair : *pairs) {
    attach(pair.a, &pair.qas_a);
    attach(pair.b, &pair.qas_b);
  }
}

}  // namespace qalign
