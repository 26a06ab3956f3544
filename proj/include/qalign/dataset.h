#ifndef QALIGN_DATASET_H_
#define QALIGN_DATASET_H_

#include <map>
#include <string>
#include <vector>

#include "qalign/coref.h"
#include "qalign/types.h"

namespace qalign {

class DataError : public Error {
 public:
  using Error::Error;
};

// Clipped bigram-overlap F1 over lowercased tokens, no stemming. Identical
// token lists score 1.0; otherwise a list with fewer than two tokens scores 0.
double Rouge2(const Tokens& a, const Tokens& b);

// Intersection over union of the token indices covered by each span list.
// Returns 0 when neither list covers anything.
double SpanIou(const std::vector<AnswerSpan>& a, const std::vector<AnswerSpan>& b);

struct SentenceRef {
  std::string doc_id;
  std::string sent_id;

  friend auto operator<=>(const SentenceRef&, const SentenceRef&) = default;
};

struct Topic {
  std::string topic_id;
  std::vector<std::string> doc_ids;
  Split split = Split::kTrain;

  friend bool operator==(const Topic&, const Topic&) = default;
};

struct ScuContributor {
  std::string doc_id;
  std::string sent_id;
  AnswerSpan span;

  friend bool operator==(const ScuContributor&, const ScuContributor&) = default;
};

struct ScuCluster {
  std::string scu_id;
  std::string label;
  std::vector<ScuContributor> contributors;
  Split split = Split::kTrain;

  friend bool operator==(const ScuCluster&, const ScuCluster&) = default;
};

// A document sentence aligned to a summary sentence through `spans`, which
// index the summary sentence.
struct SpanAlignmentRecord {
  SentenceRef summary_sent;
  SentenceRef doc_sent;
  std::vector<AnswerSpan> spans;
  Split split = Split::kTrain;

  friend bool operator==(const SpanAlignmentRecord&,
                         const SpanAlignmentRecord&) = default;
};

// QA-SRL annotation for one sentence, attached to built pairs afterwards.
struct QaAttachment {
  std::string doc_id;
  std::string sent_id;
  std::vector<QARelation> qas;

  friend bool operator==(const QaAttachment&, const QaAttachment&) = default;
};

// Raw sentences in document order. The order in which sentences of a
// document are added defines each sentence's predecessor.
class SentenceStore {
 public:
  SentenceStore() = default;
  explicit SentenceStore(const std::vector<SentenceText>& sentences);

  // Throws DataError on a duplicate (doc_id, sent_id).
  void Add(SentenceText sentence);

  const SentenceText* Find(const std::string& doc_id,
                           const std::string& sent_id) const;
  bool HasDoc(const std::string& doc_id) const { return docs_.count(doc_id) > 0; }
  const std::vector<std::string>& SentenceIds(const std::string& doc_id) const;

  // Copy of the sentence with context_tokens set to its predecessor's tokens
  // and corpus_tag overridden. Throws DataError when the sentence is unknown.
  SentenceText WithContext(const std::string& doc_id, const std::string& sent_id,
                           CorpusTag tag) const;

 private:
  std::map<std::string, std::vector<std::string>> docs_;
  std::map<std::pair<std::string, std::string>, SentenceText> sentences_;
};

struct EcbOptions {
  int top_k = 6;
  int bottom_k = 2;
  double max_rouge2 = 0.9;
  std::vector<std::string> only_topics;  // empty selects every topic
};

// A cross-document sentence pair within a topic and its number of shared
// coreference clusters.
struct EcbCandidate {
  SentenceRef a;
  SentenceRef b;
  int shared_clusters = 0;
};

// Candidates of one topic: pairs sharing at least one verbal event cluster,
// ranked by shared cluster count (descending), ties by sentence keys.
std::vector<EcbCandidate> RankEcbCandidates(const SentenceStore& sentences,
                                            const CorefIndex& coref,
                                            const Topic& topic);

std::vector<SentencePairInstance> BuildEcbPairs(const SentenceStore& sentences,
                                                const CorefAnnotation& coref,
                                                const std::vector<Topic>& topics,
                                                const EcbOptions& options = {});

// Every unordered pair of distinct sentences contributing to one SCU,
// deduplicated across clusters. No similarity filter.
std::vector<SentencePairInstance> BuildDucPairs(
    const SentenceStore& sentences, const std::vector<ScuCluster>& clusters);

struct MnOptions {
  double min_iou = 0.1;
};

// Cross-document sentence pairs aligned to a shared summary sentence, kept
// when their span IOU over that summary sentence is at least min_iou.
std::vector<SentencePairInstance> BuildMnPairs(
    const SentenceStore& sentences,
    const std::vector<SpanAlignmentRecord>& records,
    const MnOptions& options = {});

// Fills qas_a / qas_b from sentence-level QA annotations. Throws DataError
// if an attached QA does not fit its sentence.
void AttachQas(const std::vector<QaAttachment>& qas,
               std::vector<SentencePairInstance>* pairs);

}  // namespace qalign

#endif  // QALIGN_DATASET_H_
