#ifndef QALIGN_COREF_H_
#define QALIGN_COREF_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qalign/types.h"
#include "qalign/validate.h"

namespace qalign {

enum class MentionKind { kEvent, kEntity };

std::string_view ToString(MentionKind kind);
std::optional<MentionKind> ParseMentionKind(std::string_view s);

struct Mention {
  std::string mention_id;
  std::string doc_id;
  std::string sent_id;
  AnswerSpan span;
  MentionKind kind = MentionKind::kEntity;
  // Only meaningful for events; non-verbal (nominal) event mentions do not
  // anchor sentence pairs during dataset construction.
  bool verbal = true;

  friend bool operator==(const Mention&, const Mention&) = default;
};

struct CorefCluster {
  std::string cluster_id;
  MentionKind kind = MentionKind::kEntity;
  std::vector<std::string> mention_ids;

  friend bool operator==(const CorefCluster&, const CorefCluster&) = default;
};

// Event and entity mention clusters over a set of documents. `doc_ids` lists
// documents that are annotated even if they carry no mentions.
struct CorefAnnotation {
  std::vector<std::string> doc_ids;
  std::vector<Mention> mentions;
  std::vector<CorefCluster> clusters;

  friend bool operator==(const CorefAnnotation&, const CorefAnnotation&) = default;
};

// Every mention in exactly one cluster, cluster kinds match member kinds,
// ids unique, spans well formed.
std::vector<Violation> ValidateCoref(const CorefAnnotation& coref);

// Concatenates annotations (e.g. one JSONL line per topic).
CorefAnnotation MergeCoref(const std::vector<CorefAnnotation>& parts);

using SentenceKey = std::pair<std::string, std::string>;  // (doc_id, sent_id)

// Read-only lookup structure over a validated annotation.
class CorefIndex {
 public:
  struct Entry {
    const Mention* mention;
    std::string cluster_id;
  };

  explicit CorefIndex(const CorefAnnotation& coref);

  bool CoversDoc(const std::string& doc_id) const {
    return docs_.count(doc_id) > 0;
  }

  // Mentions located in the given sentence, in annotation order.
  const std::vector<Entry>& InSentence(const SentenceKey& key) const;

  // Cluster ids of mentions of `kind` in the sentence that contain the token.
  std::set<std::string> ClustersContaining(const SentenceKey& key,
                                           MentionKind kind, int token) const;

  // Cluster ids of mentions of `kind` in the sentence overlapping the span.
  std::set<std::string> ClustersOverlapping(const SentenceKey& key,
                                            MentionKind kind,
                                            const AnswerSpan& span) const;

 private:
  std::set<std::string> docs_;
  std::map<SentenceKey, std::vector<Entry>> by_sentence_;
};

}  // namespace qalign

#endif  // QALIGN_COREF_H_
