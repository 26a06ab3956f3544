#ifndef QALIGN_JSONL_H_
#define QALIGN_JSONL_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "qalign/coref.h"
#include "qalign/dataset.h"
#include "qalign/fusion.h"
#include "qalign/lemma.h"
#include "qalign/types.h"

namespace qalign {

// Version of the line schemas below; printed by `align --version`.
inline constexpr int kPairsSchemaVersion = 1;
inline constexpr int kAlignmentsSchemaVersion = 1;
inline constexpr int kCorefSchemaVersion = 1;
inline constexpr int kFusionSchemaVersion = 1;
inline constexpr int kScorerProtocolVersion = 1;

// A malformed input line: "<source>:<line>: <reason>".
class ParseError : public Error {
 public:
  ParseError(std::string source, int line, std::string reason);

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string source_;
  int line_;
  std::string reason_;
};

// A dataset-input sentence: {doc_id, sent_id, tokens, corpus_tag?}.
struct RawSentence {
  SentenceText sentence;
  friend bool operator==(const RawSentence&, const RawSentence&) = default;
};

// Dependency heads for one sentence: {doc_id, sent_id, heads}.
struct HeadRecord {
  std::string doc_id;
  std::string sent_id;
  HeadIndices heads;
  friend bool operator==(const HeadRecord&, const HeadRecord&) = default;
};

// Object encodings. FromJson throws Error on a missing key or a value of the
// wrong type or range; the message names the key.
nlohmann::json ToJson(const AnswerSpan& v);
nlohmann::json ToJson(const SentenceText& v);
nlohmann::json ToJson(const QARelation& v);
nlohmann::json ToJson(const SentencePairInstance& v);
nlohmann::json ToJson(const Alignment& v);
nlohmann::json ToJson(const AlignmentSet& v);
nlohmann::json ToJson(const CorefAnnotation& v);
nlohmann::json ToJson(const FusionInstance& v);
nlohmann::json ToJson(const FusionOutput& v);
nlohmann::json ToJson(const RawSentence& v);
nlohmann::json ToJson(const Topic& v);
nlohmann::json ToJson(const ScuCluster& v);
nlohmann::json ToJson(const SpanAlignmentRecord& v);
nlohmann::json ToJson(const QaAttachment& v);
nlohmann::json ToJson(const HeadRecord& v);

void FromJson(const nlohmann::json& j, SentencePairInstance* out);
void FromJson(const nlohmann::json& j, AlignmentSet* out);
void FromJson(const nlohmann::json& j, CorefAnnotation* out);
void FromJson(const nlohmann::json& j, FusionInstance* out);
void FromJson(const nlohmann::json& j, FusionOutput* out);
void FromJson(const nlohmann::json& j, RawSentence* out);
void FromJson(const nlohmann::json& j, Topic* out);
void FromJson(const nlohmann::json& j, ScuCluster* out);
void FromJson(const nlohmann::json& j, SpanAlignmentRecord* out);
void FromJson(const nlohmann::json& j, QaAttachment* out);
void FromJson(const nlohmann::json& j, HeadRecord* out);

// One object per line; blank lines are skipped. Errors are ParseError with
// the 1-based line number. Instantiated for every type with a FromJson.
template <typename T>
std::vector<T> ReadJsonl(std::istream& in, const std::string& source);

template <typename T>
std::vector<T> ReadJsonlFile(const std::string& path);

// Compact objects with sorted keys, one per line.
template <typename T>
void WriteJsonl(std::ostream& out, const std::vector<T>& items);

template <typename T>
void WriteJsonlFile(const std::string& path, const std::vector<T>& items);

}  // namespace qalign

#endif  // QALIGN_JSONL_H_
