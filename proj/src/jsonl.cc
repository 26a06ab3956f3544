#include "qalign/jsonl.h"

#include <fstream>
#include <istream>
#include <ostream>

namespace qalign {

using nlohmann::json;

ParseError::ParseError(std::string source, int line, std::string reason)
    : Error(source + ":" + std::to_string(line) + ": " + reason),
      source_(std::move(source)),
      line_(line),
      reason_(std::move(reason)) {}

namespace {

class SchemaError : public Error {
 public:
  using Error::Error;
};

const json& Need(const json& j, const char* key) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing required key '") + key + "'");
  return *it;
}

std::string Str(const json& j, const char* key) {
  const json& v = Need(j, key);
  if (!v.is_string()) throw SchemaError(std::string("key '") + key + "' must be a string");
  return v.get<std::string>();
}

int Int(const json& j, const char* key) {
  const json& v = Need(j, key);
  if (!v.is_number_integer()) {
    throw SchemaError(std::string("key '") + key + "' must be an integer");
  }
  return v.get<int>();
}

const json& Array(const json& j, const char* key) {
  const json& v = Need(j, key);
  if (!v.is_array()) throw SchemaError(std::string("key '") + key + "' must be an array");
  return v;
}

Tokens StrList(const json& j, const char* key) {
  Tokens out;
  for (const json& v : Array(j, key)) {
    if (!v.is_string()) {
      throw SchemaError(std::string("key '") + key + "' must hold strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

// Runs `parse` on a nested value, prefixing errors with where they occurred.
template <typename F>
auto Within(const std::string& where, F parse) {
  try {
    return parse();
  } catch (const SchemaError& e) {
    throw SchemaError("in " + where + ": " + e.what());
  }
}

template <typename E, typename P>
E EnumField(const json& j, const char* key, P parse) {
  const std::string s = Str(j, key);
  auto v = parse(s);
  if (!v) throw SchemaError("invalid value '" + s + "' for key '" + key + "'");
  return *v;
}

AnswerSpan SpanFrom(const json& j) { return {Int(j, "start"), Int(j, "end")}; }

std::vector<AnswerSpan> SpanList(const json& j, const char* key) {
  std::vector<AnswerSpan> out;
  const json& arr = Array(j, key);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(Within(std::string(key) + "[" + std::to_string(i) + "]",
                         [&] { return SpanFrom(arr[i]); }));
  }
  return out;
}

SentenceText SentenceFrom(const json& j, bool lenient) {
  SentenceText s;
  s.doc_id = Str(j, "doc_id");
  s.sent_id = Str(j, "sent_id");
  s.tokens = StrList(j, "tokens");
  if (!lenient || j.contains("context_tokens")) {
    s.context_tokens = StrList(j, "context_tokens");
  }
  if (!lenient || j.contains("corpus_tag")) {
    s.corpus_tag = EnumField<CorpusTag>(j, "corpus_tag", ParseCorpusTag);
  }
  return s;
}

QARelation QaFrom(const json& j) {
  QARelation qa;
  qa.qa_id = Str(j, "qa_id");
  qa.predicate_index = Int(j, "predicate_index");
  qa.question_tokens = StrList(j, "question_tokens");
  qa.question_predicate_index = Int(j, "question_predicate_index");
  qa.answers = SpanList(j, "answers");
  return qa;
}

std::vector<QARelation> QaList(const json& j, const char* key) {
  std::vector<QARelation> out;
  const json& arr = Array(j, key);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(Within(std::string(key) + "[" + std::to_string(i) + "]",
                         [&] { return QaFrom(arr[i]); }));
  }
  return out;
}

std::set<QaId> IdSet(const json& j, const char* key) {
  const Tokens ids = StrList(j, key);
  return {ids.begin(), ids.end()};
}

Alignment AlignmentFrom(const json& j) { return {IdSet(j, "left"), IdSet(j, "right")}; }

std::vector<Alignment> AlignmentList(const json& j, const char* key) {
  std::vector<Alignment> out;
  const json& arr = Array(j, key);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(Within(std::string(key) + "[" + std::to_string(i) + "]",
                         [&] { return AlignmentFrom(arr[i]); }));
  }
  return out;
}

json SpanList(const std::vector<AnswerSpan>& spans) {
  json out = json::array();
  for (const AnswerSpan& s : spans) out.push_back(ToJson(s));
  return out;
}

json QaList(const std::vector<QARelation>& qas) {
  json out = json::array();
  for (const QARelation& qa : qas) out.push_back(ToJson(qa));
  return out;
}

json AlignmentList(const std::vector<Alignment>& alignments) {
  json out = json::array();
  for (const Alignment& a : alignments) out.push_back(ToJson(a));
  return out;
}

json RefJson(const SentenceRef& r) { return {{"doc_id", r.doc_id}, {"sent_id", r.sent_id}}; }

SentenceRef RefFrom(const json& j) { return {Str(j, "doc_id"), Str(j, "sent_id")}; }

Split OptionalSplit(const json& j) {
  return j.contains("split") ? EnumField<Split>(j, "split", ParseSplit) : Split::kTrain;
}

}  // namespace

json ToJson(const AnswerSpan& v) { return {{"start", v.start}, {"end", v.end}}; }

json ToJson(const SentenceText& v) {
  return {{"doc_id", v.doc_id},
          {"sent_id", v.sent_id},
          {"tokens", v.tokens},
          {"context_tokens", v.context_tokens},
          {"corpus_tag", ToString(v.corpus_tag)}};
}

json ToJson(const QARelation& v) {
  return {{"qa_id", v.qa_id},
          {"predicate_index", v.predicate_index},
          {"question_tokens", v.question_tokens},
          {"question_predicate_index", v.question_predicate_index},
          {"answers", SpanList(v.answers)}};
}

json ToJson(const SentencePairInstance& v) {
  return {{"pair_id", v.pair_id},   {"split", ToString(v.split)},
          {"a", ToJson(v.a)},       {"b", ToJson(v.b)},
          {"qas_a", QaList(v.qas_a)}, {"qas_b", QaList(v.qas_b)}};
}

json ToJson(const Alignment& v) {
  return {{"left", json(std::vector<std::string>(v.left.begin(), v.left.end()))},
          {"right", json(std::vector<std::string>(v.right.begin(), v.right.end()))}};
}

json ToJson(const AlignmentSet& v) {
  return {{"pair_id", v.pair_id},
          {"provenance", ToString(v.provenance)},
          {"alignments", AlignmentList(v.alignments)}};
}

json ToJson(const CorefAnnotation& v) {
  json mentions = json::array();
  for (const Mention& m : v.mentions) {
    json jm = {{"mention_id", m.mention_id}, {"doc_id", m.doc_id},
               {"sent_id", m.sent_id},       {"span", ToJson(m.span)},
               {"kind", ToString(m.kind)}};
    if (!m.verbal) jm["verbal"] = false;
    mentions.push_back(std::move(jm));
  }
  json clusters = json::array();
  for (const CorefCluster& c : v.clusters) {
    clusters.push_back({{"cluster_id", c.cluster_id},
                        {"kind", ToString(c.kind)},
                        {"mention_ids", c.mention_ids}});
  }
  json out = {{"mentions", mentions}, {"clusters", clusters}};
  if (!v.doc_ids.empty()) out["doc_ids"] = v.doc_ids;
  return out;
}

json ToJson(const FusionInstance& v) {
  json sources = json::array();
  for (const SentenceText& s : v.sources) sources.push_back(ToJson(s));
  json qas = json::array();
  for (const auto& list : v.qas) qas.push_back(QaList(list));
  json pairs = json::array();
  for (const SourcePairAlignments& p : v.pair_alignments) {
    pairs.push_back({{"first", p.first},
                     {"second", p.second},
                     {"alignments", AlignmentList(p.alignments)}});
  }
  return {{"cluster_id", v.cluster_id}, {"sources", sources}, {"qas", qas},
          {"target", v.target},         {"pair_alignments", pairs}};
}

json ToJson(const FusionOutput& v) {
  return {{"cluster_id", v.cluster_id}, {"tokens", v.tokens}};
}

json ToJson(const RawSentence& v) {
  return {{"doc_id", v.sentence.doc_id},
          {"sent_id", v.sentence.sent_id},
          {"tokens", v.sentence.tokens},
          {"corpus_tag", ToString(v.sentence.corpus_tag)}};
}

json ToJson(const Topic& v) {
  return {{"topic_id", v.topic_id}, {"doc_ids", v.doc_ids}, {"split", ToString(v.split)}};
}

json ToJson(const ScuCluster& v) {
  json contributors = json::array();
  for (const ScuContributor& c : v.contributors) {
    contributors.push_back(
        {{"doc_id", c.doc_id}, {"sent_id", c.sent_id}, {"span", ToJson(c.span)}});
  }
  return {{"scu_id", v.scu_id},
          {"label", v.label},
          {"contributors", contributors},
          {"split", ToString(v.split)}};
}

json ToJson(const SpanAlignmentRecord& v) {
  return {{"summary", RefJson(v.summary_sent)},
          {"doc", RefJson(v.doc_sent)},
          {"spans", SpanList(v.spans)},
          {"split", ToString(v.split)}};
}

json ToJson(const QaAttachment& v) {
  return {{"doc_id", v.doc_id}, {"sent_id", v.sent_id}, {"qas", QaList(v.qas)}};
}

json ToJson(const HeadRecord& v) {
  return {{"doc_id", v.doc_id}, {"sent_id", v.sent_id}, {"heads", v.heads}};
}

void FromJson(const json& j, SentencePairInstance* out) {
  out->pair_id = Str(j, "pair_id");
  out->split = EnumField<Split>(j, "split", ParseSplit);
  out->a = Within("a", [&] { return SentenceFrom(Need(j, "a"), false); });
  out->b = Within("b", [&] { return SentenceFrom(Need(j, "b"), false); });
  out->qas_a = QaList(j, "qas_a");
  out->qas_b = QaList(j, "qas_b");
}

void FromJson(const json& j, AlignmentSet* out) {
  out->pair_id = Str(j, "pair_id");
  out->provenance = EnumField<Provenance>(j, "provenance", ParseProvenance);
  out->alignments = AlignmentList(j, "alignments");
}

void FromJson(const json& j, CorefAnnotation* out) {
  if (j.contains("doc_ids")) out->doc_ids = StrList(j, "doc_ids");
  const json& mentions = Array(j, "mentions");
  for (std::size_t i = 0; i < mentions.size(); ++i) {
    out->mentions.push_back(Within("mentions[" + std::to_string(i) + "]", [&] {
      const json& m = mentions[i];
      Mention mention;
      mention.mention_id = Str(m, "mention_id");
      mention.doc_id = Str(m, "doc_id");
      mention.sent_id = Str(m, "sent_id");
      mention.span = Within("span", [&] { return SpanFrom(Need(m, "span")); });
      mention.kind = EnumField<MentionKind>(m, "kind", ParseMentionKind);
      if (m.contains("verbal")) {
        if (!m["verbal"].is_boolean()) throw SchemaError("key 'verbal' must be a boolean");
        mention.verbal = m["verbal"].get<bool>();
      }
      return mention;
    }));
  }
  const json& clusters = Array(j, "clusters");
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    out->clusters.push_back(Within("clusters[" + std::to_string(i) + "]", [&] {
      const json& c = clusters[i];
      return CorefCluster{Str(c, "cluster_id"),
                          EnumField<MentionKind>(c, "kind", ParseMentionKind),
                          StrList(c, "mention_ids")};
    }));
  }
}

void FromJson(const json& j, FusionInstance* out) {
  out->cluster_id = Str(j, "cluster_id");
  const json& sources = Array(j, "sources");
  for (std::size_t i = 0; i < sources.size(); ++i) {
    out->sources.push_back(Within("sources[" + std::to_string(i) + "]",
                                  [&] { return SentenceFrom(sources[i], true); }));
  }
  const json& qas = Array(j, "qas");
  for (std::size_t i = 0; i < qas.size(); ++i) {
    const json wrapper = {{"qas", qas[i]}};
    out->qas.push_back(Within("qas[" + std::to_string(i) + "]",
                              [&] { return QaList(wrapper, "qas"); }));
  }
  out->target = StrList(j, "target");
  const json& pairs = Array(j, "pair_alignments");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out->pair_alignments.push_back(
        Within("pair_alignments[" + std::to_string(i) + "]", [&] {
          const json& p = pairs[i];
          return SourcePairAlignments{Int(p, "first"), Int(p, "second"),
                                      AlignmentList(p, "alignments")};
        }));
  }
}

void FromJson(const json& j, FusionOutput* out) {
  out->cluster_id = Str(j, "cluster_id");
  out->tokens = StrList(j, "tokens");
}

void FromJson(const json& j, RawSentence* out) { out->sentence = SentenceFrom(j, true); }

void FromJson(const json& j, Topic* out) {
  out->topic_id = Str(j, "topic_id");
  out->doc_ids = StrList(j, "doc_ids");
  out->split = EnumField<Split>(j, "split", ParseSplit);
}

void FromJson(const json& j, ScuCluster* out) {
  out->scu_id = Str(j, "scu_id");
  out->label = Str(j, "label");
  const json& contributors = Array(j, "contributors");
  for (std::size_t i = 0; i < contributors.size(); ++i) {
    out->contributors.push_back(
        Within("contributors[" + std::to_string(i) + "]", [&] {
          const json& c = contributors[i];
          return ScuContributor{Str(c, "doc_id"), Str(c, "sent_id"),
                                Within("span", [&] { return SpanFrom(Need(c, "span")); })};
        }));
  }
  out->split = OptionalSplit(j);
}

void FromJson(const json& j, SpanAlignmentRecord* out) {
  out->summary_sent = Within("summary", [&] { return RefFrom(Need(j, "summary")); });
  out->doc_sent = Within("doc", [&] { return RefFrom(Need(j, "doc")); });
  out->spans = SpanList(j, "spans");
  out->split = OptionalSplit(j);
}

void FromJson(const json& j, QaAttachment* out) {
  out->doc_id = Str(j, "doc_id");
  out->sent_id = Str(j, "sent_id");
  out->qas = QaList(j, "qas");
}

void FromJson(const json& j, HeadRecord* out) {
  out->doc_id = Str(j, "doc_id");
  out->sent_id = Str(j, "sent_id");
  for (const json& h : Array(j, "heads")) {
    if (!h.is_number_integer()) throw SchemaError("key 'heads' must hold integers");
    out->heads.push_back(h.get<int>());
  }
}

template <typename T>
std::vector<T> ReadJsonl(std::istream& in, const std::string& source) {
  std::vector<T> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      T value{};
      FromJson(j, &value);
      out.push_back(std::move(value));
    } catch (const json::exception& e) {
      throw ParseError(source, number, e.what());
    } catch (const SchemaError& e) {
      throw ParseError(source, number, e.what());
    }
  }
  return out;
}

template <typename T>
std::vector<T> ReadJsonlFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return ReadJsonl<T>(in, path);
}

template <typename T>
void WriteJsonl(std::ostream& out, const std::vector<T>& items) {
  for (const T& item : items) out << ToJson(item).dump() << '\n';
}

template <typename T>
void WriteJsonlFile(const std::string& path, const std::vector<T>& items) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  WriteJsonl(out, items);
  if (!out) throw Error("write failed: " + path);
}

#define QALIGN_INSTANTIATE_JSONL(T)                                          \
  template std::vector<T> ReadJsonl<T>(std::istream&, const std::string&); \
  template std::vector<T> ReadJsonlFile<T>(const std::string&);            \
  template void WriteJsonl<T>(std::ostream&, const std::vector<T>&);       \
  template void WriteJsonlFile<T>(const std::string&, const std::vector<T>&);

QALIGN_INSTANTIATE_JSONL(SentencePairInstance)
QALIGN_INSTANTIATE_JSONL(AlignmentSet)
QALIGN_INSTANTIATE_JSONL(CorefAnnotation)
QALIGN_INSTANTIATE_JSONL(FusionInstance)
QALIGN_INSTANTIATE_JSONL(FusionOutput)
QALIGN_INSTANTIATE_JSONL(RawSentence)
QALIGN_INSTANTIATE_JSONL(Topic)
QALIGN_INSTANTIATE_JSONL(ScuCluster)
QALIGN_INSTANTIATE_JSONL(SpanAlignmentRecord)
QALIGN_INSTANTIATE_JSONL(QaAttachment)
QALIGN_INSTANTIATE_JSONL(HeadRecord)

#undef QALIGN_INSTANTIATE_JSONL

}  // namespace qalign
