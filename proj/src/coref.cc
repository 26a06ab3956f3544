#include "qalign/coref.h"

namespace qalign {

std::string_view ToString(MentionKind kind) {
  return kind == MentionKind::kEvent ? "EVENT" : "ENTITY";
}

std::optional<MentionKind> ParseMentionKind(std::string_view s) {
  if (s == "EVENT") return MentionKind::kEvent;
  if (s == "ENTITY") return MentionKind::kEntity;
  return std::nullopt;
}

std::vector<Violation> ValidateCoref(const CorefAnnotation& coref) {
  std::vector<Violation> out;
  std::map<std::string, const Mention*> mentions;
  for (std::size_t i = 0; i < coref.mentions.size(); ++i) {
    const Mention& m = coref.mentions[i];
    const std::string prefix = "mentions[" + std::to_string(i) + "]";
    if (!mentions.emplace(m.mention_id, &m).second) {
      out.push_back({Severity::kError, prefix + ".mention_id",
                     "duplicate mention_id '" + m.mention_id + "'"});
    }
    if (m.span.start < 0 || m.span.start >= m.span.end) {
      out.push_back({Severity::kError, prefix + ".span", "empty or negative span"});
    }
  }

  std::map<std::string, int> membership;
  std::set<std::string> cluster_ids;
  for (std::size_t i = 0; i < coref.clusters.size(); ++i) {
    const CorefCluster& c = coref.clusters[i];
    const std::string prefix = "clusters[" + std::to_string(i) + "]";
    if (!cluster_ids.insert(c.cluster_id).second) {
      out.push_back({Severity::kError, prefix + ".cluster_id",
                     "duplicate cluster_id '" + c.cluster_id + "'"});
    }
    for (const std::string& id : c.mention_ids) {
      auto it = mentions.find(id);
      if (it == mentions.end()) {
        out.push_back({Severity::kError, prefix + ".mention_ids",
                       "unknown mention '" + id + "'"});
        continue;
      }
      ++membership[id];
      if (it->second->kind != c.kind) {
        out.push_back({Severity::kError, prefix + ".kind",
                       "mention '" + id + "' is " +
                           std::string(ToString(it->second->kind)) +
                           " but cluster is " + std::string(ToString(c.kind))});
      }
    }
  }
  for (const auto& [id, mention] : mentions) {
    const int count = membership.count(id) ? membership[id] : 0;
    if (count != 1) {
      out.push_back({Severity::kError, "mentions",
                     "mention '" + id + "' belongs to " + std::to_string(count) +
                         " clusters"});
    }
  }
  return out;
}

CorefAnnotation MergeCoref(const std::vector<CorefAnnotation>& parts) {
  CorefAnnotation merged;
  for (const CorefAnnotation& part : parts) {
    merged.doc_ids.insert(merged.doc_ids.end(), part.doc_ids.begin(),
                          part.doc_ids.end());
    merged.mentions.insert(merged.mentions.end(), part.mentions.begin(),
                           part.mentions.end());
    merged.clusters.insert(merged.clusters.end(), part.clusters.begin(),
                           part.clusters.end());
  }
  return merged;
}

CorefIndex::CorefIndex(const CorefAnnotation& coref) {
  docs_.insert(coref.doc_ids.begin(), coref.doc_ids.end());
  std::map<std::string, std::string> cluster_of;
  for (const CorefCluster& c : coref.clusters) {
    for (const std::string& id : c.mention_ids) cluster_of[id] = c.cluster_id;
  }
  for (const Mention& m : coref.mentions) {
    docs_.insert(m.doc_id);
    auto it = cluster_of.find(m.mention_id);
    if (it == cluster_of.end()) continue;
    by_sentence_[{m.doc_id, m.sent_id}].push_back({&m, it->second});
  }
}

const std::vector<CorefIndex::Entry>& CorefIndex::InSentence(
    const SentenceKey& key) const {
  static const std::vector<Entry> kEmpty;
  auto it = by_sentence_.find(key);
  return it == by_sentence_.end() ? kEmpty : it->second;
}

std::set<std::string> CorefIndex::ClustersContaining(const SentenceKey& key,
                                                     MentionKind kind,
                                                     int token) const {
  std::set<std::string> out;
  for (const Entry& e : InSentence(key)) {
    if (e.mention->kind == kind && e.mention->span.Contains(token)) {
      out.insert(e.cluster_id);
    }
  }
  return out;
}

std::set<std::string> CorefIndex::ClustersOverlapping(
    const SentenceKey& key, MentionKind kind, const AnswerSpan& span) const {
  std::set<std::string> out;
  for (const Entry& e : InSentence(key)) {
    if (e.mention->kind == kind && e.mention->span.Overlaps(span)) {
      out.insert(e.cluster_id);
    }
  }
  return out;
}

}  // namespace qalign
