#include "qalign/types.h"

#include <algorithm>

#include "qalign/text_util.h"

namespace qalign {

std::string_view ToString(CorpusTag tag) {
  switch (tag) {
    case CorpusTag::kEcb: return "ECB";
    case CorpusTag::kDuc: return "DUC";
    case CorpusTag::kMn: return "MN";
    case CorpusTag::kOther: return "OTHER";
  }
  return "OTHER";
}

std::string_view ToString(Split split) {
  switch (split) {
    case Split::kTrain: return "TRAIN";
    case Split::kDev: return "DEV";
    case Split::kTest: return "TEST";
  }
  return "TRAIN";
}

std::string_view ToString(Provenance provenance) {
  switch (provenance) {
    case Provenance::kGold: return "GOLD";
    case Provenance::kLemma: return "LEMMA";
    case Provenance::kModel: return "MODEL";
    case Provenance::kEcbInduced: return "ECB_INDUCED";
  }
  return "GOLD";
}

std::optional<CorpusTag> ParseCorpusTag(std::string_view s) {
  if (s == "ECB") return CorpusTag::kEcb;
  if (s == "DUC") return CorpusTag::kDuc;
  if (s == "MN") return CorpusTag::kMn;
  if (s == "OTHER") return CorpusTag::kOther;
  return std::nullopt;
}

std::optional<Split> ParseSplit(std::string_view s) {
  if (s == "TRAIN") return Split::kTrain;
  if (s == "DEV") return Split::kDev;
  if (s == "TEST") return Split::kTest;
  return std::nullopt;
}

std::optional<Provenance> ParseProvenance(std::string_view s) {
  if (s == "GOLD") return Provenance::kGold;
  if (s == "LEMMA") return Provenance::kLemma;
  if (s == "MODEL") return Provenance::kModel;
  if (s == "ECB_INDUCED") return Provenance::kEcbInduced;
  return std::nullopt;
}

std::string QARelation::wh_word() const {
  if (question_tokens.empty()) return {};
  return ToLower(question_tokens.front());
}

namespace {

const QARelation* FindQa(const std::vector<QARelation>& qas,
                         std::string_view qa_id) {
  auto it = std::find_if(qas.begin(), qas.end(),
                         [&](const QARelation& qa) { return qa.qa_id == qa_id; });
  return it == qas.end() ? nullptr : &*it;
}

}  // namespace

const QARelation* SentencePairInstance::FindA(std::string_view qa_id) const {
  return FindQa(qas_a, qa_id);
}

const QARelation* SentencePairInstance::FindB(std::string_view qa_id) const {
  return FindQa(qas_b, qa_id);
}

bool AlignmentSet::Contains(const Alignment& alignment) const {
  return std::find(alignments.begin(), alignments.end(), alignment) !=
         alignments.end();
}

}  // namespace qalign
