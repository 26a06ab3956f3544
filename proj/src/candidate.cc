#include "qalign/candidate.h"

#include <algorithm>
#include <sstream>
#include <vector>

#include "qalign/text_util.h"
#include "qalign/validate.h"

namespace qalign {

std::string SerializeCandidate(const QARelation& qa, const SentenceText& sent) {
  std::vector<Violation> problems = ValidateQa(qa, sent, qa.qa_id);
  if (!problems.empty()) {
    throw OwnershipError("qa '" + qa.qa_id + "' does not belong to sentence " +
                         sent.doc_id + "/" + sent.sent_id + ": " +
                         problems.front().ToString());
  }

  Tokens out;
  out.reserve(qa.question_tokens.size() + sent.context_tokens.size() +
              sent.tokens.size() + 5 + 2 * qa.answers.size());

  for (int i = 0; i < static_cast<int>(qa.question_tokens.size()); ++i) {
    if (i == qa.question_predicate_index) {
      out.emplace_back(kPredicateOpen);
      out.push_back(qa.question_tokens[i]);
      out.emplace_back(kPredicateClose);
    } else {
      out.push_back(qa.question_tokens[i]);
    }
  }
  out.emplace_back(kQuestionSep);
  out.insert(out.end(), sent.context_tokens.begin(), sent.context_tokens.end());

  std::vector<AnswerSpan> spans = qa.answers;
  std::stable_sort(spans.begin(), spans.end(),
                   [](const AnswerSpan& x, const AnswerSpan& y) {
                     if (x.start != y.start) return x.start < y.start;
                     return x.length() > y.length();
                   });
  for (int i = 0; i < static_cast<int>(sent.tokens.size()); ++i) {
    for (const AnswerSpan& span : spans) {
      if (span.start == i) out.emplace_back(kAnswerOpen);
    }
    if (i == qa.predicate_index) {
      out.emplace_back(kPredicateOpen);
      out.push_back(sent.tokens[i]);
      out.emplace_back(kPredicateClose);
    } else {
      out.push_back(sent.tokens[i]);
    }
    for (const AnswerSpan& span : spans) {
      if (span.end == i + 1) out.emplace_back(kAnswerClose);
    }
  }
  return Join(out);
}

Tokens StripCandidateMarkup(std::string_view serialized) {
  Tokens out;
  std::istringstream in{std::string(serialized)};
  std::string token;
  while (in >> token) {
    if (token == kPredicateOpen || token == kPredicateClose ||
        token == kQuestionSep || token == kAnswerOpen || token == kAnswerClose) {
      continue;
    }
    out.push_back(token);
  }
  return out;
}

}  // namespace qalign
