#include "qalign/fusion.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "qalign/lemma.h"
#include "qalign/text_util.h"

namespace qalign {

std::vector<Violation> ValidateFusionInstance(const FusionInstance& instance) {
  std::vector<Violation> out;
  auto error = [&](std::string field, std::string message) {
    out.push_back({Severity::kError, std::move(field), std::move(message)});
  };
  const int n = static_cast<int>(instance.sources.size());
  if (n < 2 || n > 4) {
    error("sources", "expected 2 to 4 sources, got " + std::to_string(n));
  }
  if (instance.qas.size() != instance.sources.size()) {
    error("qas", "expected one QA list per source");
    return out;
  }
  for (int s = 0; s < n; ++s) {
    const std::string prefix = "sources[" + std::to_string(s) + "]";
    for (Violation& v : ValidateSentence(instance.sources[s], prefix)) {
      out.push_back(std::move(v));
    }
    std::set<QaId> seen;
    for (std::size_t q = 0; q < instance.qas[s].size(); ++q) {
      const QARelation& qa = instance.qas[s][q];
      const std::string qa_prefix =
          "qas[" + std::to_string(s) + "][" + std::to_string(q) + "]";
      if (!seen.insert(qa.qa_id).second) {
        error(qa_prefix + ".qa_id", "duplicate qa_id '" + qa.qa_id + "'");
      }
      for (Violation& v : ValidateQa(qa, instance.sources[s], qa_prefix)) {
        out.push_back(std::move(v));
      }
    }
  }
  auto has_qa = [&](int s, const QaId& id) {
    return std::any_of(instance.qas[s].begin(), instance.qas[s].end(),
                       [&](const QARelation& qa) { return qa.qa_id == id; });
  };
  for (std::size_t p = 0; p < instance.pair_alignments.size(); ++p) {
    const SourcePairAlignments& pa = instance.pair_alignments[p];
    const std::string prefix = "pair_alignments[" + std::to_string(p) + "]";
    if (pa.first < 0 || pa.first >= n || pa.second < 0 || pa.second >= n ||
        pa.first == pa.second) {
      error(prefix, "source indices must be distinct and in range");
      continue;
    }
    for (std::size_t a = 0; a < pa.alignments.size(); ++a) {
      const Alignment& al = pa.alignments[a];
      const std::string ap = prefix + ".alignments[" + std::to_string(a) + "]";
      if (al.left.empty()) error(ap + ".left", "empty side");
      if (al.right.empty()) error(ap + ".right", "empty side");
      for (const QaId& id : al.left) {
        if (!has_qa(pa.first, id)) error(ap + ".left", "unknown qa_id '" + id + "'");
      }
      for (const QaId& id : al.right) {
        if (!has_qa(pa.second, id)) error(ap + ".right", "unknown qa_id '" + id + "'");
      }
    }
  }
  return out;
}

namespace {

class UnionFind {
 public:
  int Add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(int x, int y) {
    x = Find(x);
    y = Find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<int> parent_;
};

struct NodeKey {
  MarkupKind kind;
  int source;
  AnswerSpan span;

  friend auto operator<=>(const NodeKey&, const NodeKey&) = default;
};

const QARelation& FindQa(const FusionInstance& inst, int source, const QaId& id) {
  for (const QARelation& qa : inst.qas[source]) {
    if (qa.qa_id == id) return qa;
  }
  throw FusionError("unknown qa_id '" + id + "' in source " + std::to_string(source));
}

std::string SpanText(const SentenceText& sent, const AnswerSpan& span) {
  Tokens words(sent.tokens.begin() + span.start, sent.tokens.begin() + span.end);
  return Join(words);
}

bool EmissionLess(const MarkupSpan& x, const MarkupSpan& y) {
  if (x.source != y.source) return x.source < y.source;
  if (x.span.start != y.span.start) return x.span.start < y.span.start;
  if (x.span.end != y.span.end) return x.span.end > y.span.end;
  return x.kind == MarkupKind::kArgument && y.kind == MarkupKind::kPredicate;
}

std::string OpenTag(const MarkupSpan& m) {
  return std::string(m.kind == MarkupKind::kPredicate ? "[P" : "[A") +
         std::to_string(m.index) + "]";
}

std::string CloseTag(const MarkupSpan& m) {
  return std::string(m.kind == MarkupKind::kPredicate ? "[\\P" : "[\\A") +
         std::to_string(m.index) + "]";
}

}  // namespace

std::vector<MarkupSpan> ComputeFusionMarkup(const FusionInstance& instance) {
  std::vector<Violation> problems = ValidateFusionInstance(instance);
  if (HasErrors(problems)) throw FusionError(problems.front().ToString());

  UnionFind uf;
  std::map<NodeKey, int> nodes;
  auto node = [&](const NodeKey& key) {
    auto [it, inserted] = nodes.emplace(key, 0);
    if (inserted) it->second = uf.Add();
    return it->second;
  };

  for (const SourcePairAlignments& pa : instance.pair_alignments) {
    for (const Alignment& al : pa.alignments) {
      std::vector<int> preds;
      std::vector<int> args;
      auto collect = [&](int source, const std::set<QaId>& ids) {
        for (const QaId& id : ids) {
          const QARelation& qa = FindQa(instance, source, id);
          preds.push_back(node({MarkupKind::kPredicate, source,
                                {qa.predicate_index, qa.predicate_index + 1}}));
          for (const AnswerSpan& span : qa.answers) {
            args.push_back(node({MarkupKind::kArgument, source, span}));
          }
        }
      };
      collect(pa.first, al.left);
      collect(pa.second, al.right);
      for (int p : preds) uf.Union(preds.front(), p);
      for (int a : args) uf.Union(args.front(), a);
    }
  }

  // Outermost wins among nested spans of one kind; crossing spans are fatal.
  std::vector<MarkupSpan> kept;
  for (const auto& [key, id] : nodes) {
    bool nested = false;
    for (const auto& [other, other_id] : nodes) {
      if (other.kind != key.kind || other.source != key.source ||
          other.span == key.span || !other.span.Overlaps(key.span)) {
        continue;
      }
      const bool other_contains = other.span.start <= key.span.start &&
                                  key.span.end <= other.span.end;
      const bool key_contains = key.span.start <= other.span.start &&
                                other.span.end <= key.span.end;
      if (!other_contains && !key_contains) {
        const SentenceText& sent = instance.sources[key.source];
        throw FusionError("crossing markup spans in source " +
                          std::to_string(key.source) + ": '" +
                          SpanText(sent, key.span) + "' and '" +
                          SpanText(sent, other.span) + "'");
      }
      if (other_contains) nested = true;
    }
    if (!nested) kept.push_back({key.source, key.span, key.kind, uf.Find(id), 0});
  }
  std::sort(kept.begin(), kept.end(), EmissionLess);

  std::map<int, int> pred_index;
  std::map<int, int> arg_index;
  for (MarkupSpan& m : kept) {
    std::map<int, int>& table =
        m.kind == MarkupKind::kPredicate ? pred_index : arg_index;
    auto [it, inserted] =
        table.emplace(m.component, static_cast<int>(table.size()) + 1);
    m.index = it->second;
  }
  return kept;
}

std::string AugmentFusionInput(const FusionInstance& instance) {
  const std::vector<MarkupSpan> markup = ComputeFusionMarkup(instance);
  Tokens out;
  std::size_t next = 0;
  for (std::size_t s = 0; s < instance.sources.size(); ++s) {
    if (s > 0) out.emplace_back(kSentenceSeparator);
    const Tokens& tokens = instance.sources[s].tokens;
    std::vector<const MarkupSpan*> open;
    for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
      while (next < markup.size() && markup[next].source == static_cast<int>(s) &&
             markup[next].span.start == i) {
        out.push_back(OpenTag(markup[next]));
        open.push_back(&markup[next]);
        ++next;
      }
      out.push_back(tokens[i]);
      while (!open.empty() && open.back()->span.end == i + 1) {
        out.push_back(CloseTag(*open.back()));
        open.pop_back();
      }
    }
  }
  return Join(out);
}

Tokens StripFusionMarkup(std::string_view augmented) {
  static const std::regex kMarkup(R"(\[\\?[PA][0-9]+\])");
  Tokens out;
  std::istringstream in{std::string(augmented)};
  std::string token;
  while (in >> token) {
    if (token == kSentenceSeparator || std::regex_match(token, kMarkup)) continue;
    out.push_back(token);
  }
  return out;
}

namespace {

std::vector<std::string> Lemmas(const Tokens& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) out.push_back(Lemmatize(t));
  return out;
}

}  // namespace

std::vector<std::set<int>> LinkOutputWords(const Tokens& output,
                                           const std::vector<Tokens>& sources) {
  std::vector<std::set<std::string>> vocab;
  for (const Tokens& s : sources) {
    std::vector<std::string> l = Lemmas(s);
    vocab.emplace_back(l.begin(), l.end());
  }
  std::vector<std::set<int>> out;
  for (const std::string& word : output) {
    const std::string lemma = Lemmatize(word);
    std::set<int> contributors;
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      if (vocab[i].count(lemma)) contributors.insert(static_cast<int>(i));
    }
    out.push_back(std::move(contributors));
  }
  return out;
}

ConsolidationReport ClassifyConsolidating(const Tokens& output,
                                          const std::vector<Tokens>& sources) {
  ConsolidationReport report;
  report.per_word_contributors = LinkOutputWords(output, sources);

  const std::vector<std::string> out_lemmas = Lemmas(output);
  const std::size_t m = out_lemmas.size();
  // best[i][j]: length of the longest run of output lemmas covering word j
  // that occurs contiguously in source i.
  std::vector<std::vector<std::size_t>> best(sources.size(),
                                             std::vector<std::size_t>(m, 0));
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const std::vector<std::string> src = Lemmas(sources[i]);
    for (std::size_t x = 0; x < m; ++x) {
      std::size_t run = 0;
      for (std::size_t y = 0; y < src.size(); ++y) {
        std::size_t k = 0;
        while (x + k < m && y + k < src.size() && out_lemmas[x + k] == src[y + k]) {
          ++k;
        }
        run = std::max(run, k);
      }
      for (std::size_t j = x; j < x + run; ++j) best[i][j] = std::max(best[i][j], run);
    }
  }

  std::map<int, int> sole_counts;
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t top = 0;
    for (std::size_t i = 0; i < sources.size(); ++i) top = std::max(top, best[i][j]);
    std::set<int> attributed;
    if (top > 0) {
      for (std::size_t i = 0; i < sources.size(); ++i) {
        if (best[i][j] == top) attributed.insert(static_cast<int>(i));
      }
    }
    const bool content = !IsFunctionWord(output[j]) && !IsPunctuation(output[j]);
    if (content && attributed.size() == 1) ++sole_counts[*attributed.begin()];
    report.per_word_attribution.push_back(std::move(attributed));
  }
  for (const auto& [source, count] : sole_counts) {
    report.contributing_sources.insert(source);
  }
  report.is_consolidating = report.contributing_sources.size() >= 2;
  return report;
}

double ConsolidationRate(const std::vector<ConsolidationReport>& reports) {
  if (reports.empty()) return 0.0;
  const auto hits = std::count_if(reports.begin(), reports.end(),
                                  [](const ConsolidationReport& r) {
                                    return r.is_consolidating;
                                  });
  return static_cast<double>(hits) / static_cast<double>(reports.size());
}

}  // namespace qalign
