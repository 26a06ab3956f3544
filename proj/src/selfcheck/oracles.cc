#include "selfcheck/oracles.h"

#include <algorithm>
#include <cctype>
#include <functional>

namespace qalign::oracle {

namespace {

double SumSorted(const std::vector<ScoredEdge>& chosen) {
  std::vector<ScoredEdge> sorted = chosen;
  std::sort(sorted.begin(), sorted.end(), [](const ScoredEdge& x, const ScoredEdge& y) {
    if (x.left_qa != y.left_qa) return x.left_qa < y.left_qa;
    return x.right_qa < y.right_qa;
  });
  double total = 0.0;
  for (const ScoredEdge& e : sorted) total += e.score;
  return total;
}

EdgeList SortedIds(const std::vector<ScoredEdge>& chosen) {
  EdgeList out;
  for (const ScoredEdge& e : chosen) out.emplace_back(e.left_qa, e.right_qa);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Ids(const std::set<QaId>& s) {
  std::vector<std::string> v;
  for (const QaId& id : s) v.push_back(id);
  std::sort(v.begin(), v.end());
  return v;
}

bool SameAlignment(const Alignment& x, const Alignment& y) {
  return Ids(x.left) == Ids(y.left) && Ids(x.right) == Ids(y.right);
}

std::vector<Alignment> Unique(const std::vector<Alignment>& in) {
  std::vector<Alignment> out;
  for (const Alignment& a : in) {
    bool seen = false;
    for (const Alignment& b : out) seen = seen || SameAlignment(a, b);
    if (!seen) out.push_back(a);
  }
  return out;
}

bool Subset(const std::set<QaId>& inner, const std::set<QaId>& outer) {
  for (const QaId& id : inner) {
    bool found = false;
    for (const QaId& o : outer) found = found || o == id;
    if (!found) return false;
  }
  return true;
}

std::string Lower(const std::string& s) {
  std::string out;
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

}  // namespace

BruteMatching BruteForceMatching(const std::vector<ScoredEdge>& edges, double tau) {
  std::vector<ScoredEdge> kept;
  for (const ScoredEdge& e : edges) {
    if (e.score >= tau) kept.push_back(e);
  }
  BruteMatching best;
  bool have = false;
  std::vector<ScoredEdge> chosen;
  std::function<void(std::size_t)> visit = [&](std::size_t k) {
    if (k == kept.size()) {
      const double w = SumSorted(chosen);
      EdgeList ids = SortedIds(chosen);
      if (!have || w > best.weight || (w == best.weight && ids < best.edges)) {
        best.weight = w;
        best.edges = std::move(ids);
        have = true;
      }
      return;
    }
    visit(k + 1);  // skip edge k
    const ScoredEdge& e = kept[k];
    for (const ScoredEdge& c : chosen) {
      if (c.left_qa == e.left_qa || c.right_qa == e.right_qa) return;
    }
    chosen.push_back(e);
    visit(k + 1);
    chosen.pop_back();
  };
  visit(0);
  return best;
}

Counts NaiveCounts(const AlignmentSet& pred, const AlignmentSet& gold) {
  const std::vector<Alignment> p = Unique(pred.alignments);
  const std::vector<Alignment> g = Unique(gold.alignments);
  Counts c;
  for (const Alignment& a : p) {
    bool hit = false;
    for (const Alignment& b : g) hit = hit || SameAlignment(a, b);
    if (hit) {
      ++c.tp;
    } else {
      ++c.fp;
    }
  }
  for (const Alignment& b : g) {
    bool hit = false;
    for (const Alignment& a : p) hit = hit || SameAlignment(a, b);
    if (!hit) ++c.fn;
  }
  return c;
}

double NaiveF1(const Counts& c) {
  if (c.tp + c.fp + c.fn == 0) return 1.0;
  const double p = c.tp + c.fp == 0 ? 1.0 : static_cast<double>(c.tp) / (c.tp + c.fp);
  const double r = c.tp + c.fn == 0 ? 1.0 : static_cast<double>(c.tp) / (c.tp + c.fn);
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

double NaiveCoverage(const AlignmentSet& src, const AlignmentSet& ref) {
  const std::vector<Alignment> s = Unique(src.alignments);
  if (s.empty()) return 1.0;
  long covered = 0;
  for (const Alignment& a : s) {
    bool hit = false;
    for (const Alignment& r : ref.alignments) {
      hit = hit || (Subset(a.left, r.left) && Subset(a.right, r.right));
    }
    if (hit) ++covered;
  }
  return static_cast<double>(covered) / static_cast<double>(s.size());
}

double NaiveRouge2(const Tokens& a, const Tokens& b) {
  std::vector<std::string> la, lb;
  for (const std::string& t : a) la.push_back(Lower(t));
  for (const std::string& t : b) lb.push_back(Lower(t));
  if (la == lb) return 1.0;
  std::vector<std::pair<std::string, std::string>> ba, bb;
  for (std::size_t i = 0; i + 1 < la.size(); ++i) ba.emplace_back(la[i], la[i + 1]);
  for (std::size_t i = 0; i + 1 < lb.size(); ++i) bb.emplace_back(lb[i], lb[i + 1]);
  if (ba.empty() || bb.empty()) return 0.0;
  std::vector<bool> used(bb.size(), false);
  int overlap = 0;
  for (const auto& x : ba) {
    for (std::size_t k = 0; k < bb.size(); ++k) {
      if (!used[k] && bb[k] == x) {
        used[k] = true;
        ++overlap;
        break;
      }
    }
  }
  const double p = static_cast<double>(overlap) / ba.size();
  const double r = static_cast<double>(overlap) / bb.size();
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

EdgeList NaiveInduce(const SentencePairInstance& pair, const CorefAnnotation& coref) {
  auto cluster_of = [&](const std::string& mention_id) {
    for (const CorefCluster& c : coref.clusters) {
      for (const std::string& m : c.mention_ids) {
        if (m == mention_id) return c.cluster_id;
      }
    }
    return std::string();
  };
  // Clusters of mentions of `kind` in `sent` satisfying `touches`.
  auto clusters = [&](const SentenceText& sent, MentionKind kind, auto touches) {
    std::vector<std::string> out;
    for (const Mention& m : coref.mentions) {
      if (m.doc_id == sent.doc_id && m.sent_id == sent.sent_id && m.kind == kind &&
          touches(m.span)) {
        out.push_back(cluster_of(m.mention_id));
      }
    }
    return out;
  };
  auto share = [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
    for (const std::string& a : x) {
      for (const std::string& b : y) {
        if (a == b) return true;
      }
    }
    return false;
  };
  EdgeList out;
  for (const QARelation& qa : pair.qas_a) {
    for (const QARelation& qb : pair.qas_b) {
      auto pred_a = clusters(pair.a, MentionKind::kEvent, [&](const AnswerSpan& s) {
        return s.start <= qa.predicate_index && qa.predicate_index < s.end;
      });
      auto pred_b = clusters(pair.b, MentionKind::kEvent, [&](const AnswerSpan& s) {
        return s.start <= qb.predicate_index && qb.predicate_index < s.end;
      });
      if (!share(pred_a, pred_b)) continue;
      bool args = false;
      for (const AnswerSpan& x : qa.answers) {
        for (const AnswerSpan& y : qb.answers) {
          auto ea = clusters(pair.a, MentionKind::kEntity, [&](const AnswerSpan& s) {
            for (int t = x.start; t < x.end; ++t) {
              if (s.start <= t && t < s.end) return true;
            }
            return false;
          });
          auto eb = clusters(pair.b, MentionKind::kEntity, [&](const AnswerSpan& s) {
            for (int t = y.start; t < y.end; ++t) {
              if (s.start <= t && t < s.end) return true;
            }
            return false;
          });
          args = args || share(ea, eb);
        }
      }
      if (args) out.emplace_back(qa.qa_id, qb.qa_id);
    }
  }
  return out;
}

}  // namespace qalign::oracle
