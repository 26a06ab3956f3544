#include "qalign/lemma.h"

#include <algorithm>

#include "qalign/text_util.h"

namespace qalign {

namespace {

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool IsConsonant(char c) { return c >= 'a' && c <= 'z' && !IsVowel(c); }

bool EndsWith(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.substr(w.size() - suffix.size()) == suffix;
}

bool AllLetters(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(),
                                   [](char c) { return c >= 'a' && c <= 'z'; });
}

// A plausible stem needs two letters and a vowel ('y' counts after the
// first letter, as in "try").
bool PlausibleStem(std::string_view stem) {
  if (stem.size() < 2) return false;
  for (std::size_t i = 0; i < stem.size(); ++i) {
    if (IsVowel(stem[i]) || (i > 0 && stem[i] == 'y')) return true;
  }
  return false;
}

// stem ends in consonant + one vowel from `vowels` + `last`.
bool ShortSyllable(std::string_view stem, std::string_view vowels) {
  const std::size_t n = stem.size();
  if (n < 3) return false;
  return vowels.find(stem[n - 2]) != std::string_view::npos &&
         IsConsonant(stem[n - 3]);
}

// Restores the form of a stem left behind by removing -ed or -ing.
std::string RestoreStem(std::string stem) {
  const std::size_t n = stem.size();
  const char last = stem[n - 1];
  const char prev = stem[n - 2];

  if (last == prev && IsConsonant(last) && last != 'l' && last != 's' &&
      last != 'z' && last != 'f') {
    stem.pop_back();  // stopped -> stop
    return stem;
  }

  bool add_e = false;
  switch (last) {
    case 'v':
    case 'c':
    case 'u':
      add_e = true;
      break;
    case 'z':
      add_e = prev != 'z';
      break;
    case 'g':
      add_e = prev != 'n' || EndsWith(stem, "ang") || EndsWith(stem, "eng");
      break;
    case 's':
      add_e = prev != 's';
      break;
    case 'r':
    case 'k':
    case 'm':
    case 'd':
      add_e = ShortSyllable(stem, "aiou");
      break;
    case 'p':
      add_e = ShortSyllable(stem, "aiouy");
      break;
    case 'l':
      add_e = ShortSyllable(stem, "iou") ||
              (IsConsonant(prev) && prev != 'l' && prev != 'r' && prev != 'w');
      break;
    case 'n':
      add_e = ShortSyllable(stem, "iu");
      break;
    case 'b':
      add_e = ShortSyllable(stem, "iou");
      break;
    case 't':
      add_e = (EndsWith(stem, "at") && !EndsWith(stem, "eat") &&
               !EndsWith(stem, "oat")) ||
              (EndsWith(stem, "ut") && !EndsWith(stem, "out")) ||
              (EndsWith(stem, "ot") && !EndsWith(stem, "oot"));
      break;
    default:
      break;
  }
  if (add_e) stem.push_back('e');
  return stem;
}

// One suffix rule, longest suffix first. Returns `w` unchanged when no rule
// applies.
std::string ApplyRule(const std::string& w) {
  const std::size_t n = w.size();
  if (EndsWith(w, "ies")) {
    return n > 4 ? w.substr(0, n - 3) + "y" : w.substr(0, n - 1);
  }
  if (EndsWith(w, "ied")) {
    return n > 4 ? w.substr(0, n - 3) + "y" : w.substr(0, n - 1);
  }
  if (EndsWith(w, "sses")) return w.substr(0, n - 2);
  if (EndsWith(w, "ches") || EndsWith(w, "shes") || EndsWith(w, "xes") ||
      EndsWith(w, "zzes")) {
    return w.substr(0, n - 2);
  }
  if (EndsWith(w, "ing") && n > 4) {
    std::string stem = w.substr(0, n - 3);
    if (PlausibleStem(stem)) return RestoreStem(std::move(stem));
    return w;
  }
  if (EndsWith(w, "ed") && n > 3) {
    if (EndsWith(w, "eed")) return w;
    std::string stem = w.substr(0, n - 2);
    if (PlausibleStem(stem)) return RestoreStem(std::move(stem));
    return w;
  }
  if (EndsWith(w, "s") && n > 3 && !EndsWith(w, "ss") && !EndsWith(w, "us") &&
      !EndsWith(w, "is")) {
    return w.substr(0, n - 1);
  }
  return w;
}

}  // namespace

std::string Lemmatize(std::string_view word) {
  const auto& table = LemmaExceptions();
  std::string w = ToLower(word);
  // Every rule shortens the word, so this terminates. Stopping at a fixed
  // point makes the function idempotent.
  while (true) {
    auto it = table.find(w);
    if (it != table.end()) return it->second;
    if (!AllLetters(w)) return w;
    std::string next = ApplyRule(w);
    if (next == w) return w;
    w = std::move(next);
  }
}

int AnswerHead(const AnswerSpan& span, const SentenceText& sent,
               const HeadIndices* heads) {
  if (heads != nullptr && heads->size() == sent.tokens.size()) {
    for (int i = span.start; i < span.end; ++i) {
      const int h = (*heads)[i];
      if (!span.Contains(h)) return i;
    }
  }
  for (int i = span.end - 1; i >= span.start; --i) {
    const std::string& t = sent.tokens[i];
    if (!IsFunctionWord(t) && !IsPunctuation(t)) return i;
  }
  return span.end - 1;
}

namespace {

std::set<std::string> HeadLemmas(const QARelation& qa, const SentenceText& sent,
                                 const std::optional<HeadIndices>& heads) {
  std::set<std::string> out;
  for (const AnswerSpan& span : qa.answers) {
    const int head = AnswerHead(span, sent, heads ? &*heads : nullptr);
    out.insert(Lemmatize(sent.tokens[head]));
  }
  return out;
}

}  // namespace

bool LemmaCriterion(const QARelation& qa_a, const SentenceText& sent_a,
                    const QARelation& qa_b, const SentenceText& sent_b,
                    const PairHeads& heads) {
  if (Lemmatize(sent_a.tokens[qa_a.predicate_index]) !=
      Lemmatize(sent_b.tokens[qa_b.predicate_index])) {
    return false;
  }
  const std::set<std::string> la = HeadLemmas(qa_a, sent_a, heads.a);
  const std::set<std::string> lb = HeadLemmas(qa_b, sent_b, heads.b);
  return std::any_of(la.begin(), la.end(),
                     [&](const std::string& l) { return lb.count(l) > 0; });
}

AlignmentSet LemmaAlign(const SentencePairInstance& pair, const PairHeads& heads) {
  AlignmentSet out;
  out.pair_id = pair.pair_id;
  out.provenance = Provenance::kLemma;
  for (const QARelation& qa : pair.qas_a) {
    for (const QARelation& qb : pair.qas_b) {
      if (LemmaCriterion(qa, pair.a, qb, pair.b, heads)) {
        out.alignments.push_back(Alignment::OneToOne(qa.qa_id, qb.qa_id));
      }
    }
  }
  return out;
}

}  // namespace qalign
