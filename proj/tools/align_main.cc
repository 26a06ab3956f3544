// align: command-line front end for the alignment toolkit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qalign/dataset.h"
#include "qalign/decode.h"
#include "qalign/ecb_induce.h"
#include "qalign/eval.h"
#include "qalign/fusion.h"
#include "qalign/jsonl.h"
#include "qalign/lemma.h"
#include "qalign/parallel.h"
#include "qalign/scorer.h"
#include "qalign/text_util.h"
#include "qalign/transport.h"
#include "qalign/validate.h"
#include "selfcheck/acceptance.h"

namespace {

using nlohmann::json;
using namespace qalign;

struct Globals {
  std::uint64_t seed = 0;
  int threads = 1;
};

void SortByPairId(std::vector<SentencePairInstance>* pairs) {
  std::stable_sort(pairs->begin(), pairs->end(),
                   [](const auto& x, const auto& y) { return x.pair_id < y.pair_id; });
}

void SortByPairId(std::vector<AlignmentSet>* sets) {
  std::stable_sort(sets->begin(), sets->end(),
                   [](const auto& x, const auto& y) { return x.pair_id < y.pair_id; });
}

std::vector<SentencePairInstance> LoadPairs(const std::string& path) {
  std::vector<SentencePairInstance> pairs = ReadJsonlFile<SentencePairInstance>(path);
  std::set<std::string> ids;
  for (const SentencePairInstance& p : pairs) {
    const std::vector<Violation> problems = ValidatePair(p);
    if (HasErrors(problems)) {
      throw Error(path + ": pair '" + p.pair_id + "': " + problems.front().ToString());
    }
    if (!ids.insert(p.pair_id).second) {
      throw Error(path + ": duplicate pair_id '" + p.pair_id + "'");
    }
  }
  return pairs;
}

void WriteReport(const json& report, const std::string& path) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

json PrfJson(const PRF& prf) {
  return {{"tp", prf.tp},           {"fp", prf.fp},         {"fn", prf.fn},
          {"precision", prf.precision}, {"recall", prf.recall}, {"f1", prf.f1}};
}

std::map<std::string, PairHeads> LoadHeads(const std::string& path,
                                           const std::vector<SentencePairInstance>& pairs) {
  std::map<SentenceKey, HeadIndices> by_sentence;
  for (HeadRecord& r : ReadJsonlFile<HeadRecord>(path)) {
    by_sentence[{r.doc_id, r.sent_id}] = std::move(r.heads);
  }
  std::map<std::string, PairHeads> out;
  for (const SentencePairInstance& p : pairs) {
    PairHeads heads;
    auto a = by_sentence.find({p.a.doc_id, p.a.sent_id});
    if (a != by_sentence.end()) heads.a = a->second;
    auto b = by_sentence.find({p.b.doc_id, p.b.sent_id});
    if (b != by_sentence.end()) heads.b = b->second;
    out[p.pair_id] = std::move(heads);
  }
  return out;
}

// --- lemma ---------------------------------------------------------------

struct LemmaArgs {
  std::string pairs;
  std::string out;
  std::string heads;
};

int RunLemma(const LemmaArgs& args, const Globals& g) {
  std::vector<SentencePairInstance> pairs = LoadPairs(args.pairs);
  SortByPairId(&pairs);
  std::map<std::string, PairHeads> heads;
  if (!args.heads.empty()) heads = LoadHeads(args.heads, pairs);
  const std::vector<AlignmentSet> sets =
      ParallelMap(pairs, g.threads, [&](const SentencePairInstance& p) {
        auto it = heads.find(p.pair_id);
        return LemmaAlign(p, it == heads.end() ? PairHeads{} : it->second);
      });
  WriteJsonlFile(args.out, sets);
  std::size_t total = 0;
  for (const AlignmentSet& s : sets) total += s.alignments.size();
  std::cerr << "lemma: " << total << " alignments over " << sets.size() << " pairs\n";
  return 0;
}

// --- decode --------------------------------------------------------------

struct DecodeArgs {
  std::string pairs;
  std::string scorer = "lemma";
  double tau = 0.5;
  std::string out;
  std::string heads;
  std::size_t batch_size = 32;
  int timeout_ms = 60000;
};

std::unique_ptr<Scorer> MakeScorer(const DecodeArgs& args,
                                   const std::vector<SentencePairInstance>& pairs) {
  const std::string& spec = args.scorer;
  if (spec == "lemma") {
    if (args.heads.empty()) return std::make_unique<LemmaScorer>();
    return std::make_unique<LemmaScorer>(LoadHeads(args.heads, pairs));
  }
  if (spec.rfind("constant:", 0) == 0) {
    const std::string value = spec.substr(9);
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) {
      throw Error("bad constant scorer value '" + value + "'");
    }
    return std::make_unique<ConstantScorer>(x);
  }
  if (spec.rfind("gold:", 0) == 0) {
    return std::make_unique<GoldOracleScorer>(
        ReadJsonlFile<AlignmentSet>(spec.substr(5)));
  }
  if (spec.rfind("external:", 0) == 0) {
    std::string address = spec.substr(9);
    if (const char* env = std::getenv("ALIGN_SCORER_ADDR"); env && *env) address = env;
    if (address.empty()) throw Error("external scorer needs an address");
    ClientOptions options;
    options.timeout = std::chrono::milliseconds(args.timeout_ms);
    return std::make_unique<ExternalScorer>(MakeScorerClient(address, options),
                                            args.batch_size);
  }
  throw Error("unknown scorer '" + spec +
              "' (expected lemma, constant:X, gold:FILE or external:ADDR)");
}

int RunDecode(const DecodeArgs& args, const Globals& g) {
  if (!(args.tau >= 0.0 && args.tau <= 1.0)) throw Error("--tau must lie in [0, 1]");
  std::vector<SentencePairInstance> pairs = LoadPairs(args.pairs);
  SortByPairId(&pairs);
  std::unique_ptr<Scorer> scorer = MakeScorer(args, pairs);
  const std::vector<std::vector<ScoredEdge>> edges = ScoreCorpus(pairs, *scorer);
  std::vector<std::size_t> index(pairs.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
  const std::vector<AlignmentSet> sets =
      ParallelMap(index, g.threads, [&](std::size_t i) {
        return Decode(pairs[i].pair_id, edges[i], {args.tau});
      });
  WriteJsonlFile(args.out, sets);
  std::size_t total = 0;
  for (const AlignmentSet& s : sets) total += s.alignments.size();
  std::cerr << "decode: " << total << " alignments over " << sets.size()
            << " pairs (tau " << args.tau << ")\n";
  return 0;
}

// --- eval ----------------------------------------------------------------

struct EvalArgs {
  std::string pred;
  std::string gold;
  std::string report;
};

int RunEval(const EvalArgs& args) {
  std::vector<AlignmentSet> preds = ReadJsonlFile<AlignmentSet>(args.pred);
  std::vector<AlignmentSet> golds = ReadJsonlFile<AlignmentSet>(args.gold);
  SortByPairId(&preds);
  SortByPairId(&golds);
  const EvalReport r = Evaluate(preds, golds);
  json per_pair = json::array();
  for (const PairEval& p : r.per_pair) {
    json entry = PrfJson(p.prf);
    entry["pair_id"] = p.pair_id;
    entry["full_agreement"] = p.full_agreement;
    per_pair.push_back(std::move(entry));
  }
  json report = {
      {"corpus", PrfJson(r.corpus)},
      {"per_pair", per_pair},
      {"full_agreement_rate", r.full_agreement_rate},
      {"mean_pair_f1", r.mean_pair_f1},
      {"pred_covered_by_gold", r.pred_covered_by_gold},
      {"gold_covered_by_pred", r.gold_covered_by_pred},
      {"warnings", r.warnings},
  };
  WriteReport(report, args.report);
  for (const std::string& w : r.warnings) std::cerr << "warning: " << w << "\n";
  std::cerr << "eval: P " << r.corpus.precision << " R " << r.corpus.recall << " F1 "
            << r.corpus.f1 << " over " << r.per_pair.size() << " pairs\n";
  return 0;
}

// --- induce-ecb ----------------------------------------------------------

struct InduceArgs {
  std::string pairs;
  std::string coref;
  std::string out;
  std::string gold;
  std::string report;
};

int RunInduce(const InduceArgs& args, const Globals& g) {
  std::vector<SentencePairInstance> pairs = LoadPairs(args.pairs);
  SortByPairId(&pairs);
  const CorefAnnotation coref = MergeCoref(ReadJsonlFile<CorefAnnotation>(args.coref));
  const std::vector<Violation> problems = ValidateCoref(coref);
  if (HasErrors(problems)) throw Error(args.coref + ": " + problems.front().ToString());
  const CorefIndex index(coref);
  std::vector<AlignmentSet> sets = ParallelMap(
      pairs, g.threads, [&](const SentencePairInstance& p) { return Induce(p, index); });
  WriteJsonlFile(args.out, sets);
  std::size_t total = 0;
  for (const AlignmentSet& s : sets) total += s.alignments.size();
  std::cerr << "induce-ecb: " << total << " alignments over " << sets.size() << " pairs\n";

  if (!args.gold.empty()) {
    std::vector<AlignmentSet> golds = ReadJsonlFile<AlignmentSet>(args.gold);
    std::map<std::string, const AlignmentSet*> by_id;
    for (const AlignmentSet& s : golds) by_id[s.pair_id] = &s;
    CoverageCounts induced_by_gold;
    CoverageCounts gold_by_induced;
    for (const AlignmentSet& s : sets) {
      auto it = by_id.find(s.pair_id);
      AlignmentSet empty;
      empty.pair_id = s.pair_id;
      const AlignmentSet& gold = it == by_id.end() ? empty : *it->second;
      const CoverageCounts a = CountCovered(s, gold);
      const CoverageCounts b = CountCovered(gold, s);
      induced_by_gold.covered += a.covered;
      induced_by_gold.total += a.total;
      gold_by_induced.covered += b.covered;
      gold_by_induced.total += b.total;
    }
    json report = {
        {"induced_covered_by_gold", induced_by_gold.rate()},
        {"gold_covered_by_induced", gold_by_induced.rate()},
        {"induced_alignments", induced_by_gold.total},
        {"gold_alignments", gold_by_induced.total},
    };
    WriteReport(report, args.report);
    std::cerr << "induce-ecb: induced covered by gold " << induced_by_gold.rate()
              << ", gold covered by induced " << gold_by_induced.rate() << "\n";
  }
  return 0;
}

// --- build-dataset -------------------------------------------------------

struct BuildArgs {
  std::string source;
  std::string sentences;
  std::string coref;
  std::string topics;
  std::string scu;
  std::string records;
  std::string qas;
  std::string out;
  EcbOptions ecb;
  MnOptions mn;
};

int RunBuild(const BuildArgs& args) {
  std::vector<SentenceText> raw;
  for (RawSentence& r : ReadJsonlFile<RawSentence>(args.sentences)) {
    raw.push_back(std::move(r.sentence));
  }
  const SentenceStore store(raw);
  std::vector<SentencePairInstance> pairs;
  auto require = [&](const std::string& value, const char* flag) {
    if (value.empty()) {
      throw Error(std::string("--source ") + args.source + " requires " + flag);
    }
  };
  if (args.source == "ecb") {
    require(args.coref, "--coref");
    require(args.topics, "--topics");
    const CorefAnnotation coref = MergeCoref(ReadJsonlFile<CorefAnnotation>(args.coref));
    const std::vector<Violation> problems = ValidateCoref(coref);
    if (HasErrors(problems)) throw Error(args.coref + ": " + problems.front().ToString());
    pairs = BuildEcbPairs(store, coref, ReadJsonlFile<Topic>(args.topics), args.ecb);
  } else if (args.source == "duc") {
    require(args.scu, "--scu");
    pairs = BuildDucPairs(store, ReadJsonlFile<ScuCluster>(args.scu));
  } else if (args.source == "mn") {
    require(args.records, "--records");
    pairs = BuildMnPairs(store, ReadJsonlFile<SpanAlignmentRecord>(args.records), args.mn);
  } else {
    throw Error("unknown --source '" + args.source + "' (expected ecb, duc or mn)");
  }
  if (!args.qas.empty()) AttachQas(ReadJsonlFile<QaAttachment>(args.qas), &pairs);
  SortByPairId(&pairs);
  WriteJsonlFile(args.out, pairs);
  std::cerr << "build-dataset: " << pairs.size() << " pairs from " << args.source << "\n";
  return 0;
}

// --- fusion --------------------------------------------------------------

struct AugmentArgs {
  std::string instances;
  std::string out;
};

int RunAugment(const AugmentArgs& args, const Globals& g) {
  const std::vector<FusionInstance> instances = ReadJsonlFile<FusionInstance>(args.instances);
  const std::vector<std::string> inputs =
      ParallelMap(instances, g.threads,
                  [](const FusionInstance& f) { return AugmentFusionInput(f); });
  std::ofstream out(args.out);
  if (!out) throw Error("cannot write " + args.out);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const json line = {{"cluster_id", instances[i].cluster_id},
                       {"input", inputs[i]},
                       {"target", Join(instances[i].target)}};
    out << line.dump() << "\n";
  }
  std::cerr << "augment-fusion: " << instances.size() << " instances\n";
  return 0;
}

struct ConsolidationArgs {
  std::string outputs;
  std::string instances;
  std::string report;
};

int RunConsolidation(const ConsolidationArgs& args) {
  const std::vector<FusionInstance> instances = ReadJsonlFile<FusionInstance>(args.instances);
  std::map<std::string, const FusionInstance*> by_id;
  for (const FusionInstance& f : instances) by_id[f.cluster_id] = &f;
  std::vector<FusionOutput> outputs = ReadJsonlFile<FusionOutput>(args.outputs);
  std::stable_sort(outputs.begin(), outputs.end(),
                   [](const auto& x, const auto& y) { return x.cluster_id < y.cluster_id; });
  std::vector<ConsolidationReport> reports;
  json per_output = json::array();
  for (const FusionOutput& o : outputs) {
    auto it = by_id.find(o.cluster_id);
    if (it == by_id.end()) {
      throw Error(args.outputs + ": no instance for cluster '" + o.cluster_id + "'");
    }
    std::vector<Tokens> sources;
    for (const SentenceText& s : it->second->sources) sources.push_back(s.tokens);
    ConsolidationReport r = ClassifyConsolidating(o.tokens, sources);
    per_output.push_back({{"cluster_id", o.cluster_id},
                          {"consolidating", r.is_consolidating},
                          {"contributing_sources", r.contributing_sources}});
    reports.push_back(std::move(r));
  }
  const double rate = ConsolidationRate(reports);
  WriteReport({{"consolidation_rate", rate},
               {"num_outputs", outputs.size()},
               {"per_output", per_output}},
              args.report);
  std::cerr << "analyze-consolidation: rate " << rate << " over " << outputs.size()
            << " outputs\n";
  return 0;
}

// --- selfcheck -----------------------------------------------------------

int RunSelfcheck(const std::string& dataset_dir, const Globals& g) {
  acceptance::Options options;
  options.seed = g.seed;
  options.dataset_dir = dataset_dir;
  if (options.dataset_dir.empty()) {
    if (const char* env = std::getenv("QA_ALIGN_DATASET_DIR")) options.dataset_dir = env;
  }
  const auto results = acceptance::RunAll(options);
  for (const auto& r : results) std::cout << acceptance::Format(r) << "\n";
  return acceptance::AllPassed(results) ? 0 : 1;
}

std::string VersionText() {
  return "align 1.0.0\n"
         "pairs schema " + std::to_string(kPairsSchemaVersion) + "\n" +
         "alignments schema " + std::to_string(kAlignmentsSchemaVersion) + "\n" +
         "coref schema " + std::to_string(kCorefSchemaVersion) + "\n" +
         "fusion schema " + std::to_string(kFusionSchemaVersion) + "\n" +
         "scorer protocol " + std::to_string(kScorerProtocolVersion);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Align predicate-argument QAs across sentence pairs."};
  app.require_subcommand(1);
  app.set_version_flag("--version", VersionText());
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized checks")->default_val(0);
  app.add_option("--threads", g.threads, "Worker threads")
      ->default_val(1)
      ->check(CLI::Range(1, 256));

  LemmaArgs lemma;
  CLI::App* lemma_cmd = app.add_subcommand("lemma", "Lemma-match baseline alignments");
  lemma_cmd->add_option("--pairs", lemma.pairs)->required()->check(CLI::ExistingFile);
  lemma_cmd->add_option("--out", lemma.out)->required();
  lemma_cmd->add_option("--heads", lemma.heads, "Dependency heads JSONL")
      ->check(CLI::ExistingFile);

  DecodeArgs decode;
  CLI::App* decode_cmd = app.add_subcommand("decode", "Score candidates and decode a matching");
  decode_cmd->add_option("--pairs", decode.pairs)->required()->check(CLI::ExistingFile);
  decode_cmd->add_option("--scorer", decode.scorer,
                         "lemma | constant:X | gold:FILE | external:ADDR")
      ->default_val("lemma");
  decode_cmd->add_option("--tau", decode.tau)->default_val(0.5);
  decode_cmd->add_option("--out", decode.out)->required();
  decode_cmd->add_option("--heads", decode.heads)->check(CLI::ExistingFile);
  decode_cmd->add_option("--batch-size", decode.batch_size)
      ->default_val(32)
      ->check(CLI::Range(1, 1 << 20));
  decode_cmd->add_option("--timeout-ms", decode.timeout_ms)
      ->default_val(60000)
      ->check(CLI::Range(1, 1 << 30));

  EvalArgs eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Exact-match F1 and coverage");
  eval_cmd->add_option("--pred", eval.pred)->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--gold", eval.gold)->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--report", eval.report, "Report path (default stdout)");

  InduceArgs induce;
  CLI::App* induce_cmd = app.add_subcommand("induce-ecb", "Alignments induced from coreference");
  induce_cmd->add_option("--pairs", induce.pairs)->required()->check(CLI::ExistingFile);
  induce_cmd->add_option("--coref", induce.coref)->required()->check(CLI::ExistingFile);
  induce_cmd->add_option("--out", induce.out)->required();
  induce_cmd->add_option("--gold", induce.gold, "Gold alignments for a coverage report")
      ->check(CLI::ExistingFile);
  induce_cmd->add_option("--report", induce.report, "Coverage report path (default stdout)");

  BuildArgs build;
  CLI::App* build_cmd = app.add_subcommand("build-dataset", "Assemble sentence pairs");
  build_cmd->add_option("--source", build.source)
      ->required()
      ->check(CLI::IsMember({"ecb", "duc", "mn"}));
  build_cmd->add_option("--sentences", build.sentences)->required()->check(CLI::ExistingFile);
  build_cmd->add_option("--coref", build.coref)->check(CLI::ExistingFile);
  build_cmd->add_option("--topics", build.topics)->check(CLI::ExistingFile);
  build_cmd->add_option("--scu", build.scu)->check(CLI::ExistingFile);
  build_cmd->add_option("--records", build.records)->check(CLI::ExistingFile);
  build_cmd->add_option("--qas", build.qas, "Sentence-level QA annotations to attach")
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--out", build.out)->required();
  build_cmd->add_option("--top-k", build.ecb.top_k)->default_val(6)->check(CLI::NonNegativeNumber);
  build_cmd->add_option("--bottom-k", build.ecb.bottom_k)
      ->default_val(2)
      ->check(CLI::NonNegativeNumber);
  build_cmd->add_option("--max-rouge2", build.ecb.max_rouge2)->default_val(0.9);
  build_cmd->add_option("--topic", build.ecb.only_topics, "Restrict to these topics");
  build_cmd->add_option("--min-iou", build.mn.min_iou)->default_val(0.1);

  AugmentArgs augment;
  CLI::App* augment_cmd = app.add_subcommand("augment-fusion", "Mark aligned spans in fusion inputs");
  augment_cmd->add_option("--instances", augment.instances)->required()->check(CLI::ExistingFile);
  augment_cmd->add_option("--out", augment.out)->required();

  ConsolidationArgs consolidation;
  CLI::App* consolidation_cmd =
      app.add_subcommand("analyze-consolidation", "Classify fused outputs as consolidating");
  consolidation_cmd->add_option("--outputs", consolidation.outputs)
      ->required()
      ->check(CLI::ExistingFile);
  consolidation_cmd->add_option("--instances", consolidation.instances)
      ->required()
      ->check(CLI::ExistingFile);
  consolidation_cmd->add_option("--report", consolidation.report, "Report path (default stdout)");

  std::string dataset_dir;
  CLI::App* selfcheck_cmd = app.add_subcommand("selfcheck", "Run the bundled acceptance checks");
  selfcheck_cmd->add_option("--dataset-dir", dataset_dir, "Released dataset directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (lemma_cmd->parsed()) return RunLemma(lemma, g);
    if (decode_cmd->parsed()) return RunDecode(decode, g);
    if (eval_cmd->parsed()) return RunEval(eval);
    if (induce_cmd->parsed()) return RunInduce(induce, g);
    if (build_cmd->parsed()) return RunBuild(build);
    if (augment_cmd->parsed()) return RunAugment(augment, g);
    if (consolidation_cmd->parsed()) return RunConsolidation(consolidation);
    if (selfcheck_cmd->parsed()) return RunSelfcheck(dataset_dir, g);
  } catch (const std::exception& e) {
    std::cerr << "align: error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
