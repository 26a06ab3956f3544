#ifndef QALIGN_SELFCHECK_ACCEPTANCE_H_
#define QALIGN_SELFCHECK_ACCEPTANCE_H_

#include <cstdint>
#include <string>
#include <vector>

namespace qalign::acceptance {

enum class Status { kPass, kFail, kSkipped };

struct Result {
  std::string id;    // "A1".."A8"
  std::string name;  // short slug
  Status status = Status::kFail;
  std::string detail;
};

struct Options {
  std::uint64_t seed = 0;
  // Directory with {dev,test}.pairs.jsonl and {dev,test}.gold.jsonl. Empty
  // means the dataset check is skipped.
  std::string dataset_dir;
};

std::vector<Result> RunAll(const Options& options);

// "PASS A1 decoder_oracle_equivalence: <detail>"
std::string Format(const Result& result);

bool AllPassed(const std::vector<Result>& results);  // SKIPPED counts as passed

}  // namespace qalign::acceptance

#endif  // QALIGN_SELFCHECK_ACCEPTANCE_H_
