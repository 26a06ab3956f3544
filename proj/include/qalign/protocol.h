#ifndef QALIGN_PROTOCOL_H_
#define QALIGN_PROTOCOL_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qalign/scorer.h"

namespace qalign {

// Wire messages exchanged with an external scorer, one JSON object per
// line:
//
//   {"request_id":"r1","items":[{"candidate_id":"c1","text_a":"..","text_b":".."}]}
//   {"request_id":"r1","scores":{"c1":0.87}}

struct ScoreItem {
  std::string candidate_id;
  std::string text_a;
  std::string text_b;

  friend bool operator==(const ScoreItem&, const ScoreItem&) = default;
};

struct ScoreRequest {
  std::string request_id;
  std::vector<ScoreItem> items;

  friend bool operator==(const ScoreRequest&, const ScoreRequest&) = default;
};

struct ScoreResponse {
  std::string request_id;
  std::map<std::string, double> scores;

  friend bool operator==(const ScoreResponse&, const ScoreResponse&) = default;
};

// Compact single-line JSON, keys sorted.
std::string EncodeRequest(const ScoreRequest& request);
std::string EncodeResponse(const ScoreResponse& response);

// Throw ScorerError on malformed JSON, missing keys, wrong types or, for
// requests, duplicate candidate ids.
ScoreRequest DecodeRequest(std::string_view line);
ScoreResponse DecodeResponse(std::string_view line);

// Throws ScorerError naming the request id unless the response answers this
// request with exactly its candidate ids, each scored in [0, 1].
void CheckResponse(const ScoreRequest& request, const ScoreResponse& response);

}  // namespace qalign

#endif  // QALIGN_PROTOCOL_H_
