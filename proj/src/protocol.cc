#include "qalign/protocol.h"

#include <cmath>
#include <set>

#include "json.hpp"

namespace qalign {

using nlohmann::json;

namespace {

json Parse(std::string_view line) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    throw ScorerError(std::string("malformed scorer message: ") + e.what());
  }
}

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ScorerError(std::string("scorer message missing key '") + key + "'");
  }
  return j.at(key);
}

std::string StringField(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (!v.is_string()) {
    throw ScorerError(std::string("scorer message key '") + key +
                      "' is not a string");
  }
  return v.get<std::string>();
}

}  // namespace

std::string EncodeRequest(const ScoreRequest& request) {
  json items = json::array();
  for (const ScoreItem& item : request.items) {
    items.push_back({{"candidate_id", item.candidate_id},
                     {"text_a", item.text_a},
                     {"text_b", item.text_b}});
  }
  return json{{"request_id", request.request_id}, {"items", items}}.dump();
}

std::string EncodeResponse(const ScoreResponse& response) {
  json scores = json::object();
  for (const auto& [id, score] : response.scores) scores[id] = score;
  return json{{"request_id", response.request_id}, {"scores", scores}}.dump();
}

ScoreRequest DecodeRequest(std::string_view line) {
  const json j = Parse(line);
  ScoreRequest out;
  out.request_id = StringField(j, "request_id");
  const json& items = Field(j, "items");
  if (!items.is_array()) throw ScorerError("'items' is not an array");
  std::set<std::string> seen;
  for (const json& item : items) {
    ScoreItem parsed{StringField(item, "candidate_id"), StringField(item, "text_a"),
                     StringField(item, "text_b")};
    if (!seen.insert(parsed.candidate_id).second) {
      throw ScorerError("request " + out.request_id + ": duplicate candidate_id '" +
                        parsed.candidate_id + "'");
    }
    out.items.push_back(std::move(parsed));
  }
  return out;
}

ScoreResponse DecodeResponse(std::string_view line) {
  const json j = Parse(line);
  ScoreResponse out;
  out.request_id = StringField(j, "request_id");
  const json& scores = Field(j, "scores");
  if (!scores.is_object()) {
    throw ScorerError("response " + out.request_id + ": 'scores' is not an object");
  }
  for (const auto& [id, value] : scores.items()) {
    if (!value.is_number()) {
      throw ScorerError("response " + out.request_id + ": score for '" + id +
                        "' is not a number");
    }
    out.scores[id] = value.get<double>();
  }
  return out;
}

void CheckResponse(const ScoreRequest& request, const ScoreResponse& response) {
  const std::string& id = request.request_id;
  if (response.request_id != id) {
    throw ScorerError("request " + id + ": response carries request_id '" +
                      response.request_id + "'");
  }
  for (const ScoreItem& item : request.items) {
    auto it = response.scores.find(item.candidate_id);
    if (it == response.scores.end()) {
      throw ScorerError("request " + id + ": no score for candidate '" +
                        item.candidate_id + "'");
    }
    if (!(it->second >= 0.0 && it->second <= 1.0)) {
      throw ScorerError("request " + id + ": score " + std::to_string(it->second) +
                        " for candidate '" + item.candidate_id +
                        "' outside [0, 1]");
    }
  }
  if (response.scores.size() != request.items.size()) {
    throw ScorerError("request " + id + ": response has " +
                      std::to_string(response.scores.size()) + " scores for " +
                      std::to_string(request.items.size()) + " candidates");
  }
}

}  // namespace qalign
