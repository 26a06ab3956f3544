#ifndef QALIGN_TRANSPORT_H_
#define QALIGN_TRANSPORT_H_

#include <chrono>
#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qalign/protocol.h"
#include "qalign/scorer.h"

namespace qalign {

// Sends score requests to an external scorer. Requests are written without
// waiting for earlier answers; responses are matched by request_id and may
// come back in any order.
class ScorerClient {
 public:
  virtual ~ScorerClient() = default;
  // Responses in request order. Throws ScorerError naming a request id on a
  // timeout, a malformed line, an unknown or repeated request_id, or a
  // dead peer. A client that has failed stays failed.
  virtual std::vector<ScoreResponse> Exchange(
      const std::vector<ScoreRequest>& requests) = 0;
};

struct ClientOptions {
  std::chrono::milliseconds timeout{60000};
  int http_concurrency = 4;  // requests in flight over HTTP
};

// Runs `command` through /bin/sh with its standard input and output
// connected to the client; one JSON object per line in each direction.
class ChildProcessClient : public ScorerClient {
 public:
  explicit ChildProcessClient(const std::string& command,
                              ClientOptions options = {});
  ~ChildProcessClient() override;
  ChildProcessClient(const ChildProcessClient&) = delete;
  ChildProcessClient& operator=(const ChildProcessClient&) = delete;

  std::vector<ScoreResponse> Exchange(
      const std::vector<ScoreRequest>& requests) override;

 private:
  void Kill();

  std::string command_;
  ClientOptions options_;
  int fd_ = -1;
  int pid_ = -1;
  bool failed_ = false;
  std::string buffer_;
  std::mutex mu_;
};

// POSTs each request line to `url` ("http://host:port/path"; the path
// defaults to "/score") and reads one response object from the body.
class HttpClient : public ScorerClient {
 public:
  explicit HttpClient(const std::string& url, ClientOptions options = {});

  std::vector<ScoreResponse> Exchange(
      const std::vector<ScoreRequest>& requests) override;

 private:
  std::string host_;
  int port_ = 80;
  std::string path_;
  ClientOptions options_;
};

// "http://..." selects HttpClient; anything else is a shell command.
std::unique_ptr<ScorerClient> MakeScorerClient(const std::string& address,
                                               ClientOptions options = {});

// A Scorer backed by a ScorerClient. Candidates are sent in requests of at
// most batch_size items, all in flight together.
class ExternalScorer : public Scorer {
 public:
  explicit ExternalScorer(std::unique_ptr<ScorerClient> client,
                          std::size_t batch_size = 32);

  std::vector<double> Score(std::span<const Candidate> candidates) override;

 private:
  std::unique_ptr<ScorerClient> client_;
  std::size_t batch_size_;
  std::size_t next_request_ = 1;
};

}  // namespace qalign

#endif  // QALIGN_TRANSPORT_H_
