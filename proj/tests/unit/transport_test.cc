#include <atomic>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "qalign/decode.h"
#include "qalign/transport.h"
#include "selfcheck/fixtures.h"

using namespace qalign;

namespace {

std::string Fake(const std::string& args) {
  return std::string(QALIGN_FAKE_SCORER) + " " + args;
}

ClientOptions Quick() {
  ClientOptions o;
  o.timeout = std::chrono::milliseconds(3000);
  return o;
}

double LengthScore(const Candidate& c) {
  return static_cast<double>((c.text_a.size() + c.text_b.size()) % 101) / 100.0;
}

std::vector<SentencePairInstance> FixturePairs() {
  std::vector<SentencePairInstance> pairs;
  for (const auto& c : fixtures::AllAlignedPairs()) pairs.push_back(c.pair);
  return pairs;
}

std::string ErrorOf(Scorer& scorer, const SentencePairInstance& pair) {
  try {
    ScoreAll(pair, scorer);
  } catch (const ScorerError& e) {
    return e.what();
  }
  return "";
}

// In-process HTTP scorer with a caller-supplied handler.
class TestServer {
 public:
  explicit TestServer(std::function<void(const httplib::Request&, httplib::Response&)> h) {
    server_.Post("/score", std::move(h));
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~TestServer() {
    server_.stop();
    thread_.join();
  }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

void LengthHandler(const httplib::Request& req, httplib::Response& res) {
  const ScoreRequest request = DecodeRequest(req.body);
  ScoreResponse response{request.request_id, {}};
  for (const ScoreItem& item : request.items) {
    response.scores[item.candidate_id] =
        static_cast<double>((item.text_a.size() + item.text_b.size()) % 101) / 100.0;
  }
  res.set_content(EncodeResponse(response), "application/json");
}

}  // namespace

TEST_CASE("child process scorer: constant scores over several batches") {
  ExternalScorer scorer(std::make_unique<ChildProcessClient>(Fake("constant 0.25"), Quick()),
                        2);
  const auto all = ScoreCorpus(FixturePairs(), scorer);
  std::size_t n = 0;
  for (const auto& edges : all) {
    for (const ScoredEdge& e : edges) {
      CHECK(e.score == 0.25);
      ++n;
    }
  }
  CHECK(n == 4 + 9 + 3 + 6);
  // The process is reused for later calls.
  CHECK(ScoreAll(FixturePairs()[0], scorer).size() == 4);
}

TEST_CASE("child process scorer: scores map back to their candidates") {
  const auto pairs = FixturePairs();
  for (const char* mode : {"length", "reverse"}) {
    ExternalScorer scorer(std::make_unique<ChildProcessClient>(Fake(mode), Quick()), 3);
    for (const SentencePairInstance& p : pairs) {
      const std::vector<Candidate> candidates = BuildCandidates(p);
      const std::vector<ScoredEdge> edges = ScoreAll(p, scorer);
      REQUIRE(edges.size() == candidates.size());
      for (std::size_t i = 0; i < edges.size(); ++i) {
        CHECK(edges[i].score == LengthScore(candidates[i]));
      }
    }
  }
}

TEST_CASE("child process scorer: protocol violations fail loudly") {
  const SentencePairInstance p = fixtures::FiredCoach().pair;
  const std::pair<const char*, const char*> cases[] = {
      {"out_of_range", "outside [0, 1]"},
      {"drop_key", "no score for candidate"},
      {"extra_key", "scores for"},
      {"wrong_id", "unknown or already answered request_id 'nope'"},
      {"malformed", "malformed"},
      {"exit", "closed its output"},
  };
  for (const auto& [mode, expected] : cases) {
    ExternalScorer scorer(std::make_unique<ChildProcessClient>(Fake(mode), Quick()), 4);
    const std::string error = ErrorOf(scorer, p);
    INFO(std::string(mode) << ": " << error);
    CHECK(error.find(expected) != std::string::npos);
    CHECK(error.find("fixture:fired-coach") != std::string::npos);
  }
}

TEST_CASE("child process scorer: timeout, then the client stays failed") {
  ClientOptions options;
  options.timeout = std::chrono::milliseconds(300);
  ChildProcessClient* raw = nullptr;
  auto client = std::make_unique<ChildProcessClient>(Fake("hang"), options);
  raw = client.get();
  ExternalScorer scorer(std::move(client), 32);
  const auto start = std::chrono::steady_clock::now();
  const std::string error = ErrorOf(scorer, fixtures::FiredCoach().pair);
  CHECK(error.find("r1: timed out after 300 ms") != std::string::npos);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(3));
  CHECK_THROWS_AS(raw->Exchange({{"r7", {}}}), ScorerError);
}

TEST_CASE("child process scorer: exchange details") {
  ChildProcessClient client(Fake("length"), Quick());
  CHECK(client.Exchange({}).empty());
  const std::vector<ScoreRequest> requests = {
      {"x", {{"c0", "ab", "c"}}}, {"y", {}}, {"z", {{"k", "", ""}}}};
  const std::vector<ScoreResponse> out = client.Exchange(requests);
  REQUIRE(out.size() == 3);
  CHECK(out[0].request_id == "x");
  CHECK(out[0].scores.at("c0") == 0.03);
  CHECK(out[1].scores.empty());
  CHECK(out[2].scores.at("k") == 0.0);
  CHECK_THROWS_AS(client.Exchange({{"d", {}}, {"d", {}}}), ScorerError);
}

TEST_CASE("child process scorer: large pipelined batch") {
  // Many requests in flight at once must not deadlock on full buffers.
  ChildProcessClient client(Fake("length"), Quick());
  std::vector<ScoreRequest> requests;
  for (int r = 0; r < 400; ++r) {
    ScoreRequest req{"r" + std::to_string(r), {}};
    for (int k = 0; k < 32; ++k) {
      req.items.push_back({"c" + std::to_string(k), std::string(200, 'x'), std::string(k, 'y')});
    }
    requests.push_back(std::move(req));
  }
  const auto out = client.Exchange(requests);
  REQUIRE(out.size() == requests.size());
  for (std::size_t r = 0; r < out.size(); ++r) CHECK_NOTHROW(CheckResponse(requests[r], out[r]));
}

TEST_CASE("http scorer") {
  TestServer server(LengthHandler);
  ClientOptions options = Quick();
  options.http_concurrency = 3;
  ExternalScorer scorer(std::make_unique<HttpClient>(server.url(), options), 2);
  for (const SentencePairInstance& p : FixturePairs()) {
    const std::vector<Candidate> candidates = BuildCandidates(p);
    const std::vector<ScoredEdge> edges = ScoreAll(p, scorer);
    REQUIRE(edges.size() == candidates.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      CHECK(edges[i].score == LengthScore(candidates[i]));
    }
  }
  HttpClient explicit_path(server.url() + "/score", options);
  CHECK(explicit_path.Exchange({{"q", {}}}).at(0).request_id == "q");
}

TEST_CASE("http scorer errors") {
  TestServer bad_status([](const httplib::Request&, httplib::Response& res) {
    res.status = 500;
  });
  HttpClient client(bad_status.url(), Quick());
  try {
    client.Exchange({{"r3", {}}});
    FAIL("expected ScorerError");
  } catch (const ScorerError& e) {
    CHECK(std::string(e.what()).find("request r3: HTTP status 500") != std::string::npos);
  }

  TestServer wrong_id([](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"request_id":"other","scores":{}})", "application/json");
  });
  HttpClient wrong(wrong_id.url(), Quick());
  CHECK_THROWS_AS(wrong.Exchange({{"r1", {}}}), ScorerError);

  CHECK_THROWS_AS(HttpClient("ftp://x", Quick()), ScorerError);
  CHECK_THROWS_AS(HttpClient("http://:80", Quick()), ScorerError);
  CHECK_THROWS_AS(HttpClient("http://host:port", Quick()), ScorerError);

  // Nothing listens on the port of a stopped server.
  std::string dead_url;
  {
    TestServer gone(LengthHandler);
    dead_url = gone.url();
  }
  ClientOptions fast;
  fast.timeout = std::chrono::milliseconds(500);
  HttpClient dead(dead_url, fast);
  CHECK_THROWS_AS(dead.Exchange({{"r1", {}}}), ScorerError);
}

TEST_CASE("address selection") {
  auto http = MakeScorerClient("http://127.0.0.1:9/score");
  CHECK(dynamic_cast<HttpClient*>(http.get()) != nullptr);
  auto child = MakeScorerClient(Fake("constant 0.1"));
  CHECK(dynamic_cast<ChildProcessClient*>(child.get()) != nullptr);
  CHECK_THROWS_AS(MakeScorerClient(""), ScorerError);
}

TEST_CASE("external scores decode like in-core scores") {
  const SentencePairInstance p = fixtures::FiredCoach().pair;
  ExternalScorer scorer(std::make_unique<ChildProcessClient>(Fake("constant 0.8"), Quick()));
  ConstantScorer local(0.8);
  CHECK(Decode(p.pair_id, ScoreAll(p, scorer), {0.5}) ==
        Decode(p.pair_id, ScoreAll(p, local), {0.5}));
}
