#include "qalign/transport.h"

#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <cstring>
#include <map>
#include <optional>
#include <thread>

#include "httplib.h"

namespace qalign {

namespace {

std::string Errno(const char* what) {
  return std::string(what) + ": " + std::strerror(errno);
}

bool Blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

ChildProcessClient::ChildProcessClient(const std::string& command,
                                       ClientOptions options)
    : command_(command), options_(options) {
  // A socket pair rather than pipes: send() takes MSG_NOSIGNAL, so a dead
  // scorer surfaces as EPIPE instead of SIGPIPE, and shutdown() gives the
  // child end-of-input.
  int fds[2];
  if (socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
    throw ScorerError(Errno("socketpair"));
  }
  const pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    throw ScorerError(Errno("fork"));
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(fds[1], STDIN_FILENO);
    dup2(fds[1], STDOUT_FILENO);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(fds[1]);
  fd_ = fds[0];
  pid_ = pid;
}

ChildProcessClient::~ChildProcessClient() {
  if (pid_ > 0) {
    shutdown(fd_, SHUT_WR);
    for (int i = 0; i < 200; ++i) {
      if (waitpid(pid_, nullptr, WNOHANG) == pid_) {
        pid_ = -1;
        break;
      }
      usleep(10000);
    }
    Kill();
  }
  if (fd_ >= 0) close(fd_);
}

void ChildProcessClient::Kill() {
  if (pid_ <= 0) return;
  kill(-pid_, SIGKILL);
  kill(pid_, SIGKILL);
  waitpid(pid_, nullptr, 0);
  pid_ = -1;
}

std::vector<ScoreResponse> ChildProcessClient::Exchange(
    const std::vector<ScoreRequest>& requests) {
  std::lock_guard<std::mutex> lock(mu_);
  if (failed_) throw ScorerError("scorer process '" + command_ + "' failed earlier");
  if (requests.empty()) return {};

  std::map<std::string, std::size_t> pending;
  std::string payload;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    if (!pending.emplace(requests[i].request_id, i).second) {
      throw ScorerError("duplicate request_id '" + requests[i].request_id + "'");
    }
    payload += EncodeRequest(requests[i]);
    payload += '\n';
  }

  std::thread writer([this, &payload] {
    std::size_t offset = 0;
    while (offset < payload.size()) {
      const ssize_t n = send(fd_, payload.data() + offset, payload.size() - offset,
                             MSG_NOSIGNAL);
      if (n < 0) {
        if (errno == EINTR) continue;
        return;  // the reader reports the dead peer
      }
      offset += static_cast<std::size_t>(n);
    }
  });

  std::vector<std::optional<ScoreResponse>> answers(requests.size());
  const auto deadline = std::chrono::steady_clock::now() + options_.timeout;
  std::string error;
  auto first_pending = [&] { return "request " + pending.begin()->first; };
  while (!pending.empty() && error.empty()) {
    std::size_t newline;
    while (!pending.empty() && (newline = buffer_.find('\n')) != std::string::npos) {
      const std::string line = buffer_.substr(0, newline);
      buffer_.erase(0, newline + 1);
      if (Blank(line)) continue;
      ScoreResponse response;
      try {
        response = DecodeResponse(line);
      } catch (const ScorerError& e) {
        error = first_pending() + ": " + e.what();
        break;
      }
      auto it = pending.find(response.request_id);
      if (it == pending.end()) {
        error = "response for unknown or already answered request_id '" +
                response.request_id + "'";
        break;
      }
      answers[it->second] = std::move(response);
      pending.erase(it);
    }
    if (pending.empty() || !error.empty()) break;

    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      error = first_pending() + ": timed out after " +
              std::to_string(options_.timeout.count()) + " ms";
      break;
    }
    pollfd pfd{fd_, POLLIN, 0};
    const int rc = poll(&pfd, 1, static_cast<int>(left.count()));
    if (rc < 0) {
      if (errno == EINTR) continue;
      error = Errno("poll");
      break;
    }
    if (rc == 0) continue;
    char chunk[65536];
    const ssize_t n = recv(fd_, chunk, sizeof chunk, 0);
    if (n < 0 && errno == EINTR) continue;
    if (n < 0 && errno != ECONNRESET) {
      error = first_pending() + ": " + Errno("read from scorer");
      break;
    }
    if (n <= 0) {
      error = first_pending() + ": scorer process closed its output";
      break;
    }
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }

  if (!error.empty()) {
    failed_ = true;
    shutdown(fd_, SHUT_RDWR);  // unblocks the writer
    Kill();
    writer.join();
    throw ScorerError(error);
  }
  writer.join();
  std::vector<ScoreResponse> out;
  out.reserve(answers.size());
  for (auto& a : answers) out.push_back(std::move(*a));
  return out;
}

HttpClient::HttpClient(const std::string& url, ClientOptions options)
    : options_(options) {
  constexpr std::string_view kScheme = "http://";
  if (url.rfind(kScheme, 0) != 0) throw ScorerError("not an http URL: " + url);
  std::string rest = url.substr(kScheme.size());
  const std::size_t slash = rest.find('/');
  path_ = slash == std::string::npos ? "/score" : rest.substr(slash);
  if (path_ == "/") path_ = "/score";
  const std::string authority = rest.substr(0, slash);
  const std::size_t colon = authority.rfind(':');
  host_ = authority.substr(0, colon);
  if (colon != std::string::npos) {
    try {
      port_ = std::stoi(authority.substr(colon + 1));
    } catch (const std::exception&) {
      throw ScorerError("bad port in URL: " + url);
    }
  }
  if (host_.empty()) throw ScorerError("missing host in URL: " + url);
}

std::vector<ScoreResponse> HttpClient::Exchange(
    const std::vector<ScoreRequest>& requests) {
  std::vector<std::optional<ScoreResponse>> answers(requests.size());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::string error;
  auto fail = [&](std::string message) {
    std::lock_guard<std::mutex> lock(mu);
    if (error.empty()) error = std::move(message);
  };
  auto failed = [&] {
    std::lock_guard<std::mutex> lock(mu);
    return !error.empty();
  };
  const auto ms = options_.timeout.count();
  auto worker = [&] {
    httplib::Client client(host_, port_);
    client.set_connection_timeout(ms / 1000, (ms % 1000) * 1000);
    client.set_read_timeout(ms / 1000, (ms % 1000) * 1000);
    client.set_write_timeout(ms / 1000, (ms % 1000) * 1000);
    while (!failed()) {
      const std::size_t i = next++;
      if (i >= requests.size()) return;
      const std::string& id = requests[i].request_id;
      auto result = client.Post(path_, EncodeRequest(requests[i]), "application/json");
      if (!result) {
        fail("request " + id + ": HTTP transport error: " +
             httplib::to_string(result.error()));
        return;
      }
      if (result->status != 200) {
        fail("request " + id + ": HTTP status " + std::to_string(result->status));
        return;
      }
      try {
        ScoreResponse response = DecodeResponse(result->body);
        if (response.request_id != id) {
          fail("request " + id + ": response carries request_id '" +
               response.request_id + "'");
          return;
        }
        answers[i] = std::move(response);
      } catch (const ScorerError& e) {
        fail("request " + id + ": " + e.what());
        return;
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(
      requests.size(), static_cast<std::size_t>(std::max(1, options_.http_concurrency)));
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < workers; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (!error.empty()) throw ScorerError(error);
  std::vector<ScoreResponse> out;
  out.reserve(answers.size());
  for (auto& a : answers) out.push_back(std::move(*a));
  return out;
}

std::unique_ptr<ScorerClient> MakeScorerClient(const std::string& address,
                                               ClientOptions options) {
  if (address.rfind("http://", 0) == 0) {
    return std::make_unique<HttpClient>(address, options);
  }
  if (address.empty()) throw ScorerError("empty scorer address");
  return std::make_unique<ChildProcessClient>(address, options);
}

ExternalScorer::ExternalScorer(std::unique_ptr<ScorerClient> client,
                               std::size_t batch_size)
    : client_(std::move(client)), batch_size_(batch_size == 0 ? 1 : batch_size) {}

std::vector<double> ExternalScorer::Score(std::span<const Candidate> candidates) {
  std::vector<ScoreRequest> requests;
  for (std::size_t start = 0; start < candidates.size(); start += batch_size_) {
    ScoreRequest request;
    request.request_id = "r" + std::to_string(next_request_++);
    const std::size_t end = std::min(candidates.size(), start + batch_size_);
    for (std::size_t i = start; i < end; ++i) {
      request.items.push_back({"c" + std::to_string(i - start), candidates[i].text_a,
                               candidates[i].text_b});
    }
    requests.push_back(std::move(request));
  }
  const std::vector<ScoreResponse> responses = client_->Exchange(requests);
  std::vector<double> out;
  out.reserve(candidates.size());
  for (std::size_t r = 0; r < requests.size(); ++r) {
    CheckResponse(requests[r], responses[r]);
    for (const ScoreItem& item : requests[r].items) {
      out.push_back(responses[r].scores.at(item.candidate_id));
    }
  }
  return out;
}

}  // namespace qalign
