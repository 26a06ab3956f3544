#ifndef QALIGN_PARALLEL_H_
#define QALIGN_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace qalign {

// out[i] = fn(in[i]) on up to `threads` workers. Output order follows input
// order regardless of scheduling. If any call throws, the exception of the
// lowest failing index is rethrown after all workers stop.
template <typename In, typename Fn>
auto ParallelMap(const std::vector<In>& in, int threads, Fn fn)
    -> std::vector<decltype(fn(in.front()))> {
  using Out = decltype(fn(in.front()));
  std::vector<std::optional<Out>> slots(in.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads < 1 ? 1 : threads, in.size()));
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t error_index = in.size();
  std::exception_ptr error;

  auto work = [&] {
    for (std::size_t i = next++; i < in.size(); i = next++) {
      try {
        slots[i].emplace(fn(in[i]));
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<Out> out;
  out.reserve(in.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace qalign

#endif  // QALIGN_PARALLEL_H_
