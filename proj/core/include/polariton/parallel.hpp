#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace polariton {

/// 0 means one worker per hardware thread.
inline int resolve_workers(int requested) noexcept {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(begin, end) over static contiguous chunks of [0, count). The
/// first exception thrown by any worker is rethrown on the caller.
template <typename Fn>
void parallel_chunks(int count, int workers, Fn&& fn) {
  workers = std::clamp(resolve_workers(workers), 1, std::max(1, count));
  if (workers == 1) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  const int base = count / workers;
  const int extra = count % workers;
  int begin = 0;
  for (int w = 0; w < workers; ++w) {
    const int end = begin + base + (w < extra ? 1 : 0);
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace polariton
