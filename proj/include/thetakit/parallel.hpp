#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace thetakit {

/// Worker count for every parallel loop in the library. Default 1.
void set_thread_count(unsigned n);
unsigned thread_count();

namespace detail {
bool& in_parallel_region();
}

/// Evaluates f(0), ..., f(count-1) and returns the results in index order,
/// so any fold over the returned vector is independent of scheduling.
/// Nested calls run serially on the calling worker.
template <class F>
auto parallel_map(std::size_t count, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using T = std::invoke_result_t<F&, std::size_t>;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), count));
  std::vector<T> out;
  out.reserve(count);
  if (workers <= 1 || detail::in_parallel_region()) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(f(i));
    return out;
  }
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    detail::in_parallel_region() = true;
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    detail::in_parallel_region() = false;
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  // lowest failing index wins, as in a serial run
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace thetakit
