#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace imd {

/// Evaluates fn(0..count-1) and returns the result of the lowest index that
/// produced a value. Indices are handed out in increasing order, so every
/// index below the winner is evaluated to completion and the outcome does
/// not depend on scheduling.
template <typename T>
std::optional<T> first_success(int count, int jobs, const std::function<std::optional<T>(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i)
      if (auto r = fn(i)) return r;
    return std::nullopt;
  }
  std::atomic<int> next{0};
  std::atomic<int> best{count};
  std::optional<T> result;
  std::exception_ptr error;
  std::mutex mu;
  auto worker = [&] {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= count || i > best.load()) return;
      try {
        auto r = fn(i);
        if (!r) continue;
        std::lock_guard<std::mutex> lock(mu);
        if (i < best.load()) {
          best.store(i);
          result = std::move(r);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        best.store(-1);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return result;
}

}  // namespace imd
