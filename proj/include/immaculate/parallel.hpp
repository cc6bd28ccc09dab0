#pragma once

#include <atomic>
#include <exception>
#include <memory>
#include <thread>
#include <vector>

namespace immaculate {

// Applies fn to every item on a small worker pool, preserving input order in
// the output. Batch analyses are independent per item (one module or
// composition per worker); the first exception, if any, is rethrown after
// all workers join. Results are staged in a plain array so that bool results
// do not share words the way std::vector<bool> elements would.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& items, Fn&& fn)
    -> std::vector<decltype(fn(items[0]))> {
  using Out = decltype(fn(items[0]));
  if (items.empty()) return {};
  auto staging = std::make_unique<Out[]>(items.size());
  const unsigned hardware = std::thread::hardware_concurrency();
  const std::size_t workers =
      std::min<std::size_t>(items.size(), hardware > 0 ? hardware : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) staging[i] = fn(items[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next.fetch_add(1); i < items.size();
               i = next.fetch_add(1)) {
            staging[i] = fn(items[i]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& thread : pool) thread.join();
    for (const auto& error : errors)
      if (error) std::rethrow_exception(error);
  }
  std::vector<Out> results;
  results.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) results.push_back(std::move(staging[i]));
  return results;
}

}  // namespace immaculate
