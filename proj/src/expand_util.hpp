#pragma once

// Internal: partitions one DP layer across workers. Each worker folds its
// slice of entries into a private map through the caller's merge rule; the
// slices are then merged pairwise with the same rule. As long as the rule
// picks a total-order minimum per key, the final map is independent of the
// partition and of worker interleaving.

#include <atomic>
#include <chrono>
#include <cstddef>
#include <thread>
#include <vector>

#include "flowshop/dp_common.hpp"
#include "flowshop/errors.hpp"

namespace flowshop::detail {

inline bool past_deadline(const DpOptions& options) {
  return options.deadline && std::chrono::steady_clock::now() > *options.deadline;
}

// Transition: (key, entry, sink) -> void, calling sink(Key&&, Entry&&) for
// every successor. Merge: (map, Key&&, Entry&&) -> void.
template <class Map, class Transition, class Merge>
Map expand_entries(const Map& source, const DpOptions& options, Transition transition,
                   Merge merge) {
  using Item = typename Map::value_type;

  std::vector<const Item*> items;
  items.reserve(source.size());
  for (const Item& item : source) items.push_back(&item);

  const int threads =
      options.threads > 1 && items.size() >= 2 * static_cast<std::size_t>(options.threads)
          ? options.threads
          : 1;

  std::atomic<bool> expired{false};
  const auto run_slice = [&](std::size_t begin, std::size_t end, Map& local) {
    std::size_t processed = 0;
    for (std::size_t i = begin; i < end; ++i) {
      if ((processed++ & 1023) == 0 && past_deadline(options)) {
        expired.store(true, std::memory_order_relaxed);
        return;
      }
      transition(items[i]->first, items[i]->second,
                 [&](auto&& key, auto&& entry) {
                   merge(local, std::move(key), std::move(entry));
                 });
    }
  };

  Map result;
  if (threads == 1) {
    run_slice(0, items.size(), result);
  } else {
    std::vector<Map> locals(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    const std::size_t chunk = (items.size() + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
      const std::size_t begin = std::min(items.size(), w * chunk);
      const std::size_t end = std::min(items.size(), begin + chunk);
      workers.emplace_back(run_slice, begin, end, std::ref(locals[w]));
    }
    for (std::thread& worker : workers) worker.join();
    for (Map& local : locals) {
      for (auto& [key, entry] : local) {
        auto k = key;
        merge(result, std::move(k), std::move(entry));
      }
    }
  }

  if (expired.load(std::memory_order_relaxed)) throw TimeoutError("layer expansion ran past the deadline");
  return result;
}

}  // namespace flowshop::detail
