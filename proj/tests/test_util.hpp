#pragma once

#include <cstdint>
#include <vector>

#include "flowshop/core.hpp"
#include "flowshop/dp_common.hpp"
#include "flowshop/generate.hpp"

namespace flowshop::test {

inline DpOptions value_only_options() {
  DpOptions options;
  options.value_only = true;
  return options;
}

inline DpOptions canonical_options() {
  DpOptions options;
  options.canonical = true;
  return options;
}

inline DpOptions threaded_options(int threads) {
  DpOptions options;
  options.threads = threads;
  return options;
}

inline std::vector<Job> random_jobs(SplitMix64& rng, int count, std::int64_t r_max,
                                    std::int64_t t_max) {
  std::vector<Job> jobs;
  jobs.reserve(count);
  for (int i = 0; i < count; ++i)
    jobs.push_back({static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(r_max) + 1)),
                    static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(t_max) + 1))});
  return jobs;
}

inline Instance random_instance(SplitMix64& rng, int max_n, std::int64_t r_max,
                                std::int64_t t_max, int m_low, int m_high) {
  Instance instance;
  const int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n) + 1));
  instance.jobs = random_jobs(rng, n, r_max, t_max);
  instance.m = m_low + static_cast<int>(rng.below(static_cast<std::uint64_t>(m_high - m_low) + 1));
  return instance;
}

}  // namespace flowshop::test
