#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace flowshop {

struct DpOptions {
  bool value_only = false;  // keep two layers, skip schedule reconstruction
  bool canonical = false;   // solve_dp1 only: sort shop slots 2..m before keying
  int threads = 1;          // workers used to expand one layer
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct DpStats {
  std::size_t peak_layer_entries = 0;
  std::size_t total_entries = 0;
  int layers = 0;
};

namespace detail {

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& key) const;
};

}  // namespace detail

}  // namespace flowshop
