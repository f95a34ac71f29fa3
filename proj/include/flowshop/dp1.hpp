#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "flowshop/core.hpp"
#include "flowshop/dp_common.hpp"

namespace flowshop {

// Layered DP over exact shop statuses.
//
// Jobs are placed one by one in Johnson order. A layer-k entry records one
// reachable combination of the statuses of shops 2..m (pairs (rho, delta)
// flattened into the key); shop 1's rho is implied by R-work conservation and
// its delta is the minimized payload.

struct DpEntry {
  std::int64_t delta1 = 0;
  int dest = -1;                   // shop slot that received the layer's job
  std::vector<std::int64_t> pred;  // key of the predecessor entry
};

struct DpLayer {
  int k = 0;  // jobs placed so far
  int m = 1;
  std::unordered_map<std::vector<std::int64_t>, DpEntry, detail::KeyHash> entries;
};

DpLayer make_initial_layer(int m);

// Places `job` on every shop of every entry. r_prefix is the total R-work of
// the k jobs already placed. Equal keys keep the smaller delta1, ties prefer
// the smaller destination slot, then the smaller predecessor key, so the
// merge commutes and the result is independent of worker interleaving.
DpLayer expand_layer(const DpLayer& layer, const Job& job, std::int64_t r_prefix,
                     const DpOptions& options = {});

Schedule solve_dp1(const Instance& instance, const DpOptions& options = {},
                   DpStats* stats = nullptr);

}  // namespace flowshop
