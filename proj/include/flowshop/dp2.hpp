#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "flowshop/core.hpp"
#include "flowshop/dp_common.hpp"

namespace flowshop {

// Layered DP over canonical states, built for instances whose R-side is much
// lighter than their T-side (or vice versa, via the dual).
//
// Shops are kept sorted by descending true rho. The front shop stores its rho
// exactly (its delta is the minimized payload). Each later position h holds a
// capped pair: the exact (rho, delta) while rho + delta < R0, and once the
// shop's tau reaches R0 only tau - R0, with rho_code pinned to the
// out-of-band value floor(R0/h) + 1. A saturated shop's tau grows by exactly
// t per added job no matter its R-load, so its true rho moves to the payload
// and stops splitting states.

struct CappedPair {
  std::int64_t rho_code = 0;
  std::int64_t delta_code = 0;

  friend bool operator==(const CappedPair&, const CappedPair&) = default;
};

// position is 1-based within the sorted arrangement; pairs exist for
// positions 2..m. Requires rho <= floor(r0/position) while unsaturated.
CappedPair encode_pair(ShopStatus status, int position, std::int64_t r0);

bool pair_saturated(const CappedPair& pair, int position, std::int64_t r0);

// rho_actual is ignored for unsaturated pairs.
ShopStatus decode_pair(const CappedPair& pair, int position, std::int64_t r0,
                       std::int64_t rho_actual);

struct CanonicalEntry {
  std::int64_t delta1 = 0;
  int dest = -1;                         // post-sort position that received the job
  std::vector<std::int64_t> rho_actual;  // true R-completions of positions 2..m
  std::vector<std::int64_t> pred;
};

struct CanonicalLayer {
  int k = 0;
  int m = 1;
  std::int64_t r0 = 0;  // saturation threshold: R-work of the whole job set
  std::unordered_map<std::vector<std::int64_t>, CanonicalEntry, detail::KeyHash> entries;
};

CanonicalLayer make_initial_canonical_layer(int m, std::int64_t r0);

CanonicalLayer expand_layer_canonical(const CanonicalLayer& layer, const Job& job,
                                      std::int64_t r_prefix, const DpOptions& options = {});

// Runs the canonical DP on the instance itself when R0 <= T0, otherwise on
// its dual (whose R-side is the smaller one) with the schedule converted
// back. options.canonical is ignored: this solver always canonicalizes.
Schedule solve_dp2(const Instance& instance, const DpOptions& options = {},
                   DpStats* stats = nullptr);

}  // namespace flowshop
