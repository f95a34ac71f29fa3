#include "flowshop/dp2.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "flowshop/dual.hpp"
#include "expand_util.hpp"

namespace flowshop {

CappedPair encode_pair(ShopStatus status, int position, std::int64_t r0) {
  const std::int64_t tau = status.tau();
  const std::int64_t cap = r0 / position;
  if (tau < r0) {
    if (status.rho > cap)
      throw std::logic_error("canonical arrangement bound violated at position " +
                             std::to_string(position));
    return {status.rho, status.delta};
  }
  return {cap + 1, tau - r0};
}

bool pair_saturated(const CappedPair& pair, int position, std::int64_t r0) {
  return pair.rho_code == r0 / position + 1;
}

ShopStatus decode_pair(const CappedPair& pair, int position, std::int64_t r0,
                       std::int64_t rho_actual) {
  if (!pair_saturated(pair, position, r0)) return {pair.rho_code, pair.delta_code};
  const std::int64_t tau = checked_add(r0, pair.delta_code);
  assert(rho_actual <= tau);
  return {rho_actual, tau - rho_actual};
}

namespace {

using Key = std::vector<std::int64_t>;
using EntryMap = std::unordered_map<Key, CanonicalEntry, detail::KeyHash>;

bool entry_before(const CanonicalEntry& a, const CanonicalEntry& b) {
  if (a.delta1 != b.delta1) return a.delta1 < b.delta1;
  if (a.dest != b.dest) return a.dest < b.dest;
  return a.pred < b.pred;
}

void merge_entry(EntryMap& map, Key&& key, CanonicalEntry&& entry) {
  const auto [it, inserted] = map.try_emplace(std::move(key), std::move(entry));
  if (!inserted && entry_before(entry, it->second)) it->second = std::move(entry);
}

std::vector<ShopStatus> decode_state(const Key& key, const CanonicalEntry& entry, int m,
                                     std::int64_t r0) {
  std::vector<ShopStatus> statuses(m);
  statuses[0] = {key[0], entry.delta1};
  for (int i = 1; i < m; ++i)
    statuses[i] = decode_pair({key[2 * i - 1], key[2 * i]}, i + 1, r0, entry.rho_actual[i - 1]);
  return statuses;
}

// Stable arrangement by descending true rho; ties keep their relative order.
std::vector<int> status_order_desc(const std::vector<ShopStatus>& statuses) {
  std::vector<int> order(statuses.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return statuses[x].rho > statuses[y].rho; });
  return order;
}

struct EncodedState {
  Key key;
  std::vector<std::int64_t> rho_actual;
};

EncodedState encode_state(const std::vector<ShopStatus>& sorted, std::int64_t r0) {
  const int m = static_cast<int>(sorted.size());
  EncodedState encoded;
  encoded.key.resize(1 + 2 * (m - 1));
  encoded.rho_actual.resize(m - 1);
  encoded.key[0] = sorted[0].rho;
  for (int i = 1; i < m; ++i) {
    const CappedPair pair = encode_pair(sorted[i], i + 1, r0);
    encoded.key[2 * i - 1] = pair.rho_code;
    encoded.key[2 * i] = pair.delta_code;
    encoded.rho_actual[i - 1] = sorted[i].rho;
  }
  return encoded;
}

std::int64_t entry_makespan(const Key& key, const CanonicalEntry& entry, int m,
                            std::int64_t r0) {
  std::int64_t makespan = checked_add(key[0], entry.delta1);
  for (int i = 1; i < m; ++i) {
    const CappedPair pair{key[2 * i - 1], key[2 * i]};
    const std::int64_t tau = pair_saturated(pair, i + 1, r0)
                                 ? checked_add(r0, pair.delta_code)
                                 : checked_add(pair.rho_code, pair.delta_code);
    makespan = std::max(makespan, tau);
  }
  return makespan;
}

void track_layer(DpStats& stats, std::size_t entries) {
  stats.peak_layer_entries = std::max(stats.peak_layer_entries, entries);
  stats.total_entries += entries;
  ++stats.layers;
}

Schedule solve_canonical(const Instance& instance, const DpOptions& options, DpStats* stats) {
  const int n = instance.n();
  const int m = instance.m;
  DpStats run_stats;

  if (n == 0) {
    if (stats) *stats = run_stats;
    return evaluate_schedule(instance, {});
  }

  const std::vector<int> order = johnson_order(std::span<const Job>(instance.jobs));
  std::vector<Job> jobs;
  jobs.reserve(n);
  for (int position : order) jobs.push_back(instance.jobs[position]);
  std::vector<std::int64_t> prefix(n + 1, 0);
  for (int k = 0; k < n; ++k) prefix[k + 1] = checked_add(prefix[k], jobs[k].r);
  const std::int64_t r0 = prefix[n];

  std::vector<CanonicalLayer> layers;
  CanonicalLayer current = make_initial_canonical_layer(m, r0);
  track_layer(run_stats, current.entries.size());
  for (int k = 0; k < n; ++k) {
    CanonicalLayer next = expand_layer_canonical(current, jobs[k], prefix[k], options);
    track_layer(run_stats, next.entries.size());
    if (!options.value_only) layers.push_back(std::move(current));
    current = std::move(next);
  }

  const Key* best_key = nullptr;
  const CanonicalEntry* best_entry = nullptr;
  std::int64_t best = -1;
  for (const auto& [key, entry] : current.entries) {
    const std::int64_t makespan = entry_makespan(key, entry, m, r0);
    if (best < 0 || makespan < best || (makespan == best && key < *best_key)) {
      best = makespan;
      best_key = &key;
      best_entry = &entry;
    }
  }
  if (stats) *stats = run_stats;
  if (options.value_only) {
    Schedule schedule;
    schedule.makespan = best;
    return schedule;
  }

  layers.push_back(std::move(current));

  std::vector<std::pair<const Key*, const CanonicalEntry*>> chain(n + 1);
  chain[n] = {best_key, best_entry};
  for (int k = n; k > 0; --k) {
    const auto it = layers[k - 1].entries.find(chain[k].second->pred);
    assert(it != layers[k - 1].entries.end());
    chain[k - 1] = {&it->first, &it->second};
  }

  // Replay forward. The stored destination is the post-sort position, so at
  // each step probe the pre-sort slots until one reproduces the successor
  // exactly; the slot permutation then carries the groups along.
  std::vector<std::vector<int>> groups(m);
  for (int k = 0; k < n; ++k) {
    const std::vector<ShopStatus> statuses = decode_state(*chain[k].first, *chain[k].second, m, r0);
    const CanonicalEntry& target = *chain[k + 1].second;
    bool matched = false;
    for (int p = 0; p < m && !matched; ++p) {
      std::vector<ShopStatus> pushed = statuses;
      pushed[p] = push_job(pushed[p], jobs[k]);
      const std::vector<int> arrangement = status_order_desc(pushed);
      std::vector<ShopStatus> sorted(m);
      int dest_post = -1;
      for (int i = 0; i < m; ++i) {
        sorted[i] = pushed[arrangement[i]];
        if (arrangement[i] == p) dest_post = i;
      }
      if (dest_post != target.dest || sorted[0].delta != target.delta1) continue;
      EncodedState encoded = encode_state(sorted, r0);
      if (encoded.key != *chain[k + 1].first || encoded.rho_actual != target.rho_actual) continue;

      groups[p].push_back(k);
      std::vector<std::vector<int>> rearranged(m);
      for (int i = 0; i < m; ++i) rearranged[i] = std::move(groups[arrangement[i]]);
      groups = std::move(rearranged);
      matched = true;
    }
    if (!matched) throw std::logic_error("canonical schedule replay failed");
  }

  std::vector<int> assignment(n, 0);
  for (int slot = 0; slot < m; ++slot)
    for (int job : groups[slot]) assignment[order[job]] = slot;

  Schedule schedule = evaluate_schedule(instance, assignment);
  assert(schedule.makespan == best);
  return schedule;
}

}  // namespace

CanonicalLayer make_initial_canonical_layer(int m, std::int64_t r0) {
  CanonicalLayer layer;
  layer.k = 0;
  layer.m = m;
  layer.r0 = r0;
  const EncodedState encoded = encode_state(std::vector<ShopStatus>(m), r0);
  layer.entries.emplace(encoded.key, CanonicalEntry{0, -1, encoded.rho_actual, {}});
  return layer;
}

CanonicalLayer expand_layer_canonical(const CanonicalLayer& layer, const Job& job,
                                      std::int64_t r_prefix, const DpOptions& options) {
  const int m = layer.m;
  const std::int64_t r0 = layer.r0;
  CanonicalLayer next;
  next.k = layer.k + 1;
  next.m = m;
  next.r0 = r0;
  next.entries = detail::expand_entries(
      layer.entries, options,
      [&](const Key& key, const CanonicalEntry& entry, auto&& sink) {
        const std::vector<ShopStatus> statuses = decode_state(key, entry, m, r0);
#ifndef NDEBUG
        std::int64_t rho_sum = 0;
        for (const ShopStatus& status : statuses) rho_sum += status.rho;
        assert(rho_sum == r_prefix);
#else
        (void)r_prefix;
#endif
        for (int d = 0; d < m; ++d) {
          std::vector<ShopStatus> pushed = statuses;
          pushed[d] = push_job(pushed[d], job);
          const std::vector<int> arrangement = status_order_desc(pushed);
          std::vector<ShopStatus> sorted(m);
          int dest_post = -1;
          for (int i = 0; i < m; ++i) {
            sorted[i] = pushed[arrangement[i]];
            if (arrangement[i] == d) dest_post = i;
          }
          EncodedState encoded = encode_state(sorted, r0);
          sink(std::move(encoded.key),
               CanonicalEntry{sorted[0].delta, dest_post, std::move(encoded.rho_actual), key});
        }
      },
      merge_entry);
  return next;
}

Schedule solve_dp2(const Instance& instance, const DpOptions& options, DpStats* stats) {
  validate_instance(instance);
  if (instance.r_total() <= instance.t_total()) return solve_canonical(instance, options, stats);

  // Heavier R-side: the dual swaps the sides, and per-shop completion times
  // survive the reversal, so the converted schedule is optimal as well.
  const Instance dual = dual_instance(instance);
  Schedule dual_schedule = solve_canonical(dual, options, stats);
  if (options.value_only) return dual_schedule;  // same makespan either way
  return dualize_schedule(instance, dual_schedule);
}

}  // namespace flowshop
