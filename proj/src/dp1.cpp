#include "flowshop/dp1.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <span>
#include <utility>

#include "expand_util.hpp"

namespace flowshop {

namespace detail {

std::size_t KeyHash::operator()(const std::vector<std::int64_t>& key) const {
  // splitmix64 finalizer per element
  std::uint64_t h = 0x9e3779b97f4a7c15ULL + key.size();
  for (std::int64_t value : key) {
    std::uint64_t z = h ^ static_cast<std::uint64_t>(value);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h = z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace detail

namespace {

using Key = std::vector<std::int64_t>;
using EntryMap = std::unordered_map<Key, DpEntry, detail::KeyHash>;

// Total order on candidates for one key; the minimum wins the merge.
bool entry_before(const DpEntry& a, const DpEntry& b) {
  if (a.delta1 != b.delta1) return a.delta1 < b.delta1;
  if (a.dest != b.dest) return a.dest < b.dest;
  return a.pred < b.pred;
}

void merge_entry(EntryMap& map, Key&& key, DpEntry&& entry) {
  const auto [it, inserted] = map.try_emplace(std::move(key), std::move(entry));
  if (!inserted && entry_before(entry, it->second)) it->second = std::move(entry);
}

std::vector<ShopStatus> key_pairs(const Key& key) {
  std::vector<ShopStatus> pairs(key.size() / 2);
  for (std::size_t i = 0; i < pairs.size(); ++i) pairs[i] = {key[2 * i], key[2 * i + 1]};
  return pairs;
}

Key flatten_pairs(const std::vector<ShopStatus>& pairs, const std::vector<int>& order) {
  Key key(2 * pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    key[2 * i] = pairs[order[i]].rho;
    key[2 * i + 1] = pairs[order[i]].delta;
  }
  return key;
}

// Stable arrangement of the pair slots by descending (rho, delta).
std::vector<int> pair_order_desc(const std::vector<ShopStatus>& pairs) {
  std::vector<int> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    if (pairs[x].rho != pairs[y].rho) return pairs[x].rho > pairs[y].rho;
    return pairs[x].delta > pairs[y].delta;
  });
  return order;
}

std::int64_t pair_rho_sum(const Key& key) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < key.size(); i += 2) sum += key[i];
  return sum;
}

void track_layer(DpStats& stats, std::size_t entries) {
  stats.peak_layer_entries = std::max(stats.peak_layer_entries, entries);
  stats.total_entries += entries;
  ++stats.layers;
}

}  // namespace

DpLayer make_initial_layer(int m) {
  DpLayer layer;
  layer.k = 0;
  layer.m = m;
  layer.entries.emplace(Key(2 * (m - 1), 0), DpEntry{0, -1, {}});
  return layer;
}

DpLayer expand_layer(const DpLayer& layer, const Job& job, std::int64_t r_prefix,
                     const DpOptions& options) {
  const int m = layer.m;
  DpLayer next;
  next.k = layer.k + 1;
  next.m = m;
  next.entries = detail::expand_entries(
      layer.entries, options,
      [&](const Key& key, const DpEntry& entry, auto&& sink) {
        const std::int64_t rho_rest = pair_rho_sum(key);
        assert(rho_rest <= r_prefix);
        const ShopStatus first{r_prefix - rho_rest, entry.delta1};

        // slot 0: shop 1's rho is implied, so the key does not change
        sink(Key(key), DpEntry{push_job(first, job).delta, 0, key});

        for (int d = 1; d < m; ++d) {
          const std::size_t at = 2 * (d - 1);
          const ShopStatus pushed = push_job({key[at], key[at + 1]}, job);
          Key successor = key;
          successor[at] = pushed.rho;
          successor[at + 1] = pushed.delta;
          if (options.canonical) {
            const std::vector<ShopStatus> pairs = key_pairs(successor);
            successor = flatten_pairs(pairs, pair_order_desc(pairs));
          }
          sink(std::move(successor), DpEntry{entry.delta1, d, key});
        }
      },
      merge_entry);
  return next;
}

namespace {

std::int64_t entry_makespan(const Key& key, const DpEntry& entry, std::int64_t r0) {
  std::int64_t makespan = checked_add(r0 - pair_rho_sum(key), entry.delta1);
  for (std::size_t i = 0; i < key.size(); i += 2)
    makespan = std::max(makespan, checked_add(key[i], key[i + 1]));
  return makespan;
}

Schedule value_only_schedule(std::int64_t makespan) {
  Schedule schedule;
  schedule.makespan = makespan;
  return schedule;
}

}  // namespace

Schedule solve_dp1(const Instance& instance, const DpOptions& options, DpStats* stats) {
  validate_instance(instance);
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

  std::vector<DpLayer> layers;  // full history unless value_only
  DpLayer current = make_initial_layer(m);
  track_layer(run_stats, current.entries.size());
  for (int k = 0; k < n; ++k) {
    DpLayer next = expand_layer(current, jobs[k], prefix[k], options);
    track_layer(run_stats, next.entries.size());
    if (!options.value_only) layers.push_back(std::move(current));
    current = std::move(next);
  }

  const Key* best_key = nullptr;
  const DpEntry* best_entry = nullptr;
  std::int64_t best = -1;
  for (const auto& [key, entry] : current.entries) {
    const std::int64_t makespan = entry_makespan(key, entry, prefix[n]);
    if (best < 0 || makespan < best || (makespan == best && key < *best_key)) {
      best = makespan;
      best_key = &key;
      best_entry = &entry;
    }
  }
  if (stats) *stats = run_stats;
  if (options.value_only) return value_only_schedule(best);

  layers.push_back(std::move(current));

  // predecessor chain back to the start
  std::vector<std::pair<const Key*, const DpEntry*>> chain(n + 1);
  chain[n] = {best_key, best_entry};
  for (int k = n; k > 0; --k) {
    const auto it = layers[k - 1].entries.find(chain[k].second->pred);
    assert(it != layers[k - 1].entries.end());
    chain[k - 1] = {&it->first, &it->second};
  }

  // replay forward; when canonicalizing, groups follow the slot re-sort
  std::vector<std::vector<int>> groups(m);
  for (int k = 0; k < n; ++k) {
    const DpEntry& entry = *chain[k + 1].second;
    groups[entry.dest].push_back(k);
    if (options.canonical && entry.dest >= 1 && m > 2) {
      std::vector<ShopStatus> pairs = key_pairs(*chain[k].first);
      pairs[entry.dest - 1] = push_job(pairs[entry.dest - 1], jobs[k]);
      const std::vector<int> slot_order = pair_order_desc(pairs);
      std::vector<std::vector<int>> rearranged(m - 1);
      for (int i = 0; i < m - 1; ++i) rearranged[i] = std::move(groups[1 + slot_order[i]]);
      for (int i = 0; i < m - 1; ++i) groups[1 + i] = std::move(rearranged[i]);
    }
  }

  std::vector<int> assignment(n, 0);
  for (int slot = 0; slot < m; ++slot)
    for (int job : groups[slot]) assignment[order[job]] = slot;

  Schedule schedule = evaluate_schedule(instance, assignment);
  assert(schedule.makespan == best);
  return schedule;
}

}  // namespace flowshop
