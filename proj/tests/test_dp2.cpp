#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "flowshop/dp1.hpp"
#include "flowshop/dp2.hpp"
#include "flowshop/dual.hpp"
#include "flowshop/oracle.hpp"
#include "test_util.hpp"

using namespace flowshop;

using Key = std::vector<std::int64_t>;

TEST_CASE("encode_pair keeps light statuses and compresses heavy ones") {
  CHECK(encode_pair({3, 4}, 2, 10) == CappedPair{3, 4});   // 3 + 4 < 10
  CHECK(encode_pair({4, 7}, 2, 10) == CappedPair{6, 1});   // 4 + 7 >= 10, cap 10/2
  CHECK(encode_pair({3, 9}, 3, 10) == CappedPair{4, 2});   // cap 10/3

  CHECK_FALSE(pair_saturated({3, 4}, 2, 10));
  CHECK(pair_saturated({6, 1}, 2, 10));
  CHECK(pair_saturated({4, 2}, 3, 10));

  // A position-h rho above floor(r0/h) without saturation is unreachable.
  CHECK_THROWS_AS(encode_pair({6, 1}, 2, 10), std::logic_error);
}

TEST_CASE("decode_pair inverts encode_pair up to the T-completion") {
  CHECK(decode_pair({3, 4}, 2, 10, 999) == ShopStatus{3, 4});
  CHECK(decode_pair({6, 1}, 2, 10, 4) == ShopStatus{4, 7});  // tau restored to 11

  SplitMix64 rng(1010);
  for (int round = 0; round < 500; ++round) {
    const std::int64_t r0 = 1 + static_cast<std::int64_t>(rng.below(50));
    const int position = 2 + static_cast<int>(rng.below(3));
    const ShopStatus status{static_cast<std::int64_t>(rng.below(r0 / position + 1)),
                            static_cast<std::int64_t>(rng.below(80))};
    const CappedPair pair = encode_pair(status, position, r0);
    const ShopStatus back = decode_pair(pair, position, r0, status.rho);
    CHECK(back.tau() == status.tau());
    if (!pair_saturated(pair, position, r0)) CHECK(back == status);
  }
}

TEST_CASE("saturated shops depend only on their T-completion") {
  SplitMix64 rng(2020);
  for (int round = 0; round < 200; ++round) {
    // r0 covers every R-operation: the jobs already placed anywhere plus the
    // suffix still to come. A shop's own rho can only be the part of the
    // placed work it received.
    const std::vector<Job> suffix = test::random_jobs(rng, static_cast<int>(rng.below(7)), 6, 6);
    std::int64_t suffix_r = 0;
    for (const Job& job : suffix) suffix_r += job.r;
    const std::int64_t placed_r = static_cast<std::int64_t>(rng.below(25));
    const std::int64_t r0 = placed_r + suffix_r;

    // Two different splits of the same tau >= r0.
    const std::int64_t tau = r0 + static_cast<std::int64_t>(rng.below(20));
    const std::int64_t rho_a = rng.below(static_cast<std::uint64_t>(placed_r) + 1);
    const std::int64_t rho_b = rng.below(static_cast<std::uint64_t>(placed_r) + 1);
    ShopStatus a{rho_a, tau - rho_a};
    ShopStatus b{rho_b, tau - rho_b};

    for (const Job& job : suffix) {
      a = push_job(a, job);
      b = push_job(b, job);
    }
    CHECK(a.tau() == b.tau());
  }
}

TEST_CASE("expand_layer_canonical merges and saturates as expected") {
  // Two jobs (1,5) on two shops; the whole R-side is r0 = 2.
  const Job job{1, 5};
  CanonicalLayer layer = make_initial_canonical_layer(2, 2);
  REQUIRE(layer.entries.size() == 1);
  CHECK(layer.entries.count(Key{0, 0, 0}) == 1);

  // Both placements of the first job coincide after sorting: one entry.
  layer = expand_layer_canonical(layer, job, 0);
  REQUIRE(layer.entries.size() == 1);
  const CanonicalEntry& first = layer.entries.at(Key{1, 0, 0});
  CHECK(first.delta1 == 5);
  CHECK(first.dest == 0);
  CHECK(first.rho_actual == std::vector<std::int64_t>{0});

  // Second job: stacking gives (2,9); splitting saturates position 2, whose
  // pair becomes (cap+1, tau - r0) = (2, 4) while the true rho rides along.
  layer = expand_layer_canonical(layer, job, 1);
  REQUIRE(layer.entries.size() == 2);
  const CanonicalEntry& stacked = layer.entries.at(Key{2, 0, 0});
  CHECK(stacked.delta1 == 9);
  const CanonicalEntry& split = layer.entries.at(Key{1, 2, 4});
  CHECK(split.delta1 == 5);
  CHECK(split.dest == 1);
  CHECK(split.rho_actual == std::vector<std::int64_t>{1});

  // A saturated pair absorbs further work: rho code pinned, delta code += t.
  CanonicalLayer absorbed = expand_layer_canonical(layer, Job{0, 3}, 2);
  CHECK(absorbed.entries.count(Key{1, 2, 7}) == 1);
  CHECK(absorbed.entries.at(Key{1, 2, 7}).delta1 == 5);
}

TEST_CASE("expand_layer_canonical conserves R-work across positions") {
  SplitMix64 rng(3030);
  for (int round = 0; round < 15; ++round) {
    const Instance instance = test::random_instance(rng, 8, 6, 12, 2, 3);
    std::vector<Job> ordered;
    for (int index : johnson_order(std::span<const Job>(instance.jobs)))
      ordered.push_back(instance.jobs[index]);

    CanonicalLayer layer = make_initial_canonical_layer(instance.m, instance.r_total());
    std::int64_t r_prefix = 0;
    for (const Job& job : ordered) {
      layer = expand_layer_canonical(layer, job, r_prefix);
      r_prefix += job.r;
      for (const auto& [key, entry] : layer.entries) {
        std::int64_t total = key[0];
        for (std::int64_t rho : entry.rho_actual) total += rho;
        CHECK(total == r_prefix);
        // Canonical arrangement: true rho values never increase by position.
        std::int64_t previous = key[0];
        for (std::int64_t rho : entry.rho_actual) {
          CHECK(rho <= previous);
          previous = rho;
        }
      }
    }
  }
}

TEST_CASE("solve_dp2 reproduces the frozen optima") {
  CHECK(solve_dp2(Instance{{{1, 5}, {1, 5}}, 2}).makespan == 6);
  CHECK(solve_dp2(Instance{{{5, 1}, {5, 1}}, 2}).makespan == 6);  // runs on the dual
  CHECK(solve_dp2(Instance{{}, 2}).makespan == 0);
}

TEST_CASE("solve_dp2 agrees with solve_dp1 and the oracle, both orientations") {
  SplitMix64 rng(4040);
  for (int round = 0; round < 40; ++round) {
    const Instance instance = test::random_instance(rng, 8, 8, 8, 2, 3);
    for (const Instance& variant : {instance, dual_instance(instance)}) {
      const Schedule schedule = solve_dp2(variant);
      CHECK(schedule.makespan == solve_dp1(variant).makespan);
      CHECK(schedule.makespan == oracle_solve(variant).makespan);
      CHECK(evaluate_schedule(variant, schedule.assignment).makespan == schedule.makespan);
      CHECK(schedule.makespan >= makespan_lower_bound(variant));
    }
  }
}

TEST_CASE("value-only mode reports the same makespan without a schedule") {
  SplitMix64 rng(5050);
  for (int round = 0; round < 25; ++round) {
    const Instance instance = test::random_instance(rng, 8, 8, 8, 2, 3);
    const Schedule full = solve_dp2(instance);
    const Schedule value = solve_dp2(instance, test::value_only_options());
    CHECK(value.makespan == full.makespan);
    CHECK(value.assignment.empty());
  }
}

TEST_CASE("threaded expansion matches the sequential result exactly") {
  SplitMix64 rng(6060);
  for (int round = 0; round < 25; ++round) {
    const Instance instance = test::random_instance(rng, 9, 8, 8, 2, 3);
    const Schedule sequential = solve_dp2(instance);
    const Schedule threaded = solve_dp2(instance, test::threaded_options(4));
    CHECK(threaded.makespan == sequential.makespan);
    CHECK(threaded.assignment == sequential.assignment);
    CHECK(threaded.order == sequential.order);
  }
}

TEST_CASE("solve_dp2 fills the layer statistics and honors its deadline") {
  DpStats stats;
  const Instance instance{{{1, 5}, {1, 5}}, 2};
  solve_dp2(instance, {}, &stats);
  CHECK(stats.layers == 3);
  CHECK(stats.peak_layer_entries >= 1);

  DpOptions options;
  options.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(solve_dp2(Instance{std::vector<Job>(12, Job{2, 9}), 3}, options), TimeoutError);
}
