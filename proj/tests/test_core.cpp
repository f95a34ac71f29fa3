#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "flowshop/core.hpp"
#include "test_util.hpp"

using namespace flowshop;

TEST_CASE("johnson_order splits groups and breaks ties by index") {
  const std::vector<std::pair<int, Job>> jobs{{0, {3, 1}}, {1, {1, 3}}, {2, {2, 2}}, {3, {4, 2}}};
  CHECK(johnson_order(std::span<const std::pair<int, Job>>(jobs)) == std::vector<int>{1, 2, 3, 0});

  CHECK(johnson_order(std::span<const std::pair<int, Job>>{}) == std::vector<int>{});

  const std::vector<std::pair<int, Job>> tied{{0, {2, 2}}, {1, {2, 2}}};
  CHECK(johnson_order(std::span<const std::pair<int, Job>>(tied)) == std::vector<int>{0, 1});
}

TEST_CASE("johnson_order returns a permutation of the input indices") {
  SplitMix64 rng(101);
  for (int round = 0; round < 200; ++round) {
    const std::vector<Job> jobs = test::random_jobs(rng, static_cast<int>(rng.below(21)), 9, 9);
    std::vector<int> order = johnson_order(std::span<const Job>(jobs));
    std::sort(order.begin(), order.end());
    std::vector<int> expected(jobs.size());
    std::iota(expected.begin(), expected.end(), 0);
    CHECK(order == expected);
  }
}

TEST_CASE("ordering any subset reproduces the restriction of the full order") {
  SplitMix64 rng(202);
  for (int round = 0; round < 200; ++round) {
    const std::vector<Job> jobs = test::random_jobs(rng, 1 + static_cast<int>(rng.below(10)), 6, 6);
    const std::vector<int> full = johnson_order(std::span<const Job>(jobs));

    std::vector<bool> keep(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) keep[i] = rng.below(2) == 1;

    std::vector<std::pair<int, Job>> subset;
    for (std::size_t i = 0; i < jobs.size(); ++i)
      if (keep[i]) subset.emplace_back(static_cast<int>(i), jobs[i]);
    std::vector<int> restricted;
    for (int index : full)
      if (keep[index]) restricted.push_back(index);

    CHECK(johnson_order(std::span<const std::pair<int, Job>>(subset)) == restricted);
  }
}

TEST_CASE("simulate_shop runs the R-side back to back and blocks the T-side") {
  const std::vector<Job> two{{1, 2}, {2, 1}};
  CHECK(simulate_shop(two) == ShopCompletion{3, 4});

  CHECK(simulate_shop({}) == ShopCompletion{0, 0});

  const std::vector<Job> four{{1, 3}, {2, 2}, {4, 2}, {3, 1}};
  CHECK(simulate_shop(four) == ShopCompletion{10, 11});
}

TEST_CASE("simulate_shop rejects completion times beyond the int64 range") {
  const std::vector<Job> huge{{std::numeric_limits<std::int64_t>::max(), 1}};
  CHECK_THROWS_AS(simulate_shop(huge), OverflowError);
}

TEST_CASE("push_job applies the status update") {
  CHECK(push_job({0, 0}, {1, 2}) == ShopStatus{1, 2});
  CHECK(push_job({1, 2}, {2, 1}) == ShopStatus{3, 1});
  CHECK(push_job({5, 0}, {2, 3}) == ShopStatus{7, 3});
}

TEST_CASE("folding push_job tracks simulate_shop at every prefix") {
  SplitMix64 rng(303);
  for (int round = 0; round < 300; ++round) {
    const std::vector<Job> jobs = test::random_jobs(rng, static_cast<int>(rng.below(13)), 50, 50);
    ShopStatus status;
    std::int64_t r_sum = 0;
    std::int64_t t_sum = 0;
    for (std::size_t len = 1; len <= jobs.size(); ++len) {
      status = push_job(status, jobs[len - 1]);
      r_sum += jobs[len - 1].r;
      t_sum += jobs[len - 1].t;
      const ShopCompletion direct = simulate_shop(std::span<const Job>(jobs).first(len));
      CHECK(status.rho == direct.rho);
      CHECK(status.tau() == direct.tau);
      CHECK(status.rho == r_sum);         // the R-processor never idles
      CHECK(status.delta >= 0);
      CHECK(status.delta <= t_sum);       // the T-side lags by at most its own total work
    }
  }
}

TEST_CASE("single-shop Johnson sequence is optimal among all permutations") {
  SplitMix64 rng(404);
  for (int round = 0; round < 60; ++round) {
    const std::vector<Job> jobs = test::random_jobs(rng, 1 + static_cast<int>(rng.below(6)), 9, 9);
    std::vector<Job> ordered;
    for (int index : johnson_order(std::span<const Job>(jobs))) ordered.push_back(jobs[index]);
    const std::int64_t johnson_tau = simulate_shop(ordered).tau;

    std::vector<int> perm(jobs.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
      std::vector<Job> sequence;
      for (int index : perm) sequence.push_back(jobs[index]);
      best = std::min(best, simulate_shop(sequence).tau);
    } while (std::next_permutation(perm.begin(), perm.end()));

    CHECK(johnson_tau == best);
  }
}

TEST_CASE("evaluate_schedule orders each shop and reports the latest completion") {
  const Instance pair_each{{{1, 1}, {1, 1}}, 2};
  CHECK(evaluate_schedule(pair_each, std::vector<int>{0, 1}).makespan == 2);
  CHECK(evaluate_schedule(pair_each, std::vector<int>{0, 0}).makespan == 3);

  const Instance three{{{2, 1}, {1, 2}, {2, 2}}, 2};
  const Schedule schedule = evaluate_schedule(three, std::vector<int>{0, 0, 1});
  CHECK(schedule.makespan == 4);
  CHECK(schedule.order[0] == std::vector<int>{1, 0});  // Johnson order within the shop
  CHECK(schedule.completions[0] == ShopCompletion{3, 4});
  CHECK(schedule.completions[1] == ShopCompletion{2, 4});
}

TEST_CASE("evaluate_schedule validates the assignment") {
  const Instance instance{{{1, 1}}, 2};
  CHECK_THROWS_AS(evaluate_schedule(instance, std::vector<int>{2}), ValidationError);
  CHECK_THROWS_AS(evaluate_schedule(instance, std::vector<int>{-1}), ValidationError);
  CHECK_THROWS_AS(evaluate_schedule(instance, std::vector<int>{}), ValidationError);
}

TEST_CASE("empty instances evaluate to makespan zero") {
  const Instance empty{{}, 3};
  const Schedule schedule = evaluate_schedule(empty, std::vector<int>{});
  CHECK(schedule.makespan == 0);
  CHECK(schedule.order.size() == 3);
  CHECK(schedule.completions == std::vector<ShopCompletion>{{0, 0}, {0, 0}, {0, 0}});
}

TEST_CASE("makespan_lower_bound covers both per-side averages and the longest job") {
  CHECK(makespan_lower_bound(Instance{{}, 2}) == 0);
  CHECK(makespan_lower_bound(Instance{{{4, 4}}, 3}) == 8);
  CHECK(makespan_lower_bound(Instance{{{3, 1}, {1, 3}, {2, 2}, {4, 2}}, 2}) == 6);
}

TEST_CASE("checked_add rejects sums past the int64 maximum") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK(checked_add(big, 0) == big);
  CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
}
