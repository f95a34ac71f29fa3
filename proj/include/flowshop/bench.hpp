#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "flowshop/generate.hpp"
#include "flowshop/rational.hpp"

namespace flowshop {

struct BenchCell {
  GenSpec gen;
  Rational eps{1, 2};
};

// Grid document: {"timeout_s": <number>, "cells": [{"n":, "m":, "rmax":,
// "tmax":, "seed":, "zero_r": "p/q"?, "eps": "p/q"?}, ...]}.
struct BenchSpec {
  std::vector<BenchCell> cells;
  double timeout_s = 30.0;
};

BenchSpec load_bench_spec(const std::string& text);

struct SolverRun {
  bool timed_out = false;
  std::int64_t makespan = 0;
  double millis = 0.0;
  std::size_t peak_states = 0;
};

struct BenchRow {
  BenchCell cell;
  SolverRun dp1;
  SolverRun dp2;
  SolverRun approx;
  bool agree = true;  // dp1 and dp2 makespans match (vacuous under timeout)
};

struct BenchReport {
  std::vector<BenchRow> rows;
  bool all_agree = true;
};

BenchReport run_bench(const BenchSpec& spec, std::ostream* progress = nullptr);

std::string render_bench_report(const BenchReport& report);  // JSON
std::string render_bench_table(const BenchReport& report);   // fixed-width text

}  // namespace flowshop
