#include "flowshop/bench.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "flowshop/dp1.hpp"
#include "flowshop/dp2.hpp"
#include "flowshop/fptas.hpp"
#include "json.hpp"

namespace flowshop {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

Rational rational_field(const json& cell, const char* name, Rational fallback) {
  if (!cell.contains(name)) return fallback;
  if (!cell[name].is_string()) throw ParseError(std::string(name) + ": expected a \"p/q\" string");
  return parse_rational(cell[name].get<std::string>());
}

template <class Fn>
SolverRun timed_run(double timeout_s, Fn&& solve) {
  SolverRun run;
  DpOptions options;
  options.value_only = true;
  options.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                        std::chrono::duration<double>(timeout_s));
  const auto start = Clock::now();
  try {
    DpStats stats;
    run.makespan = solve(options, stats);
    run.peak_states = stats.peak_layer_entries;
  } catch (const TimeoutError&) {
    run.timed_out = true;
  }
  run.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return run;
}

}  // namespace

BenchSpec load_bench_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& error) {
    throw ParseError(std::string("grid: ") + error.what());
  }
  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array())
    throw ParseError("grid document needs a \"cells\" array");

  BenchSpec spec;
  if (doc.contains("timeout_s")) {
    if (!doc["timeout_s"].is_number()) throw ParseError("timeout_s: expected a number");
    spec.timeout_s = doc["timeout_s"].get<double>();
    if (spec.timeout_s <= 0) throw ValidationError("timeout_s must be positive");
  }
  for (const json& cell : doc["cells"]) {
    if (!cell.is_object()) throw ParseError("cells: expected objects");
    BenchCell parsed;
    for (const char* required : {"n", "m", "rmax", "tmax", "seed"})
      if (!cell.contains(required))
        throw ParseError(std::string("cell is missing \"") + required + "\"");
    parsed.gen.n = cell["n"].get<int>();
    parsed.gen.m = cell["m"].get<int>();
    parsed.gen.r_max = cell["rmax"].get<std::int64_t>();
    parsed.gen.t_max = cell["tmax"].get<std::int64_t>();
    parsed.gen.seed = cell["seed"].get<std::uint64_t>();
    parsed.gen.zero_r_fraction = rational_field(cell, "zero_r", {0, 1});
    parsed.eps = rational_field(cell, "eps", {1, 2});
    spec.cells.push_back(parsed);
  }
  return spec;
}

BenchReport run_bench(const BenchSpec& spec, std::ostream* progress) {
  BenchReport report;
  for (std::size_t i = 0; i < spec.cells.size(); ++i) {
    const BenchCell& cell = spec.cells[i];
    if (progress)
      *progress << "cell " << i + 1 << "/" << spec.cells.size() << ": n=" << cell.gen.n
                << " m=" << cell.gen.m << " seed=" << cell.gen.seed << "\n";
    const Instance instance = generate(cell.gen);

    BenchRow row;
    row.cell = cell;
    row.dp1 = timed_run(spec.timeout_s, [&](const DpOptions& options, DpStats& stats) {
      return solve_dp1(instance, options, &stats).makespan;
    });
    row.dp2 = timed_run(spec.timeout_s, [&](const DpOptions& options, DpStats& stats) {
      return solve_dp2(instance, options, &stats).makespan;
    });
    row.approx = timed_run(spec.timeout_s, [&](DpOptions options, DpStats&) {
      options.value_only = false;
      return approx_solve(instance, cell.eps, SolverSelect::automatic, options).schedule.makespan;
    });
    if (!row.dp1.timed_out && !row.dp2.timed_out && row.dp1.makespan != row.dp2.makespan) {
      row.agree = false;
      report.all_agree = false;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

json run_to_json(const SolverRun& run, bool with_states) {
  json doc;
  doc["timed_out"] = run.timed_out;
  doc["makespan"] = run.timed_out ? json(nullptr) : json(run.makespan);
  doc["millis"] = run.millis;
  if (with_states) doc["peak_states"] = run.peak_states;
  return doc;
}

}  // namespace

std::string render_bench_report(const BenchReport& report) {
  json cells = json::array();
  for (const BenchRow& row : report.rows) {
    json cell;
    cell["n"] = row.cell.gen.n;
    cell["m"] = row.cell.gen.m;
    cell["rmax"] = row.cell.gen.r_max;
    cell["tmax"] = row.cell.gen.t_max;
    cell["seed"] = row.cell.gen.seed;
    cell["zero_r"] = to_string(row.cell.gen.zero_r_fraction);
    cell["eps"] = to_string(row.cell.eps);
    cell["dp1"] = run_to_json(row.dp1, true);
    cell["dp2"] = run_to_json(row.dp2, true);
    cell["approx"] = run_to_json(row.approx, false);
    cell["agree"] = row.agree;
    cells.push_back(std::move(cell));
  }
  json doc;
  doc["all_agree"] = report.all_agree;
  doc["cells"] = std::move(cells);
  return doc.dump(2) + "\n";
}

std::string render_bench_table(const BenchReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "n" << std::setw(4) << "m" << std::setw(12) << "seed"
      << std::setw(14) << "dp1_ms" << std::setw(12) << "dp1_peak" << std::setw(14) << "dp2_ms"
      << std::setw(12) << "dp2_peak" << std::setw(12) << "makespan" << std::setw(10)
      << "approx" << "agree" << "\n";
  const auto cell_ms = [](const SolverRun& run) {
    if (run.timed_out) return std::string("timeout");
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(1) << run.millis;
    return ms.str();
  };
  const auto makespan_of = [](const SolverRun& run) {
    return run.timed_out ? std::string("-") : std::to_string(run.makespan);
  };
  for (const BenchRow& row : report.rows) {
    out << std::left << std::setw(6) << row.cell.gen.n << std::setw(4) << row.cell.gen.m
        << std::setw(12) << row.cell.gen.seed << std::setw(14) << cell_ms(row.dp1)
        << std::setw(12) << row.dp1.peak_states << std::setw(14) << cell_ms(row.dp2)
        << std::setw(12) << row.dp2.peak_states << std::setw(12) << makespan_of(row.dp1)
        << std::setw(10) << makespan_of(row.approx) << (row.agree ? "yes" : "NO") << "\n";
  }
  return out.str();
}

}  // namespace flowshop
