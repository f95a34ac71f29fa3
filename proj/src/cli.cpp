#include "flowshop/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "flowshop/bench.hpp"
#include "flowshop/dp1.hpp"
#include "flowshop/dp2.hpp"
#include "flowshop/fptas.hpp"
#include "flowshop/generate.hpp"
#include "flowshop/io.hpp"
#include "flowshop/oracle.hpp"

namespace flowshop {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream content;
  content << stream.rdbuf();
  return content.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw ValidationError("cannot write '" + path + "'");
  stream << content;
  if (!stream) throw ValidationError("cannot write '" + path + "'");
}

SolverSelect select_from(const std::string& name) {
  if (name == "dp1") return SolverSelect::dp1;
  if (name == "dp2") return SolverSelect::dp2;
  return SolverSelect::automatic;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact and (1+eps)-approximate makespan minimization for two-stage jobs "
               "on identical two-stage flowshops"};
  app.name("flowshop");
  app.require_subcommand(1);

  std::string in_path;
  std::string algo = "auto";
  bool value_only = false;
  bool canonical = false;
  int threads = 1;
  CLI::App* solve = app.add_subcommand("solve", "solve an instance exactly");
  solve->add_option("--in", in_path, "instance file")->required();
  solve->add_option("--algo", algo, "dp1, dp2, or auto")
      ->check(CLI::IsMember({"dp1", "dp2", "auto"}));
  solve->add_flag("--value-only", value_only, "report only the makespan");
  solve->add_flag("--canonical", canonical, "dp1: collapse shop relabelings");
  solve->add_option("--threads", threads, "workers per layer")->check(CLI::PositiveNumber);

  std::string eps_text;
  std::string inner = "auto";
  CLI::App* approx = app.add_subcommand("approx", "solve within a 1+eps factor");
  approx->add_option("--in", in_path, "instance file")->required();
  approx->add_option("--eps", eps_text, "accuracy as NUM/DEN or NUM")->required();
  approx->add_option("--inner", inner, "exact solver for the scaled instance")
      ->check(CLI::IsMember({"dp1", "dp2", "auto"}));

  std::int64_t budget = 100'000'000;
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive reference search");
  oracle->add_option("--in", in_path, "instance file")->required();
  oracle->add_option("--budget", budget, "assignment budget")->check(CLI::PositiveNumber);

  GenSpec gen_spec;
  std::string zero_r = "0";
  std::string out_path;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--n", gen_spec.n, "job count")->required();
  gen->add_option("--m", gen_spec.m, "shop count")->required();
  gen->add_option("--rmax", gen_spec.r_max, "largest R-duration")->required();
  gen->add_option("--tmax", gen_spec.t_max, "largest T-duration")->required();
  gen->add_option("--zero-r", zero_r, "fraction of jobs with r forced to 0");
  gen->add_option("--seed", gen_spec.seed, "PRNG seed")->required();
  gen->add_option("--out", out_path, "output file")->required();

  std::string grid_path;
  CLI::App* bench = app.add_subcommand("bench", "compare solvers over a grid");
  bench->add_option("--grid", grid_path, "grid file")->required();
  bench->add_option("--out", out_path, "report file")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("flowshop");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& error) {
    return app.exit(error, out, err) == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) {
      const Instance instance = load_instance(read_file(in_path));
      DpOptions options;
      options.value_only = value_only;
      options.canonical = canonical;
      options.threads = threads;
      std::string used = algo;
      if (used == "auto")
        used = choose_solver(instance) == SolverChoice::dp1 ? "dp1" : "dp2";
      const Schedule schedule =
          used == "dp1" ? solve_dp1(instance, options) : solve_dp2(instance, options);
      out << render_result(schedule, used, true, std::nullopt, value_only);
    } else if (approx->parsed()) {
      const Instance instance = load_instance(read_file(in_path));
      const Rational eps = parse_rational(eps_text);
      const ApproxResult result = approx_solve(instance, eps, select_from(inner));
      const Rational bound =
          result.exact_fallback ? Rational{1, 1} : Rational{checked_add(eps.den, eps.num), eps.den};
      out << render_result(result.schedule, "approx", result.exact_fallback, bound);
    } else if (oracle->parsed()) {
      const Instance instance = load_instance(read_file(in_path));
      const Schedule schedule = oracle_solve(instance, {budget});
      out << render_result(schedule, "oracle", true, std::nullopt);
    } else if (gen->parsed()) {
      gen_spec.zero_r_fraction = parse_rational(zero_r);
      write_file(out_path, save_instance(generate(gen_spec)));
    } else if (bench->parsed()) {
      const BenchReport report = run_bench(load_bench_spec(read_file(grid_path)), &err);
      write_file(out_path, render_bench_report(report));
      out << render_bench_table(report);
      if (!report.all_agree) {
        err << "error: exact solvers disagree on at least one cell\n";
        return 2;
      }
    }
  } catch (const ParseError& error) {
    err << "error: " << error.what() << "\n";
    return 1;
  } catch (const ValidationError& error) {
    err << "error: " << error.what() << "\n";
    return 1;
  } catch (const BudgetError& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  } catch (const TimeoutError& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  } catch (const OverflowError& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace flowshop
