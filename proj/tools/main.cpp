// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0
//
// edasat: generate random k-SAT instances, solve them with entropy-driven
// annealing or the baseline solvers, profile small instances exactly, and run
// benchmark matrices.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "edasat/baselines.hpp"
#include "edasat/bench.hpp"
#include "edasat/cnf.hpp"
#include "edasat/eda.hpp"
#include "edasat/profiler.hpp"
#include "edasat/rng.hpp"

namespace {

constexpr int kExitSolved = 10;
constexpr int kExitBudgetExhausted = 20;

std::uint64_t pick_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  // No seed given: draw one from the system and log it so the run stays
  // reproducible after the fact.
  std::random_device dev;
  const std::uint64_t seed =
      edasat::mix64((static_cast<std::uint64_t>(dev()) << 32) ^ dev() ^
                    static_cast<std::uint64_t>(
                        std::chrono::steady_clock::now().time_since_epoch().count()));
  return seed;
}

edasat::CnfFormula load_formula(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return edasat::parse_dimacs(in);
}

struct SolveFlags {
  std::string file;
  std::string engine = "eda";
  std::string schedule_kind = "endpoint";
  double t_start = 2.0;
  double t_final = 0.01;
  double tau = 20000.0;
  double gamma = 0.9999;
  long long max_iterations = 100000;
  int tabu = 8;
  std::string estimator = "clause";
  double theta0 = 0.4;
  double theta_decay = 0.9999;
  double entropy_weight = 1.0;
  double boltzmann_k = 1.0;
  int restarts = 10;
  std::string trace_path;
};

edasat::TemperatureSchedule make_schedule(const SolveFlags& flags) {
  if (flags.schedule_kind == "endpoint")
    return edasat::TemperatureSchedule::endpoint_exponential(flags.t_start, flags.t_final,
                                                             flags.max_iterations);
  if (flags.schedule_kind == "exponential")
    return edasat::TemperatureSchedule::pure_exponential(flags.t_start, flags.tau);
  return edasat::TemperatureSchedule::geometric(flags.t_start, flags.gamma);
}

void write_trace(const std::string& path, const edasat::RunResult& result) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write trace file " + path);
  out << "iteration,energy,entropy,temperature\n";
  char line[128];
  for (const edasat::TraceSample& s : result.energy_trace) {
    std::snprintf(line, sizeof(line), "%lld,%d,%.17g,%.17g\n", s.iteration, s.energy, s.entropy,
                  s.temperature);
    out << line;
  }
}

int cmd_solve(const SolveFlags& flags, std::uint64_t seed) {
  const edasat::CnfFormula formula = load_formula(flags.file);

  edasat::RunResult result;
  std::cout << "c file " << flags.file << "\n";
  std::cout << "c engine " << flags.engine << "\n";
  std::cout << "c seed " << seed << "\n";

  if (flags.engine == "eda") {
    edasat::EdaConfig config;
    config.schedule = make_schedule(flags);
    config.max_iterations = flags.max_iterations;
    config.tabu_capacity = flags.tabu;
    config.estimator = flags.estimator == "bits"
                           ? edasat::EntropyEstimator::BitBalanceEntropy
                           : edasat::EntropyEstimator::ClauseSatisfactionEntropy;
    config.explore_threshold_theta0 = flags.theta0;
    config.theta_decay = flags.theta_decay;
    config.entropy_weight = flags.entropy_weight;
    config.boltzmann_k = flags.boltzmann_k;
    config.seed = seed;
    result = edasat::run_eda(formula, config);
  } else {
    edasat::BaselineConfig config;
    config.schedule = make_schedule(flags);
    config.max_iterations = flags.max_iterations;
    config.seed = seed;
    config.restarts = flags.restarts;
    result = flags.engine == "sa" ? edasat::run_sa(formula, config)
                                  : edasat::run_hill_climb(formula, config);
  }

  if (result.solved) {
    std::cout << "s SATISFIABLE\n";
    std::cout << "v";
    const edasat::Assignment& witness = *result.witness;
    for (int v = 1; v <= witness.size(); ++v) std::cout << ' ' << (witness.value(v) ? v : -v);
    std::cout << " 0\n";
  } else {
    std::cout << "s UNKNOWN\n";
  }
  std::cout << "c iterations " << result.iterations_used << "\n";
  std::cout << "c best_energy " << result.best_energy << "\n";
  std::cout << "c accepts " << result.accept_count << "\n";
  std::cout << "c rejects " << result.reject_count << "\n";

  if (!flags.trace_path.empty()) write_trace(flags.trace_path, result);
  return result.solved ? kExitSolved : kExitBudgetExhausted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropy-driven annealing SAT toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --seed appear after the subcommand as well

  std::optional<std::uint64_t> seed_flag;
  app.add_option("-s,--seed", seed_flag, "RNG seed; omitted -> drawn and logged");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random k-SAT instance in DIMACS format");
  int gen_n = 20, gen_m = 60, gen_k = 3;
  std::string gen_out;
  gen->add_option("-n,--vars", gen_n, "variable count")->required();
  gen->add_option("-m,--clauses", gen_m, "clause count")->required();
  gen->add_option("-k,--width", gen_k, "clause width");
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "run a solver on a DIMACS instance");
  SolveFlags sf;
  solve->add_option("file", sf.file, "DIMACS CNF file")->required();
  solve->add_option("-e,--engine", sf.engine, "solver engine")
      ->check(CLI::IsMember({"eda", "sa", "hc"}));
  solve->add_option("--schedule", sf.schedule_kind, "cooling schedule kind")
      ->check(CLI::IsMember({"endpoint", "exponential", "geometric"}));
  solve->add_option("--t-start", sf.t_start, "initial temperature");
  solve->add_option("--t-final", sf.t_final, "final temperature (endpoint schedule)");
  solve->add_option("--tau", sf.tau, "decay constant (exponential schedule)");
  solve->add_option("--gamma", sf.gamma, "cooling rate (geometric schedule)");
  solve->add_option("-i,--max-iters", sf.max_iterations, "iteration budget");
  solve->add_option("--tabu", sf.tabu, "tabu list capacity (eda)");
  solve->add_option("--estimator", sf.estimator, "entropy estimator (eda)")
      ->check(CLI::IsMember({"clause", "bits"}));
  solve->add_option("--theta0", sf.theta0, "initial explore threshold (eda)");
  solve->add_option("--theta-decay", sf.theta_decay, "explore threshold decay (eda)");
  solve->add_option("--entropy-weight", sf.entropy_weight, "entropy weight in free energy (eda)");
  solve->add_option("--boltzmann-k", sf.boltzmann_k, "Boltzmann constant (eda)");
  solve->add_option("--restarts", sf.restarts, "random restarts (hc)");
  solve->add_option("--trace", sf.trace_path, "write the downsampled trace CSV here");

  // profile
  auto* profile = app.add_subcommand("profile", "exact landscape profile of a small instance");
  std::string profile_file, profile_out;
  int profile_limit = edasat::kMaterializationLimit;
  profile->add_option("file", profile_file, "DIMACS CNF file")->required();
  profile->add_option("-o,--out", profile_out, "output file (default stdout)");
  profile->add_option("--limit", profile_limit, "enumeration limit on variable count");

  // bench
  auto* bench = app.add_subcommand("bench", "run a benchmark plan");
  std::string bench_plan_file, bench_out_override;
  int bench_workers = 0;
  bool bench_no_wall_ms = false;
  bench->add_option("plan", bench_plan_file, "plan JSON file")->required();
  bench->add_option("-o,--out", bench_out_override, "override the plan's output path");
  bench->add_option("--workers", bench_workers, "override the plan's worker count");
  bench->add_flag("--no-wall-ms", bench_no_wall_ms,
                  "zero the wall_ms column so reruns are byte-identical");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const std::uint64_t seed = pick_seed(seed_flag);
      const edasat::CnfFormula formula =
          edasat::generate_random_ksat(gen_n, gen_m, gen_k, seed);
      const std::string text = edasat::serialize_dimacs(formula);
      if (gen_out.empty()) {
        std::cout << "c seed " << seed << "\n" << text;
      } else {
        std::ofstream out(gen_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + gen_out);
        out << text;
        std::cout << "c seed " << seed << "\n";
        std::cout << "c wrote " << gen_out << "\n";
      }
      return 0;
    }

    if (solve->parsed()) return cmd_solve(sf, pick_seed(seed_flag));

    if (profile->parsed()) {
      const edasat::CnfFormula formula = load_formula(profile_file);
      const edasat::LandscapeReport report = edasat::profile_landscape(formula, profile_limit);
      const std::string text = edasat::report_to_json(report);
      if (profile_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(profile_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + profile_out);
        out << text;
      }
      return 0;
    }

    if (bench->parsed()) {
      std::ifstream in(bench_plan_file);
      if (!in) throw std::runtime_error("cannot open plan file " + bench_plan_file);
      std::ostringstream buffer;
      buffer << in.rdbuf();
      edasat::BenchPlan plan = edasat::plan_from_json(buffer.str());
      if (seed_flag) plan.seed = *seed_flag;
      if (bench_workers > 0) plan.workers = bench_workers;
      if (bench_no_wall_ms) plan.record_wall_ms = false;
      if (!bench_out_override.empty()) plan.output_path = bench_out_override;

      const edasat::BenchReport report = edasat::run_bench(plan);
      edasat::write_report(report, plan.output_path, plan.formats);
      for (const edasat::InstanceError& e : report.errors)
        std::cerr << "error: " << e.instance_id << ": " << e.message << "\n";
      std::cout << "c rows " << report.rows.size() << "\n";
      for (const std::string& format : plan.formats)
        std::cout << "c wrote " << plan.output_path << "." << format << "\n";
      if (report.rows.empty() && !report.errors.empty()) return 1;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
