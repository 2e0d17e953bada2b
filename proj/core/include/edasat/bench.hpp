// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDASAT_BENCH_HPP
#define EDASAT_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edasat/baselines.hpp"
#include "edasat/cnf.hpp"
#include "edasat/eda.hpp"

namespace edasat {

struct GeneratorSpec {
  int n = 20;
  int m = 60;
  int k = 3;
  int count = 1;
  std::uint64_t seed = 1;
  bool operator==(const GeneratorSpec&) const = default;
};

/// One engine column of the run matrix. `name` selects the solver
/// ("eda", "sa" or "hc"); the remaining knobs apply where the engine uses
/// them.
struct EngineSpec {
  std::string name = "eda";
  /// A zero-iteration endpoint schedule defers its horizon to the plan's
  /// iteration budget.
  TemperatureSchedule schedule = TemperatureSchedule::endpoint_exponential(2.0, 0.01, 0);
  int tabu_capacity = 8;
  EntropyEstimator estimator = EntropyEstimator::ClauseSatisfactionEntropy;
  double theta0 = 0.4;
  double theta_decay = 0.9999;
  double entropy_weight = 1.0;
  double boltzmann_k = 1.0;
  int restarts = 10;
  bool operator==(const EngineSpec&) const = default;
};

struct BenchPlan {
  std::uint64_t seed = 1;
  int seeds_per_instance = 1;
  long long max_iterations = 100000;
  bool record_wall_ms = true;
  int workers = 1;
  std::vector<std::string> instance_files;   // exclusive with generator
  std::optional<GeneratorSpec> generator;
  std::vector<EngineSpec> engines;
  std::string output_path = "bench_report";
  std::vector<std::string> formats = {"csv", "json"};
  bool operator==(const BenchPlan&) const = default;
};

/// Parses and validates a plan document, collecting every validation failure
/// into one std::invalid_argument message.
BenchPlan plan_from_json(const std::string& text);
std::string plan_to_json(const BenchPlan& plan);

struct BenchRow {
  std::string instance_id;
  std::string engine;
  std::uint64_t seed = 0;
  bool solved = false;
  long long iterations = 0;
  int best_energy = 0;
  long long accepts = 0;
  long long rejects = 0;
  double wall_ms = 0.0;
  bool operator==(const BenchRow&) const = default;
};

struct BenchAggregate {
  std::string instance_id;
  std::string engine;
  double success_rate = 0.0;
  std::optional<double> median_iterations;  // among successes
  std::optional<double> iqr_low;
  std::optional<double> iqr_high;
  std::optional<int> best_energy_failures;  // best energy among failed runs
};

struct InstanceError {
  std::string instance_id;
  std::string message;
};

struct BenchReport {
  BenchPlan plan;
  std::vector<BenchRow> rows;
  std::vector<BenchAggregate> aggregates;
  std::vector<InstanceError> errors;
};

/// Per-cell seed: a stable hash of (plan seed, instance id, engine, seed
/// index), so adding instances or engines never perturbs existing cells.
std::uint64_t derive_cell_seed(std::uint64_t plan_seed, const std::string& instance_id,
                               const std::string& engine, int seed_index);

/// Executes every (instance, engine, seed) cell of the plan. Instance load
/// failures are reported per instance and do not abort the other cells. Rows
/// come back in plan order regardless of worker count.
BenchReport run_bench(const BenchPlan& plan);

std::string report_to_csv(const BenchReport& report);
std::string report_to_json(const BenchReport& report);
BenchReport report_from_json(const std::string& text);
std::vector<BenchRow> rows_from_csv(const std::string& text);

/// Recomputes the aggregate block from the rows; the stored aggregates are
/// derived, never authoritative.
std::vector<BenchAggregate> aggregate_rows(const BenchPlan& plan,
                                           const std::vector<BenchRow>& rows);

/// Writes `<path>.csv` / `<path>.json` for each requested format.
void write_report(const BenchReport& report, const std::string& path,
                  const std::vector<std::string>& formats);

}  // namespace edasat

#endif  // EDASAT_BENCH_HPP
