// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0

#include "edasat/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "edasat/rng.hpp"

namespace edasat {

namespace {

using nlohmann::json;

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

TemperatureSchedule schedule_from_json(const json& j, std::vector<std::string>& errors,
                                       const std::string& where) {
  TemperatureSchedule schedule = TemperatureSchedule::endpoint_exponential(2.0, 0.01, 0);
  const std::string kind = j.value("kind", "endpoint");
  const double t_start = j.value("t_start", 2.0);
  if (kind == "endpoint") {
    schedule = TemperatureSchedule::endpoint_exponential(t_start, j.value("t_final", 0.01),
                                                         j.value("max_iterations", 0LL));
  } else if (kind == "exponential") {
    schedule = TemperatureSchedule::pure_exponential(t_start, j.value("tau", 1000.0));
  } else if (kind == "geometric") {
    schedule = TemperatureSchedule::geometric(t_start, j.value("gamma", 0.999));
  } else {
    errors.push_back(where + ": unknown schedule kind '" + kind + "'");
  }
  return schedule;
}

json schedule_to_json(const TemperatureSchedule& schedule) {
  json j;
  switch (schedule.kind) {
    case TemperatureSchedule::Kind::EndpointExponential:
      j["kind"] = "endpoint";
      j["t_start"] = schedule.t_start;
      j["t_final"] = schedule.t_final;
      if (schedule.max_iterations > 0) j["max_iterations"] = schedule.max_iterations;
      break;
    case TemperatureSchedule::Kind::PureExponential:
      j["kind"] = "exponential";
      j["t_start"] = schedule.t_start;
      j["tau"] = schedule.tau;
      break;
    case TemperatureSchedule::Kind::Geometric:
      j["kind"] = "geometric";
      j["t_start"] = schedule.t_start;
      j["gamma"] = schedule.gamma;
      break;
  }
  return j;
}

std::string estimator_name(EntropyEstimator estimator) {
  return estimator == EntropyEstimator::ClauseSatisfactionEntropy ? "clause" : "bits";
}

/// The endpoint schedule's horizon defaults to the plan budget when the plan
/// leaves it at zero.
TemperatureSchedule resolve_schedule(TemperatureSchedule schedule, long long max_iterations) {
  if (schedule.kind == TemperatureSchedule::Kind::EndpointExponential &&
      schedule.max_iterations == 0)
    schedule.max_iterations = max_iterations;
  return schedule;
}

struct Cell {
  std::size_t instance_index;
  std::size_t engine_index;
  int seed_index;
  std::size_t row_index;
};

RunResult run_engine(const CnfFormula& formula, const EngineSpec& engine,
                     const BenchPlan& plan, std::uint64_t seed) {
  if (engine.name == "eda") {
    EdaConfig config;
    config.schedule = resolve_schedule(engine.schedule, plan.max_iterations);
    config.max_iterations = plan.max_iterations;
    config.tabu_capacity = engine.tabu_capacity;
    config.estimator = engine.estimator;
    config.explore_threshold_theta0 = engine.theta0;
    config.theta_decay = engine.theta_decay;
    config.entropy_weight = engine.entropy_weight;
    config.boltzmann_k = engine.boltzmann_k;
    config.seed = seed;
    return run_eda(formula, config);
  }
  BaselineConfig config;
  config.schedule = resolve_schedule(engine.schedule, plan.max_iterations);
  config.max_iterations = plan.max_iterations;
  config.seed = seed;
  config.restarts = engine.restarts;
  if (engine.name == "sa") return run_sa(formula, config);
  return run_hill_climb(formula, config);
}

}  // namespace

std::uint64_t derive_cell_seed(std::uint64_t plan_seed, const std::string& instance_id,
                               const std::string& engine, int seed_index) {
  std::uint64_t h = fnv1a64(instance_id);
  h = fnv1a64("\x1f", h);
  h = fnv1a64(engine, h);
  h = fnv1a64("\x1f", h);
  h = fnv1a64(std::to_string(seed_index), h);
  return mix64(plan_seed ^ h);
}

BenchPlan plan_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("plan is not valid JSON: ") + e.what());
  }

  std::vector<std::string> errors;
  BenchPlan plan;
  plan.seed = j.value("seed", std::uint64_t{1});
  plan.seeds_per_instance = j.value("seeds_per_instance", 1);
  plan.max_iterations = j.value("max_iterations", 100000LL);
  plan.record_wall_ms = j.value("record_wall_ms", true);
  plan.workers = j.value("workers", 1);

  if (plan.seeds_per_instance < 1) errors.push_back("seeds_per_instance must be positive");
  if (plan.max_iterations < 1) errors.push_back("max_iterations must be positive");
  if (plan.workers < 1) errors.push_back("workers must be positive");

  if (j.contains("instances")) {
    const json& inst = j["instances"];
    const bool has_files = inst.contains("files");
    const bool has_generator = inst.contains("generator");
    if (has_files == has_generator) {
      errors.push_back("instances must name exactly one of 'files' or 'generator'");
    } else if (has_files) {
      for (const auto& f : inst["files"]) plan.instance_files.push_back(f.get<std::string>());
      if (plan.instance_files.empty()) errors.push_back("instances.files is empty");
    } else {
      GeneratorSpec gen;
      const json& g = inst["generator"];
      gen.n = g.value("n", 20);
      gen.m = g.value("m", 60);
      gen.k = g.value("k", 3);
      gen.count = g.value("count", 1);
      gen.seed = g.value("seed", std::uint64_t{1});
      if (gen.n < 1) errors.push_back("generator.n must be positive");
      if (gen.m < 0) errors.push_back("generator.m must be nonnegative");
      if (gen.k < 1 || gen.k > gen.n)
        errors.push_back("generator.k must satisfy 1 <= k <= n");
      if (gen.count < 1) errors.push_back("generator.count must be positive");
      plan.generator = gen;
    }
  } else {
    errors.push_back("plan has no 'instances' section");
  }

  if (!j.contains("engines") || !j["engines"].is_array() || j["engines"].empty()) {
    errors.push_back("plan has no 'engines' array");
  } else {
    for (std::size_t i = 0; i < j["engines"].size(); ++i) {
      const json& e = j["engines"][i];
      EngineSpec spec;
      spec.name = e.value("name", "");
      const std::string where = "engines[" + std::to_string(i) + "]";
      if (spec.name != "eda" && spec.name != "sa" && spec.name != "hc")
        errors.push_back(where + ": engine name must be one of eda, sa, hc");
      if (e.contains("schedule")) spec.schedule = schedule_from_json(e["schedule"], errors, where);
      else spec.schedule = TemperatureSchedule::endpoint_exponential(2.0, 0.01, 0);
      spec.tabu_capacity = e.value("tabu_capacity", 8);
      spec.estimator = e.value("estimator", "clause") == "bits"
                           ? EntropyEstimator::BitBalanceEntropy
                           : EntropyEstimator::ClauseSatisfactionEntropy;
      spec.theta0 = e.value("theta0", 0.4);
      spec.theta_decay = e.value("theta_decay", 0.9999);
      spec.entropy_weight = e.value("entropy_weight", 1.0);
      spec.boltzmann_k = e.value("boltzmann_k", 1.0);
      spec.restarts = e.value("restarts", 10);
      if (spec.tabu_capacity < 0) errors.push_back(where + ": tabu_capacity must be nonnegative");
      if (spec.restarts < 0) errors.push_back(where + ": restarts must be nonnegative");
      plan.engines.push_back(std::move(spec));
    }
  }

  if (j.contains("output")) {
    plan.output_path = j["output"].value("path", plan.output_path);
    if (j["output"].contains("formats")) {
      plan.formats.clear();
      for (const auto& f : j["output"]["formats"]) {
        const std::string format = f.get<std::string>();
        if (format != "csv" && format != "json")
          errors.push_back("output format must be csv or json, got '" + format + "'");
        plan.formats.push_back(format);
      }
    }
  }

  if (!errors.empty()) {
    std::string joined = "invalid plan:";
    for (const std::string& e : errors) joined += "\n  - " + e;
    throw std::invalid_argument(joined);
  }
  return plan;
}

std::string plan_to_json(const BenchPlan& plan) {
  json j;
  j["seed"] = plan.seed;
  j["seeds_per_instance"] = plan.seeds_per_instance;
  j["max_iterations"] = plan.max_iterations;
  j["record_wall_ms"] = plan.record_wall_ms;
  j["workers"] = plan.workers;
  if (plan.generator) {
    j["instances"]["generator"] = {{"n", plan.generator->n},
                                   {"m", plan.generator->m},
                                   {"k", plan.generator->k},
                                   {"count", plan.generator->count},
                                   {"seed", plan.generator->seed}};
  } else {
    j["instances"]["files"] = plan.instance_files;
  }
  j["engines"] = json::array();
  for (const EngineSpec& engine : plan.engines) {
    json e;
    e["name"] = engine.name;
    e["schedule"] = schedule_to_json(engine.schedule);
    if (engine.name == "eda") {
      e["tabu_capacity"] = engine.tabu_capacity;
      e["estimator"] = estimator_name(engine.estimator);
      e["theta0"] = engine.theta0;
      e["theta_decay"] = engine.theta_decay;
      e["entropy_weight"] = engine.entropy_weight;
      e["boltzmann_k"] = engine.boltzmann_k;
    }
    if (engine.name == "hc") e["restarts"] = engine.restarts;
    j["engines"].push_back(std::move(e));
  }
  j["output"] = {{"path", plan.output_path}, {"formats", plan.formats}};
  return j.dump(2) + "\n";
}

BenchReport run_bench(const BenchPlan& plan) {
  BenchReport report;
  report.plan = plan;

  // Materialize the instance suite; a failed load becomes an error entry and
  // leaves the other instances untouched.
  std::vector<std::pair<std::string, CnfFormula>> instances;
  if (plan.generator) {
    const GeneratorSpec& gen = *plan.generator;
    for (int i = 0; i < gen.count; ++i) {
      const std::string id = "gen_n" + std::to_string(gen.n) + "_m" + std::to_string(gen.m) +
                             "_k" + std::to_string(gen.k) + "_s" + std::to_string(gen.seed) +
                             "_" + std::to_string(i);
      const std::uint64_t instance_seed = mix64(gen.seed + static_cast<std::uint64_t>(i));
      instances.emplace_back(id, generate_random_ksat(gen.n, gen.m, gen.k, instance_seed));
    }
  } else {
    for (const std::string& path : plan.instance_files) {
      std::ifstream in(path);
      if (!in) {
        report.errors.push_back({path, "cannot open instance file"});
        continue;
      }
      try {
        instances.emplace_back(path, parse_dimacs(in));
      } catch (const ParseError& e) {
        report.errors.push_back({path, e.what()});
      }
    }
  }

  std::vector<Cell> cells;
  std::size_t row_index = 0;
  for (std::size_t ii = 0; ii < instances.size(); ++ii)
    for (std::size_t ei = 0; ei < plan.engines.size(); ++ei)
      for (int si = 0; si < plan.seeds_per_instance; ++si)
        cells.push_back({ii, ei, si, row_index++});

  report.rows.resize(cells.size());
  std::atomic<std::size_t> next{0};
  const int workers = std::max(1, std::min<int>(plan.workers, static_cast<int>(cells.size())));

  const auto work = [&]() {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= cells.size()) return;
      const Cell& cell = cells[c];
      const auto& [instance_id, formula] = instances[cell.instance_index];
      const EngineSpec& engine = plan.engines[cell.engine_index];
      const std::uint64_t seed =
          derive_cell_seed(plan.seed, instance_id, engine.name, cell.seed_index);

      const auto start = std::chrono::steady_clock::now();
      const RunResult run = run_engine(formula, engine, plan, seed);
      const auto stop = std::chrono::steady_clock::now();

      BenchRow row;
      row.instance_id = instance_id;
      row.engine = engine.name;
      row.seed = seed;
      row.solved = run.solved;
      row.iterations = run.iterations_used;
      row.best_energy = run.best_energy;
      row.accepts = run.accept_count;
      row.rejects = run.reject_count;
      row.wall_ms = plan.record_wall_ms
                        ? std::chrono::duration<double, std::milli>(stop - start).count()
                        : 0.0;
      report.rows[cell.row_index] = std::move(row);
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  report.aggregates = aggregate_rows(plan, report.rows);
  return report;
}

namespace {

// Linear interpolation between closest ranks (the common "type 7" rule).
double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.size() == 1) return sorted[0];
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

std::vector<BenchAggregate> aggregate_rows(const BenchPlan& plan,
                                           const std::vector<BenchRow>& rows) {
  std::vector<BenchAggregate> aggregates;
  // Preserve plan ordering: group rows by (instance, engine) as they appear.
  std::vector<std::pair<std::string, std::string>> keys;
  for (const BenchRow& row : rows) {
    const std::pair<std::string, std::string> key{row.instance_id, row.engine};
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
  }
  (void)plan;

  for (const auto& [instance_id, engine] : keys) {
    BenchAggregate agg;
    agg.instance_id = instance_id;
    agg.engine = engine;

    std::vector<double> success_iters;
    int failures = 0;
    std::optional<int> best_failure_energy;
    int total = 0;
    for (const BenchRow& row : rows) {
      if (row.instance_id != instance_id || row.engine != engine) continue;
      ++total;
      if (row.solved) {
        success_iters.push_back(static_cast<double>(row.iterations));
      } else {
        ++failures;
        if (!best_failure_energy || row.best_energy < *best_failure_energy)
          best_failure_energy = row.best_energy;
      }
    }
    agg.success_rate = total > 0 ? static_cast<double>(success_iters.size()) / total : 0.0;
    if (!success_iters.empty()) {
      std::sort(success_iters.begin(), success_iters.end());
      agg.median_iterations = quantile(success_iters, 0.5);
      agg.iqr_low = quantile(success_iters, 0.25);
      agg.iqr_high = quantile(success_iters, 0.75);
    }
    agg.best_energy_failures = best_failure_energy;
    aggregates.push_back(std::move(agg));
  }
  return aggregates;
}

std::string report_to_csv(const BenchReport& report) {
  std::string out = "instance_id,engine,seed,solved,iterations,best_energy,accepts,rejects,wall_ms\n";
  for (const BenchRow& row : report.rows) {
    out += row.instance_id;
    out += ',';
    out += row.engine;
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    out += row.solved ? '1' : '0';
    out += ',';
    out += std::to_string(row.iterations);
    out += ',';
    out += std::to_string(row.best_energy);
    out += ',';
    out += std::to_string(row.accepts);
    out += ',';
    out += std::to_string(row.rejects);
    out += ',';
    out += format_double(row.wall_ms);
    out += '\n';
  }
  return out;
}

namespace {

json row_to_json(const BenchRow& row) {
  return json{{"instance_id", row.instance_id}, {"engine", row.engine},
              {"seed", row.seed},               {"solved", row.solved},
              {"iterations", row.iterations},   {"best_energy", row.best_energy},
              {"accepts", row.accepts},         {"rejects", row.rejects},
              {"wall_ms", row.wall_ms}};
}

json aggregate_to_json(const BenchAggregate& agg) {
  json j{{"instance_id", agg.instance_id},
         {"engine", agg.engine},
         {"success_rate", agg.success_rate}};
  j["median_iterations"] = agg.median_iterations ? json(*agg.median_iterations) : json(nullptr);
  j["iqr_low"] = agg.iqr_low ? json(*agg.iqr_low) : json(nullptr);
  j["iqr_high"] = agg.iqr_high ? json(*agg.iqr_high) : json(nullptr);
  j["best_energy_failures"] =
      agg.best_energy_failures ? json(*agg.best_energy_failures) : json(nullptr);
  return j;
}

}  // namespace

std::string report_to_json(const BenchReport& report) {
  json j;
  j["plan"] = json::parse(plan_to_json(report.plan));
  j["rows"] = json::array();
  for (const BenchRow& row : report.rows) j["rows"].push_back(row_to_json(row));
  j["aggregates"] = json::array();
  for (const BenchAggregate& agg : report.aggregates) j["aggregates"].push_back(aggregate_to_json(agg));
  j["errors"] = json::array();
  for (const InstanceError& e : report.errors)
    j["errors"].push_back({{"instance_id", e.instance_id}, {"message", e.message}});
  return j.dump(2) + "\n";
}

BenchReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  BenchReport report;
  report.plan = plan_from_json(j.at("plan").dump());
  for (const json& r : j.at("rows")) {
    BenchRow row;
    row.instance_id = r.at("instance_id").get<std::string>();
    row.engine = r.at("engine").get<std::string>();
    row.seed = r.at("seed").get<std::uint64_t>();
    row.solved = r.at("solved").get<bool>();
    row.iterations = r.at("iterations").get<long long>();
    row.best_energy = r.at("best_energy").get<int>();
    row.accepts = r.at("accepts").get<long long>();
    row.rejects = r.at("rejects").get<long long>();
    row.wall_ms = r.at("wall_ms").get<double>();
    report.rows.push_back(std::move(row));
  }
  for (const json& a : j.at("aggregates")) {
    BenchAggregate agg;
    agg.instance_id = a.at("instance_id").get<std::string>();
    agg.engine = a.at("engine").get<std::string>();
    agg.success_rate = a.at("success_rate").get<double>();
    if (!a.at("median_iterations").is_null())
      agg.median_iterations = a.at("median_iterations").get<double>();
    if (!a.at("iqr_low").is_null()) agg.iqr_low = a.at("iqr_low").get<double>();
    if (!a.at("iqr_high").is_null()) agg.iqr_high = a.at("iqr_high").get<double>();
    if (!a.at("best_energy_failures").is_null())
      agg.best_energy_failures = a.at("best_energy_failures").get<int>();
    report.aggregates.push_back(std::move(agg));
  }
  for (const json& e : j.at("errors"))
    report.errors.push_back(
        {e.at("instance_id").get<std::string>(), e.at("message").get<std::string>()});
  return report;
}

std::vector<BenchRow> rows_from_csv(const std::string& text) {
  std::vector<BenchRow> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (fields.size() != 9) throw std::invalid_argument("malformed bench CSV row: " + line);
    BenchRow row;
    row.instance_id = fields[0];
    row.engine = fields[1];
    row.seed = std::stoull(fields[2]);
    row.solved = fields[3] == "1";
    row.iterations = std::stoll(fields[4]);
    row.best_energy = std::stoi(fields[5]);
    row.accepts = std::stoll(fields[6]);
    row.rejects = std::stoll(fields[7]);
    row.wall_ms = std::stod(fields[8]);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_report(const BenchReport& report, const std::string& path,
                  const std::vector<std::string>& formats) {
  for (const std::string& format : formats) {
    const std::string file = path + "." + format;
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write report file " + file);
    out << (format == "csv" ? report_to_csv(report) : report_to_json(report));
  }
}

}  // namespace edasat
