// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "edasat/bench.hpp"
#include "edasat/cnf.hpp"

using namespace edasat;

namespace {

const char* kSmallPlan = R"({
  "seed": 7,
  "seeds_per_instance": 3,
  "max_iterations": 2000,
  "record_wall_ms": false,
  "engines": [
    {"name": "eda"},
    {"name": "sa"},
    {"name": "hc", "restarts": 5}
  ],
  "instances": {"generator": {"n": 10, "m": 25, "k": 3, "count": 2, "seed": 3}}
})";

BenchPlan small_plan() { return plan_from_json(kSmallPlan); }

}  // namespace

TEST_CASE("plan_from_json fills defaults and validates") {
  const BenchPlan plan = small_plan();
  CHECK(plan.seed == 7);
  CHECK(plan.seeds_per_instance == 3);
  CHECK(plan.max_iterations == 2000);
  CHECK_FALSE(plan.record_wall_ms);
  REQUIRE(plan.engines.size() == 3);
  CHECK(plan.engines[0].name == "eda");
  CHECK(plan.engines[2].restarts == 5);
  REQUIRE(plan.generator.has_value());
  CHECK(plan.generator->count == 2);
}

TEST_CASE("plan_from_json reports every validation failure at once") {
  try {
    plan_from_json(R"({
      "seeds_per_instance": 0,
      "max_iterations": -5,
      "engines": [{"name": "nope"}],
      "instances": {"generator": {"n": 2, "m": 5, "k": 3}}
    })");
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("seeds_per_instance") != std::string::npos);
    CHECK(msg.find("max_iterations") != std::string::npos);
    CHECK(msg.find("eda, sa, hc") != std::string::npos);
    CHECK(msg.find("k must satisfy") != std::string::npos);
  }
  CHECK_THROWS_AS(plan_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(plan_from_json(R"({"engines": [{"name":"sa"}]})"), std::invalid_argument);
}

TEST_CASE("run_bench fills the full run matrix deterministically") {
  const BenchPlan plan = small_plan();
  const BenchReport a = run_bench(plan);
  CHECK(a.rows.size() == 2 * 3 * 3);  // instances x engines x seeds
  CHECK(a.errors.empty());

  const BenchReport b = run_bench(plan);
  CHECK(report_to_csv(a) == report_to_csv(b));
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("run_bench on a trivially satisfiable instance reaches success rate 1") {
  const std::string path = "bench_sat_tmp.cnf";
  {
    std::ofstream out(path);
    out << "p cnf 3 3\n1 2 0\n2 3 0\n1 3 0\n";  // all-true satisfies
  }
  BenchPlan plan = plan_from_json(R"({
    "seed": 1,
    "seeds_per_instance": 5,
    "max_iterations": 5000,
    "record_wall_ms": false,
    "engines": [{"name": "eda"}, {"name": "sa"}, {"name": "hc"}],
    "instances": {"files": ["bench_sat_tmp.cnf"]}
  })");
  const BenchReport report = run_bench(plan);
  REQUIRE(report.aggregates.size() == 3);
  for (const BenchAggregate& agg : report.aggregates) CHECK(agg.success_rate == 1.0);
  std::remove(path.c_str());
}

TEST_CASE("run_bench on an unsatisfiable instance reports zero successes") {
  const std::string path = "bench_unsat_tmp.cnf";
  {
    std::ofstream out(path);
    out << "p cnf 1 2\n1 0\n-1 0\n";
  }
  BenchPlan plan = plan_from_json(R"({
    "seed": 2,
    "seeds_per_instance": 4,
    "max_iterations": 300,
    "record_wall_ms": false,
    "engines": [{"name": "eda"}, {"name": "sa"}, {"name": "hc", "restarts": 2}],
    "instances": {"files": ["bench_unsat_tmp.cnf"]}
  })");
  const BenchReport report = run_bench(plan);
  REQUIRE(report.rows.size() == 12);
  for (const BenchRow& row : report.rows) {
    CHECK_FALSE(row.solved);
    CHECK(row.best_energy >= 1);
  }
  for (const BenchAggregate& agg : report.aggregates) {
    CHECK(agg.success_rate == 0.0);
    CHECK_FALSE(agg.median_iterations.has_value());
    REQUIRE(agg.best_energy_failures.has_value());
    CHECK(*agg.best_energy_failures >= 1);
  }
  std::remove(path.c_str());
}

TEST_CASE("missing instance files become error entries without aborting the rest") {
  const std::string path = "bench_ok_tmp.cnf";
  {
    std::ofstream out(path);
    out << "p cnf 2 1\n1 2 0\n";
  }
  BenchPlan plan = plan_from_json(R"({
    "seed": 3,
    "seeds_per_instance": 2,
    "max_iterations": 200,
    "record_wall_ms": false,
    "engines": [{"name": "sa"}],
    "instances": {"files": ["no_such_file.cnf", "bench_ok_tmp.cnf"]}
  })");
  const BenchReport report = run_bench(plan);
  REQUIRE(report.errors.size() == 1);
  CHECK(report.errors[0].instance_id == "no_such_file.cnf");
  CHECK(report.rows.size() == 2);
  for (const BenchRow& row : report.rows) CHECK(row.instance_id == path);
  std::remove(path.c_str());
}

TEST_CASE("cell seeds are stable against plan membership changes") {
  CHECK(derive_cell_seed(1, "inst_a", "eda", 0) == derive_cell_seed(1, "inst_a", "eda", 0));
  CHECK(derive_cell_seed(1, "inst_a", "eda", 0) != derive_cell_seed(1, "inst_a", "eda", 1));
  CHECK(derive_cell_seed(1, "inst_a", "eda", 0) != derive_cell_seed(1, "inst_a", "sa", 0));
  CHECK(derive_cell_seed(1, "inst_a", "eda", 0) != derive_cell_seed(2, "inst_a", "eda", 0));
}

TEST_CASE("removing an instance leaves the other instances' rows untouched") {
  const std::string a = "bench_cell_a.cnf";
  const std::string b = "bench_cell_b.cnf";
  {
    std::ofstream(a) << serialize_dimacs(generate_random_ksat(8, 20, 3, 41));
    std::ofstream(b) << serialize_dimacs(generate_random_ksat(8, 20, 3, 42));
  }
  const std::string both = R"({
    "seed": 9, "seeds_per_instance": 2, "max_iterations": 500, "record_wall_ms": false,
    "engines": [{"name": "sa"}, {"name": "eda"}],
    "instances": {"files": ["bench_cell_a.cnf", "bench_cell_b.cnf"]}
  })";
  const std::string only_b = R"({
    "seed": 9, "seeds_per_instance": 2, "max_iterations": 500, "record_wall_ms": false,
    "engines": [{"name": "sa"}, {"name": "eda"}],
    "instances": {"files": ["bench_cell_b.cnf"]}
  })";
  const BenchReport full = run_bench(plan_from_json(both));
  const BenchReport partial = run_bench(plan_from_json(only_b));

  std::vector<BenchRow> full_b_rows;
  for (const BenchRow& row : full.rows)
    if (row.instance_id == b) full_b_rows.push_back(row);
  CHECK(full_b_rows == partial.rows);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("reports round-trip through both writers") {
  const BenchReport report = run_bench(small_plan());

  const std::vector<BenchRow> csv_rows = rows_from_csv(report_to_csv(report));
  CHECK(csv_rows == report.rows);

  const BenchReport parsed = report_from_json(report_to_json(report));
  CHECK(parsed.rows == report.rows);
  REQUIRE(parsed.aggregates.size() == report.aggregates.size());
  for (std::size_t i = 0; i < parsed.aggregates.size(); ++i) {
    const BenchAggregate& x = parsed.aggregates[i];
    const BenchAggregate& y = report.aggregates[i];
    CHECK(x.instance_id == y.instance_id);
    CHECK(x.engine == y.engine);
    CHECK(x.success_rate == doctest::Approx(y.success_rate).epsilon(1e-12));
    CHECK(x.median_iterations.has_value() == y.median_iterations.has_value());
    if (x.median_iterations)
      CHECK(*x.median_iterations == doctest::Approx(*y.median_iterations).epsilon(1e-12));
    CHECK(x.best_energy_failures == y.best_energy_failures);
  }

  // aggregates are recomputable from rows
  const std::vector<BenchAggregate> recomputed = aggregate_rows(report.plan, report.rows);
  REQUIRE(recomputed.size() == report.aggregates.size());
  for (std::size_t i = 0; i < recomputed.size(); ++i) {
    CHECK(recomputed[i].success_rate == report.aggregates[i].success_rate);
    CHECK(recomputed[i].median_iterations == report.aggregates[i].median_iterations);
  }
}

TEST_CASE("empty plan rows produce a header-only table") {
  BenchReport report;
  CHECK(report_to_csv(report) ==
        "instance_id,engine,seed,solved,iterations,best_energy,accepts,rejects,wall_ms\n");
}

TEST_CASE("worker pools produce the same report as sequential execution") {
  BenchPlan plan = small_plan();
  const BenchReport sequential = run_bench(plan);
  plan.workers = 4;
  const BenchReport parallel = run_bench(plan);
  // wall_ms recording is off in this plan, so the full documents must match
  CHECK(report_to_csv(sequential) == report_to_csv(parallel));
}
