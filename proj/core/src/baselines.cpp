// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0

#include "edasat/baselines.hpp"

#include <stdexcept>

namespace edasat {

void validate(const BaselineConfig& config) {
  validate(config.schedule);
  if (config.max_iterations < 1) throw std::invalid_argument("max_iterations must be positive");
  if (config.schedule.kind == TemperatureSchedule::Kind::EndpointExponential &&
      config.schedule.max_iterations < config.max_iterations)
    throw std::invalid_argument("endpoint schedule ends before the iteration budget");
  if (config.restarts < 0) throw std::invalid_argument("restarts must be nonnegative");
  if (config.trace_stride < 1) throw std::invalid_argument("trace_stride must be positive");
}

namespace {

RunResult degenerate_result(const CnfFormula& formula, double t_start) {
  RunResult result;
  Assignment empty;
  result.best_energy = energy(formula, empty);
  result.solved = (result.best_energy == 0);
  if (result.solved) result.witness = empty;
  result.energy_trace.push_back({0, result.best_energy, 0.0, t_start});
  return result;
}

}  // namespace

RunResult run_sa(const CnfFormula& formula, const BaselineConfig& config,
                 const RunObserver& observer) {
  validate(formula);
  validate(config);

  Rng rng(config.seed);
  const int n = formula.num_vars;
  if (n == 0) return degenerate_result(formula, config.schedule.t_start);

  SatLandscape landscape(formula);
  SatWalk walk(landscape, random_assignment(n, rng));
  ScheduleStepper stepper(config.schedule);

  RunResult result;
  result.best_energy = walk.energy();
  result.energy_trace.push_back(
      {0, walk.energy(), walk.entropy(EntropyEstimator::ClauseSatisfactionEntropy),
       config.schedule.t_start});

  for (long long it = 1; it <= config.max_iterations; ++it) {
    const double temp = stepper.advance();
    const int energy_cur = walk.energy();

    const int var = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    walk.flip(var);
    const int energy_new = walk.energy();

    const double p = acceptance_probability(energy_cur, energy_new, temp);
    const bool accepted = rng.next_double() < p;
    if (accepted) {
      ++result.accept_count;
    } else {
      walk.flip(var);
      ++result.reject_count;
    }

    if (observer) observer(it, accepted, walk.energy(), temp);

    const bool improved = walk.energy() < result.best_energy;
    if (improved) result.best_energy = walk.energy();
    if (improved || it % config.trace_stride == 0)
      result.energy_trace.push_back(
          {it, walk.energy(), walk.entropy(EntropyEstimator::ClauseSatisfactionEntropy), temp});

    if (walk.is_solution()) {
      result.solved = true;
      result.witness = walk.state();
      result.iterations_used = it;
      return result;
    }
  }
  result.iterations_used = config.max_iterations;
  return result;
}

RunResult run_hill_climb(const CnfFormula& formula, const BaselineConfig& config,
                         const RunObserver& observer) {
  validate(formula);
  validate(config);

  Rng rng(config.seed);
  const int n = formula.num_vars;
  if (n == 0) return degenerate_result(formula, config.schedule.t_start);

  SatLandscape landscape(formula);
  RunResult result;
  result.best_energy = formula.num_clauses() + 1;
  long long moves = 0;

  for (int segment = 0; segment <= config.restarts; ++segment) {
    SatWalk walk(landscape, random_assignment(n, rng));
    if (walk.energy() < result.best_energy) result.best_energy = walk.energy();
    result.energy_trace.push_back(
        {moves, walk.energy(), walk.entropy(EntropyEstimator::ClauseSatisfactionEntropy), 0.0});
    // accepted=false marks a segment start rather than a move
    if (observer) observer(moves, false, walk.energy(), 0.0);

    for (;;) {
      if (walk.is_solution()) {
        result.solved = true;
        result.witness = walk.state();
        result.iterations_used = moves;
        return result;
      }
      if (moves >= config.max_iterations) {
        result.iterations_used = moves;
        return result;
      }

      int best_var = 0;
      int best_delta = 0;  // strictly improving only
      for (int v = 1; v <= n; ++v) {
        const int d = walk.energy_delta(v);
        if (d < best_delta) {
          best_delta = d;
          best_var = v;
        }
      }
      if (best_var == 0) break;  // local minimum, restart

      walk.flip(best_var);
      ++moves;
      ++result.accept_count;
      if (observer) observer(moves, true, walk.energy(), 0.0);

      const bool improved = walk.energy() < result.best_energy;
      if (improved) result.best_energy = walk.energy();
      if (improved || moves % config.trace_stride == 0)
        result.energy_trace.push_back(
            {moves, walk.energy(), walk.entropy(EntropyEstimator::ClauseSatisfactionEntropy), 0.0});
    }
  }
  result.iterations_used = moves;
  return result;
}

}  // namespace edasat
