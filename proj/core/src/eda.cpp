// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0

#include "edasat/eda.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace edasat {

TemperatureSchedule TemperatureSchedule::endpoint_exponential(double t_start, double t_final,
                                                              long long max_iterations) {
  TemperatureSchedule s;
  s.kind = Kind::EndpointExponential;
  s.t_start = t_start;
  s.t_final = t_final;
  s.max_iterations = max_iterations;
  return s;
}

TemperatureSchedule TemperatureSchedule::pure_exponential(double t_start, double tau) {
  TemperatureSchedule s;
  s.kind = Kind::PureExponential;
  s.t_start = t_start;
  s.tau = tau;
  return s;
}

TemperatureSchedule TemperatureSchedule::geometric(double t_start, double gamma) {
  TemperatureSchedule s;
  s.kind = Kind::Geometric;
  s.t_start = t_start;
  s.gamma = gamma;
  return s;
}

void validate(const TemperatureSchedule& schedule) {
  if (!(schedule.t_start > 0)) throw std::invalid_argument("t_start must be positive");
  switch (schedule.kind) {
    case TemperatureSchedule::Kind::EndpointExponential:
      if (!(schedule.t_final > 0)) throw std::invalid_argument("t_final must be positive");
      if (schedule.t_final > schedule.t_start)
        throw std::invalid_argument("t_final must not exceed t_start");
      if (schedule.max_iterations < 1)
        throw std::invalid_argument("schedule max_iterations must be positive");
      break;
    case TemperatureSchedule::Kind::PureExponential:
      if (!(schedule.tau > 0)) throw std::invalid_argument("tau must be positive");
      break;
    case TemperatureSchedule::Kind::Geometric:
      if (!(schedule.gamma > 0 && schedule.gamma < 1))
        throw std::invalid_argument("gamma must lie in (0, 1)");
      break;
  }
}

double temperature_at(const TemperatureSchedule& schedule, long long i) {
  if (i < 0) throw std::invalid_argument("iteration index must be nonnegative");
  switch (schedule.kind) {
    case TemperatureSchedule::Kind::EndpointExponential: {
      if (i > schedule.max_iterations)
        throw std::invalid_argument("iteration index exceeds schedule max_iterations");
      const double fraction =
          static_cast<double>(i) / static_cast<double>(schedule.max_iterations);
      return schedule.t_start * std::pow(schedule.t_final / schedule.t_start, fraction);
    }
    case TemperatureSchedule::Kind::PureExponential:
      return schedule.t_start * std::exp(-static_cast<double>(i) / schedule.tau);
    case TemperatureSchedule::Kind::Geometric: {
      // Sequential product: T(i+1) is exactly gamma * T(i).
      double t = schedule.t_start;
      for (long long j = 0; j < i; ++j) t *= schedule.gamma;
      return t;
    }
  }
  throw std::logic_error("unreachable schedule kind");
}

ScheduleStepper::ScheduleStepper(const TemperatureSchedule& schedule)
    : schedule_(schedule), current_(schedule.t_start) {
  validate(schedule);
}

double ScheduleStepper::advance() {
  ++index_;
  if (schedule_.kind == TemperatureSchedule::Kind::Geometric) {
    current_ *= schedule_.gamma;
    return current_;
  }
  current_ = temperature_at(schedule_, index_);
  return current_;
}

TabuList::TabuList(int capacity) : capacity_(capacity) {
  if (capacity < 0) throw std::invalid_argument("tabu capacity must be nonnegative");
  entries_.reserve(static_cast<std::size_t>(capacity));
}

void TabuList::push(int var) {
  if (capacity_ == 0) return;
  if (static_cast<int>(entries_.size()) == capacity_) entries_.erase(entries_.begin());
  entries_.push_back(var);
}

bool TabuList::contains(int var) const {
  return std::find(entries_.begin(), entries_.end(), var) != entries_.end();
}

void validate(const EdaConfig& config) {
  validate(config.schedule);
  if (config.max_iterations < 1) throw std::invalid_argument("max_iterations must be positive");
  if (config.schedule.kind == TemperatureSchedule::Kind::EndpointExponential &&
      config.schedule.max_iterations < config.max_iterations)
    throw std::invalid_argument("endpoint schedule ends before the iteration budget");
  if (config.tabu_capacity < 0) throw std::invalid_argument("tabu capacity must be nonnegative");
  const double ln2 = std::log(2.0);
  if (config.explore_threshold_theta0 < 0 || config.explore_threshold_theta0 > ln2)
    throw std::invalid_argument("explore threshold theta0 must lie in [0, ln 2]");
  if (!(config.theta_decay > 0 && config.theta_decay <= 1))
    throw std::invalid_argument("theta_decay must lie in (0, 1]");
  if (config.entropy_weight < 0) throw std::invalid_argument("entropy_weight must be nonnegative");
  if (!(config.boltzmann_k > 0)) throw std::invalid_argument("boltzmann_k must be positive");
  if (config.trace_stride < 1) throw std::invalid_argument("trace_stride must be positive");
}

double free_energy(double energy, double entropy, double temp, double entropy_weight) {
  return energy - temp * entropy_weight * entropy;
}

double acceptance_probability(double f_current, double f_new, double temp, double boltzmann_k) {
  const double delta = f_new - f_current;
  if (delta <= 0) return 1.0;
  return std::exp(-delta / (boltzmann_k * temp));
}

bool accept(double energy_current, double energy_new, double entropy_current, double entropy_new,
            double temp, const EdaConfig& config, Rng& rng) {
  const double f_current = free_energy(energy_current, entropy_current, temp, config.entropy_weight);
  const double f_new = free_energy(energy_new, entropy_new, temp, config.entropy_weight);
  const double p = acceptance_probability(f_current, f_new, temp, config.boltzmann_k);
  return rng.next_double() < p;
}

namespace {

double theta_at(const EdaConfig& config, long long iteration) {
  return config.explore_threshold_theta0 *
         std::pow(config.theta_decay, static_cast<double>(iteration));
}

// Explore: uniform random flip over the candidates. Exploit: the candidate
// with the lowest energy delta, ties to the smallest variable index.
// Candidates are the non-tabu variables, or every variable when all are tabu.
template <typename DeltaFn>
int select_flip_var(double local_entropy, double theta, const TabuList& tabu, int num_vars,
                    DeltaFn&& delta, Rng& rng) {
  std::vector<int> candidates;
  candidates.reserve(static_cast<std::size_t>(num_vars));
  for (int v = 1; v <= num_vars; ++v)
    if (!tabu.contains(v)) candidates.push_back(v);
  if (candidates.empty())
    for (int v = 1; v <= num_vars; ++v) candidates.push_back(v);

  if (local_entropy > theta)
    return candidates[static_cast<std::size_t>(rng.next_below(candidates.size()))];

  int best_var = candidates[0];
  int best_delta = delta(candidates[0]);
  for (std::size_t j = 1; j < candidates.size(); ++j) {
    const int d = delta(candidates[j]);
    if (d < best_delta) {
      best_delta = d;
      best_var = candidates[j];
    }
  }
  return best_var;
}

}  // namespace

std::pair<Assignment, int> generate_new_state(const CnfFormula& formula, const Assignment& state,
                                              const TabuList& tabu, long long iteration,
                                              const EdaConfig& config, Rng& rng) {
  if (formula.num_vars == 0) throw std::invalid_argument("cannot generate a move with n = 0");
  const double local_entropy = state_entropy(formula, state, config.estimator);
  const double theta = theta_at(config, iteration);
  const int base_energy = energy(formula, state);
  const auto delta = [&](int v) { return energy(formula, flip(state, v)) - base_energy; };
  const int var =
      select_flip_var(local_entropy, theta, tabu, formula.num_vars, delta, rng);
  return {flip(state, var), var};
}

RunResult run_eda(const CnfFormula& formula, const EdaConfig& config, const RunObserver& observer) {
  validate(formula);
  validate(config);

  Rng rng(config.seed);
  RunResult result;
  const int n = formula.num_vars;

  if (n == 0) {
    // Nothing to flip: the empty assignment settles it.
    Assignment empty;
    result.best_energy = energy(formula, empty);
    result.solved = (result.best_energy == 0);
    if (result.solved) result.witness = empty;
    result.energy_trace.push_back({0, result.best_energy, 0.0, config.schedule.t_start});
    return result;
  }

  SatLandscape landscape(formula);
  SatWalk walk(landscape, random_assignment(n, rng));
  TabuList tabu(config.tabu_capacity);
  ScheduleStepper stepper(config.schedule);

  result.best_energy = walk.energy();
  result.energy_trace.push_back(
      {0, walk.energy(), walk.entropy(config.estimator), config.schedule.t_start});

  for (long long it = 1; it <= config.max_iterations; ++it) {
    const double temp = stepper.advance();
    const double entropy_cur = walk.entropy(config.estimator);
    const int energy_cur = walk.energy();

    const double theta = theta_at(config, it);
    const auto delta = [&](int v) { return walk.energy_delta(v); };
    const int var = select_flip_var(entropy_cur, theta, tabu, n, delta, rng);

    walk.flip(var);
    const int energy_new = walk.energy();
    const double entropy_new = walk.entropy(config.estimator);

    const bool accepted =
        accept(energy_cur, energy_new, entropy_cur, entropy_new, temp, config, rng);
    if (accepted) {
      tabu.push(var);
      ++result.accept_count;
    } else {
      walk.flip(var);  // restore
      ++result.reject_count;
    }

    if (observer) observer(it, accepted, walk.energy(), temp);

    const bool improved = walk.energy() < result.best_energy;
    if (improved) result.best_energy = walk.energy();
    if (improved || it % config.trace_stride == 0)
      result.energy_trace.push_back({it, walk.energy(), walk.entropy(config.estimator), temp});

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

}  // namespace edasat
