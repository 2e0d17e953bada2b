// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDASAT_EDA_HPP
#define EDASAT_EDA_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "edasat/cnf.hpp"
#include "edasat/landscape.hpp"
#include "edasat/rng.hpp"

namespace edasat {

/// Cooling schedules. All keep the temperature strictly positive and
/// non-increasing in the iteration index.
///
///   EndpointExponential: T_start * (T_final/T_start)^(i / max_iterations);
///                        exactly T_start at i=0 and T_final at the end.
///   PureExponential:     T_start * exp(-i / tau).
///   Geometric:           T_start * gamma^i, evaluated as the running product
///                        so consecutive values satisfy T(i+1) = gamma * T(i)
///                        bit for bit.
struct TemperatureSchedule {
  enum class Kind { EndpointExponential, PureExponential, Geometric };

  Kind kind = Kind::EndpointExponential;
  double t_start = 2.0;
  double t_final = 0.01;          // EndpointExponential
  long long max_iterations = 0;   // EndpointExponential
  double tau = 1.0;               // PureExponential
  double gamma = 0.999;           // Geometric

  static TemperatureSchedule endpoint_exponential(double t_start, double t_final,
                                                  long long max_iterations);
  static TemperatureSchedule pure_exponential(double t_start, double tau);
  static TemperatureSchedule geometric(double t_start, double gamma);

  bool operator==(const TemperatureSchedule&) const = default;
};

void validate(const TemperatureSchedule& schedule);

/// Temperature at iteration i (i >= 0; for EndpointExponential additionally
/// i <= max_iterations).
double temperature_at(const TemperatureSchedule& schedule, long long i);

/// Streams the schedule one iteration at a time; agrees with temperature_at
/// at every index and is O(1) per step for all kinds.
class ScheduleStepper {
 public:
  explicit ScheduleStepper(const TemperatureSchedule& schedule);
  /// Advances to the next iteration index and returns its temperature.
  double advance();

 private:
  TemperatureSchedule schedule_;
  long long index_ = 0;
  double current_;
};

/// Bounded FIFO of recently flipped variables; pushing at capacity evicts the
/// oldest entry. Capacity zero disables the memory entirely.
class TabuList {
 public:
  explicit TabuList(int capacity);

  void push(int var);
  bool contains(int var) const;
  int size() const { return static_cast<int>(entries_.size()); }
  int capacity() const { return capacity_; }

 private:
  std::vector<int> entries_;  // front = oldest
  int capacity_;
};

struct EdaConfig {
  TemperatureSchedule schedule = TemperatureSchedule::endpoint_exponential(2.0, 0.01, 100000);
  long long max_iterations = 100000;
  int tabu_capacity = 8;
  EntropyEstimator estimator = EntropyEstimator::ClauseSatisfactionEntropy;
  double explore_threshold_theta0 = 0.4;  // in [0, ln 2]
  double theta_decay = 0.9999;            // in (0, 1]
  double entropy_weight = 1.0;            // coefficient on H in the free energy
  double boltzmann_k = 1.0;
  std::uint64_t seed = 1;
  long long trace_stride = 100;  // trace every stride-th iteration plus improvements
};

void validate(const EdaConfig& config);

struct TraceSample {
  long long iteration;
  int energy;
  double entropy;
  double temperature;
  bool operator==(const TraceSample&) const = default;
};

struct RunResult {
  bool solved = false;
  std::optional<Assignment> witness;
  long long iterations_used = 0;
  int best_energy = 0;
  std::vector<TraceSample> energy_trace;
  long long accept_count = 0;
  long long reject_count = 0;
  bool operator==(const RunResult&) const = default;
};

/// F = E - T * w * H. With w = 0 this collapses to plain energy annealing; a
/// positive w favors high-entropy states while the temperature is high and
/// the bias vanishes as T -> 0.
double free_energy(double energy, double entropy, double temp, double entropy_weight);

/// Metropolis on free energies: min(1, exp(-(F_new - F_current)/(k*T))).
/// Saturates cleanly at extreme exponents.
double acceptance_probability(double f_current, double f_new, double temp,
                              double boltzmann_k = 1.0);

/// Draws one uniform u in [0,1) and accepts iff u < acceptance_probability of
/// the two free energies. Always consumes exactly one draw.
bool accept(double energy_current, double energy_new, double entropy_current, double entropy_new,
            double temp, const EdaConfig& config, Rng& rng);

/// One move proposal. Explores (uniform random non-tabu flip) when the local
/// entropy exceeds theta(i) = theta0 * theta_decay^i, otherwise exploits (the
/// non-tabu flip with the greatest energy decrease, ties to the smallest
/// index). When every variable is tabu the constraint is waived for the move.
/// Returns the candidate state and the flipped variable. The caller pushes
/// the variable onto the tabu list only if the candidate is accepted.
std::pair<Assignment, int> generate_new_state(const CnfFormula& formula, const Assignment& state,
                                              const TabuList& tabu, long long iteration,
                                              const EdaConfig& config, Rng& rng);

/// Called once per iteration after the accept/reject decision.
using RunObserver =
    std::function<void(long long iteration, bool accepted, int energy, double temperature)>;

/// Entropy-driven annealing over the flip landscape: random initial state,
/// explore/exploit move generation with tabu memory, free-energy Metropolis
/// acceptance, immediate stop on a solution or on budget exhaustion.
/// Deterministic under (formula, config).
RunResult run_eda(const CnfFormula& formula, const EdaConfig& config,
                  const RunObserver& observer = {});

}  // namespace edasat

#endif  // EDASAT_EDA_HPP
