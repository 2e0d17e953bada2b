// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDASAT_BASELINES_HPP
#define EDASAT_BASELINES_HPP

#include <cstdint>

#include "edasat/cnf.hpp"
#include "edasat/eda.hpp"

namespace edasat {

struct BaselineConfig {
  TemperatureSchedule schedule = TemperatureSchedule::endpoint_exponential(2.0, 0.01, 100000);
  long long max_iterations = 100000;
  std::uint64_t seed = 1;
  int restarts = 10;  // hill climb only
  long long trace_stride = 100;
};

void validate(const BaselineConfig& config);

/// Classical simulated annealing: uniform random flips, Metropolis acceptance
/// on raw energy. Same loop shape, result contract and determinism guarantees
/// as run_eda.
RunResult run_sa(const CnfFormula& formula, const BaselineConfig& config,
                 const RunObserver& observer = {});

/// Greedy descent: repeatedly takes the best strictly improving flip (ties to
/// the smallest index); at a local minimum restarts from a fresh random state
/// up to config.restarts times. Returns the best encountered. The observer
/// sees every applied move with accepted=true and every segment start with
/// accepted=false.
RunResult run_hill_climb(const CnfFormula& formula, const BaselineConfig& config,
                         const RunObserver& observer = {});

}  // namespace edasat

#endif  // EDASAT_BASELINES_HPP
