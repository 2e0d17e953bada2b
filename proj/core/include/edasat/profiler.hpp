// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDASAT_PROFILER_HPP
#define EDASAT_PROFILER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edasat/cnf.hpp"
#include "edasat/landscape.hpp"

namespace edasat {

/// Hard cap on exact enumeration: 2^26 states keeps worst-case work near 1e8
/// state visits.
inline constexpr int kEnumerationLimit = 26;
/// Witness and minima lists are materialized only up to this width; counts
/// are exact regardless.
inline constexpr int kMaterializationLimit = 20;

struct SolutionCensus {
  std::uint64_t count = 0;
  /// Present only when n <= kMaterializationLimit.
  std::optional<std::vector<Assignment>> witnesses;
};

/// Exact solution count over all 2^n assignments. Throws std::invalid_argument
/// when n exceeds the limit.
SolutionCensus enumerate_solutions(const CnfFormula& formula, int limit = kEnumerationLimit);

/// ln(solution count) in nats, taking the distribution over solutions as
/// uniform; 0 for a unique solution. An unsatisfiable formula also reports 0
/// (the report carries the satisfiable flag alongside).
double entropy_profile(const CnfFormula& formula, int limit = kEnumerationLimit);

/// P(s) = exp(-E(s)/(k*T)) / Z over all 2^n states, indexed by the assignment
/// bit pattern (bit v-1 = variable v true). Sums to 1 within 1e-9.
std::vector<double> boltzmann_distribution(const CnfFormula& formula, double temp,
                                           double boltzmann_k = 1.0,
                                           int limit = kEnumerationLimit);

struct LocalMinimum {
  Assignment state;
  int energy = 0;
  bool operator==(const LocalMinimum&) const = default;
};

/// All assignments with no strictly lower-energy 1-flip neighbor. Plateau
/// states count. Requires n <= kMaterializationLimit (the list is explicit).
std::vector<LocalMinimum> count_local_minima(const CnfFormula& formula,
                                             int limit = kMaterializationLimit);

struct BarrierResult {
  /// Minimax path peak minus E(a); nonnegative.
  int height = 0;
  /// The raw minimax peak, symmetric in (a, b).
  int raw_peak = 0;
  bool operator==(const BarrierResult&) const = default;
};

/// Minimax cost over 1-flip paths from a to b: the minimum over paths of the
/// maximum energy en route, reported relative to E(a) with the symmetric raw
/// peak alongside. Exact (threshold union-reachability over the hypercube).
BarrierResult barrier_height(const CnfFormula& formula, const Assignment& a, const Assignment& b,
                             int limit = kEnumerationLimit);

struct Barrier {
  int from = 0;  // index into the minima ordering
  int to = 0;
  int height = 0;
  int raw_peak = 0;
  bool operator==(const Barrier&) const = default;
};

struct RuggednessResult {
  double lambda = 0.0;
  std::vector<Barrier> barriers;
};

/// Orders the local minima by (energy, lexicographic assignment) and sums the
/// barrier heights between consecutive pairs. A single minimum gives 0.
RuggednessResult ruggedness(const CnfFormula& formula, int limit = kMaterializationLimit);

/// Smallest integer k with d0 * alpha^k <= eps. Requires d0 > 0,
/// alpha in (0,1), 0 < eps <= d0.
long long convergence_bound(double d0, double alpha, double eps);

struct LandscapeReport {
  int n = 0;
  int m = 0;
  std::uint64_t solution_count = 0;
  bool satisfiable = false;
  double h_prof = 0.0;  // nats
  std::uint64_t n_minima = 0;
  std::vector<LocalMinimum> minima;
  std::vector<Barrier> barriers;
  double lambda_ruggedness = 0.0;
  std::vector<std::uint64_t> energy_histogram;  // index = energy level
};

/// Full exact landscape profile. Requires n <= kMaterializationLimit because
/// the minima census is explicit.
LandscapeReport profile_landscape(const CnfFormula& formula, int limit = kMaterializationLimit);

std::string report_to_json(const LandscapeReport& report);

}  // namespace edasat

#endif  // EDASAT_PROFILER_HPP
