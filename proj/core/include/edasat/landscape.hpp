// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDASAT_LANDSCAPE_HPP
#define EDASAT_LANDSCAPE_HPP

#include <concepts>
#include <cstdint>
#include <vector>

#include "edasat/cnf.hpp"
#include "edasat/rng.hpp"

namespace edasat {

/// A truth assignment, one entry per variable. Variables are 1-based to
/// mirror literals; bit index 0 holds variable 1.
struct Assignment {
  std::vector<std::uint8_t> bits;

  Assignment() = default;
  explicit Assignment(int num_vars) : bits(static_cast<std::size_t>(num_vars), 0) {}

  int size() const { return static_cast<int>(bits.size()); }
  bool value(int var) const { return bits[static_cast<std::size_t>(var - 1)] != 0; }
  void set(int var, bool v) { bits[static_cast<std::size_t>(var - 1)] = v ? 1 : 0; }
  bool operator==(const Assignment&) const = default;
};

/// Per-state entropy estimators. ClauseSatisfactionEntropy is the binary
/// Shannon entropy of the satisfied-clause fraction; BitBalanceEntropy the
/// same form applied to the fraction of true bits. Both are in nats and land
/// in [0, ln 2].
enum class EntropyEstimator {
  ClauseSatisfactionEntropy,
  BitBalanceEntropy,
};

/// -(q ln q + (1-q) ln(1-q)) with 0 ln 0 = 0; nats.
double binary_entropy(double q);

Assignment random_assignment(int num_vars, Rng& rng);

/// Number of clauses with at least one true literal. An empty clause is never
/// satisfied. Throws std::invalid_argument on assignment/formula length
/// mismatch.
int satisfied_clauses(const CnfFormula& formula, const Assignment& state);

/// Unsatisfied clause count: m - satisfied_clauses. Zero iff solution.
int energy(const CnfFormula& formula, const Assignment& state);

bool is_solution(const CnfFormula& formula, const Assignment& state);

/// Entropy of a single state under the chosen estimator; 0 when the relevant
/// denominator (m or n) is zero.
double state_entropy(const CnfFormula& formula, const Assignment& state,
                     EntropyEstimator estimator);

/// Copy of state with exactly the given variable toggled. Involution.
Assignment flip(const Assignment& state, int var);

/// Entry v = state_entropy(flip(state, v)) - state_entropy(state): the
/// discrete per-variable surrogate for an entropy gradient, used to rank
/// flips.
std::vector<double> entropy_gain_scores(const CnfFormula& formula, const Assignment& state,
                                        EntropyEstimator estimator);

/// Per-formula occurrence index supporting O(occurrences) flip evaluation.
class SatLandscape {
 public:
  explicit SatLandscape(const CnfFormula& formula);

  const CnfFormula& formula() const { return *formula_; }
  int num_vars() const { return formula_->num_vars; }
  int num_clauses() const { return formula_->num_clauses(); }

  struct VarOccurrence {
    int clause;
    int positive;  // occurrences of +var in the clause
    int negative;  // occurrences of -var in the clause
  };
  const std::vector<VarOccurrence>& occurrences(int var) const {
    return occ_[static_cast<std::size_t>(var - 1)];
  }

 private:
  const CnfFormula* formula_;
  std::vector<std::vector<VarOccurrence>> occ_;
};

/// Mutable cursor over a SatLandscape: an assignment plus per-clause counts
/// of true literal occurrences. Flips are O(occurrences of the variable) and
/// exactly reversible, so the cursor always agrees with the definitional
/// evaluators above (property-tested).
class SatWalk {
 public:
  SatWalk(const SatLandscape& landscape, Assignment start);

  int num_vars() const { return landscape_->num_vars(); }
  int satisfied() const { return satisfied_; }
  int energy() const { return landscape_->num_clauses() - satisfied_; }
  bool is_solution() const { return energy() == 0; }
  double entropy(EntropyEstimator estimator) const;

  /// Energy change if var were flipped; does not modify the walk.
  int energy_delta(int var) const;

  void flip(int var);

  const Assignment& state() const { return state_; }

 private:
  const SatLandscape* landscape_;
  Assignment state_;
  std::vector<int> true_count_;  // true literal occurrences per clause
  int satisfied_ = 0;
};

/// Contract for anything the annealing loops can walk: a fixed-dimension
/// state with an energy, a per-state entropy, per-move energy deltas, and a
/// solution predicate. SAT (SatWalk) is the shipped instance; other problems
/// plug in by modeling this surface.
template <typename W>
concept AnnealWalk = requires(W& walk, const W& cwalk, int var) {
  { cwalk.num_vars() } -> std::convertible_to<int>;
  { cwalk.energy() } -> std::convertible_to<int>;
  { cwalk.is_solution() } -> std::convertible_to<bool>;
  { cwalk.energy_delta(var) } -> std::convertible_to<int>;
  { walk.flip(var) };
};

}  // namespace edasat

#endif  // EDASAT_LANDSCAPE_HPP
