// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0

#include "edasat/landscape.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace edasat {

namespace {

void check_state(const CnfFormula& formula, const Assignment& state) {
  if (state.size() != formula.num_vars)
    throw std::invalid_argument("assignment length " + std::to_string(state.size()) +
                                " does not match num_vars=" + std::to_string(formula.num_vars));
}

bool literal_true(Literal lit, const Assignment& state) {
  const int var = static_cast<int>(std::abs(lit));
  return state.value(var) == (lit > 0);
}

}  // namespace

double binary_entropy(double q) {
  double h = 0.0;
  if (q > 0.0) h -= q * std::log(q);
  if (q < 1.0) h -= (1.0 - q) * std::log(1.0 - q);
  return h;
}

Assignment random_assignment(int num_vars, Rng& rng) {
  Assignment state(num_vars);
  for (int v = 1; v <= num_vars; ++v) state.set(v, rng.next_bool());
  return state;
}

int satisfied_clauses(const CnfFormula& formula, const Assignment& state) {
  check_state(formula, state);
  int satisfied = 0;
  for (const Clause& clause : formula.clauses) {
    for (const Literal lit : clause) {
      if (literal_true(lit, state)) {
        ++satisfied;
        break;
      }
    }
  }
  return satisfied;
}

int energy(const CnfFormula& formula, const Assignment& state) {
  return formula.num_clauses() - satisfied_clauses(formula, state);
}

bool is_solution(const CnfFormula& formula, const Assignment& state) {
  return energy(formula, state) == 0;
}

double state_entropy(const CnfFormula& formula, const Assignment& state,
                     EntropyEstimator estimator) {
  check_state(formula, state);
  if (estimator == EntropyEstimator::ClauseSatisfactionEntropy) {
    const int m = formula.num_clauses();
    if (m == 0) return 0.0;
    const double q = static_cast<double>(satisfied_clauses(formula, state)) / m;
    return binary_entropy(q);
  }
  const int n = formula.num_vars;
  if (n == 0) return 0.0;
  int ones = 0;
  for (int v = 1; v <= n; ++v)
    if (state.value(v)) ++ones;
  return binary_entropy(static_cast<double>(ones) / n);
}

Assignment flip(const Assignment& state, int var) {
  if (var < 1 || var > state.size())
    throw std::invalid_argument("flip: variable " + std::to_string(var) +
                                " out of range for n=" + std::to_string(state.size()));
  Assignment next = state;
  next.set(var, !state.value(var));
  return next;
}

std::vector<double> entropy_gain_scores(const CnfFormula& formula, const Assignment& state,
                                        EntropyEstimator estimator) {
  check_state(formula, state);
  const double here = state_entropy(formula, state, estimator);
  std::vector<double> scores(static_cast<std::size_t>(formula.num_vars));
  for (int v = 1; v <= formula.num_vars; ++v)
    scores[static_cast<std::size_t>(v - 1)] = state_entropy(formula, flip(state, v), estimator) - here;
  return scores;
}

SatLandscape::SatLandscape(const CnfFormula& formula) : formula_(&formula) {
  validate(formula);
  occ_.resize(static_cast<std::size_t>(formula.num_vars));
  // scratch: occurrence counts for the clause under scan
  std::vector<int> pos(static_cast<std::size_t>(formula.num_vars), 0);
  std::vector<int> neg(static_cast<std::size_t>(formula.num_vars), 0);
  std::vector<int> touched;
  for (int c = 0; c < formula.num_clauses(); ++c) {
    touched.clear();
    for (const Literal lit : formula.clauses[static_cast<std::size_t>(c)]) {
      const int var = static_cast<int>(std::abs(lit));
      const std::size_t idx = static_cast<std::size_t>(var - 1);
      if (pos[idx] == 0 && neg[idx] == 0) touched.push_back(var);
      if (lit > 0)
        ++pos[idx];
      else
        ++neg[idx];
    }
    for (const int var : touched) {
      const std::size_t idx = static_cast<std::size_t>(var - 1);
      occ_[idx].push_back(VarOccurrence{c, pos[idx], neg[idx]});
      pos[idx] = 0;
      neg[idx] = 0;
    }
  }
}

SatWalk::SatWalk(const SatLandscape& landscape, Assignment start)
    : landscape_(&landscape), state_(std::move(start)) {
  check_state(landscape.formula(), state_);
  const CnfFormula& f = landscape.formula();
  true_count_.assign(static_cast<std::size_t>(f.num_clauses()), 0);
  for (int c = 0; c < f.num_clauses(); ++c) {
    int count = 0;
    for (const Literal lit : f.clauses[static_cast<std::size_t>(c)])
      if (literal_true(lit, state_)) ++count;
    true_count_[static_cast<std::size_t>(c)] = count;
    if (count > 0) ++satisfied_;
  }
}

double SatWalk::entropy(EntropyEstimator estimator) const {
  if (estimator == EntropyEstimator::ClauseSatisfactionEntropy) {
    const int m = landscape_->num_clauses();
    if (m == 0) return 0.0;
    return binary_entropy(static_cast<double>(satisfied_) / m);
  }
  return state_entropy(landscape_->formula(), state_, estimator);
}

int SatWalk::energy_delta(int var) const {
  const bool was_true = state_.value(var);
  int satisfied_delta = 0;
  for (const SatLandscape::VarOccurrence& occ : landscape_->occurrences(var)) {
    const int before = true_count_[static_cast<std::size_t>(occ.clause)];
    // Flipping var turns its true occurrences false and vice versa.
    const int after = was_true ? before - occ.positive + occ.negative
                               : before + occ.positive - occ.negative;
    satisfied_delta += (after > 0 ? 1 : 0) - (before > 0 ? 1 : 0);
  }
  return -satisfied_delta;
}

void SatWalk::flip(int var) {
  if (var < 1 || var > num_vars())
    throw std::invalid_argument("flip: variable " + std::to_string(var) +
                                " out of range for n=" + std::to_string(num_vars()));
  const bool was_true = state_.value(var);
  for (const SatLandscape::VarOccurrence& occ : landscape_->occurrences(var)) {
    const std::size_t c = static_cast<std::size_t>(occ.clause);
    const int before = true_count_[c];
    const int after = was_true ? before - occ.positive + occ.negative
                               : before + occ.positive - occ.negative;
    true_count_[c] = after;
    satisfied_ += (after > 0 ? 1 : 0) - (before > 0 ? 1 : 0);
  }
  state_.set(var, !was_true);
}

}  // namespace edasat
