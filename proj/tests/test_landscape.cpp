// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "edasat/cnf.hpp"
#include "edasat/landscape.hpp"
#include "edasat/rng.hpp"

using namespace edasat;

namespace {

// Definitional clause-walking oracle, independent of the library evaluators.
int oracle_satisfied(const CnfFormula& f, const Assignment& s) {
  int count = 0;
  for (const Clause& clause : f.clauses) {
    bool sat = false;
    for (const Literal lit : clause) {
      const int var = std::abs(lit);
      const bool val = s.value(var);
      if ((lit > 0 && val) || (lit < 0 && !val)) sat = true;
    }
    if (sat) ++count;
  }
  return count;
}

// Long-double route for binary entropy, used to cross-check frozen values.
double oracle_binary_entropy(double q) {
  long double h = 0.0L;
  if (q > 0.0) h -= static_cast<long double>(q) * std::log(static_cast<long double>(q));
  if (q < 1.0)
    h -= (1.0L - static_cast<long double>(q)) * std::log(1.0L - static_cast<long double>(q));
  return static_cast<double>(h);
}

Assignment nth_assignment(std::uint64_t index, int n) {
  Assignment s(n);
  for (int v = 1; v <= n; ++v) s.set(v, (index >> (v - 1)) & 1);
  return s;
}

Assignment make_state(std::initializer_list<bool> values) {
  Assignment s(static_cast<int>(values.size()));
  int v = 1;
  for (const bool b : values) s.set(v++, b);
  return s;
}

}  // namespace

TEST_CASE("satisfied_clauses on hand instances") {
  CHECK(satisfied_clauses(CnfFormula{2, {{1, -2}}}, make_state({true, false})) == 1);
  CHECK(satisfied_clauses(CnfFormula{2, {{1}, {-1}}}, make_state({true, false})) == 1);
  CHECK(satisfied_clauses(CnfFormula{2, {{1}, {-1}}}, make_state({true, true})) == 1);
  CHECK(satisfied_clauses(CnfFormula{1, {{}}}, make_state({true})) == 0);  // empty clause
  CHECK_THROWS_AS(satisfied_clauses(CnfFormula{2, {{1}}}, make_state({true})),
                  std::invalid_argument);
}

TEST_CASE("satisfied_clauses matches the clause-walking oracle on a random instance") {
  const CnfFormula f = generate_random_ksat(10, 30, 3, 7);
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Assignment s = random_assignment(10, rng);
    CHECK(satisfied_clauses(f, s) == oracle_satisfied(f, s));
  }
}

TEST_CASE("energy identities hold on every state of a small instance") {
  const CnfFormula f = generate_random_ksat(10, 25, 3, 11);
  const int m = f.num_clauses();
  for (std::uint64_t idx = 0; idx < (1u << 10); ++idx) {
    const Assignment s = nth_assignment(idx, 10);
    const int sat = oracle_satisfied(f, s);
    CHECK(energy(f, s) == m - sat);
    CHECK(energy(f, s) + satisfied_clauses(f, s) == m);
    CHECK(is_solution(f, s) == (energy(f, s) == 0));
  }
}

TEST_CASE("a formula with an empty clause has positive energy everywhere") {
  const CnfFormula f{3, {{1, 2}, {}, {-3}}};
  for (std::uint64_t idx = 0; idx < 8; ++idx)
    CHECK(energy(f, nth_assignment(idx, 3)) >= 1);
}

TEST_CASE("is_solution basics") {
  const CnfFormula f{1, {{1}}};
  CHECK(is_solution(f, make_state({true})));
  CHECK_FALSE(is_solution(f, make_state({false})));
}

TEST_CASE("state_entropy boundary and frozen values") {
  const CnfFormula solved{1, {{1}}};
  CHECK(state_entropy(solved, make_state({true}),
                      EntropyEstimator::ClauseSatisfactionEntropy) == 0.0);

  // q = 1/2 peaks at ln 2
  const CnfFormula half{1, {{1}, {-1}}};
  CHECK(state_entropy(half, make_state({true}), EntropyEstimator::ClauseSatisfactionEntropy) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));

  // q = 3/4
  CHECK(binary_entropy(0.75) == doctest::Approx(0.5623351446188083).epsilon(1e-14));
  CHECK(binary_entropy(0.75) == doctest::Approx(oracle_binary_entropy(0.75)).epsilon(1e-14));
  CHECK(binary_entropy(0.25) == binary_entropy(0.75));

  // degenerate denominators
  CHECK(state_entropy(CnfFormula{1, {}}, make_state({true}),
                      EntropyEstimator::ClauseSatisfactionEntropy) == 0.0);
  CHECK(state_entropy(CnfFormula{0, {}}, Assignment{}, EntropyEstimator::BitBalanceEntropy) ==
        0.0);
}

TEST_CASE("state_entropy stays within [0, ln 2] and vanishes only at the extremes") {
  const double ln2 = std::log(2.0);
  const CnfFormula f = generate_random_ksat(8, 20, 3, 21);
  for (std::uint64_t idx = 0; idx < (1u << 8); ++idx) {
    const Assignment s = nth_assignment(idx, 8);
    for (const EntropyEstimator est :
         {EntropyEstimator::ClauseSatisfactionEntropy, EntropyEstimator::BitBalanceEntropy}) {
      const double h = state_entropy(f, s, est);
      CHECK(h >= 0.0);
      CHECK(h <= ln2 + 1e-15);
    }
    const int sat = oracle_satisfied(f, s);
    const double h = state_entropy(f, s, EntropyEstimator::ClauseSatisfactionEntropy);
    if (sat == 0 || sat == f.num_clauses())
      CHECK(h == 0.0);
    else
      CHECK(h > 0.0);
  }
}

TEST_CASE("flip is an involution touching exactly one position") {
  CHECK(flip(make_state({true, false}), 1) == make_state({false, false}));
  Rng rng(5);
  for (int n = 1; n <= 8; ++n) {
    const Assignment s = random_assignment(n, rng);
    for (int v = 1; v <= n; ++v) {
      const Assignment t = flip(s, v);
      CHECK(flip(t, v) == s);
      int hamming = 0;
      for (int u = 1; u <= n; ++u)
        if (s.value(u) != t.value(u)) ++hamming;
      CHECK(hamming == 1);
    }
  }
  CHECK_THROWS_AS(flip(make_state({true}), 2), std::invalid_argument);
  CHECK_THROWS_AS(flip(make_state({true}), 0), std::invalid_argument);
}

TEST_CASE("entropy_gain_scores equals the two-call recomputation") {
  const CnfFormula f = generate_random_ksat(10, 24, 3, 13);
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Assignment s = random_assignment(10, rng);
    for (const EntropyEstimator est :
         {EntropyEstimator::ClauseSatisfactionEntropy, EntropyEstimator::BitBalanceEntropy}) {
      const std::vector<double> scores = entropy_gain_scores(f, s, est);
      REQUIRE(scores.size() == 10);
      for (int v = 1; v <= 10; ++v) {
        const double expected = state_entropy(f, flip(s, v), est) - state_entropy(f, s, est);
        CHECK(scores[static_cast<std::size_t>(v - 1)] == expected);
      }
    }
  }
}

TEST_CASE("entropy_gain_scores is zero for a variable outside every clause") {
  const CnfFormula f{3, {{1, 2}, {-1}, {2}}};
  Rng rng(29);
  const Assignment s = random_assignment(3, rng);
  const std::vector<double> scores =
      entropy_gain_scores(f, s, EntropyEstimator::ClauseSatisfactionEntropy);
  CHECK(scores[2] == 0.0);
}

TEST_CASE("entropy_gain_scores is negative when a flip moves q from 1/2 to 3/4") {
  // clauses: +1, +1, +2, -1; state (F,T) satisfies 2 of 4, flipping
  // variable 1 satisfies 3 of 4.
  const CnfFormula f{2, {{1}, {1}, {2}, {-1}}};
  const Assignment s = make_state({false, true});
  REQUIRE(satisfied_clauses(f, s) == 2);
  REQUIRE(satisfied_clauses(f, flip(s, 1)) == 3);
  const std::vector<double> scores =
      entropy_gain_scores(f, s, EntropyEstimator::ClauseSatisfactionEntropy);
  CHECK(scores[0] == doctest::Approx(0.5623351446188083 - std::log(2.0)).epsilon(1e-12));
  CHECK(scores[0] < 0.0);
}

TEST_CASE("SatWalk agrees with the definitional evaluators through random flip sequences") {
  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(10));
    const int m = 1 + static_cast<int>(rng.next_below(30));
    const int k = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(std::min(n, 4))));
    const CnfFormula f = generate_random_ksat(n, m, k, rng.next_u64());
    const SatLandscape landscape(f);
    SatWalk walk(landscape, random_assignment(n, rng));

    for (int step = 0; step < 60; ++step) {
      CHECK(walk.satisfied() == oracle_satisfied(f, walk.state()));
      CHECK(walk.energy() == energy(f, walk.state()));
      CHECK(walk.is_solution() == is_solution(f, walk.state()));
      CHECK(walk.entropy(EntropyEstimator::ClauseSatisfactionEntropy) ==
            state_entropy(f, walk.state(), EntropyEstimator::ClauseSatisfactionEntropy));
      const int v = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
      CHECK(walk.energy_delta(v) == energy(f, flip(walk.state(), v)) - energy(f, walk.state()));
      walk.flip(v);
    }
  }
}

TEST_CASE("SatWalk handles duplicate literals and tautological clauses") {
  const CnfFormula f{2, {{1, 1}, {1, -1}, {-2, -2, 2}}};
  const SatLandscape landscape(f);
  for (std::uint64_t idx = 0; idx < 4; ++idx) {
    SatWalk walk(landscape, nth_assignment(idx, 2));
    CHECK(walk.energy() == energy(f, walk.state()));
    for (int v = 1; v <= 2; ++v)
      CHECK(walk.energy_delta(v) == energy(f, flip(walk.state(), v)) - energy(f, walk.state()));
  }
}
