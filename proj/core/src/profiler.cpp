// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0

#include "edasat/profiler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace edasat {

namespace {

using StateMask = std::uint32_t;

void check_limit(const CnfFormula& formula, int limit, const char* what) {
  if (limit < 0 || limit > kEnumerationLimit)
    throw std::invalid_argument("enumeration limit must lie in [0, " +
                                std::to_string(kEnumerationLimit) + "]");
  if (formula.num_vars > limit)
    throw std::invalid_argument(std::string(what) + ": n=" + std::to_string(formula.num_vars) +
                                " exceeds the enumeration limit " + std::to_string(limit));
}

// Clause masks: a clause is satisfied by state s iff a positive literal's bit
// is set or a negative literal's bit is clear. Duplicate literals collapse
// into the masks without changing satisfaction.
struct MaskedFormula {
  int n = 0;
  std::vector<StateMask> pos;
  std::vector<StateMask> neg;

  explicit MaskedFormula(const CnfFormula& formula) : n(formula.num_vars) {
    validate(formula);
    pos.reserve(formula.clauses.size());
    neg.reserve(formula.clauses.size());
    for (const Clause& clause : formula.clauses) {
      StateMask p = 0;
      StateMask ng = 0;
      for (const Literal lit : clause) {
        const int var = static_cast<int>(std::abs(lit));
        const StateMask bit = StateMask{1} << (var - 1);
        if (lit > 0)
          p |= bit;
        else
          ng |= bit;
      }
      pos.push_back(p);
      neg.push_back(ng);
    }
  }

  int energy(StateMask s) const {
    int unsat = 0;
    for (std::size_t c = 0; c < pos.size(); ++c)
      if ((s & pos[c]) == 0 && (~s & neg[c]) == 0) ++unsat;
    return unsat;
  }
};

Assignment decode(StateMask s, int n) {
  Assignment a(n);
  for (int v = 1; v <= n; ++v) a.set(v, (s >> (v - 1)) & 1);
  return a;
}

StateMask encode(const Assignment& a) {
  StateMask s = 0;
  for (int v = 1; v <= a.size(); ++v)
    if (a.value(v)) s |= StateMask{1} << (v - 1);
  return s;
}

std::vector<std::uint16_t> energy_table(const MaskedFormula& mf) {
  if (mf.pos.size() > 65535)
    throw std::invalid_argument("exact profiling supports at most 65535 clauses");
  const std::uint64_t states = std::uint64_t{1} << mf.n;
  std::vector<std::uint16_t> energies(states);
  for (std::uint64_t s = 0; s < states; ++s)
    energies[s] = static_cast<std::uint16_t>(mf.energy(static_cast<StateMask>(s)));
  return energies;
}

// Union-find over the state hypercube.
class DisjointSets {
 public:
  explicit DisjointSets(std::uint64_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), StateMask{0});
  }

  StateMask find(StateMask x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(StateMask a, StateMask b) {
    const StateMask ra = find(a);
    const StateMask rb = find(b);
    if (ra != rb) parent_[ra] = rb;
  }

 private:
  std::vector<StateMask> parent_;
};

// Activates states in increasing energy order, uniting 1-flip neighbors as
// they appear. The level at which a and b first share a component is the
// minimax path peak. Resolves every queried pair in one sweep.
std::vector<int> connection_peaks(const MaskedFormula& mf,
                                  const std::vector<std::uint16_t>& energies,
                                  const std::vector<std::pair<StateMask, StateMask>>& pairs) {
  const std::uint64_t states = std::uint64_t{1} << mf.n;
  const int max_energy = static_cast<int>(mf.pos.size());

  std::vector<std::vector<StateMask>> buckets(static_cast<std::size_t>(max_energy) + 1);
  for (std::uint64_t s = 0; s < states; ++s)
    buckets[energies[s]].push_back(static_cast<StateMask>(s));

  DisjointSets sets(states);
  std::vector<std::uint8_t> active(states, 0);
  std::vector<int> peaks(pairs.size(), -1);
  std::size_t unresolved = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].first == pairs[i].second)
      peaks[i] = energies[pairs[i].first];
    else
      ++unresolved;

  for (int level = 0; level <= max_energy && unresolved > 0; ++level) {
    for (const StateMask s : buckets[static_cast<std::size_t>(level)]) {
      active[s] = 1;
      for (int v = 0; v < mf.n; ++v) {
        const StateMask nb = s ^ (StateMask{1} << v);
        if (active[nb]) sets.unite(s, nb);
      }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (peaks[i] >= 0) continue;
      const auto& [a, b] = pairs[i];
      if (active[a] && active[b] && sets.find(a) == sets.find(b)) {
        peaks[i] = level;
        --unresolved;
      }
    }
  }
  return peaks;
}

std::vector<StateMask> minima_masks(const MaskedFormula& mf,
                                    const std::vector<std::uint16_t>& energies) {
  const std::uint64_t states = std::uint64_t{1} << mf.n;
  std::vector<StateMask> minima;
  for (std::uint64_t s = 0; s < states; ++s) {
    const std::uint16_t e = energies[s];
    bool is_min = true;
    for (int v = 0; v < mf.n && is_min; ++v)
      if (energies[s ^ (std::uint64_t{1} << v)] < e) is_min = false;
    if (is_min) minima.push_back(static_cast<StateMask>(s));
  }
  return minima;
}

// (energy, lexicographic assignment) with variable 1 most significant and
// false < true. The bit pattern has variable 1 in the least significant bit,
// so the lexicographic key is the bit-reversed mask.
StateMask lex_key(StateMask s, int n) {
  StateMask key = 0;
  for (int v = 0; v < n; ++v)
    if ((s >> v) & 1) key |= StateMask{1} << (n - 1 - v);
  return key;
}

RuggednessResult ruggedness_impl(const MaskedFormula& mf,
                                 const std::vector<std::uint16_t>& energies,
                                 const std::vector<StateMask>& minima) {
  RuggednessResult result;
  if (minima.size() < 2) return result;

  std::vector<StateMask> ordered = minima;
  std::sort(ordered.begin(), ordered.end(), [&](StateMask a, StateMask b) {
    if (energies[a] != energies[b]) return energies[a] < energies[b];
    return lex_key(a, mf.n) < lex_key(b, mf.n);
  });

  std::vector<std::pair<StateMask, StateMask>> pairs;
  pairs.reserve(ordered.size() - 1);
  for (std::size_t i = 0; i + 1 < ordered.size(); ++i)
    pairs.emplace_back(ordered[i], ordered[i + 1]);

  const std::vector<int> peaks = connection_peaks(mf, energies, pairs);
  result.barriers.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    Barrier barrier;
    barrier.from = static_cast<int>(i);
    barrier.to = static_cast<int>(i + 1);
    barrier.raw_peak = peaks[i];
    barrier.height = peaks[i] - energies[pairs[i].first];
    result.barriers.push_back(barrier);
    result.lambda += barrier.height;
  }
  return result;
}

}  // namespace

SolutionCensus enumerate_solutions(const CnfFormula& formula, int limit) {
  check_limit(formula, limit, "enumerate_solutions");
  const MaskedFormula mf(formula);
  const std::uint64_t states = std::uint64_t{1} << mf.n;

  SolutionCensus census;
  const bool materialize = formula.num_vars <= kMaterializationLimit;
  if (materialize) census.witnesses.emplace();
  for (std::uint64_t s = 0; s < states; ++s) {
    if (mf.energy(static_cast<StateMask>(s)) == 0) {
      ++census.count;
      if (materialize) census.witnesses->push_back(decode(static_cast<StateMask>(s), mf.n));
    }
  }
  return census;
}

double entropy_profile(const CnfFormula& formula, int limit) {
  const SolutionCensus census = enumerate_solutions(formula, limit);
  if (census.count == 0) return 0.0;
  return std::log(static_cast<double>(census.count));
}

std::vector<double> boltzmann_distribution(const CnfFormula& formula, double temp,
                                           double boltzmann_k, int limit) {
  check_limit(formula, limit, "boltzmann_distribution");
  if (!(temp > 0)) throw std::invalid_argument("temperature must be positive");
  if (!(boltzmann_k > 0)) throw std::invalid_argument("boltzmann_k must be positive");

  const MaskedFormula mf(formula);
  const std::uint64_t states = std::uint64_t{1} << mf.n;

  std::vector<int> energies(states);
  int min_energy = static_cast<int>(mf.pos.size());
  for (std::uint64_t s = 0; s < states; ++s) {
    energies[s] = mf.energy(static_cast<StateMask>(s));
    min_energy = std::min(min_energy, energies[s]);
  }

  // Weights are shifted by the ground energy; the constant factor cancels in
  // the normalization and keeps Z away from underflow.
  std::vector<double> probs(states);
  double z = 0.0;
  double carry = 0.0;  // Kahan compensation
  for (std::uint64_t s = 0; s < states; ++s) {
    const double w = std::exp(-static_cast<double>(energies[s] - min_energy) / (boltzmann_k * temp));
    probs[s] = w;
    const double y = w - carry;
    const double t = z + y;
    carry = (t - z) - y;
    z = t;
  }
  for (double& p : probs) p /= z;
  return probs;
}

std::vector<LocalMinimum> count_local_minima(const CnfFormula& formula, int limit) {
  if (limit > kMaterializationLimit) limit = kMaterializationLimit;
  check_limit(formula, limit, "count_local_minima");
  const MaskedFormula mf(formula);
  const std::vector<std::uint16_t> energies = energy_table(mf);
  std::vector<LocalMinimum> minima;
  for (const StateMask s : minima_masks(mf, energies))
    minima.push_back({decode(s, mf.n), energies[s]});
  return minima;
}

BarrierResult barrier_height(const CnfFormula& formula, const Assignment& a, const Assignment& b,
                             int limit) {
  check_limit(formula, limit, "barrier_height");
  if (a.size() != formula.num_vars || b.size() != formula.num_vars)
    throw std::invalid_argument("barrier_height: assignment length mismatch");
  const MaskedFormula mf(formula);
  const std::vector<std::uint16_t> energies = energy_table(mf);
  const std::vector<int> peaks =
      connection_peaks(mf, energies, {{encode(a), encode(b)}});
  BarrierResult result;
  result.raw_peak = peaks[0];
  result.height = peaks[0] - energies[encode(a)];
  return result;
}

RuggednessResult ruggedness(const CnfFormula& formula, int limit) {
  if (limit > kMaterializationLimit) limit = kMaterializationLimit;
  check_limit(formula, limit, "ruggedness");
  const MaskedFormula mf(formula);
  const std::vector<std::uint16_t> energies = energy_table(mf);
  return ruggedness_impl(mf, energies, minima_masks(mf, energies));
}

long long convergence_bound(double d0, double alpha, double eps) {
  if (!(d0 > 0)) throw std::invalid_argument("d0 must be positive");
  if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (!(eps > 0) || eps > d0) throw std::invalid_argument("eps must lie in (0, d0]");
  if (eps >= d0) return 0;

  const auto reaches = [&](long long k) {
    return d0 * std::pow(alpha, static_cast<double>(k)) <= eps;
  };
  long long k = static_cast<long long>(std::ceil(std::log(eps / d0) / std::log(alpha)));
  if (k < 0) k = 0;
  while (k > 0 && reaches(k - 1)) --k;
  while (!reaches(k)) ++k;
  return k;
}

LandscapeReport profile_landscape(const CnfFormula& formula, int limit) {
  if (limit > kMaterializationLimit) limit = kMaterializationLimit;
  check_limit(formula, limit, "profile_landscape");

  const MaskedFormula mf(formula);
  const std::uint64_t states = std::uint64_t{1} << mf.n;
  const std::vector<std::uint16_t> energies = energy_table(mf);

  LandscapeReport report;
  report.n = formula.num_vars;
  report.m = formula.num_clauses();
  report.energy_histogram.assign(static_cast<std::size_t>(report.m) + 1, 0);
  for (std::uint64_t s = 0; s < states; ++s) {
    ++report.energy_histogram[energies[s]];
    if (energies[s] == 0) ++report.solution_count;
  }
  report.satisfiable = report.solution_count > 0;
  report.h_prof =
      report.satisfiable ? std::log(static_cast<double>(report.solution_count)) : 0.0;

  const std::vector<StateMask> minima = minima_masks(mf, energies);
  report.n_minima = minima.size();
  report.minima.reserve(minima.size());
  for (const StateMask s : minima) report.minima.push_back({decode(s, mf.n), energies[s]});

  // Re-sort the stored minima into the canonical (energy, lex) chain so the
  // barrier indices refer to the listed order.
  std::vector<std::size_t> order(minima.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (energies[minima[x]] != energies[minima[y]]) return energies[minima[x]] < energies[minima[y]];
    return lex_key(minima[x], mf.n) < lex_key(minima[y], mf.n);
  });
  std::vector<LocalMinimum> sorted;
  sorted.reserve(minima.size());
  for (const std::size_t idx : order) sorted.push_back(report.minima[idx]);
  report.minima = std::move(sorted);

  const RuggednessResult rugged = ruggedness_impl(mf, energies, minima);
  report.barriers = rugged.barriers;
  report.lambda_ruggedness = rugged.lambda;
  return report;
}

std::string report_to_json(const LandscapeReport& report) {
  nlohmann::json j;
  j["n"] = report.n;
  j["m"] = report.m;
  j["solution_count"] = report.solution_count;
  j["satisfiable"] = report.satisfiable;
  j["h_prof_nats"] = report.h_prof;
  j["h_prof_bits"] = report.h_prof / std::log(2.0);
  j["n_minima"] = report.n_minima;
  nlohmann::json minima = nlohmann::json::array();
  for (const LocalMinimum& min : report.minima) {
    std::string bits;
    bits.reserve(static_cast<std::size_t>(min.state.size()));
    for (int v = 1; v <= min.state.size(); ++v) bits += min.state.value(v) ? '1' : '0';
    minima.push_back({{"assignment", bits}, {"energy", min.energy}});
  }
  j["minima"] = std::move(minima);
  nlohmann::json barriers = nlohmann::json::array();
  for (const Barrier& barrier : report.barriers)
    barriers.push_back({{"from", barrier.from},
                        {"to", barrier.to},
                        {"height", barrier.height},
                        {"raw_peak", barrier.raw_peak}});
  j["barriers"] = std::move(barriers);
  j["lambda_ruggedness"] = report.lambda_ruggedness;
  j["energy_histogram"] = report.energy_histogram;
  return j.dump(2) + "\n";
}

}  // namespace edasat
