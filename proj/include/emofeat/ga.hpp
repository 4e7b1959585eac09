// emofeat/ga.hpp

// Copyright 2026  emofeat authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef EMOFEAT_GA_HPP_
#define EMOFEAT_GA_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "emofeat/criterion.hpp"
#include "emofeat/subset.hpp"
#include "emofeat/threadpool.hpp"

namespace emofeat {

/// Genetic search settings. The GA is restarted `runs` times from different
/// seeds; each restart contributes its best chromosome and a feature's
/// inclusion probability is the fraction of restarts whose best chromosome
/// contains it.
struct GaParams {
  int runs = 50;
  int population = 50;
  int generations = 40;
  double crossover_rate = 0.8;
  double mutation_rate = 0.0;  // 0 = default 2/d bit-flip probability
  int tournament = 3;
  double size_penalty = 0.1;   // penalty points at |subset| == d, linear in size
  double threshold = 0.5;      // inclusion probability cutoff
  std::uint64_t seed = 0;
};

struct GaResult {
  FeatureSubset subset;
  std::vector<double> inclusion_probability;  // per candidate feature
  std::vector<std::vector<int>> run_best;     // best chromosome per run
};

namespace ga_detail {

struct Chromosome {
  std::vector<bool> bits;
  double fitness = -1.0;
};

inline std::vector<int> BitsToSubset(const std::vector<bool>& bits,
                                     const std::vector<int>& features) {
  std::vector<int> out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out.push_back(features[i]);
  }
  return out;
}

inline double Fitness(const WrapperCriterion& criterion, const std::vector<bool>& bits,
                      const std::vector<int>& features, double size_penalty) {
  std::vector<int> subset = BitsToSubset(bits, features);
  if (subset.empty()) return -1.0;
  const double score = criterion.Score(subset);
  return score - size_penalty * static_cast<double>(subset.size()) /
                     static_cast<double>(features.size());
}

inline std::vector<int> RunOnce(const WrapperCriterion& criterion,
                                const std::vector<int>& features, const GaParams& params,
                                std::uint64_t run_seed) {
  const std::size_t d = features.size();
  Rng rng(run_seed);
  const double mutation =
      params.mutation_rate > 0.0 ? params.mutation_rate : 2.0 / static_cast<double>(d);

  auto repair = [&rng, d](std::vector<bool>& bits) {
    bool any = false;
    for (bool b : bits) any = any || b;
    if (!any) bits[rng.NextIndex(d)] = true;
  };

  std::vector<Chromosome> population(static_cast<std::size_t>(params.population));
  for (auto& c : population) {
    c.bits.resize(d);
    for (std::size_t j = 0; j < d; ++j) c.bits[j] = rng.NextBool(0.5);
    repair(c.bits);
    c.fitness = Fitness(criterion, c.bits, features, params.size_penalty);
  }

  auto better = [](const Chromosome& a, const Chromosome& b) { return a.fitness > b.fitness; };
  Chromosome best = *std::max_element(population.begin(), population.end(),
                                      [&](const auto& a, const auto& b) { return better(b, a); });

  for (int gen = 0; gen < params.generations; ++gen) {
    std::vector<Chromosome> next;
    next.reserve(population.size());
    next.push_back(best);  // elitism
    auto tournament = [&]() -> const Chromosome& {
      std::size_t winner = rng.NextIndex(population.size());
      for (int t = 1; t < params.tournament; ++t) {
        std::size_t rival = rng.NextIndex(population.size());
        if (population[rival].fitness > population[winner].fitness) winner = rival;
      }
      return population[winner];
    };
    while (next.size() < population.size()) {
      std::vector<bool> a = tournament().bits;
      std::vector<bool> b = tournament().bits;
      if (rng.NextBool(params.crossover_rate)) {
        for (std::size_t j = 0; j < d; ++j) {
          if (rng.NextBool(0.5)) std::swap(a[j], b[j]);
        }
      }
      for (std::vector<bool>* child : {&a, &b}) {
        if (next.size() >= population.size()) break;
        for (std::size_t j = 0; j < d; ++j) {
          if (rng.NextBool(mutation)) (*child)[j] = !(*child)[j];
        }
        repair(*child);
        Chromosome c;
        c.bits = *child;
        c.fitness = Fitness(criterion, c.bits, features, params.size_penalty);
        if (c.fitness > best.fitness) best = c;
        next.push_back(std::move(c));
      }
    }
    population.swap(next);
  }
  return BitsToSubset(best.bits, features);
}

}  // namespace ga_detail

/// Multi-restart GA selection. Deterministic under params.seed: run seeds are
/// derived by name, and restarts may execute concurrently without changing
/// the result.
inline GaResult GaSelect(const WrapperCriterion& criterion, const std::vector<int>& features,
                         const GaParams& params, ThreadPool* pool = nullptr) {
  Require(params.runs >= 1, Errc::kInvalidArgument, "ga: runs must be >= 1");
  Require(!features.empty(), Errc::kInvalidArgument, "ga: no candidate features");
  Require(params.threshold > 0.0 && params.threshold <= 1.0, Errc::kInvalidArgument,
          "ga: threshold must be in (0, 1]");

  GaResult result;
  result.run_best.assign(static_cast<std::size_t>(params.runs), {});
  ParallelFor(pool, static_cast<std::size_t>(params.runs), [&](std::size_t r) {
    const std::uint64_t run_seed = DeriveSeed(params.seed, "ga:run" + std::to_string(r));
    result.run_best[r] = ga_detail::RunOnce(criterion, features, params, run_seed);
  });

  result.inclusion_probability.assign(features.size(), 0.0);
  for (const auto& best : result.run_best) {
    for (int f : best) {
      auto it = std::find(features.begin(), features.end(), f);
      result.inclusion_probability[static_cast<std::size_t>(it - features.begin())] += 1.0;
    }
  }
  for (double& p : result.inclusion_probability) p /= static_cast<double>(params.runs);

  for (std::size_t i = 0; i < features.size(); ++i) {
    if (result.inclusion_probability[i] >= params.threshold) {
      result.subset.indices.push_back(features[i]);
    }
  }
  result.subset.selector = SelectorKind::kGa;
  if (result.subset.indices.empty()) {
    Raise(Errc::kEmptyResult, "ga: no feature reached the inclusion threshold");
  }
  return result;
}

}  // namespace emofeat

#endif  // EMOFEAT_GA_HPP_
