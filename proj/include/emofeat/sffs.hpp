// emofeat/sffs.hpp

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

#ifndef EMOFEAT_SFFS_HPP_
#define EMOFEAT_SFFS_HPP_

#include <algorithm>
#include <map>
#include <vector>

#include "emofeat/criterion.hpp"
#include "emofeat/subset.hpp"
#include "emofeat/threadpool.hpp"

namespace emofeat {

struct SffsParams {
  int max_size = 0;           // 0 = 60% of the candidate feature count
  int patience = 15;          // stop after this many sizes without a new best
};

struct SffsResult {
  FeatureSubset subset;
  double score = 0.0;
  /// Best criterion score observed at each subset size (index = size).
  std::vector<double> best_score_per_size;
};

/// Sequential floating forward selection: after each forward inclusion of the
/// best-scoring candidate, conditionally exclude features while the exclusion
/// improves on the best score already recorded at the smaller size. Returns
/// the best-scoring subset over all visited sizes; score ties prefer the
/// smaller subset.
inline SffsResult SffsSelect(const WrapperCriterion& criterion,
                             const std::vector<int>& candidate_features, SffsParams params,
                             ThreadPool* pool = nullptr) {
  const std::size_t d = candidate_features.size();
  Require(d >= 1, Errc::kInvalidArgument, "sffs: no candidate features");
  std::size_t max_size = params.max_size > 0
                             ? std::min<std::size_t>(static_cast<std::size_t>(params.max_size), d)
                             : std::max<std::size_t>(1, (d * 6) / 10);

  std::vector<int> current;
  std::vector<bool> in_current(criterion.width(), false);
  std::vector<double> best_at_size(max_size + 1, -1.0);
  std::vector<std::vector<int>> best_subset_at_size(max_size + 1);

  auto record = [&](const std::vector<int>& subset, double score) {
    const std::size_t s = subset.size();
    if (s <= max_size && score > best_at_size[s]) {
      best_at_size[s] = score;
      best_subset_at_size[s] = subset;
      std::sort(best_subset_at_size[s].begin(), best_subset_at_size[s].end());
    }
  };

  double global_best = -1.0;
  int sizes_since_improvement = 0;
  while (current.size() < max_size) {
    // Forward step: add the candidate with the best criterion score.
    std::vector<int> free;
    for (int f : candidate_features) {
      if (!in_current[static_cast<std::size_t>(f)]) free.push_back(f);
    }
    if (free.empty()) break;
    std::vector<double> scores(free.size());
    ParallelFor(pool, free.size(), [&](std::size_t i) {
      std::vector<int> trial = current;
      trial.push_back(free[i]);
      scores[i] = criterion.Score(trial);
    });
    std::size_t best_i = 0;
    for (std::size_t i = 1; i < free.size(); ++i) {
      if (scores[i] > scores[best_i]) best_i = i;
    }
    current.push_back(free[best_i]);
    in_current[static_cast<std::size_t>(free[best_i])] = true;
    record(current, scores[best_i]);
    double pass_best = scores[best_i];

    // Floating step: drop features while doing so beats the best known score
    // at the smaller size.
    while (current.size() > 2) {
      std::vector<double> drop_scores(current.size());
      ParallelFor(pool, current.size(), [&](std::size_t i) {
        std::vector<int> trial;
        trial.reserve(current.size() - 1);
        for (std::size_t t = 0; t < current.size(); ++t) {
          if (t != i) trial.push_back(current[t]);
        }
        drop_scores[i] = criterion.Score(trial);
      });
      std::size_t best_drop = 0;
      for (std::size_t i = 1; i < current.size(); ++i) {
        if (drop_scores[i] > drop_scores[best_drop]) best_drop = i;
      }
      if (drop_scores[best_drop] > best_at_size[current.size() - 1]) {
        in_current[static_cast<std::size_t>(current[best_drop])] = false;
        current.erase(current.begin() + static_cast<std::ptrdiff_t>(best_drop));
        record(current, drop_scores[best_drop]);
        pass_best = std::max(pass_best, drop_scores[best_drop]);
      } else {
        break;
      }
    }

    if (pass_best > global_best) {
      global_best = pass_best;
      sizes_since_improvement = 0;
    } else if (++sizes_since_improvement >= params.patience) {
      break;
    }
  }

  SffsResult result;
  double best_score = -1.0;
  std::size_t best_size = 0;
  for (std::size_t s = 1; s <= max_size; ++s) {
    if (best_at_size[s] > best_score) {
      best_score = best_at_size[s];
      best_size = s;
    }
  }
  Require(best_size > 0, Errc::kEmptyResult, "sffs: no subset scored");
  result.subset.indices = best_subset_at_size[best_size];
  result.subset.selector = SelectorKind::kSffs;
  result.score = best_score;
  result.best_score_per_size = best_at_size;
  return result;
}

}  // namespace emofeat

#endif  // EMOFEAT_SFFS_HPP_
