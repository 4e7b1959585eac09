// emofeat/folds.hpp

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

#ifndef EMOFEAT_FOLDS_HPP_
#define EMOFEAT_FOLDS_HPP_

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "emofeat/core.hpp"
#include "emofeat/dataset.hpp"

namespace emofeat {

struct Fold {
  std::vector<int> train_ids;  // row indices
  std::vector<int> test_ids;
};

using FoldPlan = std::vector<Fold>;

/// Stratified k-fold over rows. Segment matrices are grouped so that all
/// segments of one utterance land in the same fold; group_by_speaker
/// additionally keeps each speaker's utterances together (the protocol choice
/// between utterance-level and speaker-independent folding is exposed here).
/// Deterministic under seed.
inline FoldPlan StratifiedKFold(const FeatureMatrix& matrix, int k, std::uint64_t seed,
                                bool group_by_speaker = false) {
  Require(k >= 2, Errc::kInvalidArgument, "fold count must be >= 2");
  Require(matrix.class_count > 0, Errc::kInvalidArgument,
          "rows must carry class ids before folding");

  // Build groups: unit of assignment is an utterance (or a speaker).
  struct Group {
    std::vector<int> row_ids;
    int class_id = 0;
  };
  std::map<std::string, Group> grouped;
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    const auto& row = matrix.rows[i];
    std::string key = group_by_speaker ? ("s:" + row.speaker) : ("u:" + row.utterance_id);
    Group& g = grouped[key];
    g.row_ids.push_back(static_cast<int>(i));
    g.class_id = row.class_id;  // segments of one utterance share a label
  }

  // Split groups by class, shuffle deterministically, deal round-robin.
  std::vector<std::vector<Group>> by_class(static_cast<std::size_t>(matrix.class_count));
  for (auto& [key, group] : grouped) {
    by_class[static_cast<std::size_t>(group.class_id)].push_back(group);
  }
  for (const auto& groups : by_class) {
    if (!groups.empty() && groups.size() < static_cast<std::size_t>(k)) {
      Raise(Errc::kTooFewRowsPerClass,
            matrix.corpus_id + ": a class has fewer than k groups (" +
                std::to_string(groups.size()) + " < " + std::to_string(k) + ")");
    }
  }

  Rng rng(seed);
  std::vector<std::vector<int>> fold_test(static_cast<std::size_t>(k));
  for (auto& groups : by_class) {
    std::vector<std::size_t> order(groups.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.Shuffle(order);
    // Rotate the starting fold per class so small classes do not all pile
    // into fold 0.
    std::size_t start = groups.empty() ? 0 : rng.NextIndex(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::size_t fold = (start + i) % static_cast<std::size_t>(k);
      const Group& g = groups[order[i]];
      fold_test[fold].insert(fold_test[fold].end(), g.row_ids.begin(), g.row_ids.end());
    }
  }

  FoldPlan plan(static_cast<std::size_t>(k));
  std::vector<int> fold_of_row(matrix.rows.size(), -1);
  for (std::size_t f = 0; f < plan.size(); ++f) {
    std::sort(fold_test[f].begin(), fold_test[f].end());
    plan[f].test_ids = fold_test[f];
    for (int id : fold_test[f]) fold_of_row[static_cast<std::size_t>(id)] = static_cast<int>(f);
  }
  for (std::size_t f = 0; f < plan.size(); ++f) {
    for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
      if (fold_of_row[i] != static_cast<int>(f)) plan[f].train_ids.push_back(static_cast<int>(i));
    }
  }
  return plan;
}

}  // namespace emofeat

#endif  // EMOFEAT_FOLDS_HPP_
