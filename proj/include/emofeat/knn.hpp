// emofeat/knn.hpp

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

#ifndef EMOFEAT_KNN_HPP_
#define EMOFEAT_KNN_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "emofeat/core.hpp"

namespace emofeat {

/// K nearest neighbours with Euclidean distance over standardized rows.
/// Deterministic everywhere: equidistant neighbours order by row index, label
/// vote ties go to the smallest class id.
class KnnModel {
 public:
  KnnModel(std::vector<std::vector<double>> rows, std::vector<int> labels, int k)
      : rows_(std::move(rows)), labels_(std::move(labels)) {
    Require(!rows_.empty(), Errc::kEmptyTrainingSet, "knn: no training rows");
    Require(rows_.size() == labels_.size(), Errc::kDimensionMismatch,
            "knn: row/label count mismatch");
    k_ = std::min<std::size_t>(static_cast<std::size_t>(k), rows_.size());
    Require(k_ >= 1, Errc::kInvalidArgument, "knn: k must be positive");
  }

  int k() const { return static_cast<int>(k_); }
  std::size_t size() const { return rows_.size(); }
  std::size_t width() const { return rows_[0].size(); }

  struct Prediction {
    int label = -1;
    double score = 0.0;  // negative mean neighbour distance (higher = closer)
  };

  Prediction PredictWithScore(std::span<const double> query) const {
    Require(query.size() == width(), Errc::kDimensionMismatch, "knn: query width mismatch");
    // (squared distance, row index) for the k nearest
    std::vector<std::pair<double, std::size_t>> best;
    best.reserve(k_ + 1);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      double d2 = 0.0;
      const auto& r = rows_[i];
      for (std::size_t j = 0; j < r.size(); ++j) {
        const double d = r[j] - query[j];
        d2 += d * d;
      }
      std::pair<double, std::size_t> cand{d2, i};
      if (best.size() < k_ || cand < best.back()) {
        auto pos = std::lower_bound(best.begin(), best.end(), cand);
        best.insert(pos, cand);
        if (best.size() > k_) best.pop_back();
      }
    }
    int max_label = 0;
    for (const auto& [d2, i] : best) max_label = std::max(max_label, labels_[i]);
    std::vector<int> votes(static_cast<std::size_t>(max_label) + 1, 0);
    double dist_sum = 0.0;
    for (const auto& [d2, i] : best) {
      votes[static_cast<std::size_t>(labels_[i])] += 1;
      dist_sum += std::sqrt(d2);
    }
    Prediction p;
    int best_votes = -1;
    for (std::size_t c = 0; c < votes.size(); ++c) {
      if (votes[c] > best_votes) {
        best_votes = votes[c];
        p.label = static_cast<int>(c);
      }
    }
    p.score = -dist_sum / static_cast<double>(best.size());
    return p;
  }

  int Predict(std::span<const double> query) const { return PredictWithScore(query).label; }

  /// Per-query nearest-neighbour labels up to k_max, ordered by (distance,
  /// row index). Lets k selection evaluate all candidate k in one scan.
  std::vector<int> NeighborLabels(std::span<const double> query, std::size_t k_max) const {
    k_max = std::min(k_max, rows_.size());
    std::vector<std::pair<double, std::size_t>> best;
    best.reserve(k_max + 1);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      double d2 = 0.0;
      const auto& r = rows_[i];
      for (std::size_t j = 0; j < r.size(); ++j) {
        const double d = r[j] - query[j];
        d2 += d * d;
      }
      std::pair<double, std::size_t> cand{d2, i};
      if (best.size() < k_max || cand < best.back()) {
        auto pos = std::lower_bound(best.begin(), best.end(), cand);
        best.insert(pos, cand);
        if (best.size() > k_max) best.pop_back();
      }
    }
    std::vector<int> labels;
    labels.reserve(best.size());
    for (const auto& [d2, i] : best) labels.push_back(labels_[i]);
    return labels;
  }

 private:
  std::vector<std::vector<double>> rows_;
  std::vector<int> labels_;
  std::size_t k_ = 1;
};

/// Majority label over an ordered neighbour prefix; ties to smallest class id.
inline int VoteOnPrefix(const std::vector<int>& neighbor_labels, std::size_t k) {
  k = std::min(k, neighbor_labels.size());
  int max_label = 0;
  for (std::size_t i = 0; i < k; ++i) max_label = std::max(max_label, neighbor_labels[i]);
  std::vector<int> votes(static_cast<std::size_t>(max_label) + 1, 0);
  for (std::size_t i = 0; i < k; ++i) votes[static_cast<std::size_t>(neighbor_labels[i])] += 1;
  int best = -1, label = 0;
  for (std::size_t c = 0; c < votes.size(); ++c) {
    if (votes[c] > best) {
      best = votes[c];
      label = static_cast<int>(c);
    }
  }
  return label;
}

}  // namespace emofeat

#endif  // EMOFEAT_KNN_HPP_
