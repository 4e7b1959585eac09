// emofeat/criterion.hpp

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

#ifndef EMOFEAT_CRITERION_HPP_
#define EMOFEAT_CRITERION_HPP_

#include <algorithm>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "emofeat/core.hpp"
#include "emofeat/evaluate.hpp"
#include "emofeat/folds.hpp"

namespace emofeat {

/// The wrapper criterion shared by all three selectors: KNN recognition rate
/// under a fixed fold plan, to be maximized. The fold plan and k are frozen
/// once per (corpus, alignment) so scores stay comparable across selectors,
/// and per-fold standardized columns are precomputed so a subset evaluation
/// only sums squared differences over its columns. Scores are memoized by
/// sorted index set; the cache is safe for concurrent use.
class WrapperCriterion {
 public:
  WrapperCriterion(const FeatureMatrix& matrix, FoldPlan folds, int knn_k)
      : folds_(std::move(folds)), knn_k_(knn_k) {
    Require(knn_k_ >= 1, Errc::kInvalidArgument, "criterion: k must be positive");
    width_ = matrix.width();
    usable_ = matrix.present;
    per_fold_.reserve(folds_.size());
    for (const auto& fold : folds_) {
      PerFold pf;
      Standardizer st = Standardizer::Fit(matrix, fold.train_ids);
      FeatureMatrix scaled = st.Apply(matrix);
      pf.train_labels.reserve(fold.train_ids.size());
      for (int id : fold.train_ids) {
        pf.train_rows.push_back(scaled.rows[static_cast<std::size_t>(id)].values);
        pf.train_labels.push_back(scaled.rows[static_cast<std::size_t>(id)].class_id);
      }
      for (int id : fold.test_ids) {
        pf.test_rows.push_back(scaled.rows[static_cast<std::size_t>(id)].values);
        pf.test_labels.push_back(scaled.rows[static_cast<std::size_t>(id)].class_id);
        pf.test_utterances.push_back(scaled.rows[static_cast<std::size_t>(id)].utterance_id);
      }
      per_fold_.push_back(std::move(pf));
    }
  }

  int knn_k() const { return knn_k_; }
  std::size_t width() const { return width_; }
  const FoldPlan& folds() const { return folds_; }

  /// Mean recognition rate (percent) of the subset. Cached.
  double Score(const std::vector<int>& subset) const {
    return Evaluate(subset).mean;
  }

  RecognitionRate Evaluate(const std::vector<int>& subset) const {
    Require(!subset.empty(), Errc::kInvalidArgument, "criterion: empty subset");
    std::vector<int> key = subset;
    std::sort(key.begin(), key.end());
    for (int j : key) {
      if (j < 0 || static_cast<std::size_t>(j) >= width_ || !usable_[static_cast<std::size_t>(j)]) {
        Raise(Errc::kMissingFeatureColumn, "criterion: column " + std::to_string(j) + " unusable");
      }
    }
    const std::string cache_key = KeyString(key);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(cache_key);
      if (it != cache_.end()) return it->second;
    }
    RecognitionRate rate = EvaluateUncached(key);
    {
      std::lock_guard<std::mutex> lock(mu_);
      cache_.emplace(cache_key, rate);
    }
    return rate;
  }

  std::size_t cache_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
  }

 private:
  struct PerFold {
    std::vector<std::vector<double>> train_rows;  // standardized, full width
    std::vector<int> train_labels;
    std::vector<std::vector<double>> test_rows;
    std::vector<int> test_labels;
    std::vector<std::string> test_utterances;
  };

  static std::string KeyString(const std::vector<int>& sorted) {
    std::string s;
    s.reserve(sorted.size() * 4);
    for (int j : sorted) {
      s += std::to_string(j);
      s += ',';
    }
    return s;
  }

  RecognitionRate EvaluateUncached(const std::vector<int>& subset) const {
    std::vector<double> fold_rates;
    fold_rates.reserve(per_fold_.size());
    const std::size_t k = static_cast<std::size_t>(knn_k_);
    for (const auto& pf : per_fold_) {
      // Per-utterance vote accumulation (one entry per row for utterance data).
      std::vector<std::string> order;
      std::unordered_map<std::string, std::pair<std::vector<int>, std::vector<double>>> votes;
      std::unordered_map<std::string, int> truth;
      for (std::size_t t = 0; t < pf.test_rows.size(); ++t) {
        const auto& q = pf.test_rows[t];
        const std::size_t k_eff = std::min(k, pf.train_rows.size());
        std::vector<std::pair<double, std::size_t>> best;
        best.reserve(k_eff + 1);
        for (std::size_t i = 0; i < pf.train_rows.size(); ++i) {
          const auto& r = pf.train_rows[i];
          double d2 = 0.0;
          for (int j : subset) {
            const double d = r[static_cast<std::size_t>(j)] - q[static_cast<std::size_t>(j)];
            d2 += d * d;
          }
          std::pair<double, std::size_t> cand{d2, i};
          if (best.size() < k_eff || cand < best.back()) {
            auto pos = std::lower_bound(best.begin(), best.end(), cand);
            best.insert(pos, cand);
            if (best.size() > k_eff) best.pop_back();
          }
        }
        int max_label = 0;
        for (const auto& [d2, i] : best) max_label = std::max(max_label, pf.train_labels[i]);
        std::vector<int> tally(static_cast<std::size_t>(max_label) + 1, 0);
        double dist_sum = 0.0;
        for (const auto& [d2, i] : best) {
          tally[static_cast<std::size_t>(pf.train_labels[i])] += 1;
          dist_sum += std::sqrt(d2);
        }
        int label = 0, best_votes = -1;
        for (std::size_t c = 0; c < tally.size(); ++c) {
          if (tally[c] > best_votes) {
            best_votes = tally[c];
            label = static_cast<int>(c);
          }
        }
        const double score = -dist_sum / static_cast<double>(best.size());
        auto it = votes.find(pf.test_utterances[t]);
        if (it == votes.end()) {
          order.push_back(pf.test_utterances[t]);
          votes[pf.test_utterances[t]] = {{label}, {score}};
          truth[pf.test_utterances[t]] = pf.test_labels[t];
        } else {
          it->second.first.push_back(label);
          it->second.second.push_back(score);
        }
      }
      double correct = 0.0;
      for (const auto& id : order) {
        const auto& [preds, scores] = votes.at(id);
        if (AggregateSegmentVotes(preds, scores) == truth.at(id)) correct += 1.0;
      }
      fold_rates.push_back(100.0 * correct / static_cast<double>(order.size()));
    }
    return RecognitionRate::FromFolds(std::move(fold_rates));
  }

  FoldPlan folds_;
  int knn_k_;
  std::size_t width_ = 0;
  std::vector<bool> usable_;
  std::vector<PerFold> per_fold_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, RecognitionRate> cache_;
};

/// Builds the criterion for one aligned corpus: folds fixed from the seed,
/// k chosen by cross-validation over the usable columns.
inline WrapperCriterion MakeCriterion(const FeatureMatrix& matrix, int fold_count,
                                      std::uint64_t seed, const std::vector<int>& k_candidates,
                                      bool group_by_speaker = false) {
  FoldPlan folds = StratifiedKFold(matrix, fold_count, seed, group_by_speaker);
  std::vector<int> usable;
  for (std::size_t j = 0; j < matrix.width(); ++j) {
    if (matrix.present[j]) usable.push_back(static_cast<int>(j));
  }
  const int k = SelectKnnK(matrix, folds, k_candidates, usable);
  return WrapperCriterion(matrix, std::move(folds), k);
}

}  // namespace emofeat

#endif  // EMOFEAT_CRITERION_HPP_
