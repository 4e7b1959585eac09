// emofeat/evaluate.hpp

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

#ifndef EMOFEAT_EVALUATE_HPP_
#define EMOFEAT_EVALUATE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "emofeat/core.hpp"
#include "emofeat/dataset.hpp"
#include "emofeat/folds.hpp"
#include "emofeat/knn.hpp"
#include "emofeat/standardize.hpp"
#include "emofeat/svm.hpp"

namespace emofeat {

/// Cross-validated recognition rate in percent: mean and sample standard
/// deviation over per-fold accuracies.
struct RecognitionRate {
  double mean = 0.0;
  double std_dev = 0.0;
  std::vector<double> per_fold;

  static RecognitionRate FromFolds(std::vector<double> fold_rates) {
    RecognitionRate r;
    r.per_fold = std::move(fold_rates);
    if (r.per_fold.empty()) return r;
    for (double v : r.per_fold) r.mean += v;
    r.mean /= static_cast<double>(r.per_fold.size());
    if (r.per_fold.size() > 1) {
      double sq = 0.0;
      for (double v : r.per_fold) sq += (v - r.mean) * (v - r.mean);
      r.std_dev = std::sqrt(sq / static_cast<double>(r.per_fold.size() - 1));
    }
    return r;
  }

  /// Table cell rendering, e.g. "66.72 (5.00)".
  std::string Format() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f (%.2f)", mean, std_dev);
    return buf;
  }
};

struct KnnSpec {
  int k = 0;  // 0 = select by cross-validation from k_candidates
  std::vector<int> k_candidates = {1, 3, 5, 7, 9, 11, 13, 15};
};

struct SvmSpec {
  std::vector<double> c_grid = {0.1, 1.0, 10.0, 100.0};
  std::vector<double> gamma_grid = {0.1, 1.0, 10.0};  // divided by subset size
  int inner_folds = 5;           // hyperparameter selection on the training fold
  double tolerance = 1e-3;
  int max_steps = 10000;
  std::uint64_t seed = 0;        // inner-fold seed
};

using ClassifierSpec = std::variant<KnnSpec, SvmSpec>;

namespace detail {

inline std::vector<std::vector<double>> GatherRows(const FeatureMatrix& matrix,
                                                   const std::vector<int>& row_ids,
                                                   const std::vector<int>& subset) {
  std::vector<std::vector<double>> out;
  out.reserve(row_ids.size());
  for (int id : row_ids) {
    const auto& full = matrix.rows[static_cast<std::size_t>(id)].values;
    std::vector<double> v(subset.size());
    for (std::size_t j = 0; j < subset.size(); ++j) {
      v[j] = full[static_cast<std::size_t>(subset[j])];
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<int> GatherLabels(const FeatureMatrix& matrix, const std::vector<int>& row_ids) {
  std::vector<int> out;
  out.reserve(row_ids.size());
  for (int id : row_ids) out.push_back(matrix.rows[static_cast<std::size_t>(id)].class_id);
  return out;
}

/// Standardizer for one fold; fitted on the training rows only.
inline Standardizer FoldStandardizer(const FeatureMatrix& matrix, const Fold& fold) {
  return Standardizer::Fit(matrix, fold.train_ids);
}

}  // namespace detail

/// Majority vote over the segment predictions of one utterance; ties broken
/// by the larger summed per-segment score.
inline int AggregateSegmentVotes(const std::vector<int>& predictions,
                                 const std::vector<double>& scores) {
  Require(!predictions.empty(), Errc::kEmptyPredictionSet, "no segment predictions");
  Require(predictions.size() == scores.size(), Errc::kDimensionMismatch,
          "prediction/score count mismatch");
  int max_label = 0;
  for (int p : predictions) max_label = std::max(max_label, p);
  std::vector<int> votes(static_cast<std::size_t>(max_label) + 1, 0);
  std::vector<double> score_sum(static_cast<std::size_t>(max_label) + 1, 0.0);
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    votes[static_cast<std::size_t>(predictions[i])] += 1;
    score_sum[static_cast<std::size_t>(predictions[i])] += scores[i];
  }
  int best = -1;
  for (std::size_t c = 0; c < votes.size(); ++c) {
    if (best < 0 || votes[c] > votes[static_cast<std::size_t>(best)] ||
        (votes[c] == votes[static_cast<std::size_t>(best)] &&
         score_sum[c] > score_sum[static_cast<std::size_t>(best)])) {
      if (votes[c] > 0) best = static_cast<int>(c);
    }
  }
  return best;
}

/// Picks the k with the best CV mean recognition over the folds (full column
/// set); ties go to the smallest k.
inline int SelectKnnK(const FeatureMatrix& matrix, const FoldPlan& folds,
                      const std::vector<int>& k_candidates, const std::vector<int>& subset) {
  Require(!k_candidates.empty(), Errc::kInvalidArgument, "no k candidates");
  for (int k : k_candidates) {
    Require(k >= 1 && k % 2 == 1, Errc::kInvalidArgument, "k candidates must be odd positive");
  }
  matrix.RequireColumns(subset);
  const int k_max = *std::max_element(k_candidates.begin(), k_candidates.end());
  std::vector<double> correct(k_candidates.size(), 0.0);
  double total = 0.0;
  for (const auto& fold : folds) {
    Standardizer st = detail::FoldStandardizer(matrix, fold);
    FeatureMatrix scaled = st.Apply(matrix);
    KnnModel model(detail::GatherRows(scaled, fold.train_ids, subset),
                   detail::GatherLabels(scaled, fold.train_ids), 1);
    for (int id : fold.test_ids) {
      std::vector<double> q(subset.size());
      const auto& full = scaled.rows[static_cast<std::size_t>(id)].values;
      for (std::size_t j = 0; j < subset.size(); ++j) {
        q[j] = full[static_cast<std::size_t>(subset[j])];
      }
      std::vector<int> neighbors = model.NeighborLabels(q, static_cast<std::size_t>(k_max));
      const int truth = scaled.rows[static_cast<std::size_t>(id)].class_id;
      for (std::size_t c = 0; c < k_candidates.size(); ++c) {
        if (VoteOnPrefix(neighbors, static_cast<std::size_t>(k_candidates[c])) == truth) {
          correct[c] += 1.0;
        }
      }
      total += 1.0;
    }
  }
  int best_k = k_candidates[0];
  double best_rate = -1.0;
  for (std::size_t c = 0; c < k_candidates.size(); ++c) {
    const double rate = correct[c] / total;
    if (rate > best_rate || (rate == best_rate && k_candidates[c] < best_k)) {
      best_rate = rate;
      best_k = k_candidates[c];
    }
  }
  return best_k;
}

namespace detail {

struct TrainedClassifier {
  std::unique_ptr<KnnModel> knn;
  std::unique_ptr<SvmModel> svm;

  std::pair<int, double> Predict(std::span<const double> q) const {
    if (knn) {
      auto p = knn->PredictWithScore(q);
      return {p.label, p.score};
    }
    auto p = svm->PredictWithScore(q);
    return {p.label, p.score};
  }
};

inline SvmParams PickSvmParams(const FeatureMatrix& matrix, const Fold& fold,
                               const std::vector<int>& subset, const SvmSpec& spec,
                               const std::string& stage) {
  SvmParams params;
  params.tolerance = spec.tolerance;
  params.max_steps = spec.max_steps;
  const double d = static_cast<double>(subset.size());
  if (spec.c_grid.size() <= 1 && spec.gamma_grid.size() <= 1) {
    params.c = spec.c_grid.empty() ? 10.0 : spec.c_grid[0];
    params.gamma = (spec.gamma_grid.empty() ? 1.0 : spec.gamma_grid[0]) / d;
    return params;
  }

  // Inner stratified CV on the training fold only.
  FeatureMatrix train;
  train.corpus_id = matrix.corpus_id;
  train.representation = matrix.representation;
  train.feature_names = matrix.feature_names;
  train.present = matrix.present;
  train.class_count = matrix.class_count;
  for (int id : fold.train_ids) train.rows.push_back(matrix.rows[static_cast<std::size_t>(id)]);
  int inner_k = spec.inner_folds;
  std::vector<int> per_class(static_cast<std::size_t>(train.class_count), 0);
  for (const auto& r : train.rows) per_class[static_cast<std::size_t>(r.class_id)] += 1;
  for (int n : per_class) {
    if (n > 0) inner_k = std::min(inner_k, n);
  }
  inner_k = std::max(inner_k, 2);
  FoldPlan inner = StratifiedKFold(train, inner_k, DeriveSeed(spec.seed, stage));

  double best_correct = -1.0;
  double best_c = spec.c_grid[0];
  double best_gamma = spec.gamma_grid[0];
  for (double c : spec.c_grid) {
    for (double g : spec.gamma_grid) {
      SvmParams p;
      p.c = c;
      p.gamma = g / d;
      p.tolerance = spec.tolerance;
      p.max_steps = spec.max_steps;
      double correct = 0.0;
      for (const auto& inner_fold : inner) {
        Standardizer st = FoldStandardizer(train, inner_fold);
        FeatureMatrix scaled = st.Apply(train);
        SvmModel model(GatherRows(scaled, inner_fold.train_ids, subset),
                       GatherLabels(scaled, inner_fold.train_ids), p);
        for (int id : inner_fold.test_ids) {
          std::vector<double> q(subset.size());
          const auto& full = scaled.rows[static_cast<std::size_t>(id)].values;
          for (std::size_t j = 0; j < subset.size(); ++j) {
            q[j] = full[static_cast<std::size_t>(subset[j])];
          }
          if (model.Predict(q) == scaled.rows[static_cast<std::size_t>(id)].class_id) {
            correct += 1.0;
          }
        }
      }
      if (correct > best_correct) {
        best_correct = correct;
        best_c = c;
        best_gamma = g;
      }
    }
  }
  params.c = best_c;
  params.gamma = best_gamma / d;
  return params;
}

}  // namespace detail

/// Per-fold: standardize on the training rows, restrict columns to the
/// subset, train, and score test accuracy in percent. Segment matrices are
/// scored per utterance after majority vote over their segments.
inline RecognitionRate CrossValidate(const FeatureMatrix& matrix, const ClassifierSpec& spec,
                                     const FoldPlan& folds, const std::vector<int>& subset) {
  matrix.RequireColumns(subset);
  Require(!folds.empty(), Errc::kInvalidArgument, "no folds");

  int knn_k = 0;
  if (const auto* knn_spec = std::get_if<KnnSpec>(&spec)) {
    knn_k = knn_spec->k > 0 ? knn_spec->k
                            : SelectKnnK(matrix, folds, knn_spec->k_candidates, subset);
  }

  std::vector<double> fold_rates;
  fold_rates.reserve(folds.size());
  for (std::size_t f = 0; f < folds.size(); ++f) {
    const Fold& fold = folds[f];
    Standardizer st = detail::FoldStandardizer(matrix, fold);
    FeatureMatrix scaled = st.Apply(matrix);

    detail::TrainedClassifier clf;
    if (std::holds_alternative<KnnSpec>(spec)) {
      clf.knn = std::make_unique<KnnModel>(detail::GatherRows(scaled, fold.train_ids, subset),
                                           detail::GatherLabels(scaled, fold.train_ids), knn_k);
    } else {
      const auto& svm_spec = std::get<SvmSpec>(spec);
      SvmParams params = detail::PickSvmParams(matrix, fold, subset, svm_spec,
                                               "svm-inner:" + matrix.corpus_id + ":fold" +
                                                   std::to_string(f));
      clf.svm = std::make_unique<SvmModel>(detail::GatherRows(scaled, fold.train_ids, subset),
                                           detail::GatherLabels(scaled, fold.train_ids), params);
    }

    // Group test rows by utterance (one group per row for utterance matrices).
    std::map<std::string, std::pair<std::vector<int>, std::vector<double>>> votes;
    std::map<std::string, int> truth;
    std::vector<std::string> order;
    for (int id : fold.test_ids) {
      const auto& row = scaled.rows[static_cast<std::size_t>(id)];
      std::vector<double> q(subset.size());
      for (std::size_t j = 0; j < subset.size(); ++j) {
        q[j] = row.values[static_cast<std::size_t>(subset[j])];
      }
      auto [label, score] = clf.Predict(q);
      auto it = votes.find(row.utterance_id);
      if (it == votes.end()) {
        order.push_back(row.utterance_id);
        votes[row.utterance_id] = {{label}, {score}};
        truth[row.utterance_id] = row.class_id;
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

}  // namespace emofeat

#endif  // EMOFEAT_EVALUATE_HPP_
