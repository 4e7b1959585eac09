// emofeat/boosting.hpp

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

#ifndef EMOFEAT_BOOSTING_HPP_
#define EMOFEAT_BOOSTING_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "emofeat/dataset.hpp"
#include "emofeat/subset.hpp"
#include "emofeat/threadpool.hpp"

namespace emofeat {

struct BoostParams {
  int rounds = 10;  // T: at most one new feature per round
};

/// One threshold stump: predicts +1 when polarity * x[feature] < polarity *
/// threshold, else -1.
struct Stump {
  int feature = -1;
  double threshold = 0.0;
  int polarity = +1;
  double weighted_error = 0.0;
  double alpha = 0.0;
};

struct BoostRoundLog {
  Stump stump;
  double z = 1.0;  // normalization factor; prod(z) bounds the training error
};

struct BoostResult {
  FeatureSubset subset;        // distinct stump features, ordered by first use
  std::vector<BoostRoundLog> rounds;  // concatenated over one-vs-rest problems
  bool stopped_early = false;  // a round found no stump better than chance
};

namespace boost_detail {

/// Best single-feature threshold stump under the given example weights.
/// Thresholds are midpoints of consecutive sorted values; both polarities are
/// scanned in one sweep.
inline Stump FitStump(const std::vector<std::vector<double>>& rows, const std::vector<int>& y,
                      const std::vector<double>& weights, const std::vector<int>& features) {
  Stump best;
  best.weighted_error = 1.0;
  double total_pos = 0.0, total_neg = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    (y[i] > 0 ? total_pos : total_neg) += weights[i];
  }

  for (int f : features) {
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return rows[a][static_cast<std::size_t>(f)] < rows[b][static_cast<std::size_t>(f)];
    });

    // err(+1, t) = weight of positives with x >= t + weight of negatives with
    // x < t. Sweep t across midpoints, maintaining the running masses.
    double pos_below = 0.0, neg_below = 0.0;
    for (std::size_t s = 0; s + 1 <= order.size(); ++s) {
      const std::size_t i = order[s];
      (y[i] > 0 ? pos_below : neg_below) += weights[i];
      if (s + 1 < order.size()) {
        const double x0 = rows[i][static_cast<std::size_t>(f)];
        const double x1 = rows[order[s + 1]][static_cast<std::size_t>(f)];
        if (x0 == x1) continue;  // threshold must separate distinct values
        const double t = (x0 + x1) / 2.0;
        const double err_pos = (total_pos - pos_below) + neg_below;
        const double err_neg = 1.0 - err_pos;  // flipped polarity
        if (err_pos < best.weighted_error) {
          best = {f, t, +1, err_pos, 0.0};
        }
        if (err_neg < best.weighted_error) {
          best = {f, t, -1, err_neg, 0.0};
        }
      }
    }
  }
  return best;
}

inline int StumpPredict(const Stump& s, const std::vector<double>& row) {
  const double x = row[static_cast<std::size_t>(s.feature)];
  const bool fires = s.polarity > 0 ? (x < s.threshold) : (x >= s.threshold);
  return fires ? +1 : -1;
}

/// Discrete adaboost on a binary problem; returns the round log.
inline std::vector<BoostRoundLog> BoostBinary(const std::vector<std::vector<double>>& rows,
                                              const std::vector<int>& y,
                                              const std::vector<int>& features, int rounds,
                                              bool* stopped_early) {
  std::vector<BoostRoundLog> log;
  const std::size_t n = rows.size();
  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  constexpr double kEps = 1e-9;

  for (int t = 0; t < rounds; ++t) {
    Stump stump = FitStump(rows, y, w, features);
    if (stump.feature < 0 || stump.weighted_error >= 0.5 - kEps) {
      if (stopped_early != nullptr) *stopped_early = true;
      break;
    }
    const double err = std::max(stump.weighted_error, 1e-12);
    stump.alpha = 0.5 * std::log((1.0 - err) / err);
    BoostRoundLog round;
    round.stump = stump;
    round.z = 2.0 * std::sqrt(err * (1.0 - err));
    log.push_back(round);
    if (stump.weighted_error <= 1e-12) break;  // perfect stump: done

    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const int h = StumpPredict(stump, rows[i]);
      w[i] *= std::exp(-stump.alpha * static_cast<double>(y[i] * h));
      sum += w[i];
    }
    for (double& wi : w) wi /= sum;
  }
  return log;
}

}  // namespace boost_detail

/// Boosting-based selection: T rounds of discrete adaboost with single-feature
/// stumps; the subset is the set of distinct features the stumps used, ordered
/// by first selection round. Multi-class problems run one-vs-rest per class
/// and union the per-class subsets (ordered by round, then class).
inline BoostResult BoostSelect(const FeatureMatrix& matrix, const std::vector<int>& features,
                               BoostParams params, ThreadPool* pool = nullptr) {
  Require(params.rounds >= 1, Errc::kInvalidArgument, "boost: rounds must be >= 1");
  Require(matrix.class_count >= 2, Errc::kDegenerateClassCount, "boost: need >= 2 classes");
  matrix.RequireColumns(features);

  std::vector<std::vector<double>> rows;
  rows.reserve(matrix.rows.size());
  std::vector<int> class_ids;
  for (const auto& r : matrix.rows) {
    rows.push_back(r.values);
    class_ids.push_back(r.class_id);
  }

  std::vector<int> present_classes;
  for (int c = 0; c < matrix.class_count; ++c) {
    if (std::find(class_ids.begin(), class_ids.end(), c) != class_ids.end()) {
      present_classes.push_back(c);
    }
  }
  const bool binary = present_classes.size() == 2;

  std::vector<std::vector<BoostRoundLog>> logs(binary ? 1 : present_classes.size());
  std::vector<char> early(logs.size(), 0);
  ParallelFor(pool, logs.size(), [&](std::size_t p) {
    std::vector<int> y(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const int target = binary ? present_classes[0] : present_classes[p];
      y[i] = class_ids[i] == target ? +1 : -1;
    }
    bool stop = false;
    logs[p] = boost_detail::BoostBinary(rows, y, features, params.rounds, &stop);
    early[p] = stop ? 1 : 0;
  });

  BoostResult result;
  for (char e : early) result.stopped_early = result.stopped_early || e != 0;
  // Merge by (round, problem) so "first selection round" orders the subset.
  std::vector<int> order;
  std::size_t max_rounds = 0;
  for (const auto& log : logs) max_rounds = std::max(max_rounds, log.size());
  for (std::size_t t = 0; t < max_rounds; ++t) {
    for (const auto& log : logs) {
      if (t < log.size()) {
        result.rounds.push_back(log[t]);
        const int f = log[t].stump.feature;
        if (std::find(order.begin(), order.end(), f) == order.end()) order.push_back(f);
      }
    }
  }
  if (order.empty()) {
    Raise(Errc::kWeakLearnerFailure, "boost: no stump beat chance in round 1");
  }
  result.subset.indices = order;
  result.subset.selector = SelectorKind::kBoost;
  return result;
}

}  // namespace emofeat

#endif  // EMOFEAT_BOOSTING_HPP_
