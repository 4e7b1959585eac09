// emofeat/svm.hpp

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

#ifndef EMOFEAT_SVM_HPP_
#define EMOFEAT_SVM_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "emofeat/core.hpp"

namespace emofeat {

/// RBF-kernel support vector machine trained by sequential minimal
/// optimization, one binary machine per class pair (one-vs-one voting for
/// multi-class problems).
struct SvmParams {
  double c = 10.0;          // box penalty
  double gamma = 1.0;       // RBF width, K(x,z) = exp(-gamma * |x-z|^2)
  double tolerance = 1e-3;  // KKT gap at which SMO stops
  int max_steps = 10000;    // cap on pair-update steps per binary machine
};

inline double RbfKernel(std::span<const double> a, std::span<const double> b, double gamma) {
  double d2 = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    d2 += d * d;
  }
  return std::exp(-gamma * d2);
}

/// One trained class-pair machine; rows index into the owning model's
/// training data.
struct PairMachine {
  int class_pos = 0;  // y = +1
  int class_neg = 0;  // y = -1
  std::vector<int> row_ids;
  std::vector<double> alpha;  // dual coefficients, 0 <= alpha_i <= C
  std::vector<int> y;         // +1 / -1
  double bias = 0.0;
};

class SvmModel {
 public:
  /// rows: standardized training rows; labels: class ids 0..class_count-1.
  SvmModel(std::vector<std::vector<double>> rows, std::vector<int> labels, SvmParams params)
      : rows_(std::move(rows)), labels_(std::move(labels)), params_(params) {
    Require(rows_.size() == labels_.size(), Errc::kDimensionMismatch,
            "svm: row/label count mismatch");
    class_count_ = 0;
    for (int l : labels_) class_count_ = std::max(class_count_, l + 1);
    Require(class_count_ >= 2, Errc::kDegenerateClassCount, "svm: need at least 2 classes");
    std::vector<int> per_class(static_cast<std::size_t>(class_count_), 0);
    for (int l : labels_) per_class[static_cast<std::size_t>(l)] += 1;
    // Pair machines over the classes actually present in the training rows.
    std::vector<int> present;
    for (int c = 0; c < class_count_; ++c) {
      const int n = per_class[static_cast<std::size_t>(c)];
      if (n == 0) continue;
      Require(n >= 2, Errc::kDegenerateClassCount, "svm: a class has fewer than 2 rows");
      present.push_back(c);
    }
    Require(present.size() >= 2, Errc::kDegenerateClassCount, "svm: need at least 2 classes");
    for (std::size_t a = 0; a < present.size(); ++a) {
      for (std::size_t b = a + 1; b < present.size(); ++b) {
        machines_.push_back(TrainPair(present[a], present[b]));
      }
    }
  }

  int class_count() const { return class_count_; }
  const std::vector<PairMachine>& machines() const { return machines_; }
  const SvmParams& params() const { return params_; }

  /// Signed decision value of one pair machine for a query row.
  double DecisionValue(const PairMachine& m, std::span<const double> query) const {
    double sum = m.bias;
    for (std::size_t i = 0; i < m.row_ids.size(); ++i) {
      if (m.alpha[i] == 0.0) continue;
      sum += m.alpha[i] * m.y[i] *
             RbfKernel(rows_[static_cast<std::size_t>(m.row_ids[i])], query, params_.gamma);
    }
    return sum;
  }

  struct Prediction {
    int label = -1;
    double score = 0.0;  // vote margin: winner votes minus runner-up votes
  };

  Prediction PredictWithScore(std::span<const double> query) const {
    Require(query.size() == rows_[0].size(), Errc::kDimensionMismatch,
            "svm: query width mismatch");
    std::vector<int> votes(static_cast<std::size_t>(class_count_), 0);
    for (const auto& m : machines_) {
      const double v = DecisionValue(m, query);
      votes[static_cast<std::size_t>(v >= 0.0 ? m.class_pos : m.class_neg)] += 1;
    }
    Prediction p;
    int best = -1, second = -1;
    for (std::size_t c = 0; c < votes.size(); ++c) {
      if (votes[c] > best) {
        second = best;
        best = votes[c];
        p.label = static_cast<int>(c);
      } else if (votes[c] > second) {
        second = votes[c];
      }
    }
    p.score = static_cast<double>(best - std::max(second, 0));
    return p;
  }

  int Predict(std::span<const double> query) const { return PredictWithScore(query).label; }

 private:
  // Working-pair SMO: at each step pick the maximally KKT-violating pair
  // (i from the "up" set, j from the "down" set), solve the two-variable
  // subproblem in closed form, update gradients. Stops when the violation
  // gap drops below tolerance or the step cap is reached.
  PairMachine TrainPair(int class_pos, int class_neg) const {
    PairMachine m;
    m.class_pos = class_pos;
    m.class_neg = class_neg;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (labels_[i] == class_pos) {
        m.row_ids.push_back(static_cast<int>(i));
        m.y.push_back(+1);
      } else if (labels_[i] == class_neg) {
        m.row_ids.push_back(static_cast<int>(i));
        m.y.push_back(-1);
      }
    }
    const std::size_t n = m.row_ids.size();
    m.alpha.assign(n, 0.0);

    // Dense kernel cache; pair problems stay small in this toolkit.
    std::vector<double> kernel(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const double k = RbfKernel(rows_[static_cast<std::size_t>(m.row_ids[i])],
                                   rows_[static_cast<std::size_t>(m.row_ids[j])], params_.gamma);
        kernel[i * n + j] = k;
        kernel[j * n + i] = k;
      }
    }

    const double c = params_.c;
    // F_i = sum_j a_j y_j K_ij - y_i. The working-pair rule compares
    // v_i = -y_i * grad_i = -F_i across the up/down index sets.
    // Start: alpha = 0 -> F_i = -y_i.
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = -static_cast<double>(m.y[i]);

    auto in_up = [&](std::size_t i) {
      return (m.y[i] == +1 && m.alpha[i] < c) || (m.y[i] == -1 && m.alpha[i] > 0.0);
    };
    auto in_down = [&](std::size_t i) {
      return (m.y[i] == +1 && m.alpha[i] > 0.0) || (m.y[i] == -1 && m.alpha[i] < c);
    };

    double b_up = 0.0, b_low = 0.0;
    for (int step = 0; step < params_.max_steps; ++step) {
      // i maximizes v over the up set; j minimizes v over the down set.
      std::size_t best_i = n, best_j = n;
      b_up = -std::numeric_limits<double>::infinity();
      b_low = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        const double v = -f[i];
        if (in_up(i) && v > b_up) {
          b_up = v;
          best_i = i;
        }
        if (in_down(i) && v < b_low) {
          b_low = v;
          best_j = i;
        }
      }
      if (best_i == n || best_j == n || b_up - b_low <= params_.tolerance) break;

      const std::size_t i = best_i, j = best_j;
      const double yi = m.y[i], yj = m.y[j];
      const double kii = kernel[i * n + i], kjj = kernel[j * n + j], kij = kernel[i * n + j];
      double eta = kii + kjj - 2.0 * kij;
      if (eta < 1e-12) eta = 1e-12;

      // Two-variable solve along the constraint y_i a_i + y_j a_j = const:
      // unclipped a_i step is y_i * (F_j - F_i) / eta = y_i * (b_up - b_low) / eta.
      double ai_new = m.alpha[i] + yi * (b_up - b_low) / eta;
      // Constraint box for a_i given a_j moves oppositely on the same line.
      double lo, hi;
      if (yi == yj) {
        lo = std::max(0.0, m.alpha[i] + m.alpha[j] - c);
        hi = std::min(c, m.alpha[i] + m.alpha[j]);
      } else {
        lo = std::max(0.0, m.alpha[i] - m.alpha[j]);
        hi = std::min(c, c + m.alpha[i] - m.alpha[j]);
      }
      ai_new = std::clamp(ai_new, lo, hi);
      const double dai = ai_new - m.alpha[i];
      if (std::abs(dai) < 1e-15) break;  // no progress possible
      const double daj = -yi * yj * dai;
      m.alpha[i] = ai_new;
      m.alpha[j] += daj;
      // Snap to the box so boundary membership tests stay exact.
      const double snap = 1e-12 * c;
      for (std::size_t t : {i, j}) {
        if (m.alpha[t] < snap) m.alpha[t] = 0.0;
        if (m.alpha[t] > c - snap) m.alpha[t] = c;
      }

      for (std::size_t t = 0; t < n; ++t) {
        f[t] += dai * yi * kernel[i * n + t] + daj * yj * kernel[j * n + t];
      }
    }

    // Bias: midpoint of the KKT bounds recomputed at the final state.
    double up = -std::numeric_limits<double>::infinity();
    double low = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double v = -f[i];
      if (in_up(i)) up = std::max(up, v);
      if (in_down(i)) low = std::min(low, v);
    }
    if (std::isfinite(up) && std::isfinite(low)) {
      m.bias = (up + low) / 2.0;
    } else {
      m.bias = 0.0;
    }
    return m;
  }

  std::vector<std::vector<double>> rows_;
  std::vector<int> labels_;
  SvmParams params_;
  int class_count_ = 0;
  std::vector<PairMachine> machines_;
};

}  // namespace emofeat

#endif  // EMOFEAT_SVM_HPP_
