// emofeat/standardize.hpp

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

#ifndef EMOFEAT_STANDARDIZE_HPP_
#define EMOFEAT_STANDARDIZE_HPP_

#include <cmath>
#include <vector>

#include "emofeat/core.hpp"
#include "emofeat/dataset.hpp"

namespace emofeat {

/// Column-wise zero-mean unit-variance transform, fitted on training rows
/// only. The scale is the population standard deviation floored at 1e-8 so
/// constant columns transform to exactly zero.
class Standardizer {
 public:
  static constexpr double kScaleFloor = 1e-8;

  /// Fits from the given rows (all columns). Rows must be nonempty.
  static Standardizer Fit(const FeatureMatrix& matrix, const std::vector<int>& row_ids) {
    Require(!row_ids.empty(), Errc::kEmptyTrainingSet, "standardizer fitted on zero rows");
    const std::size_t width = matrix.width();
    Standardizer s;
    s.mean_.assign(width, 0.0);
    s.scale_.assign(width, 1.0);
    const double n = static_cast<double>(row_ids.size());
    for (int id : row_ids) {
      const auto& v = matrix.rows[static_cast<std::size_t>(id)].values;
      for (std::size_t j = 0; j < width; ++j) s.mean_[j] += v[j];
    }
    for (std::size_t j = 0; j < width; ++j) s.mean_[j] /= n;
    std::vector<double> sq(width, 0.0);
    for (int id : row_ids) {
      const auto& v = matrix.rows[static_cast<std::size_t>(id)].values;
      for (std::size_t j = 0; j < width; ++j) {
        const double d = v[j] - s.mean_[j];
        sq[j] += d * d;
      }
    }
    for (std::size_t j = 0; j < width; ++j) {
      s.scale_[j] = std::max(std::sqrt(sq[j] / n), kScaleFloor);
    }
    return s;
  }

  std::size_t width() const { return mean_.size(); }
  const std::vector<double>& mean() const { return mean_; }
  const std::vector<double>& scale() const { return scale_; }

  void TransformRow(std::vector<double>& values) const {
    for (std::size_t j = 0; j < values.size(); ++j) {
      values[j] = (values[j] - mean_[j]) / scale_[j];
    }
  }

  void InverseTransformRow(std::vector<double>& values) const {
    for (std::size_t j = 0; j < values.size(); ++j) {
      values[j] = values[j] * scale_[j] + mean_[j];
    }
  }

  /// Returns a copy of the matrix with every row transformed.
  FeatureMatrix Apply(const FeatureMatrix& matrix) const {
    FeatureMatrix out = matrix;
    for (auto& row : out.rows) TransformRow(row.values);
    return out;
  }

 private:
  std::vector<double> mean_;
  std::vector<double> scale_;
};

/// Fits on train_row_ids and returns the whole matrix transformed.
inline FeatureMatrix FitApplyStandardizer(const FeatureMatrix& matrix,
                                          const std::vector<int>& train_row_ids) {
  return Standardizer::Fit(matrix, train_row_ids).Apply(matrix);
}

}  // namespace emofeat

#endif  // EMOFEAT_STANDARDIZE_HPP_
