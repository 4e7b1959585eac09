// emofeat/combine.hpp

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

#ifndef EMOFEAT_COMBINE_HPP_
#define EMOFEAT_COMBINE_HPP_

#include <vector>

#include "emofeat/criterion.hpp"
#include "emofeat/subset.hpp"

namespace emofeat {

/// Picks between the union and the intersection of the per-selector subsets
/// by mean criterion score across the held-out test corpora. An exact tie
/// keeps the intersection (smaller subset).
inline FeatureSubset ChooseCombined(const FeatureSubset& union_subset,
                                    const FeatureSubset& intersection_subset,
                                    const std::vector<const WrapperCriterion*>& test_criteria) {
  Require(!test_criteria.empty(), Errc::kInvalidArgument,
          "combined choice needs at least one test corpus");
  double union_mean = 0.0, intersection_mean = 0.0;
  for (const WrapperCriterion* criterion : test_criteria) {
    union_mean += criterion->Score(union_subset.indices);
    intersection_mean += criterion->Score(intersection_subset.indices);
  }
  return union_mean > intersection_mean ? union_subset : intersection_subset;
}

}  // namespace emofeat

#endif  // EMOFEAT_COMBINE_HPP_
