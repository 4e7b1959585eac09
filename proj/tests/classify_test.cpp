// tests/classify_test.cpp

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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "emofeat/evaluate.hpp"
#include "emofeat/folds.hpp"
#include "emofeat/knn.hpp"
#include "emofeat/svm.hpp"

namespace emofeat {
namespace {

// Brute-force oracle: sort every (distance, index) pair, vote over the first
// k with the same deterministic tie rules the model promises.
int KnnOracle(const std::vector<std::vector<double>>& rows, const std::vector<int>& labels,
              const std::vector<double>& query, int k) {
  std::vector<std::pair<double, std::size_t>> all;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double d2 = 0.0;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const double d = rows[i][j] - query[j];
      d2 += d * d;
    }
    all.push_back({d2, i});
  }
  std::sort(all.begin(), all.end());
  std::vector<int> counts;
  for (int i = 0; i < k && i < static_cast<int>(all.size()); ++i) {
    const int label = labels[all[static_cast<std::size_t>(i)].second];
    if (label >= static_cast<int>(counts.size())) counts.resize(static_cast<std::size_t>(label) + 1, 0);
    counts[static_cast<std::size_t>(label)] += 1;
  }
  int best = 0, best_votes = -1;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] > best_votes) {
      best_votes = counts[c];
      best = static_cast<int>(c);
    }
  }
  return best;
}

TEST(Knn, IdentityQueryWithKOne) {
  std::vector<std::vector<double>> rows = {{0, 0}, {1, 1}, {2, 2}};
  KnnModel model(rows, {0, 1, 2}, 1);
  EXPECT_EQ(model.Predict(rows[1]), 1);
}

TEST(Knn, MajorityOfThree) {
  std::vector<std::vector<double>> rows = {{0.0}, {0.1}, {0.2}, {5.0}};
  KnnModel model(rows, {0, 0, 1, 1}, 3);
  EXPECT_EQ(model.Predict(std::vector<double>{0.05}), 0);
}

TEST(Knn, MatchesBruteForceOracle) {
  Rng rng(41);
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  for (int i = 0; i < 50; ++i) {
    rows.push_back({rng.NextGaussian(), rng.NextGaussian(), rng.NextGaussian()});
    labels.push_back(static_cast<int>(rng.NextIndex(3)));
  }
  for (int k : {1, 3, 5, 9}) {
    KnnModel model(rows, labels, k);
    for (int q = 0; q < 100; ++q) {
      std::vector<double> query = {rng.NextGaussian(), rng.NextGaussian(), rng.NextGaussian()};
      EXPECT_EQ(model.Predict(query), KnnOracle(rows, labels, query, k));
    }
  }
}

TEST(Knn, VoteTieGoesToSmallestClassId) {
  // k=2, one neighbour of each class at equal distance
  std::vector<std::vector<double>> rows = {{-1.0}, {1.0}};
  KnnModel model(rows, {1, 0}, 2);
  EXPECT_EQ(model.Predict(std::vector<double>{0.0}), 0);
}

TEST(Knn, DuplicatingAllColumnsPreservesPredictions) {
  Rng rng(17);
  std::vector<std::vector<double>> rows, rows2;
  std::vector<int> labels;
  for (int i = 0; i < 60; ++i) {
    std::vector<double> v = {rng.NextGaussian(), rng.NextGaussian()};
    rows.push_back(v);
    rows2.push_back({v[0], v[1], v[0], v[1]});
    labels.push_back(static_cast<int>(rng.NextIndex(2)));
  }
  KnnModel a(rows, labels, 5);
  KnnModel b(rows2, labels, 5);
  for (int q = 0; q < 50; ++q) {
    std::vector<double> query = {rng.NextGaussian(), rng.NextGaussian()};
    std::vector<double> query2 = {query[0], query[1], query[0], query[1]};
    EXPECT_EQ(a.Predict(query), b.Predict(query2));
  }
}

FeatureMatrix MakeMatrix(const std::vector<std::vector<double>>& rows,
                         const std::vector<int>& labels) {
  FeatureMatrix m;
  m.corpus_id = "demo";
  m.feature_names.resize(rows[0].size());
  for (std::size_t j = 0; j < rows[0].size(); ++j) m.feature_names[j] = "f" + std::to_string(j);
  m.present.assign(rows[0].size(), true);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    MatrixRow r;
    r.utterance_id = "u" + std::to_string(i);
    r.values = rows[i];
    r.class_id = labels[i];
    r.label = "c" + std::to_string(labels[i]);
    m.rows.push_back(r);
  }
  m.class_count = 1 + *std::max_element(labels.begin(), labels.end());
  return m;
}

// Two well-separated Gaussian blobs.
FeatureMatrix TwoBlobs(int n_per_class, double sep, std::uint64_t seed, int dims = 2) {
  Rng rng(seed);
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < n_per_class; ++i) {
      std::vector<double> v(static_cast<std::size_t>(dims));
      for (auto& x : v) x = rng.NextGaussian();
      v[0] += c == 0 ? -sep / 2 : sep / 2;
      rows.push_back(v);
      labels.push_back(c);
    }
  }
  return MakeMatrix(rows, labels);
}

TEST(SelectKnnK, SingleCandidate) {
  FeatureMatrix m = TwoBlobs(20, 4.0, 1);
  FoldPlan folds = StratifiedKFold(m, 5, 2);
  EXPECT_EQ(SelectKnnK(m, folds, {5}, {0, 1}), 5);
}

TEST(SelectKnnK, ReturnsArgmaxOfExplicitScan) {
  FeatureMatrix m = TwoBlobs(25, 3.0, 9);
  FoldPlan folds = StratifiedKFold(m, 5, 3);
  std::vector<int> candidates = {1, 3, 5, 7};
  int chosen = SelectKnnK(m, folds, candidates, {0, 1});
  double chosen_rate = CrossValidate(m, KnnSpec{chosen, {}}, folds, {0, 1}).mean;
  for (int k : candidates) {
    double rate = CrossValidate(m, KnnSpec{k, {}}, folds, {0, 1}).mean;
    EXPECT_LE(rate, chosen_rate + 1e-9);
  }
}

TEST(SelectKnnK, TieGoesToSmallestK) {
  // Perfectly separable clusters: every k achieves 100%, so ties resolve low.
  FeatureMatrix m = TwoBlobs(20, 50.0, 5);
  FoldPlan folds = StratifiedKFold(m, 5, 7);
  EXPECT_EQ(SelectKnnK(m, folds, {3, 5}, {0, 1}), 3);
  EXPECT_EQ(SelectKnnK(m, folds, {5, 3}, {0, 1}), 3);
}

TEST(Svm, SeparableBlobsPerfectTrainingAccuracy) {
  FeatureMatrix m = TwoBlobs(30, 6.0, 11);
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  for (const auto& r : m.rows) {
    rows.push_back(r.values);
    labels.push_back(r.class_id);
  }
  SvmParams params;
  params.c = 10.0;
  params.gamma = 0.5;
  SvmModel model(rows, labels, params);
  int correct = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    correct += model.Predict(rows[i]) == labels[i] ? 1 : 0;
  }
  EXPECT_EQ(correct, static_cast<int>(rows.size()));
}

TEST(Svm, XorLayoutNeedsRbf) {
  Rng rng(23);
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  for (int corner = 0; corner < 4; ++corner) {
    const double cx = (corner & 1) ? 3.0 : -3.0;
    const double cy = (corner & 2) ? 3.0 : -3.0;
    for (int i = 0; i < 25; ++i) {
      rows.push_back({cx + rng.NextGaussian() * 0.7, cy + rng.NextGaussian() * 0.7});
      labels.push_back(((corner & 1) ^ ((corner & 2) >> 1)) ? 1 : 0);
    }
  }
  SvmParams params;
  params.c = 10.0;
  params.gamma = 0.5;
  SvmModel model(rows, labels, params);
  int correct = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    correct += model.Predict(rows[i]) == labels[i] ? 1 : 0;
  }
  EXPECT_GE(correct, 95);
}

TEST(Svm, DualConstraintsHold) {
  Rng rng(31);
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  for (int i = 0; i < 90; ++i) {
    rows.push_back({rng.NextGaussian(), rng.NextGaussian(), rng.NextGaussian()});
    labels.push_back(static_cast<int>(rng.NextIndex(3)));
  }
  SvmParams params;
  params.c = 5.0;
  params.gamma = 0.3;
  SvmModel model(rows, labels, params);
  EXPECT_EQ(model.machines().size(), 3u);
  for (const auto& machine : model.machines()) {
    double sum = 0.0;
    for (std::size_t i = 0; i < machine.alpha.size(); ++i) {
      EXPECT_GE(machine.alpha[i], -1e-12);
      EXPECT_LE(machine.alpha[i], params.c + 1e-12);
      sum += machine.alpha[i] * machine.y[i];
    }
    EXPECT_NEAR(sum, 0.0, 1e-6);
  }
}

TEST(Svm, DecisionValuesInvariantUnderRowPermutation) {
  Rng rng(37);
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  for (int i = 0; i < 40; ++i) {
    rows.push_back({rng.NextGaussian() + (i % 2 ? 1.5 : -1.5), rng.NextGaussian()});
    labels.push_back(i % 2);
  }
  SvmParams params;
  params.c = 2.0;
  params.gamma = 0.4;
  params.tolerance = 1e-8;
  params.max_steps = 200000;
  SvmModel a(rows, labels, params);

  std::vector<std::size_t> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0u);
  rng.Shuffle(perm);
  std::vector<std::vector<double>> rows_p;
  std::vector<int> labels_p;
  for (std::size_t i : perm) {
    rows_p.push_back(rows[i]);
    labels_p.push_back(labels[i]);
  }
  SvmModel b(rows_p, labels_p, params);

  for (int q = 0; q < 25; ++q) {
    std::vector<double> query = {rng.NextGaussian() * 2, rng.NextGaussian() * 2};
    const double da = a.DecisionValue(a.machines()[0], query);
    const double db = b.DecisionValue(b.machines()[0], query);
    EXPECT_NEAR(da, db, 1e-6);
  }
}

TEST(Svm, TwoClassVoteReducesToDecisionSign) {
  FeatureMatrix m = TwoBlobs(15, 4.0, 3);
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  for (const auto& r : m.rows) {
    rows.push_back(r.values);
    labels.push_back(r.class_id);
  }
  SvmParams params;
  SvmModel model(rows, labels, params);
  ASSERT_EQ(model.machines().size(), 1u);
  Rng rng(77);
  for (int q = 0; q < 40; ++q) {
    std::vector<double> query = {rng.NextGaussian() * 3, rng.NextGaussian() * 3};
    const double v = model.DecisionValue(model.machines()[0], query);
    EXPECT_EQ(model.Predict(query), v >= 0 ? model.machines()[0].class_pos
                                           : model.machines()[0].class_neg);
  }
}

TEST(Svm, DegenerateClassCountRejected) {
  std::vector<std::vector<double>> rows = {{0.0}, {1.0}, {2.0}};
  try {
    SvmModel model(rows, {0, 0, 0}, SvmParams{});
    FAIL() << "expected degenerate class count";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDegenerateClassCount);
  }
}

TEST(CrossValidate, PerfectClassifierScoresHundred) {
  FeatureMatrix m = TwoBlobs(20, 60.0, 19);
  FoldPlan folds = StratifiedKFold(m, 10, 4);
  RecognitionRate r = CrossValidate(m, KnnSpec{1, {}}, folds, {0, 1});
  EXPECT_DOUBLE_EQ(r.mean, 100.0);
  EXPECT_DOUBLE_EQ(r.std_dev, 0.0);
}

TEST(CrossValidate, ChanceLevelOnNoise) {
  Rng rng(211);
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  for (int i = 0; i < 400; ++i) {
    rows.push_back({rng.NextGaussian()});
    labels.push_back(i % 4);
  }
  FeatureMatrix m = MakeMatrix(rows, labels);
  FoldPlan folds = StratifiedKFold(m, 10, 5);
  RecognitionRate r = CrossValidate(m, KnnSpec{9, {}}, folds, {0});
  EXPECT_NEAR(r.mean, 25.0, 8.0);
}

TEST(CrossValidate, MeanMatchesPerFoldAverage) {
  FeatureMatrix m = TwoBlobs(25, 2.0, 7);
  FoldPlan folds = StratifiedKFold(m, 10, 6);
  RecognitionRate r = CrossValidate(m, KnnSpec{3, {}}, folds, {0, 1});
  double mean = 0.0;
  for (double v : r.per_fold) mean += v;
  mean /= static_cast<double>(r.per_fold.size());
  EXPECT_DOUBLE_EQ(r.mean, mean);
  EXPECT_GE(r.mean, 0.0);
  EXPECT_LE(r.mean, 100.0);
}

TEST(CrossValidate, CellFormat) {
  RecognitionRate r;
  r.mean = 66.719;
  r.std_dev = 4.996;
  EXPECT_EQ(r.Format(), "66.72 (5.00)");
}

TEST(CrossValidate, StandardizerIgnoresTestRows) {
  FeatureMatrix m = TwoBlobs(20, 3.0, 13);
  FoldPlan folds = StratifiedKFold(m, 5, 8);
  Standardizer before = Standardizer::Fit(m, folds[0].train_ids);
  // Poison the test rows with a large sentinel offset.
  FeatureMatrix poisoned = m;
  for (int id : folds[0].test_ids) {
    for (auto& v : poisoned.rows[static_cast<std::size_t>(id)].values) v += 1e6;
  }
  Standardizer after = Standardizer::Fit(poisoned, folds[0].train_ids);
  for (std::size_t j = 0; j < before.width(); ++j) {
    EXPECT_DOUBLE_EQ(before.mean()[j], after.mean()[j]);
    EXPECT_DOUBLE_EQ(before.scale()[j], after.scale()[j]);
  }
}

TEST(CrossValidate, MissingColumnRejected) {
  FeatureMatrix m = TwoBlobs(10, 3.0, 1);
  m.present[1] = false;
  FoldPlan folds = StratifiedKFold(m, 2, 1);
  try {
    CrossValidate(m, KnnSpec{1, {}}, folds, {0, 1});
    FAIL() << "expected missing column";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kMissingFeatureColumn);
  }
}

TEST(CrossValidate, SvmWithInnerGridOnBlobs) {
  FeatureMatrix m = TwoBlobs(15, 5.0, 29);
  FoldPlan folds = StratifiedKFold(m, 5, 9);
  SvmSpec spec;
  spec.c_grid = {1.0, 10.0};
  spec.gamma_grid = {1.0};
  spec.inner_folds = 3;
  RecognitionRate r = CrossValidate(m, spec, folds, {0, 1});
  EXPECT_GE(r.mean, 95.0);
}

TEST(AggregateVotes, MajorityAndTies) {
  EXPECT_EQ(AggregateSegmentVotes({0, 0, 1}, {0.1, 0.1, 5.0}), 0);
  EXPECT_EQ(AggregateSegmentVotes({2}, {0.0}), 2);
  // tie between 0 and 1; class 1 has the larger summed score
  EXPECT_EQ(AggregateSegmentVotes({0, 1}, {0.5, 2.0}), 1);
  EXPECT_EQ(AggregateSegmentVotes({0, 1}, {2.0, 0.5}), 0);
  try {
    AggregateSegmentVotes({}, {});
    FAIL() << "expected empty prediction error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kEmptyPredictionSet);
  }
}

TEST(CrossValidate, SegmentMatrixScoredPerUtterance) {
  // 12 utterances x 3 segments, two separable classes; segment votes must
  // produce utterance-level accuracy.
  Rng rng(55);
  FeatureMatrix m;
  m.corpus_id = "demo";
  m.representation = Representation::kSegment;
  m.feature_names = {"x"};
  m.present = {true};
  m.class_count = 2;
  for (int u = 0; u < 12; ++u) {
    const int cls = u % 2;
    for (int s = 0; s < 3; ++s) {
      MatrixRow row;
      row.utterance_id = "u" + std::to_string(u);
      row.segment_index = s;
      row.class_id = cls;
      row.label = "c" + std::to_string(cls);
      row.values = {(cls ? 4.0 : -4.0) + rng.NextGaussian() * 0.5};
      m.rows.push_back(row);
    }
  }
  FoldPlan folds = StratifiedKFold(m, 3, 2);
  RecognitionRate r = CrossValidate(m, KnnSpec{3, {}}, folds, {0});
  EXPECT_DOUBLE_EQ(r.mean, 100.0);
  // per-fold rates count utterances, not segments: 4 test utterances per fold
  for (const auto& fold : folds) EXPECT_EQ(fold.test_ids.size(), 12u);
}

}  // namespace
}  // namespace emofeat
