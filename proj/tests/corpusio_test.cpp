// tests/corpusio_test.cpp

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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include <gtest/gtest.h>

#include "emofeat/alignment.hpp"
#include "emofeat/catalog.hpp"
#include "emofeat/dataset.hpp"
#include "emofeat/folds.hpp"
#include "emofeat/standardize.hpp"

namespace emofeat {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("emofeat_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  fs::path file(const std::string& name) const { return path_ / name; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

void WriteText(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

TEST(Manifest, LoadsValidRows) {
  TempDir dir;
  WriteText(dir.file("m.csv"),
            "# corpus_id=demo\n"
            "# labels=happy;sad;anger\n"
            "utterance_id,audio_path,label,speaker\n"
            "u1,a/u1.wav,happy,s1\n"
            "u2,a/u2.wav,sad,s1\n"
            "u3,a/u3.wav,anger,s2\n");
  CorpusManifest m = LoadManifest(dir.file("m.csv").string());
  EXPECT_EQ(m.corpus_id, "demo");
  ASSERT_EQ(m.entries.size(), 3u);
  EXPECT_EQ(m.entries[1].label, "sad");
}

TEST(Manifest, DuplicateUtteranceIdRejected) {
  TempDir dir;
  WriteText(dir.file("m.csv"),
            "# corpus_id=demo\n# labels=happy;sad\n"
            "utterance_id,audio_path,label,speaker\n"
            "u1,a.wav,happy,s1\nu1,b.wav,sad,s1\n");
  try {
    LoadManifest(dir.file("m.csv").string());
    FAIL() << "expected duplicate id error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDuplicateUtteranceId);
  }
}

TEST(Manifest, SevenStateDeclarationWithSynonyms) {
  TempDir dir;
  WriteText(dir.file("m.csv"),
            "# corpus_id=berlin\n"
            "# labels=happy;sad;anger;neutral;fear:fear/anxiety;boredom;disgust\n"
            "utterance_id,audio_path,label,speaker\n"
            "u1,a.wav,Fear/Anxiety,s1\n"
            "u2,b.wav,HAPPY,s2\n");
  CorpusManifest m = LoadManifest(dir.file("m.csv").string());
  EXPECT_EQ(m.native_labels.size(), 7u);
  EXPECT_EQ(m.entries[0].label, "fear");
  EXPECT_EQ(m.entries[1].label, "happy");
}

TEST(Manifest, UnknownLabelRejected) {
  TempDir dir;
  WriteText(dir.file("m.csv"),
            "# corpus_id=demo\n# labels=happy;sad\n"
            "utterance_id,audio_path,label,speaker\nu1,a.wav,angry,s1\n");
  try {
    LoadManifest(dir.file("m.csv").string());
    FAIL() << "expected unknown label error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnknownLabel);
  }
}

TEST(Manifest, MissingFile) {
  try {
    LoadManifest("/nonexistent/m.csv");
    FAIL() << "expected missing file error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kMissingFile);
  }
}

TEST(FeatureTable, IngestFullCatalogWidth) {
  TempDir dir;
  FeatureCatalog cat = BuildCatalog(Representation::kUtterance);
  std::string header = "utterance_id";
  for (const auto& name : cat.Names()) header += "," + name;
  std::string row = "u1";
  for (std::size_t j = 0; j < cat.size(); ++j) row += "," + std::to_string(0.5 * (j + 1));
  WriteText(dir.file("f.csv"), header + "\n" + row + "\n");

  FeatureMatrix m = IngestFeatureTable(dir.file("f.csv").string(), cat.Names(), nullptr, "demo");
  ASSERT_EQ(m.rows.size(), 1u);
  EXPECT_EQ(m.rows[0].values.size(), 318u);
  for (bool p : m.present) EXPECT_TRUE(p);
}

TEST(FeatureTable, UnknownColumnRejected) {
  TempDir dir;
  FeatureCatalog cat = BuildCatalog(Representation::kUtterance);
  WriteText(dir.file("f.csv"), "utterance_id,not_a_feature\nu1,1.0\n");
  try {
    IngestFeatureTable(dir.file("f.csv").string(), cat.Names());
    FAIL() << "expected unknown feature error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnknownFeatureName);
  }
}

TEST(FeatureTable, ExtractableSubsetUsable) {
  TempDir dir;
  FeatureCatalog cat = BuildCatalog(Representation::kUtterance);
  std::vector<int> extractable = cat.ExtractableIndices();
  ASSERT_EQ(extractable.size(), 242u);
  std::string header = "utterance_id";
  for (int j : extractable) header += "," + cat.at(static_cast<std::size_t>(j)).name;
  std::string row1 = "u1", row2 = "u2";
  for (std::size_t c = 0; c < extractable.size(); ++c) {
    row1 += ",1.0";
    row2 += ",2.0";
  }
  WriteText(dir.file("f.csv"), header + "\n" + row1 + "\n" + row2 + "\n");

  FeatureMatrix m = IngestFeatureTable(dir.file("f.csv").string(), cat.Names(), nullptr, "demo");
  m.RequireColumns(extractable);  // all extractable columns usable
  // touching a missing (non-extractable) column is a hard error
  try {
    m.RequireColumns({0});
    FAIL() << "expected missing column error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kMissingFeatureColumn);
  }
}

TEST(FeatureTable, NonNumericRejected) {
  TempDir dir;
  FeatureCatalog cat = BuildCatalog(Representation::kUtterance);
  WriteText(dir.file("f.csv"), "utterance_id,loudness mean\nu1,abc\n");
  try {
    IngestFeatureTable(dir.file("f.csv").string(), cat.Names());
    FAIL() << "expected non-numeric error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNonNumericValue);
  }
}

TEST(FeatureTable, RowLengthMismatchRejected) {
  TempDir dir;
  FeatureCatalog cat = BuildCatalog(Representation::kUtterance);
  WriteText(dir.file("f.csv"), "utterance_id,loudness mean,loudness msl b1\nu1,1.0\n");
  try {
    IngestFeatureTable(dir.file("f.csv").string(), cat.Names());
    FAIL() << "expected row length error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kRowLengthMismatch);
  }
}

TEST(FeatureTable, RoundTripsLosslessly) {
  FeatureMatrix m;
  m.corpus_id = "demo";
  m.feature_names = {"f0", "f1", "f2"};
  m.present = {true, true, true};
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    MatrixRow row;
    row.utterance_id = "u" + std::to_string(i);
    row.values = {rng.NextGaussian() * 1e-3, rng.NextGaussian() * 1e6, rng.NextDouble()};
    m.rows.push_back(row);
  }
  TempDir dir;
  WriteFeatureTable(m, dir.file("f.csv").string());
  FeatureMatrix back = IngestFeatureTable(dir.file("f.csv").string(), m.feature_names, nullptr, "demo");
  ASSERT_EQ(back.rows.size(), m.rows.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(back.rows[i].values[j], m.rows[i].values[j]);
    }
  }
}

FeatureMatrix TinyMatrix(const std::vector<std::pair<std::string, std::string>>& label_speaker,
                         const std::string& corpus = "demo") {
  FeatureMatrix m;
  m.corpus_id = corpus;
  m.feature_names = {"x"};
  m.present = {true};
  int i = 0;
  for (const auto& [label, speaker] : label_speaker) {
    MatrixRow row;
    row.utterance_id = "u" + std::to_string(i++);
    row.label = label;
    row.speaker = speaker;
    row.values = {static_cast<double>(i)};
    m.rows.push_back(row);
  }
  return m;
}

TEST(Alignment, A1DropsBerlinBoredom) {
  FeatureMatrix m = TinyMatrix({{"boredom", "s1"},
                                {"happy", "s1"},
                                {"happy", "s2"},
                                {"sad", "s1"},
                                {"sad", "s2"}},
                               "berlin");
  FeatureMatrix aligned = ApplyAlignment(m, BuiltinAlignment("A1"));
  EXPECT_EQ(aligned.rows.size(), 4u);
  for (const auto& row : aligned.rows) EXPECT_NE(row.label, "boredom");
}

TEST(Alignment, A2GroupsBerlinStates) {
  const AlignmentScheme a2 = BuiltinAlignment("A2");
  const auto& map = a2.MapFor("berlin");
  EXPECT_EQ(map.at("happy"), 0);
  EXPECT_EQ(map.at("anger"), 0);
  EXPECT_EQ(map.at("sad"), 1);
  EXPECT_EQ(map.at("neutral"), 1);
  EXPECT_EQ(map.at("disgust"), 2);
}

TEST(Alignment, A3PoolsFifthCategory) {
  const AlignmentScheme a3 = BuiltinAlignment("A3");
  EXPECT_EQ(a3.MapFor("des").at("surprise"), 4);
  EXPECT_EQ(a3.MapFor("berlin").at("fear"), 4);
  EXPECT_EQ(a3.MapFor("berlin").at("boredom"), 4);
  EXPECT_EQ(a3.MapFor("gees").at("fear"), 4);
  EXPECT_EQ(a3.class_count, 5);
}

TEST(Alignment, CommonFourClassCorpusLosesNothingUnderA1) {
  FeatureMatrix m = TinyMatrix({{"happy", "s1"}, {"happy", "s2"}, {"sad", "s1"}, {"sad", "s2"},
                                {"anger", "s1"}, {"anger", "s2"}, {"neutral", "s1"},
                                {"neutral", "s2"}},
                               "des");
  FeatureMatrix aligned = ApplyAlignment(m, BuiltinAlignment("A1"));
  EXPECT_EQ(aligned.rows.size(), m.rows.size());
}

TEST(Alignment, DegenerateAlignmentRejected) {
  AlignmentScheme s;
  s.scheme_id = "custom";
  s.class_count = 2;
  s.per_corpus["demo"] = {{"a", 0}, {"b", kDropClass}};
  FeatureMatrix m = TinyMatrix({{"a", "s1"}, {"a", "s2"}, {"b", "s1"}, {"b", "s2"}});
  try {
    ApplyAlignment(m, s);
    FAIL() << "expected degenerate alignment";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDegenerateAlignment);
  }
}

TEST(Alignment, UnmappedLabelRejected) {
  AlignmentScheme s;
  s.scheme_id = "custom";
  s.class_count = 2;
  s.per_corpus["demo"] = {{"a", 0}, {"b", 1}};
  FeatureMatrix m = TinyMatrix({{"a", "s1"}, {"b", "s1"}, {"c", "s1"}});
  try {
    ApplyAlignment(m, s);
    FAIL() << "expected unmapped label";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnmappedLabel);
  }
}

AlignmentScheme IdentityScheme(const std::string& corpus, const std::vector<std::string>& labels) {
  AlignmentScheme s;
  s.scheme_id = "custom";
  s.class_count = static_cast<int>(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    s.per_corpus[corpus][labels[i]] = static_cast<int>(i);
  }
  return s;
}

TEST(Folds, BalancedFourClassTenFold) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (int c = 0; c < 4; ++c) {
    for (int i = 0; i < 10; ++i) rows.push_back({"class" + std::to_string(c), "s"});
  }
  FeatureMatrix m = ApplyAlignment(TinyMatrix(rows),
                                   IdentityScheme("demo", {"class0", "class1", "class2", "class3"}));
  FoldPlan plan = StratifiedKFold(m, 10, 123);
  ASSERT_EQ(plan.size(), 10u);
  std::set<int> all_test;
  for (const auto& fold : plan) {
    EXPECT_EQ(fold.test_ids.size(), 4u);
    std::set<int> classes;
    for (int id : fold.test_ids) {
      classes.insert(m.rows[static_cast<std::size_t>(id)].class_id);
      EXPECT_TRUE(all_test.insert(id).second) << "folds must be disjoint";
    }
    EXPECT_EQ(classes.size(), 4u) << "one test row per class expected";
    EXPECT_EQ(fold.train_ids.size(), 36u);
  }
  EXPECT_EQ(all_test.size(), m.rows.size());
}

TEST(Folds, DeterministicUnderSeed) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < 15; ++i) rows.push_back({"c" + std::to_string(c), "s"});
  }
  FeatureMatrix m =
      ApplyAlignment(TinyMatrix(rows), IdentityScheme("demo", {"c0", "c1", "c2"}));
  FoldPlan a = StratifiedKFold(m, 5, 99);
  FoldPlan b = StratifiedKFold(m, 5, 99);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t f = 0; f < a.size(); ++f) {
    EXPECT_EQ(a[f].test_ids, b[f].test_ids);
    EXPECT_EQ(a[f].train_ids, b[f].train_ids);
  }
}

TEST(Folds, SegmentsOfOneUtteranceStayTogether) {
  FeatureMatrix m;
  m.corpus_id = "demo";
  m.representation = Representation::kSegment;
  m.feature_names = {"x"};
  m.present = {true};
  m.class_count = 2;
  // 8 utterances, utterance u3 has 5 segments
  for (int u = 0; u < 8; ++u) {
    int segs = (u == 3) ? 5 : 1;
    for (int s = 0; s < segs; ++s) {
      MatrixRow row;
      row.utterance_id = "u" + std::to_string(u);
      row.segment_index = s;
      row.class_id = u % 2;
      row.label = "c" + std::to_string(u % 2);
      row.values = {0.0};
      m.rows.push_back(row);
    }
  }
  FoldPlan plan = StratifiedKFold(m, 4, 7);
  for (const auto& fold : plan) {
    bool any_u3 = false, all_u3 = true;
    int u3_count = 0;
    for (int id : fold.test_ids) {
      if (m.rows[static_cast<std::size_t>(id)].utterance_id == "u3") {
        any_u3 = true;
        ++u3_count;
      }
    }
    if (any_u3) EXPECT_EQ(u3_count, 5) << "all 5 segments must share a fold";
    (void)all_u3;
  }
}

TEST(Folds, TooFewRowsPerClass) {
  FeatureMatrix m = ApplyAlignment(
      TinyMatrix({{"a", "s"}, {"a", "s"}, {"a", "s"}, {"b", "s"}, {"b", "s"}, {"b", "s"}}),
      IdentityScheme("demo", {"a", "b"}));
  try {
    StratifiedKFold(m, 4, 1);
    FAIL() << "expected too-few-rows error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kTooFewRowsPerClass);
  }
}

TEST(Standardizer, HandComputedTwoPointColumn) {
  FeatureMatrix m;
  m.feature_names = {"x"};
  m.present = {true};
  for (double v : {1.0, 3.0}) {
    MatrixRow row;
    row.values = {v};
    m.rows.push_back(row);
  }
  FeatureMatrix out = FitApplyStandardizer(m, {0, 1});
  EXPECT_NEAR(out.rows[0].values[0], -1.0, 1e-12);
  EXPECT_NEAR(out.rows[1].values[0], 1.0, 1e-12);
}

TEST(Standardizer, ConstantColumnMapsToZero) {
  FeatureMatrix m;
  m.feature_names = {"x"};
  m.present = {true};
  for (int i = 0; i < 3; ++i) {
    MatrixRow row;
    row.values = {5.0};
    m.rows.push_back(row);
  }
  FeatureMatrix out = FitApplyStandardizer(m, {0, 1, 2});
  for (const auto& row : out.rows) EXPECT_EQ(row.values[0], 0.0);
}

TEST(Standardizer, TrainMomentsAndInverse) {
  Rng rng(3);
  FeatureMatrix m;
  m.feature_names = {"a", "b"};
  m.present = {true, true};
  for (int i = 0; i < 40; ++i) {
    MatrixRow row;
    row.values = {rng.NextGaussian() * 3 + 11, rng.NextDouble() * 100};
    m.rows.push_back(row);
  }
  std::vector<int> train;
  for (int i = 0; i < 30; ++i) train.push_back(i);
  Standardizer s = Standardizer::Fit(m, train);
  FeatureMatrix out = s.Apply(m);
  for (std::size_t j = 0; j < 2; ++j) {
    double mean = 0, var = 0;
    for (int i : train) mean += out.rows[static_cast<std::size_t>(i)].values[j];
    mean /= 30;
    for (int i : train) {
      double d = out.rows[static_cast<std::size_t>(i)].values[j] - mean;
      var += d * d;
    }
    var /= 30;
    EXPECT_NEAR(mean, 0.0, 1e-9);
    EXPECT_NEAR(std::sqrt(var), 1.0, 1e-9);
  }
  // inverse transform recovers originals
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    std::vector<double> v = out.rows[i].values;
    s.InverseTransformRow(v);
    EXPECT_NEAR(v[0], m.rows[i].values[0], 1e-9);
    EXPECT_NEAR(v[1], m.rows[i].values[1], 1e-9);
  }
}

TEST(Standardizer, EmptyTrainingSetRejected) {
  FeatureMatrix m;
  m.feature_names = {"x"};
  m.present = {true};
  try {
    Standardizer::Fit(m, {});
    FAIL() << "expected empty training set error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kEmptyTrainingSet);
  }
}

}  // namespace
}  // namespace emofeat
