// emofeat/alignment.hpp

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

#ifndef EMOFEAT_ALIGNMENT_HPP_
#define EMOFEAT_ALIGNMENT_HPP_

#include <map>
#include <string>
#include <vector>

#include "emofeat/core.hpp"
#include "emofeat/dataset.hpp"

namespace emofeat {

inline constexpr int kDropClass = -1;

/// Emotional state alignment: maps each corpus's native labels onto one
/// shared class set (or drops them), so corpora with inconsistent label sets
/// can train and test the same classification task.
struct AlignmentScheme {
  std::string scheme_id;  // "A1", "A2", "A3" or a custom name
  int class_count = 0;
  /// corpus id -> (native label -> class id in [0, class_count) or kDropClass)
  std::map<std::string, std::map<std::string, int>> per_corpus;

  const std::map<std::string, int>& MapFor(const std::string& corpus_id) const {
    auto it = per_corpus.find(corpus_id);
    if (it == per_corpus.end()) {
      Raise(Errc::kUnmappedLabel, "alignment " + scheme_id + " has no map for corpus " + corpus_id);
    }
    return it->second;
  }
};

/// Relabels rows by the scheme, dropping rows mapped to kDropClass. At least
/// two classes, each with at least two rows, must survive.
inline FeatureMatrix ApplyAlignment(const FeatureMatrix& matrix, const AlignmentScheme& scheme) {
  const auto& label_map = scheme.MapFor(matrix.corpus_id);
  FeatureMatrix out;
  out.corpus_id = matrix.corpus_id;
  out.representation = matrix.representation;
  out.feature_names = matrix.feature_names;
  out.present = matrix.present;
  out.class_count = scheme.class_count;

  std::vector<int> rows_per_class(static_cast<std::size_t>(scheme.class_count), 0);
  for (const auto& row : matrix.rows) {
    auto it = label_map.find(row.label);
    if (it == label_map.end()) {
      Raise(Errc::kUnmappedLabel, "alignment " + scheme.scheme_id + ": corpus " +
                                      matrix.corpus_id + " label '" + row.label + "' unmapped");
    }
    if (it->second == kDropClass) continue;
    if (it->second < 0 || it->second >= scheme.class_count) {
      Raise(Errc::kUnmappedLabel, "alignment " + scheme.scheme_id + ": class id out of range");
    }
    MatrixRow copy = row;
    copy.class_id = it->second;
    rows_per_class[static_cast<std::size_t>(it->second)] += 1;
    out.rows.push_back(std::move(copy));
  }

  int surviving_classes = 0;
  for (int n : rows_per_class) {
    if (n > 0) {
      if (n < 2) {
        Raise(Errc::kDegenerateAlignment, "alignment " + scheme.scheme_id + " on " +
                                              matrix.corpus_id + ": class with fewer than 2 rows");
      }
      ++surviving_classes;
    }
  }
  if (surviving_classes < 2) {
    Raise(Errc::kDegenerateAlignment, "alignment " + scheme.scheme_id + " on " +
                                          matrix.corpus_id + ": fewer than 2 surviving classes");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Built-in alignments for the four-corpus study (Berlin / DES / GEES with
// BabyEars held out). A1 keeps the four states common to all three selection
// corpora. A2 re-groups every state into three activation-style categories.
// A3 keeps the four states common to DES and GEES and pools everything else
// into a fifth class.

namespace alignment_detail {

inline std::map<std::string, int> BerlinA1() {
  return {{"happy", 0}, {"sad", 1},         {"anger", 2},  {"neutral", 3},
          {"fear", kDropClass}, {"boredom", kDropClass}, {"disgust", kDropClass}};
}
inline std::map<std::string, int> DesA1() {
  return {{"happy", 0}, {"sad", 1}, {"anger", 2}, {"neutral", 3}, {"surprise", kDropClass}};
}
inline std::map<std::string, int> GeesA1() {
  return {{"happy", 0}, {"sad", 1}, {"anger", 2}, {"neutral", 3}, {"fear", kDropClass}};
}

inline std::map<std::string, int> BerlinA2() {
  return {{"happy", 0}, {"anger", 0}, {"sad", 1}, {"neutral", 1},
          {"fear", 2},  {"boredom", 2}, {"disgust", 2}};
}
inline std::map<std::string, int> DesA2() {
  return {{"happy", 0}, {"anger", 0}, {"sad", 1}, {"neutral", 1}, {"surprise", 2}};
}
inline std::map<std::string, int> GeesA2() {
  return {{"happy", 0}, {"anger", 0}, {"sad", 1}, {"neutral", 1}, {"fear", 2}};
}

inline std::map<std::string, int> BerlinA3() {
  return {{"happy", 0}, {"sad", 1}, {"anger", 2}, {"neutral", 3},
          {"fear", 4},  {"boredom", 4}, {"disgust", 4}};
}
inline std::map<std::string, int> DesA3() {
  return {{"happy", 0}, {"sad", 1}, {"anger", 2}, {"neutral", 3}, {"surprise", 4}};
}
inline std::map<std::string, int> GeesA3() {
  return {{"happy", 0}, {"sad", 1}, {"anger", 2}, {"neutral", 3}, {"fear", 4}};
}

}  // namespace alignment_detail

/// The three built-in alignments over the berlin/des/gees corpus ids.
inline AlignmentScheme BuiltinAlignment(const std::string& scheme_id) {
  using namespace alignment_detail;
  AlignmentScheme s;
  s.scheme_id = scheme_id;
  if (scheme_id == "A1") {
    s.class_count = 4;
    s.per_corpus = {{"berlin", BerlinA1()}, {"des", DesA1()}, {"gees", GeesA1()}};
  } else if (scheme_id == "A2") {
    s.class_count = 3;
    s.per_corpus = {{"berlin", BerlinA2()}, {"des", DesA2()}, {"gees", GeesA2()}};
  } else if (scheme_id == "A3") {
    s.class_count = 5;
    s.per_corpus = {{"berlin", BerlinA3()}, {"des", DesA3()}, {"gees", GeesA3()}};
  } else {
    Raise(Errc::kInvalidArgument, "no built-in alignment named " + scheme_id);
  }
  return s;
}

}  // namespace emofeat

#endif  // EMOFEAT_ALIGNMENT_HPP_
