// emofeat/subset.hpp

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

#ifndef EMOFEAT_SUBSET_HPP_
#define EMOFEAT_SUBSET_HPP_

#include <algorithm>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "emofeat/core.hpp"
#include "emofeat/csv.hpp"

namespace emofeat {

enum class SelectorKind { kSffs, kGa, kBoost, kCombined, kFull };

inline const char* ToString(SelectorKind s) {
  switch (s) {
    case SelectorKind::kSffs: return "sffs";
    case SelectorKind::kGa: return "ga";
    case SelectorKind::kBoost: return "boost";
    case SelectorKind::kCombined: return "combined";
    case SelectorKind::kFull: return "full";
  }
  return "?";
}

enum class CombineOp { kUnion, kIntersection };

/// An ordered set of schema feature indices plus where it came from.
struct FeatureSubset {
  std::vector<int> indices;  // unique, ascending
  SelectorKind selector = SelectorKind::kFull;
  std::string alignment;     // scheme id, empty for the full baseline
  std::string train_corpus;  // empty for the full baseline
  bool combined = false;
  CombineOp combine_op = CombineOp::kUnion;

  std::size_t size() const { return indices.size(); }

  void Normalize() {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  }

  void Validate(std::size_t schema_width) const {
    Require(!indices.empty(), Errc::kEmptyResult, "subset must be nonempty");
    std::set<int> seen;
    for (int j : indices) {
      Require(j >= 0 && static_cast<std::size_t>(j) < schema_width, Errc::kInvalidArgument,
              "subset index out of schema bounds");
      Require(seen.insert(j).second, Errc::kInvalidArgument, "duplicate subset index");
    }
  }
};

/// Set union / intersection over two or more subsets of one schema. An empty
/// intersection is an error the caller may handle (e.g. fall back to union).
inline FeatureSubset CombineSubsets(const std::vector<FeatureSubset>& subsets, CombineOp op) {
  Require(subsets.size() >= 2, Errc::kInvalidArgument, "combining needs at least 2 subsets");
  std::set<int> acc(subsets[0].indices.begin(), subsets[0].indices.end());
  for (std::size_t s = 1; s < subsets.size(); ++s) {
    std::set<int> next(subsets[s].indices.begin(), subsets[s].indices.end());
    if (op == CombineOp::kUnion) {
      acc.insert(next.begin(), next.end());
    } else {
      std::set<int> kept;
      for (int j : acc) {
        if (next.count(j)) kept.insert(j);
      }
      acc.swap(kept);
    }
  }
  if (op == CombineOp::kIntersection && acc.empty()) {
    Raise(Errc::kEmptyIntersection, "subset intersection is empty");
  }
  FeatureSubset out;
  out.indices.assign(acc.begin(), acc.end());
  out.selector = SelectorKind::kCombined;
  out.alignment = subsets[0].alignment;
  out.train_corpus = subsets[0].train_corpus;
  out.combined = true;
  out.combine_op = op;
  return out;
}

/// Serializes a subset as one feature name per line with a provenance header.
inline void WriteSubsetFile(const FeatureSubset& subset, const std::vector<std::string>& names,
                            const std::string& path) {
  std::ofstream out(path);
  if (!out) Raise(Errc::kIoError, "cannot write " + path);
  out << "# selector=" << ToString(subset.selector) << '\n';
  out << "# alignment=" << (subset.alignment.empty() ? "-" : subset.alignment) << '\n';
  out << "# train_corpus=" << (subset.train_corpus.empty() ? "-" : subset.train_corpus) << '\n';
  if (subset.combined) {
    out << "# combination=" << (subset.combine_op == CombineOp::kUnion ? "union" : "intersection")
        << '\n';
  }
  for (int j : subset.indices) out << names.at(static_cast<std::size_t>(j)) << '\n';
}

inline FeatureSubset ReadSubsetFile(const std::string& path,
                                    const std::vector<std::string>& names) {
  std::ifstream in(path);
  if (!in) Raise(Errc::kMissingFile, "cannot open " + path);
  FeatureSubset subset;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = TrimWhitespace(line.substr(1));
      if (body.rfind("alignment=", 0) == 0) subset.alignment = body.substr(10);
      if (body.rfind("train_corpus=", 0) == 0) subset.train_corpus = body.substr(13);
      if (body.rfind("selector=", 0) == 0) {
        const std::string v = body.substr(9);
        if (v == "sffs") subset.selector = SelectorKind::kSffs;
        else if (v == "ga") subset.selector = SelectorKind::kGa;
        else if (v == "boost") subset.selector = SelectorKind::kBoost;
        else if (v == "combined") subset.selector = SelectorKind::kCombined;
        else subset.selector = SelectorKind::kFull;
      }
      continue;
    }
    auto it = std::find(names.begin(), names.end(), line);
    if (it == names.end()) {
      Raise(Errc::kUnknownFeatureName, path + ": unknown feature '" + line + "'");
    }
    subset.indices.push_back(static_cast<int>(it - names.begin()));
  }
  if (subset.alignment == "-") subset.alignment.clear();
  if (subset.train_corpus == "-") subset.train_corpus.clear();
  subset.Normalize();
  Require(!subset.indices.empty(), Errc::kEmptyResult, path + ": subset file lists no features");
  return subset;
}

}  // namespace emofeat

#endif  // EMOFEAT_SUBSET_HPP_
