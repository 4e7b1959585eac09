// emofeat/plan.hpp

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

#ifndef EMOFEAT_PLAN_HPP_
#define EMOFEAT_PLAN_HPP_

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "emofeat/alignment.hpp"
#include "emofeat/boosting.hpp"
#include "emofeat/core.hpp"
#include "emofeat/csv.hpp"
#include "emofeat/evaluate.hpp"
#include "emofeat/ga.hpp"
#include "emofeat/sffs.hpp"

namespace emofeat {

struct CorpusRef {
  std::string corpus_id;
  std::string manifest_path;
  std::string features_path;
  bool independent = false;
};

/// Everything one cross-corpus run needs: which corpora select and which only
/// check stability, the alignments, selector and classifier settings, and the
/// master seed all stage seeds derive from.
struct ExperimentPlan {
  std::vector<CorpusRef> corpora;
  std::vector<AlignmentScheme> alignments;
  Representation representation = Representation::kUtterance;
  int folds = 10;
  double delta = 3.0;  // trade-off screen in percentage points
  bool group_by_speaker = false;
  std::uint64_t seed = 1;
  SffsParams sffs;
  GaParams ga;
  BoostParams boost;
  KnnSpec knn;
  SvmSpec svm;

  std::vector<std::string> SelectionCorpora() const {
    std::vector<std::string> out;
    for (const auto& c : corpora) {
      if (!c.independent) out.push_back(c.corpus_id);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<std::string> IndependentCorpora() const {
    std::vector<std::string> out;
    for (const auto& c : corpora) {
      if (c.independent) out.push_back(c.corpus_id);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void Validate() const {
    Require(SelectionCorpora().size() >= 2, Errc::kInvalidArgument,
            "plan needs at least 2 selection corpora");
    Require(!alignments.empty(), Errc::kInvalidArgument, "plan needs at least one alignment");
    Require(folds >= 2, Errc::kInvalidArgument, "folds must be >= 2");
    for (const auto& c : corpora) {
      for (const auto& d : corpora) {
        if (&c != &d) {
          Require(c.corpus_id != d.corpus_id, Errc::kInvalidArgument,
                  "duplicate corpus id " + c.corpus_id);
        }
      }
    }
  }
};

namespace plan_detail {

inline std::vector<double> ParseDoubles(const std::string& value) {
  std::vector<double> out;
  for (const std::string& item : detail::SplitOn(value, ',')) {
    out.push_back(ParseDoubleStrict(item, Errc::kParseError));
  }
  return out;
}

inline std::vector<int> ParseInts(const std::string& value) {
  std::vector<int> out;
  for (const std::string& item : detail::SplitOn(value, ',')) {
    out.push_back(static_cast<int>(ParseLongStrict(item, Errc::kParseError)));
  }
  return out;
}

/// "c0:0; c1:1; c2:DROP" -> label map.
inline std::map<std::string, int> ParseLabelMap(const std::string& value,
                                                const std::string& where) {
  std::map<std::string, int> out;
  for (const std::string& item : detail::SplitOn(value, ';')) {
    const std::string t = TrimWhitespace(item);
    if (t.empty()) continue;
    const std::size_t colon = t.rfind(':');
    if (colon == std::string::npos) Raise(Errc::kParseError, where + ": expected label:class");
    const std::string label = TrimWhitespace(t.substr(0, colon));
    const std::string cls = TrimWhitespace(t.substr(colon + 1));
    if (cls == "DROP" || cls == "drop") {
      out[label] = kDropClass;
    } else {
      out[label] = static_cast<int>(ParseLongStrict(cls, Errc::kParseError));
    }
  }
  return out;
}

}  // namespace plan_detail

/// Plan file: top-level `key = value` lines plus [corpus:ID] and
/// [alignment:ID] and selector sections. Relative paths resolve against the
/// plan file's directory.
inline ExperimentPlan LoadPlan(const std::string& path) {
  using namespace plan_detail;
  std::ifstream in(path);
  if (!in) Raise(Errc::kMissingFile, "cannot open plan: " + path);
  const std::filesystem::path base = std::filesystem::path(path).parent_path();

  ExperimentPlan plan;
  std::string section;
  std::string line;
  CorpusRef* corpus = nullptr;
  AlignmentScheme* alignment = nullptr;

  auto resolve = [&base](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_relative() ? (base / fp).string() : p;
  };

  while (std::getline(in, line)) {
    std::string t = TrimWhitespace(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = t.substr(1, t.size() - 2);
      corpus = nullptr;
      alignment = nullptr;
      if (section.rfind("corpus:", 0) == 0) {
        plan.corpora.push_back(CorpusRef{section.substr(7), "", "", false});
        corpus = &plan.corpora.back();
      } else if (section.rfind("alignment:", 0) == 0) {
        AlignmentScheme scheme;
        scheme.scheme_id = section.substr(10);
        plan.alignments.push_back(scheme);
        alignment = &plan.alignments.back();
      }
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) Raise(Errc::kParseError, path + ": expected key = value: " + t);
    const std::string key = TrimWhitespace(t.substr(0, eq));
    const std::string value = TrimWhitespace(t.substr(eq + 1));

    if (corpus != nullptr) {
      if (key == "manifest") corpus->manifest_path = resolve(value);
      else if (key == "features") corpus->features_path = resolve(value);
      else if (key == "role") corpus->independent = (value == "independent");
      else Raise(Errc::kParseError, path + ": unknown corpus key '" + key + "'");
      continue;
    }
    if (alignment != nullptr) {
      if (key == "builtin") {
        *alignment = BuiltinAlignment(value);
      } else if (key == "classes") {
        alignment->class_count = ParseInts(value)[0];
      } else if (key.rfind("map.", 0) == 0) {
        alignment->per_corpus[key.substr(4)] = ParseLabelMap(value, path);
      } else {
        Raise(Errc::kParseError, path + ": unknown alignment key '" + key + "'");
      }
      continue;
    }
    if (section == "sffs") {
      if (key == "max_size") plan.sffs.max_size = ParseInts(value)[0];
      else if (key == "patience") plan.sffs.patience = ParseInts(value)[0];
      else Raise(Errc::kParseError, path + ": unknown sffs key '" + key + "'");
    } else if (section == "ga") {
      if (key == "runs") plan.ga.runs = ParseInts(value)[0];
      else if (key == "population") plan.ga.population = ParseInts(value)[0];
      else if (key == "generations") plan.ga.generations = ParseInts(value)[0];
      else if (key == "crossover") plan.ga.crossover_rate = ParseDoubles(value)[0];
      else if (key == "mutation") plan.ga.mutation_rate = ParseDoubles(value)[0];
      else if (key == "tournament") plan.ga.tournament = ParseInts(value)[0];
      else if (key == "size_penalty") plan.ga.size_penalty = ParseDoubles(value)[0];
      else if (key == "threshold") plan.ga.threshold = ParseDoubles(value)[0];
      else Raise(Errc::kParseError, path + ": unknown ga key '" + key + "'");
    } else if (section == "boost") {
      if (key == "rounds") plan.boost.rounds = ParseInts(value)[0];
      else Raise(Errc::kParseError, path + ": unknown boost key '" + key + "'");
    } else if (section == "svm") {
      if (key == "c_grid") plan.svm.c_grid = ParseDoubles(value);
      else if (key == "gamma_grid") plan.svm.gamma_grid = ParseDoubles(value);
      else if (key == "inner_folds") plan.svm.inner_folds = ParseInts(value)[0];
      else if (key == "tolerance") plan.svm.tolerance = ParseDoubles(value)[0];
      else if (key == "max_steps") plan.svm.max_steps = ParseInts(value)[0];
      else Raise(Errc::kParseError, path + ": unknown svm key '" + key + "'");
    } else if (section.empty()) {
      if (key == "seed") plan.seed = ParseU64Strict(value, Errc::kParseError);
      else if (key == "representation") plan.representation = RepresentationFromString(value);
      else if (key == "folds") plan.folds = ParseInts(value)[0];
      else if (key == "delta") plan.delta = ParseDoubles(value)[0];
      else if (key == "group_by_speaker") plan.group_by_speaker = (value == "true" || value == "1");
      else if (key == "knn_k_candidates") plan.knn.k_candidates = ParseInts(value);
      else Raise(Errc::kParseError, path + ": unknown key '" + key + "'");
    } else {
      Raise(Errc::kParseError, path + ": unknown section '" + section + "'");
    }
  }
  plan.Validate();
  return plan;
}

}  // namespace emofeat

#endif  // EMOFEAT_PLAN_HPP_
