// emofeat/synth.hpp

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

#ifndef EMOFEAT_SYNTH_HPP_
#define EMOFEAT_SYNTH_HPP_

#include <string>
#include <vector>

#include "emofeat/core.hpp"
#include "emofeat/dataset.hpp"

namespace emofeat {

/// Benchmark corpora with planted structure: shared-informative columns carry
/// the same class-conditional mean pattern in every corpus, corpus-specific
/// columns carry a class-dependent pattern in their own corpus only, and
/// noise columns never do. All features have unit noise variance;
/// `separation` is the mean shift of an informative column for its matching
/// class, in units of that sigma.
///
/// Label-set design mirrors real emotional corpora: up to four classes
/// (c0..c3) are common to every corpus, and a corpus with class_count > 4
/// adds its own extra classes (x<corpus>_<i>) that exist nowhere else.
/// Shared column j marks common class j mod 4; extra classes shift every
/// shared column, so they stay separable through the universal structure.
/// Corpus-specific columns mark the corpus's extra classes when it has any
/// (local cues that are redundant at home, dead weight elsewhere, and whose
/// rows a common-classes alignment drops entirely); with no extra classes
/// they mirror the common-class pattern locally.
struct SynthSpec {
  int corpus_count = 3;
  int rows_per_corpus = 200;
  std::vector<int> class_counts;         // per corpus; defaults to 4 each
  int shared_informative = 8;
  std::vector<int> specific_informative; // per corpus; defaults to 4 each
  int noise = 10;
  double separation = 2.0;
  int segments_per_utterance = 1;        // > 1 emits segment-based matrices
  std::uint64_t seed = 1;

  void Normalize() {
    if (class_counts.empty()) class_counts.assign(static_cast<std::size_t>(corpus_count), 4);
    if (specific_informative.empty()) {
      specific_informative.assign(static_cast<std::size_t>(corpus_count), 4);
    }
    Require(static_cast<int>(class_counts.size()) == corpus_count, Errc::kInvalidArgument,
            "class_counts must list one entry per corpus");
    Require(static_cast<int>(specific_informative.size()) == corpus_count, Errc::kInvalidArgument,
            "specific_informative must list one entry per corpus");
    Require(shared_informative >= 1, Errc::kInvalidArgument, "need at least one shared column");
    Require(separation >= 0.0, Errc::kInvalidArgument, "separation must be >= 0");
    Require(segments_per_utterance >= 1, Errc::kInvalidArgument, "segments must be >= 1");
    for (int c : class_counts) {
      Require(c >= 2, Errc::kInvalidArgument, "every corpus needs >= 2 classes");
    }
  }

  int TotalFeatures() const {
    int total = shared_informative + noise;
    for (int s : specific_informative) total += s;
    return total;
  }
};

struct SynthOutput {
  std::vector<FeatureMatrix> matrices;
  std::vector<CorpusManifest> manifests;
  std::vector<std::string> feature_names;  // shared schema
};

/// Deterministic under spec.seed; corpus ids are synth0..synthN-1 and labels
/// c0..c{k-1}. The class-mean pattern assigns separation to column j of an
/// informative block when j mod max_classes equals the class id, so every
/// informative column separates some class.
inline constexpr int kSynthCommonClasses = 4;

inline SynthOutput SynthCorpora(SynthSpec spec) {
  spec.Normalize();
  SynthOutput out;

  std::vector<std::string> names;
  for (int j = 0; j < spec.shared_informative; ++j) {
    names.push_back("shared_" + std::to_string(j));
  }
  std::vector<int> specific_start(static_cast<std::size_t>(spec.corpus_count));
  int offset = spec.shared_informative;
  for (int o = 0; o < spec.corpus_count; ++o) {
    specific_start[static_cast<std::size_t>(o)] = offset;
    for (int j = 0; j < spec.specific_informative[static_cast<std::size_t>(o)]; ++j) {
      names.push_back("specific_synth" + std::to_string(o) + "_" + std::to_string(j));
    }
    offset += spec.specific_informative[static_cast<std::size_t>(o)];
  }
  for (int j = 0; j < spec.noise; ++j) names.push_back("noise_" + std::to_string(j));
  out.feature_names = names;

  for (int o = 0; o < spec.corpus_count; ++o) {
    const std::string corpus_id = "synth" + std::to_string(o);
    Rng rng(DeriveSeed(spec.seed, "synth:" + corpus_id));
    const int classes = spec.class_counts[static_cast<std::size_t>(o)];
    const int common = std::min(classes, kSynthCommonClasses);
    const int extras = classes - common;

    FeatureMatrix matrix;
    matrix.corpus_id = corpus_id;
    matrix.representation = spec.segments_per_utterance > 1 ? Representation::kSegment
                                                            : Representation::kUtterance;
    matrix.feature_names = names;
    matrix.present.assign(names.size(), true);
    matrix.class_count = classes;

    CorpusManifest manifest;
    manifest.corpus_id = corpus_id;
    for (int c = 0; c < common; ++c) manifest.native_labels.push_back("c" + std::to_string(c));
    for (int e = 0; e < extras; ++e) {
      manifest.native_labels.push_back("x" + std::to_string(o) + "_" + std::to_string(e));
    }

    for (int r = 0; r < spec.rows_per_corpus; ++r) {
      const int cls = r % classes;
      const bool is_extra = cls >= common;
      const std::string utterance_id = corpus_id + "_u" + std::to_string(r);
      const std::string speaker = "s" + std::to_string(r % 10);

      ManifestEntry entry;
      entry.utterance_id = utterance_id;
      entry.audio_path = "";
      entry.label = manifest.native_labels[static_cast<std::size_t>(cls)];
      entry.speaker = speaker;
      manifest.entries.push_back(entry);

      for (int seg = 0; seg < spec.segments_per_utterance; ++seg) {
        MatrixRow row;
        row.utterance_id = utterance_id;
        row.segment_index = seg;
        row.label = entry.label;
        row.class_id = cls;
        row.speaker = speaker;
        row.values.resize(names.size());
        for (std::size_t j = 0; j < names.size(); ++j) {
          row.values[j] = rng.NextGaussian();
        }
        // shared informative pattern over the common classes, identical in
        // every corpus; extra classes shift every shared column
        for (int j = 0; j < spec.shared_informative; ++j) {
          if (is_extra || j % kSynthCommonClasses == cls) {
            row.values[static_cast<std::size_t>(j)] += spec.separation;
          }
        }
        // this corpus's own informative block
        const int start = specific_start[static_cast<std::size_t>(o)];
        const int n_specific = spec.specific_informative[static_cast<std::size_t>(o)];
        for (int j = 0; j < n_specific; ++j) {
          const bool marks = extras > 0 ? (is_extra && (cls - common) == j % extras)
                                        : (j % kSynthCommonClasses == cls);
          if (marks) row.values[static_cast<std::size_t>(start + j)] += spec.separation;
        }
        matrix.rows.push_back(std::move(row));
      }
    }
    out.matrices.push_back(std::move(matrix));
    out.manifests.push_back(std::move(manifest));
  }
  return out;
}

inline SynthSpec LoadSynthSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) Raise(Errc::kMissingFile, "cannot open synth spec: " + path);
  SynthSpec spec;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = TrimWhitespace(line);
    if (t.empty() || t[0] == '#') continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) Raise(Errc::kParseError, path + ": expected key = value");
    const std::string key = TrimWhitespace(t.substr(0, eq));
    const std::string value = TrimWhitespace(t.substr(eq + 1));
    auto ints = [&value]() {
      std::vector<int> out;
      for (const std::string& item : detail::SplitOn(value, ',')) {
        out.push_back(static_cast<int>(ParseLongStrict(item, Errc::kParseError)));
      }
      return out;
    };
    if (key == "corpus_count") spec.corpus_count = ints()[0];
    else if (key == "rows_per_corpus") spec.rows_per_corpus = ints()[0];
    else if (key == "class_counts") spec.class_counts = ints();
    else if (key == "shared_informative") spec.shared_informative = ints()[0];
    else if (key == "specific_informative") spec.specific_informative = ints();
    else if (key == "noise") spec.noise = ints()[0];
    else if (key == "separation") spec.separation = ParseDoubleStrict(value, Errc::kParseError);
    else if (key == "segments_per_utterance") spec.segments_per_utterance = ints()[0];
    else if (key == "seed") spec.seed = ParseU64Strict(value, Errc::kParseError);
    else Raise(Errc::kParseError, path + ": unknown key '" + key + "'");
  }
  spec.Normalize();
  return spec;
}

}  // namespace emofeat

#endif  // EMOFEAT_SYNTH_HPP_
