// emofeat/extract.hpp

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

#ifndef EMOFEAT_EXTRACT_HPP_
#define EMOFEAT_EXTRACT_HPP_

#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "emofeat/acoustics.hpp"
#include "emofeat/catalog.hpp"
#include "emofeat/dataset.hpp"
#include "emofeat/threadpool.hpp"

namespace emofeat {

struct ExtractedVector {
  std::vector<double> values;  // one per extractable catalog entry, catalog order
  bool degenerate = false;     // some degenerate-stat fallback fired
};

namespace extract_detail {

inline void AppendGroups(std::vector<double>& out, const SeriesStatGroups& groups, bool extended,
                         bool* degenerate) {
  auto push = [&out](const std::vector<double>& v) { out.insert(out.end(), v.begin(), v.end()); };
  push(groups.minima.Base());
  push(groups.maxima.Base());
  push(groups.extrema_durations.Base());
  push(extended ? groups.series.Extended() : groups.series.Base());
  if (groups.minima.degenerate || groups.maxima.degenerate ||
      groups.extrema_durations.degenerate || groups.series.degenerate) {
    *degenerate = true;
  }
}

inline void AppendZeros(std::vector<double>& out, std::size_t n) {
  out.insert(out.end(), n, 0.0);
}

/// Pitch statistics run on the voiced subsequence with true frame times.
inline SeriesStatGroups PitchStatistics(const FrameSeries& pitch) {
  std::vector<double> values, times;
  for (std::size_t i = 0; i < pitch.values.size(); ++i) {
    if (pitch.voiced[i]) {
      values.push_back(pitch.values[i]);
      times.push_back(pitch.TimeOf(i));
    }
  }
  return SeriesStatistics(values, times, true);
}

/// The 219 non-duration extractable features of one signal slice, in catalog
/// order: pitch 44, intensity 40, low-pass 40, high-pass 40, MFCC 40,
/// formants 15.
inline void AppendSpectralProsodic(std::vector<double>& out, const AudioSignal& signal,
                                   const ExtractionConfig& config, bool* degenerate) {
  FrameSeries pitch = ExtractPitchSeries(signal, config);
  bool any_voiced = false;
  for (bool v : pitch.voiced) any_voiced = any_voiced || v;
  if (any_voiced) {
    AppendGroups(out, PitchStatistics(pitch), true, degenerate);
  } else {
    AppendZeros(out, 44);
    *degenerate = true;
  }
  for (IntensityBand band :
       {IntensityBand::kFull, IntensityBand::kLowPass, IntensityBand::kHighPass}) {
    FrameSeries intensity = ExtractIntensitySeries(signal, config, band);
    AppendGroups(out, SeriesStatistics(intensity, false), false, degenerate);
  }
  FrameSeries mfcc = ExtractMfccSeries(signal, config);
  AppendGroups(out, SeriesStatistics(mfcc, false), false, degenerate);
  if (any_voiced) {
    try {
      FormantStats formants = ExtractFormants(signal, config, &pitch);
      out.insert(out.end(), formants.values.begin(), formants.values.end());
    } catch (const Error& e) {
      if (e.code() != Errc::kNoVoicedFrames) throw;
      AppendZeros(out, 15);
      *degenerate = true;
    }
  } else {
    AppendZeros(out, 15);
    *degenerate = true;
  }
}

}  // namespace extract_detail

/// All 242 extractable utterance features in catalog order. A fully unvoiced
/// signal zeroes the pitch and formant blocks and flags the vector.
inline ExtractedVector ExtractUtteranceVector(const AudioSignal& signal,
                                              const ExtractionConfig& config) {
  config.Validate();
  ExtractedVector out;
  out.values.reserve(242);
  extract_detail::AppendSpectralProsodic(out.values, signal, config, &out.degenerate);
  std::vector<SegmentSpan> spans = DetectSegments(signal, config);
  DurationFeatures duration = ExtractDurationFeatures(spans, signal.duration(), config.hop_s);
  out.values.insert(out.values.end(), duration.values.begin(), duration.values.end());
  out.degenerate = out.degenerate || duration.degenerate;
  for (double v : out.values) {
    Require(std::isfinite(v), Errc::kNonNumericValue, "non-finite feature value");
  }
  return out;
}

/// One 220-wide vector per audible segment: the 219 non-duration extractables
/// of the segment slice plus the segment length in seconds.
inline std::vector<ExtractedVector> ExtractSegmentVectors(const AudioSignal& signal,
                                                          const ExtractionConfig& config) {
  config.Validate();
  std::vector<SegmentSpan> spans = DetectSegments(signal, config);
  std::vector<ExtractedVector> out;
  for (const auto& span : spans) {
    if (!span.audible) continue;
    AudioSignal slice;
    slice.sample_rate = signal.sample_rate;
    const auto begin = static_cast<std::size_t>(span.start * signal.sample_rate);
    const auto end =
        std::min(signal.samples.size(), static_cast<std::size_t>(span.end * signal.sample_rate));
    slice.samples.assign(signal.samples.begin() + static_cast<std::ptrdiff_t>(begin),
                         signal.samples.begin() + static_cast<std::ptrdiff_t>(end));
    ExtractedVector vec;
    vec.values.reserve(220);
    extract_detail::AppendSpectralProsodic(vec.values, slice, config, &vec.degenerate);
    vec.values.push_back(span.duration());
    for (double v : vec.values) {
      Require(std::isfinite(v), Errc::kNonNumericValue, "non-finite feature value");
    }
    out.push_back(std::move(vec));
  }
  if (out.empty()) Raise(Errc::kNoAudibleSegments, "no audible segments in signal");
  return out;
}

/// Runs extraction over a whole manifest and assembles the feature matrix in
/// the catalog schema (non-extractable columns are marked missing). Audio
/// paths resolve relative to the manifest's directory.
inline FeatureMatrix ExtractCorpus(const CorpusManifest& manifest,
                                   const std::string& manifest_dir, const FeatureCatalog& catalog,
                                   const ExtractionConfig& config, ThreadPool* pool = nullptr) {
  const Representation rep = catalog.representation();
  FeatureMatrix matrix;
  matrix.corpus_id = manifest.corpus_id;
  matrix.representation = rep;
  matrix.feature_names = catalog.Names();
  matrix.present.assign(catalog.size(), false);
  const std::vector<int> extractable = catalog.ExtractableIndices();
  for (int j : extractable) matrix.present[static_cast<std::size_t>(j)] = true;

  std::vector<std::vector<MatrixRow>> per_entry(manifest.entries.size());
  ParallelFor(pool, manifest.entries.size(), [&](std::size_t e) {
    const ManifestEntry& entry = manifest.entries[e];
    std::filesystem::path audio(entry.audio_path);
    if (audio.is_relative()) audio = std::filesystem::path(manifest_dir) / audio;
    AudioSignal signal = ReadWav(audio.string());

    auto to_row = [&](const ExtractedVector& vec, int segment_index) {
      MatrixRow row;
      row.utterance_id = entry.utterance_id;
      row.segment_index = segment_index;
      row.label = entry.label;
      row.speaker = entry.speaker;
      row.values.assign(catalog.size(), std::numeric_limits<double>::quiet_NaN());
      for (std::size_t i = 0; i < extractable.size(); ++i) {
        row.values[static_cast<std::size_t>(extractable[i])] = vec.values[i];
      }
      return row;
    };
    if (rep == Representation::kUtterance) {
      per_entry[e].push_back(to_row(ExtractUtteranceVector(signal, config), 0));
    } else {
      std::vector<ExtractedVector> vectors = ExtractSegmentVectors(signal, config);
      for (std::size_t s = 0; s < vectors.size(); ++s) {
        per_entry[e].push_back(to_row(vectors[s], static_cast<int>(s)));
      }
    }
  });
  for (auto& rows : per_entry) {
    for (auto& row : rows) matrix.rows.push_back(std::move(row));
  }
  return matrix;
}

}  // namespace emofeat

#endif  // EMOFEAT_EXTRACT_HPP_
