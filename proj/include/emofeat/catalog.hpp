// emofeat/catalog.hpp

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

#ifndef EMOFEAT_CATALOG_HPP_
#define EMOFEAT_CATALOG_HPP_

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "emofeat/core.hpp"

namespace emofeat {

// The canonical registry of acoustic features for emotional speech. Eleven
// categories; 318 features for the utterance-based representation and 296 for
// the segment-based one (the duration category collapses to a single segment
// length entry). Loudness, voice-source and harmonicity features are carried
// as names only: their values come from external tools and are ingested from
// precomputed tables, never extracted here.

enum class FeatureCategory {
  kLoudness,
  kVoiceSource,
  kOtherVoiceSource,
  kHarmonicity,
  kPitch,
  kIntensity,
  kLowPassIntensity,
  kHighPassIntensity,
  kMfcc,
  kFormant,
  kDuration,
};

inline constexpr int kCategoryCount = 11;

inline const char* CategoryName(FeatureCategory c) {
  switch (c) {
    case FeatureCategory::kLoudness: return "Loudness";
    case FeatureCategory::kVoiceSource: return "Voice source";
    case FeatureCategory::kOtherVoiceSource: return "Other voice source";
    case FeatureCategory::kHarmonicity: return "Harmonicity";
    case FeatureCategory::kPitch: return "Pitch";
    case FeatureCategory::kIntensity: return "Intensity";
    case FeatureCategory::kLowPassIntensity: return "Low-pass intensity";
    case FeatureCategory::kHighPassIntensity: return "High-pass intensity";
    case FeatureCategory::kMfcc: return "MFCC";
    case FeatureCategory::kFormant: return "Formant";
    case FeatureCategory::kDuration: return "Duration";
  }
  return "?";
}

struct FeatureDescriptor {
  int index = 0;
  FeatureCategory category = FeatureCategory::kLoudness;
  std::string name;
  bool extractable = false;
  /// Membership in the reference language-independent subsets distilled from
  /// cross-corpus selection (utterance-based and segment-based).
  bool reference_utterance = false;
  bool reference_segment = false;
};

class FeatureCatalog {
 public:
  Representation representation() const { return representation_; }
  const std::vector<FeatureDescriptor>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const FeatureDescriptor& at(std::size_t i) const { return entries_.at(i); }

  /// Index lookup by exact name; -1 when absent.
  int IndexOf(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : it->second;
  }

  std::vector<std::string> Names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.name);
    return out;
  }

  std::vector<int> ExtractableIndices() const {
    std::vector<int> out;
    for (const auto& e : entries_) {
      if (e.extractable) out.push_back(e.index);
    }
    return out;
  }

  std::size_t CountInCategory(FeatureCategory c) const {
    std::size_t n = 0;
    for (const auto& e : entries_) {
      if (e.category == c) ++n;
    }
    return n;
  }

  friend FeatureCatalog BuildCatalog(Representation rep);

 private:
  void Add(FeatureCategory category, const std::string& name, bool extractable) {
    FeatureDescriptor d;
    d.index = static_cast<int>(entries_.size());
    d.category = category;
    d.name = name;
    d.extractable = extractable;
    by_name_.emplace(d.name, d.index);
    entries_.push_back(std::move(d));
  }

  Representation representation_ = Representation::kUtterance;
  std::vector<FeatureDescriptor> entries_;
  std::unordered_map<std::string, int> by_name_;
};

namespace catalog_detail {

// The ten base statistics applied to each of the four derived series
// (local-minima subsequence, local-maxima subsequence, durations between
// consecutive local extrema, and the series itself).
inline const std::array<const char*, 10> kSeriesStats = {
    "mean", "max", "min", "range", "var", "med",
    "1st quartile", "3rd quartile", "iqr", "mean abs. val. of derivative"};

inline const std::array<const char*, 4> kSeriesNames = {
    "minima series", "maxima series", "durations between local extrema series", "series itself"};

// Pitch gets four extra statistics on the series itself.
inline const std::array<const char*, 4> kPitchExtras = {
    "skewness", "fraction of voiced F0 above mean", "range above mean", "range below mean"};

inline std::string SeriesFeatureName(const std::string& prefix, const char* series,
                                     const char* stat) {
  return prefix + " " + series + ": " + stat;
}

inline const std::array<const char*, 7> kVoiceSourceParams = {"E_e",  "γ",   "α",  "β",
                                                              "OQ",   "ε_o", "ε_c"};

}  // namespace catalog_detail

/// Builds the canonical catalog for one representation. The utterance catalog
/// has 318 entries (category counts 20/28/14/14/44/40/40/40/40/15/23); the
/// segment catalog replaces the 23 duration entries with a single segment
/// length entry, giving 296.
inline FeatureCatalog BuildCatalog(Representation rep) {
  using namespace catalog_detail;
  FeatureCatalog cat;
  cat.representation_ = rep;

  // Loudness (20): ingested only.
  for (const char* s : {"mean", "25 percentile", "50 percentile", "75 percentile",
                        "25 percentile RMS", "50 percentile RMS", "75 percentile RMS"}) {
    cat.Add(FeatureCategory::kLoudness, std::string("loudness ") + s, false);
  }
  for (int b = 1; b <= 13; ++b) {
    cat.Add(FeatureCategory::kLoudness, "loudness msl b" + std::to_string(b), false);
  }

  // Voice source (28): four statistics per glottal-flow parameter; ingested only.
  for (const char* p : kVoiceSourceParams) {
    const std::string param(p);
    cat.Add(FeatureCategory::kVoiceSource, "voice source 25 percentile of " + param, false);
    cat.Add(FeatureCategory::kVoiceSource, "voice source median of " + param, false);
    cat.Add(FeatureCategory::kVoiceSource, "voice source 75 percentile of " + param, false);
    cat.Add(FeatureCategory::kVoiceSource, "voice source IQR of normalized Δ" + param, false);
  }

  // Other voice source (14): ingested only.
  for (const char* s :
       {"jitter_PF", "max jitter_PQ", "min jitter_PQ", "shimmer_PF", "max shimmer_PQ",
        "min shimmer_PQ", "25 percentile of GNE", "median of GNE", "75 percentile of GNE",
        "IQR of normalized ΔGNE", "25 percentile of PSP", "median of PSP", "75 percentile of PSP",
        "IQR of normalized ΔPSP"}) {
    cat.Add(FeatureCategory::kOtherVoiceSource, std::string("other voice source ") + s, false);
  }

  // Harmonicity (14): ingested only.
  for (const char* s :
       {"median of intrinsic diss. D_i", "range of intrinsic diss. D_i", "median of avg. diss.",
        "median of avg. diss. derivative", "median of cons. values at interval α_1^c",
        "median of highest cons. interval α_1^c", "median of cons. values at interval α_2^c",
        "median of second highest cons. interval α_2^c", "median of avg. cons. peak values",
        "median of diss. values at interval α_1^d", "median of highest diss. interval α_1^d",
        "median of diss. values at interval α_2^d", "median of second highest diss. interval α_2^d",
        "median of avg. diss. peak values"}) {
    cat.Add(FeatureCategory::kHarmonicity, std::string("harmonicity ") + s, false);
  }

  // Series-statistics families, all extractable.
  struct SeriesFamily {
    FeatureCategory category;
    const char* prefix;
    bool extras;
  };
  const SeriesFamily families[] = {
      {FeatureCategory::kPitch, "pitch", true},
      {FeatureCategory::kIntensity, "intensity", false},
      {FeatureCategory::kLowPassIntensity, "lowpass intensity", false},
      {FeatureCategory::kHighPassIntensity, "highpass intensity", false},
      {FeatureCategory::kMfcc, "mfcc", false},
  };
  for (const auto& fam : families) {
    for (const char* series : kSeriesNames) {
      for (const char* stat : kSeriesStats) {
        cat.Add(fam.category, SeriesFeatureName(fam.prefix, series, stat), true);
      }
      if (fam.extras && std::string(series) == "series itself") {
        for (const char* stat : kPitchExtras) {
          cat.Add(fam.category, SeriesFeatureName(fam.prefix, series, stat), true);
        }
      }
    }
  }

  // Formant (15), stat-major order.
  for (const char* stat : {"mean", "std", "max", "min", "range"}) {
    for (const char* f : {"F1", "F2", "F3"}) {
      cat.Add(FeatureCategory::kFormant, std::string("formant ") + stat + " " + f, true);
    }
  }

  // Duration (23) for the utterance representation; a single segment length
  // entry for the segment representation.
  if (rep == Representation::kUtterance) {
    for (const char* s :
         {"mean dur. of aud. segs.", "max dur. of aud. segs.", "min dur. of aud. segs.",
          "std. of dur. of aud. segs.", "mean dur. of inaud. segs.", "max dur. of inaud. segs.",
          "min dur. of inaud. segs.", "std. of dur. of inaud. segs.", "no. of aud. segs.",
          "no. of inaud. segs.", "no. of aud. frames", "no. of inaud. frames", "longest aud. seg.",
          "longest inaud. seg.", "ratio of no. of aud. to inaud. frames",
          "ratio of no. of aud. to inaud. segs.", "ratio of no. of aud. to total no. of frames",
          "ratio of no. of aud. to total no. of segs.",
          "ratio of no. of aud. frames to no. of aud. segs.",
          "ratio of total duration of aud. segs. to total duration of inaud. segs.",
          "ratio of duration of aud. segs. to total duration of utterance",
          "ratio of duration of inaud. segs. to total duration of utterance",
          "ratio of avg. duration of aud. segs. to avg. duration of inaud. segs."}) {
      cat.Add(FeatureCategory::kDuration, std::string("duration ") + s, true);
    }
  } else {
    cat.Add(FeatureCategory::kDuration, "duration segment length", true);
  }

  // Reference language-independent subset flags (utterance-based list: 161
  // features; segment-based list: 125; their overlap: 87).
  auto mark = [&cat](const std::string& name, bool utterance_flag) {
    int idx = cat.IndexOf(name);
    if (idx < 0) return;  // duration entries are absent from the segment catalog
    if (utterance_flag) {
      cat.entries_[static_cast<std::size_t>(idx)].reference_utterance = true;
    } else {
      cat.entries_[static_cast<std::size_t>(idx)].reference_segment = true;
    }
  };
  auto mark_series = [&mark](const std::string& prefix, const char* series,
                             std::initializer_list<const char*> stats, bool utterance_flag) {
    for (const char* stat : stats) {
      mark(catalog_detail::SeriesFeatureName(prefix, series, stat), utterance_flag);
    }
  };

  // --- utterance-based reference subset ---
  for (const char* s : {"mean", "25 percentile", "50 percentile", "75 percentile",
                        "75 percentile RMS"}) {
    mark(std::string("loudness ") + s, true);
  }
  for (int b = 4; b <= 13; ++b) mark("loudness msl b" + std::to_string(b), true);

  for (const char* s :
       {"median of E_e", "75 percentile of E_e", "IQR of normalized ΔE_e", "75 percentile of γ",
        "25 percentile of α", "75 percentile of α", "IQR of normalized Δα", "25 percentile of β",
        "median of β", "75 percentile of β", "IQR of normalized ΔOQ", "25 percentile of ε_o",
        "median of ε_o", "75 percentile of ε_o", "25 percentile of ε_c", "median of ε_c",
        "75 percentile of ε_c", "IQR of normalized Δε_c"}) {
    mark(std::string("voice source ") + s, true);
  }

  for (const char* s : {"jitter_PF", "max jitter_PQ", "min jitter_PQ", "max shimmer_PQ",
                        "min shimmer_PQ", "25 percentile of GNE", "median of GNE",
                        "75 percentile of GNE", "25 percentile of PSP", "median of PSP",
                        "75 percentile of PSP", "IQR of normalized ΔPSP"}) {
    mark(std::string("other voice source ") + s, true);
  }

  for (const char* s :
       {"median of intrinsic diss. D_i", "range of intrinsic diss. D_i", "median of avg. diss.",
        "median of avg. diss. derivative", "median of cons. values at interval α_1^c",
        "median of highest cons. interval α_1^c", "median of cons. values at interval α_2^c",
        "median of avg. cons. peak values", "median of diss. values at interval α_1^d",
        "median of diss. values at interval α_2^d", "median of avg. diss. peak values"}) {
    mark(std::string("harmonicity ") + s, true);
  }

  mark_series("pitch", "minima series",
              {"mean", "max", "min", "range", "med", "1st quartile", "3rd quartile", "iqr"}, true);
  mark_series("pitch", "maxima series", {"range", "med", "1st quartile", "3rd quartile"}, true);
  mark_series("pitch", "durations between local extrema series", {"min", "range", "med"}, true);
  mark_series("pitch", "series itself",
              {"mean", "max", "min", "range", "var", "med", "1st quartile", "3rd quartile", "iqr",
               "mean abs. val. of derivative", "skewness", "fraction of voiced F0 above mean",
               "range above mean", "range below mean"},
              true);

  mark_series("intensity", "minima series", {"min", "med", "1st quartile", "iqr"}, true);
  mark_series("intensity", "maxima series", {"mean abs. val. of derivative"}, true);
  mark_series("intensity", "series itself", {"min", "var"}, true);

  mark_series("lowpass intensity", "minima series",
              {"mean", "max", "range", "var", "med", "1st quartile", "3rd quartile", "iqr",
               "mean abs. val. of derivative"},
              true);
  mark_series("lowpass intensity", "maxima series",
              {"mean", "max", "var", "med", "3rd quartile", "iqr", "mean abs. val. of derivative"},
              true);
  mark_series("lowpass intensity", "durations between local extrema series",
              {"max", "min", "range", "var", "3rd quartile", "iqr",
               "mean abs. val. of derivative"},
              true);
  mark_series("lowpass intensity", "series itself",
              {"mean", "max", "min", "var", "med", "3rd quartile", "iqr",
               "mean abs. val. of derivative"},
              true);

  mark_series("highpass intensity", "minima series", {"min", "1st quartile"}, true);
  mark_series("highpass intensity", "maxima series",
              {"max", "min", "range", "med", "1st quartile", "mean abs. val. of derivative"}, true);
  mark_series("highpass intensity", "series itself", {"mean", "max", "min"}, true);

  mark_series("mfcc", "minima series",
              {"mean", "med", "1st quartile", "3rd quartile", "mean abs. val. of derivative"},
              true);
  mark_series("mfcc", "maxima series", {"min", "1st quartile", "iqr",
                                        "mean abs. val. of derivative"}, true);
  mark_series("mfcc", "durations between local extrema series", {"var", "med", "1st quartile"},
              true);
  mark_series("mfcc", "series itself",
              {"mean", "med", "3rd quartile", "iqr", "mean abs. val. of derivative"}, true);

  for (const char* s : {"mean F1", "mean F2", "mean F3", "std F2", "std F3"}) {
    mark(std::string("formant ") + s, true);
  }

  for (const char* s : {"mean dur. of aud. segs.", "min dur. of aud. segs.",
                        "std. of dur. of aud. segs.", "ratio of no. of aud. to total no. of frames",
                        "ratio of duration of aud. segs. to total duration of utterance"}) {
    mark(std::string("duration ") + s, true);
  }

  // --- segment-based reference subset ---
  for (const char* s : {"mean", "25 percentile", "50 percentile", "75 percentile",
                        "25 percentile RMS", "50 percentile RMS", "75 percentile RMS"}) {
    mark(std::string("loudness ") + s, false);
  }
  mark("loudness msl b1", false);
  for (int b = 3; b <= 13; ++b) mark("loudness msl b" + std::to_string(b), false);

  for (const char* s :
       {"25 percentile of E_e", "median of E_e", "75 percentile of E_e", "75 percentile of γ",
        "25 percentile of α", "median of α", "75 percentile of α", "25 percentile of β",
        "median of β", "75 percentile of β", "IQR of normalized Δβ", "median of OQ",
        "IQR of normalized ΔOQ", "median of ε_o", "75 percentile of ε_o",
        "IQR of normalized Δε_o", "median of ε_c"}) {
    mark(std::string("voice source ") + s, false);
  }

  for (const char* s : {"max shimmer_PQ", "median of GNE", "median of PSP",
                        "IQR of normalized ΔPSP"}) {
    mark(std::string("other voice source ") + s, false);
  }

  for (const char* s :
       {"median of intrinsic diss. D_i", "median of avg. diss.", "median of avg. diss. derivative",
        "median of cons. values at interval α_1^c", "median of highest cons. interval α_1^c",
        "median of cons. values at interval α_2^c", "median of avg. cons. peak values"}) {
    mark(std::string("harmonicity ") + s, false);
  }

  mark_series("pitch", "minima series",
              {"max", "min", "range", "var", "med", "mean abs. val. of derivative"}, false);
  mark_series("pitch", "maxima series", {"min", "var", "med", "1st quartile", "iqr"}, false);
  mark_series("pitch", "durations between local extrema series", {"min", "med", "1st quartile"},
              false);
  mark_series("pitch", "series itself",
              {"min", "range", "var", "med", "3rd quartile", "iqr",
               "mean abs. val. of derivative", "skewness", "fraction of voiced F0 above mean",
               "range below mean"},
              false);

  mark_series("intensity", "minima series", {"var"}, false);
  mark_series("intensity", "durations between local extrema series", {"var"}, false);

  mark_series("lowpass intensity", "minima series",
              {"mean", "max", "min", "range", "var", "med", "3rd quartile", "iqr",
               "mean abs. val. of derivative"},
              false);
  mark_series("lowpass intensity", "maxima series",
              {"mean", "max", "min", "range", "var", "med", "1st quartile", "3rd quartile",
               "mean abs. val. of derivative"},
              false);
  mark_series("lowpass intensity", "durations between local extrema series",
              {"mean", "min", "med", "mean abs. val. of derivative"}, false);
  mark_series("lowpass intensity", "series itself",
              {"mean", "max", "range", "var", "med", "1st quartile", "3rd quartile", "iqr",
               "mean abs. val. of derivative"},
              false);

  mark_series("highpass intensity", "minima series", {"var", "med"}, false);
  mark_series("highpass intensity", "series itself", {"min"}, false);

  mark_series("mfcc", "minima series",
              {"max", "range", "med", "1st quartile", "mean abs. val. of derivative"}, false);
  mark_series("mfcc", "maxima series", {"range", "1st quartile"}, false);
  mark_series("mfcc", "durations between local extrema series", {"3rd quartile"}, false);
  mark_series("mfcc", "series itself", {"max", "range", "med", "1st quartile"}, false);

  for (const char* s : {"mean F1", "mean F2", "std F1", "max F1", "min F1", "range F1"}) {
    mark(std::string("formant ") + s, false);
  }
  // No duration features in the segment-based reference subset.

  return cat;
}

}  // namespace emofeat

#endif  // EMOFEAT_CATALOG_HPP_
