// emofeat/dataset.hpp

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

#ifndef EMOFEAT_DATASET_HPP_
#define EMOFEAT_DATASET_HPP_

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "emofeat/catalog.hpp"
#include "emofeat/core.hpp"
#include "emofeat/csv.hpp"

namespace emofeat {

// ---------------------------------------------------------------------------
// Corpus manifest

/// One manifest line: where an utterance lives and how it is labelled.
struct ManifestEntry {
  std::string utterance_id;
  std::string audio_path;
  std::string label;    // normalized native label
  std::string speaker;
};

/// Corpus description loaded from a manifest CSV. The header comments declare
/// the corpus id and its native label set, optionally with synonyms:
///   # corpus_id=berlin
///   # labels=happy;sad;anger;neutral;fear:anxiety:fear/anxiety;boredom;disgust
/// Label matching is case-insensitive; synonyms normalize to the canonical
/// spelling (the first token of each group).
struct CorpusManifest {
  std::string corpus_id;
  std::vector<std::string> native_labels;  // canonical spellings, declared order
  std::vector<ManifestEntry> entries;
};

inline std::string LowerAscii(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

namespace detail {

inline std::vector<std::string> SplitOn(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace detail

inline CorpusManifest LoadManifest(const std::string& path) {
  CsvFile file = ReadCsvFile(path);
  CorpusManifest manifest;
  std::unordered_map<std::string, std::string> synonym_to_canonical;  // lowercase -> canonical

  for (const std::string& comment : file.comments) {
    std::string body = TrimWhitespace(comment.substr(1));
    if (body.rfind("corpus_id=", 0) == 0) {
      manifest.corpus_id = TrimWhitespace(body.substr(10));
    } else if (body.rfind("labels=", 0) == 0) {
      for (const std::string& group : detail::SplitOn(body.substr(7), ';')) {
        std::vector<std::string> names = detail::SplitOn(group, ':');
        if (names.empty() || TrimWhitespace(names[0]).empty()) continue;
        const std::string canonical = TrimWhitespace(names[0]);
        manifest.native_labels.push_back(canonical);
        for (const std::string& raw : names) {
          synonym_to_canonical[LowerAscii(TrimWhitespace(raw))] = canonical;
        }
      }
    }
  }
  if (manifest.corpus_id.empty()) {
    Raise(Errc::kParseError, path + ": missing '# corpus_id=' comment");
  }
  if (manifest.native_labels.empty()) {
    Raise(Errc::kParseError, path + ": missing '# labels=' comment");
  }

  const std::vector<std::string> expected = {"utterance_id", "audio_path", "label", "speaker"};
  if (file.header != expected) {
    Raise(Errc::kParseError, path + ": manifest header must be utterance_id,audio_path,label,speaker");
  }

  std::unordered_set<std::string> seen_ids;
  for (const auto& row : file.rows) {
    if (row.size() != 4) {
      Raise(Errc::kRowLengthMismatch, path + ": manifest row with " +
                                          std::to_string(row.size()) + " fields");
    }
    ManifestEntry e;
    e.utterance_id = TrimWhitespace(row[0]);
    e.audio_path = TrimWhitespace(row[1]);
    e.speaker = TrimWhitespace(row[3]);
    auto it = synonym_to_canonical.find(LowerAscii(TrimWhitespace(row[2])));
    if (it == synonym_to_canonical.end()) {
      Raise(Errc::kUnknownLabel, path + ": label '" + row[2] + "' not in declared native set");
    }
    e.label = it->second;
    if (!seen_ids.insert(e.utterance_id).second) {
      Raise(Errc::kDuplicateUtteranceId, path + ": duplicate utterance_id '" + e.utterance_id + "'");
    }
    manifest.entries.push_back(std::move(e));
  }
  return manifest;
}

inline void WriteManifest(const CorpusManifest& manifest, const std::string& path) {
  std::ofstream out(path);
  if (!out) Raise(Errc::kIoError, "cannot write " + path);
  out << "# corpus_id=" << manifest.corpus_id << "\n# labels=";
  for (std::size_t i = 0; i < manifest.native_labels.size(); ++i) {
    out << (i ? ";" : "") << manifest.native_labels[i];
  }
  out << "\nutterance_id,audio_path,label,speaker\n";
  for (const auto& e : manifest.entries) {
    out << e.utterance_id << ',' << e.audio_path << ',' << e.label << ',' << e.speaker << '\n';
  }
}

// ---------------------------------------------------------------------------
// Feature matrix

struct MatrixRow {
  std::string utterance_id;
  int segment_index = 0;  // 0 for utterance rows
  std::vector<double> values;
  std::string label;   // native label (may be empty before a manifest join)
  int class_id = -1;   // set by alignment or native class assignment
  std::string speaker;
};

/// Per-corpus numeric table. `feature_names` defines the column schema (for
/// real corpora it is the catalog's name list; synthetic corpora carry their
/// own). `present[j]` is false for catalog columns that were absent from the
/// ingested file; any evaluation touching such a column is a hard error.
struct FeatureMatrix {
  std::string corpus_id;
  Representation representation = Representation::kUtterance;
  std::vector<std::string> feature_names;
  std::vector<bool> present;
  std::vector<MatrixRow> rows;
  int class_count = 0;  // > 0 once class ids are assigned

  std::size_t width() const { return feature_names.size(); }

  int IndexOf(const std::string& name) const {
    for (std::size_t j = 0; j < feature_names.size(); ++j) {
      if (feature_names[j] == name) return static_cast<int>(j);
    }
    return -1;
  }

  void RequireColumns(const std::vector<int>& subset) const {
    for (int j : subset) {
      if (j < 0 || static_cast<std::size_t>(j) >= width() || !present[static_cast<std::size_t>(j)]) {
        Raise(Errc::kMissingFeatureColumn,
              corpus_id + ": feature column " + std::to_string(j) + " unavailable");
      }
    }
  }
};

/// Assigns class ids from the native labels (sorted unique order) for corpora
/// evaluated on their own task, e.g. independent stability corpora.
inline FeatureMatrix AssignNativeClasses(FeatureMatrix matrix) {
  std::set<std::string> labels;
  for (const auto& r : matrix.rows) labels.insert(r.label);
  std::map<std::string, int> ids;
  for (const auto& l : labels) ids.emplace(l, static_cast<int>(ids.size()));
  for (auto& r : matrix.rows) r.class_id = ids.at(r.label);
  matrix.class_count = static_cast<int>(ids.size());
  return matrix;
}

/// Reads a feature table CSV: first column utterance_id, optional second
/// segment_index, remaining columns drawn from `schema_names`. Labels and
/// speakers are joined from the manifest when one is given.
inline FeatureMatrix IngestFeatureTable(const std::string& path,
                                        const std::vector<std::string>& schema_names,
                                        const CorpusManifest* manifest = nullptr,
                                        const std::string& corpus_id = "") {
  CsvFile file = ReadCsvFile(path);
  if (file.header.empty() || TrimWhitespace(file.header[0]) != "utterance_id") {
    Raise(Errc::kParseError, path + ": first column must be utterance_id");
  }
  std::size_t first_feature = 1;
  bool has_segment_index = false;
  if (file.header.size() > 1 && TrimWhitespace(file.header[1]) == "segment_index") {
    has_segment_index = true;
    first_feature = 2;
  }

  FeatureMatrix matrix;
  matrix.representation = has_segment_index ? Representation::kSegment : Representation::kUtterance;
  matrix.corpus_id = manifest != nullptr ? manifest->corpus_id : corpus_id;
  matrix.feature_names = schema_names;
  matrix.present.assign(schema_names.size(), false);

  std::unordered_map<std::string, int> schema_index;
  for (std::size_t j = 0; j < schema_names.size(); ++j) {
    schema_index.emplace(schema_names[j], static_cast<int>(j));
  }

  std::vector<int> column_to_schema;
  for (std::size_t c = first_feature; c < file.header.size(); ++c) {
    const std::string name = TrimWhitespace(file.header[c]);
    auto it = schema_index.find(name);
    if (it == schema_index.end()) {
      Raise(Errc::kUnknownFeatureName, path + ": unknown feature column '" + name + "'");
    }
    column_to_schema.push_back(it->second);
    matrix.present[static_cast<std::size_t>(it->second)] = true;
  }

  std::unordered_map<std::string, const ManifestEntry*> by_id;
  if (manifest != nullptr) {
    for (const auto& e : manifest->entries) by_id.emplace(e.utterance_id, &e);
  }

  std::unordered_map<std::string, std::string> utterance_label;
  for (const auto& raw : file.rows) {
    if (raw.size() != file.header.size()) {
      Raise(Errc::kRowLengthMismatch,
            path + ": row has " + std::to_string(raw.size()) + " fields, header has " +
                std::to_string(file.header.size()));
    }
    MatrixRow row;
    row.utterance_id = TrimWhitespace(raw[0]);
    if (has_segment_index) {
      row.segment_index = static_cast<int>(ParseLongStrict(raw[1], Errc::kNonNumericValue));
    }
    row.values.assign(matrix.width(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t c = 0; c < column_to_schema.size(); ++c) {
      double v = ParseDoubleStrict(raw[first_feature + c], Errc::kNonNumericValue);
      if (!std::isfinite(v)) {
        Raise(Errc::kNonNumericValue, path + ": non-finite value in row " + row.utterance_id);
      }
      row.values[static_cast<std::size_t>(column_to_schema[c])] = v;
    }
    if (manifest != nullptr) {
      auto it = by_id.find(row.utterance_id);
      if (it == by_id.end()) {
        Raise(Errc::kUnknownLabel,
              path + ": utterance '" + row.utterance_id + "' not present in manifest");
      }
      row.label = it->second->label;
      row.speaker = it->second->speaker;
    }
    auto lit = utterance_label.find(row.utterance_id);
    if (lit == utterance_label.end()) {
      utterance_label.emplace(row.utterance_id, row.label);
    } else if (lit->second != row.label) {
      Raise(Errc::kParseError, path + ": segments of '" + row.utterance_id +
                                   "' carry conflicting labels");
    }
    matrix.rows.push_back(std::move(row));
  }
  return matrix;
}

/// Writes a feature table in the ingestion schema. Missing columns are
/// omitted from the file entirely.
inline void WriteFeatureTable(const FeatureMatrix& matrix, const std::string& path) {
  std::ofstream out(path);
  if (!out) Raise(Errc::kIoError, "cannot write " + path);
  const bool segments = matrix.representation == Representation::kSegment;
  out << "utterance_id";
  if (segments) out << ",segment_index";
  for (std::size_t j = 0; j < matrix.width(); ++j) {
    if (matrix.present[j]) out << ',' << matrix.feature_names[j];
  }
  out << '\n';
  for (const auto& row : matrix.rows) {
    out << row.utterance_id;
    if (segments) out << ',' << row.segment_index;
    for (std::size_t j = 0; j < matrix.width(); ++j) {
      if (matrix.present[j]) out << ',' << FormatDouble(row.values[j]);
    }
    out << '\n';
  }
}

}  // namespace emofeat

#endif  // EMOFEAT_DATASET_HPP_
