// emofeat/report.hpp

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

#ifndef EMOFEAT_REPORT_HPP_
#define EMOFEAT_REPORT_HPP_

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "emofeat/catalog.hpp"
#include "emofeat/pipeline.hpp"
#include "emofeat/subset.hpp"

namespace emofeat {

namespace report_detail {

/// File-system-safe candidate name: SFS(A1∩A2) -> SFS_A1_A2.
inline std::string SanitizeName(const std::string& name) {
  std::string out;
  for (unsigned char c : name) {
    if (std::isalnum(c)) {
      out += static_cast<char>(c);
    } else if (!out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

}  // namespace report_detail

/// Writes report.md, report.csv, chosen_subset.txt and one subset file per
/// candidate into out_dir. Cells render as "mean (std)" to two decimals.
inline void EmitReport(const RankingReport& report, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) Raise(Errc::kIoError, "cannot create " + out_dir);

  // --- report.csv: one row per (candidate, corpus, classifier) cell ---
  {
    std::ofstream csv(fs::path(out_dir) / "report.csv");
    if (!csv) Raise(Errc::kIoError, "cannot write report.csv");
    csv << "candidate,corpus,classifier,features,mean,std\n";
    std::vector<std::string> corpora = report.selection_corpora;
    corpora.insert(corpora.end(), report.independent_corpora.begin(),
                   report.independent_corpora.end());
    for (const auto& candidate : report.candidates) {
      for (const auto& corpus : corpora) {
        for (const auto& classifier : report.classifiers) {
          const RecognitionRate& rate = report.At(candidate.name, corpus, classifier);
          char buf[64];
          std::snprintf(buf, sizeof(buf), "%.2f,%.2f", rate.mean, rate.std_dev);
          csv << candidate.name << ',' << corpus << ',' << classifier << ','
              << candidate.subset.size() << ',' << buf << '\n';
        }
      }
    }
  }

  // --- report.md ---
  {
    std::ofstream md(fs::path(out_dir) / "report.md");
    if (!md) Raise(Errc::kIoError, "cannot write report.md");
    md << "# Cross-corpus feature selection report\n\n";
    md << "Representation: " << ToString(report.representation) << "\n\n";
    md << "Training corpus (auto-selected): " << report.chosen_train_corpus << "\n\n";

    for (const std::string& classifier : report.classifiers) {
      md << "## Recognition rate [mean (std)] % — "
         << (classifier == "knn" ? "KNN" : "SVM") << "\n\n";
      md << "| Corpora |";
      for (const auto& candidate : report.candidates) md << ' ' << candidate.name << " |";
      md << "\n|---|";
      for (std::size_t i = 0; i < report.candidates.size(); ++i) md << "---|";
      md << "\n| Features |";
      for (const auto& candidate : report.candidates) md << ' ' << candidate.subset.size() << " |";
      md << "\n";
      auto emit_row = [&md, &report, &classifier](const std::string& corpus) {
        md << "| " << corpus << " |";
        for (const auto& candidate : report.candidates) {
          md << ' ' << report.At(candidate.name, corpus, classifier).Format() << " |";
        }
        md << "\n";
      };
      for (const auto& corpus : report.selection_corpora) emit_row(corpus);
      for (const auto& corpus : report.independent_corpora) emit_row(corpus);
      md << "\n";
    }

    md << "## Ranking\n\n| Candidate | Features | Rank sum | Overall rank |\n|---|---|---|---|\n";
    for (std::size_t c = 0; c < report.candidates.size(); ++c) {
      md << "| " << report.candidates[c].name << " | " << report.candidates[c].subset.size()
         << " | " << report.rank_sum[c] << " | " << report.overall_rank[c] << " |\n";
    }
    md << "\n## Chosen subset\n\n";
    md << "- Candidate: " << report.chosen().name << " (" << report.chosen().subset.size()
       << " features)\n";
    md << "- Training corpus: " << report.chosen_train_corpus << "\n";
    if (report.delta_screen_failed) {
      md << "- NOTE: no candidate passed the trade-off screen; the top-ranked candidate was "
            "returned.\n";
    }
    if (report.independent_corpora.empty()) {
      md << "\n_No independent corpora were declared: no stability check was performed._\n";
    } else {
      md << "\nIndependent corpora (stability check): ";
      for (std::size_t i = 0; i < report.independent_corpora.size(); ++i) {
        md << (i ? ", " : "") << report.independent_corpora[i];
      }
      if (report.representation == Representation::kSegment) {
        md << "\n\n_Segment-based rates are utterance-level accuracies (majority vote over "
              "segments)._\n";
      }
      md << "\n";
    }
    if (!report.warnings.empty()) {
      md << "\n## Warnings\n\n";
      for (const auto& w : report.warnings) md << "- " << w << "\n";
    }
  }

  // --- subset files ---
  for (const auto& candidate : report.candidates) {
    WriteSubsetFile(candidate.subset, report.feature_names,
                    (fs::path(out_dir) / ("subset_" + report_detail::SanitizeName(candidate.name) +
                                          ".txt"))
                        .string());
  }
  WriteSubsetFile(report.chosen().subset, report.feature_names,
                  (fs::path(out_dir) / "chosen_subset.txt").string());
}

/// Re-renders the cell table of report.md from a report.csv written by
/// EmitReport (no subsets or ranking information).
inline void RenderReportFromCsv(const std::string& csv_path, const std::string& out_dir) {
  CsvFile file = ReadCsvFile(csv_path);
  const std::vector<std::string> expected = {"candidate", "corpus", "classifier",
                                             "features",  "mean",   "std"};
  Require(file.header == expected, Errc::kParseError, csv_path + ": unexpected header");
  std::vector<std::string> candidates, corpora, classifiers;
  std::map<std::string, std::string> features;
  std::map<std::string, std::string> cells;
  auto remember = [](std::vector<std::string>& seen, const std::string& v) {
    if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
  };
  for (const auto& row : file.rows) {
    Require(row.size() == 6, Errc::kRowLengthMismatch, csv_path + ": bad row");
    remember(candidates, row[0]);
    remember(corpora, row[1]);
    remember(classifiers, row[2]);
    features[row[0]] = row[3];
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f (%.2f)", ParseDoubleStrict(row[4], Errc::kParseError),
                  ParseDoubleStrict(row[5], Errc::kParseError));
    cells[row[0] + "|" + row[1] + "|" + row[2]] = buf;
  }
  std::filesystem::create_directories(out_dir);
  std::ofstream md(std::filesystem::path(out_dir) / "report.md");
  if (!md) Raise(Errc::kIoError, "cannot write report.md");
  md << "# Cross-corpus feature selection report\n";
  for (const auto& classifier : classifiers) {
    md << "\n## Recognition rate [mean (std)] % — " << classifier << "\n\n| Corpora |";
    for (const auto& c : candidates) md << ' ' << c << " |";
    md << "\n|---|";
    for (std::size_t i = 0; i < candidates.size(); ++i) md << "---|";
    md << "\n| Features |";
    for (const auto& c : candidates) md << ' ' << features[c] << " |";
    md << "\n";
    for (const auto& corpus : corpora) {
      md << "| " << corpus << " |";
      for (const auto& c : candidates) {
        auto it = cells.find(c + "|" + corpus + "|" + classifier);
        md << ' ' << (it == cells.end() ? "-" : it->second) << " |";
      }
      md << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// Comparison against the reference language-independent subsets

struct ReferenceOverlap {
  int subset_size = 0;
  int reference_size = 0;       // 161 utterance / 125 segment
  int overlap_reference = 0;    // |subset ∩ reference|
  int core_size = 0;            // features in both reference lists
  int overlap_core = 0;
  std::map<std::string, std::pair<int, int>> per_category;  // overlap / reference count
};

/// Overlap of a subset of catalog features with the reference
/// language-independent lists for the given representation.
inline ReferenceOverlap CompareToReference(const FeatureSubset& subset,
                                           const FeatureCatalog& catalog,
                                           Representation representation) {
  ReferenceOverlap out;
  out.subset_size = static_cast<int>(subset.size());
  std::vector<bool> in_subset(catalog.size(), false);
  for (int j : subset.indices) {
    Require(j >= 0 && static_cast<std::size_t>(j) < catalog.size(), Errc::kInvalidArgument,
            "subset index outside catalog");
    in_subset[static_cast<std::size_t>(j)] = true;
  }
  for (const auto& entry : catalog.entries()) {
    const bool reference = representation == Representation::kUtterance
                               ? entry.reference_utterance
                               : entry.reference_segment;
    const bool core = entry.reference_utterance && entry.reference_segment;
    if (reference) {
      out.reference_size += 1;
      auto& [overlap, total] = out.per_category[CategoryName(entry.category)];
      total += 1;
      if (in_subset[static_cast<std::size_t>(entry.index)]) {
        out.overlap_reference += 1;
        overlap += 1;
      }
    }
    if (core) {
      out.core_size += 1;
      if (in_subset[static_cast<std::size_t>(entry.index)]) out.overlap_core += 1;
    }
  }
  return out;
}

inline std::string FormatReferenceOverlap(const ReferenceOverlap& overlap) {
  std::string out;
  out += "subset features: " + std::to_string(overlap.subset_size) + "\n";
  out += "reference overlap: " + std::to_string(overlap.overlap_reference) + "/" +
         std::to_string(overlap.reference_size) + "\n";
  out += "common-core overlap: " + std::to_string(overlap.overlap_core) + "/" +
         std::to_string(overlap.core_size) + "\n";
  for (const auto& [category, counts] : overlap.per_category) {
    out += "  " + category + ": " + std::to_string(counts.first) + "/" +
           std::to_string(counts.second) + "\n";
  }
  return out;
}

}  // namespace emofeat

#endif  // EMOFEAT_REPORT_HPP_
