// emofeat/pipeline.hpp

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

#ifndef EMOFEAT_PIPELINE_HPP_
#define EMOFEAT_PIPELINE_HPP_

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "emofeat/boosting.hpp"
#include "emofeat/combine.hpp"
#include "emofeat/criterion.hpp"
#include "emofeat/dataset.hpp"
#include "emofeat/evaluate.hpp"
#include "emofeat/ga.hpp"
#include "emofeat/plan.hpp"
#include "emofeat/sffs.hpp"
#include "emofeat/subset.hpp"
#include "emofeat/threadpool.hpp"

namespace emofeat {

struct Candidate {
  std::string name;  // FFS, SFS(A1), SFS(A1^A2), ...
  FeatureSubset subset;
};

struct ReportKey {
  std::string candidate;
  std::string corpus;
  std::string classifier;  // "knn" | "svm"

  bool operator<(const ReportKey& o) const {
    return std::tie(candidate, corpus, classifier) <
           std::tie(o.candidate, o.corpus, o.classifier);
  }
};

/// Everything the run produces: the candidate pool, the full rate table over
/// (candidate x corpus x classifier), ranks, and the final choice.
struct RankingReport {
  Representation representation = Representation::kUtterance;
  std::vector<std::string> selection_corpora;
  std::vector<std::string> independent_corpora;
  std::vector<std::string> classifiers;
  std::vector<Candidate> candidates;
  std::map<ReportKey, RecognitionRate> cells;
  std::vector<int> rank_sum;      // per candidate, over selection cells
  std::vector<int> overall_rank;  // 1-based, per candidate
  std::string chosen_train_corpus;
  int chosen_candidate = -1;
  bool delta_screen_failed = false;  // no candidate passed; top-ranked returned
  std::vector<std::string> feature_names;
  std::vector<std::string> warnings;

  const Candidate& chosen() const { return candidates.at(static_cast<std::size_t>(chosen_candidate)); }
  const RecognitionRate& At(const std::string& candidate, const std::string& corpus,
                            const std::string& classifier) const {
    return cells.at(ReportKey{candidate, corpus, classifier});
  }
};

namespace pipeline_detail {

struct LoadedCorpus {
  FeatureMatrix native;  // class ids assigned from native labels
  bool independent = false;
};

inline std::map<std::string, LoadedCorpus> LoadCorpora(const ExperimentPlan& plan) {
  std::map<std::string, LoadedCorpus> out;
  for (const auto& ref : plan.corpora) {
    try {
      CorpusManifest manifest = LoadManifest(ref.manifest_path);
      Require(manifest.corpus_id == ref.corpus_id, Errc::kParseError,
              "manifest corpus_id '" + manifest.corpus_id + "' does not match plan id '" +
                  ref.corpus_id + "'");
      CsvFile probe = ReadCsvFile(ref.features_path);
      std::vector<std::string> schema;
      std::size_t first = 1;
      if (probe.header.size() > 1 && probe.header[1] == "segment_index") first = 2;
      for (std::size_t c = first; c < probe.header.size(); ++c) schema.push_back(probe.header[c]);
      FeatureMatrix matrix = IngestFeatureTable(ref.features_path, schema, &manifest);
      LoadedCorpus loaded;
      loaded.native = AssignNativeClasses(std::move(matrix));
      loaded.independent = ref.independent;
      out.emplace(ref.corpus_id, std::move(loaded));
    } catch (const Error& e) {
      Raise(e.code(), "corpus " + ref.corpus_id + ": " + e.what());
    }
  }
  // all corpora must share one schema
  const auto& first = out.begin()->second.native.feature_names;
  for (const auto& [id, corpus] : out) {
    Require(corpus.native.feature_names == first, Errc::kParseError,
            "corpus " + id + " has a different feature schema");
  }
  return out;
}

inline std::vector<int> UsableColumns(const FeatureMatrix& matrix) {
  std::vector<int> out;
  for (std::size_t j = 0; j < matrix.width(); ++j) {
    if (matrix.present[j]) out.push_back(static_cast<int>(j));
  }
  return out;
}

}  // namespace pipeline_detail

/// Cross-corpus pipeline. Holds the loaded corpora plus criterion caches per
/// (corpus, alignment) so selectors and the train-corpus choice share scores.
class Pipeline {
 public:
  Pipeline(ExperimentPlan plan, ThreadPool* pool = nullptr)
      : plan_(std::move(plan)), pool_(pool) {
    plan_.Validate();
    corpora_ = pipeline_detail::LoadCorpora(plan_);
  }

  /// Access for tests and tools.
  const ExperimentPlan& plan() const { return plan_; }
  const FeatureMatrix& native(const std::string& corpus_id) const {
    return corpora_.at(corpus_id).native;
  }

  /// Criterion for one (corpus, alignment); built lazily, folds and k frozen.
  const WrapperCriterion& CriterionFor(const std::string& corpus_id,
                                       const AlignmentScheme& alignment) {
    const std::string key = corpus_id + "|" + alignment.scheme_id;
    auto it = criteria_.find(key);
    if (it != criteria_.end()) return *it->second;
    FeatureMatrix aligned = ApplyAlignment(corpora_.at(corpus_id).native, alignment);
    FoldPlan folds = StratifiedKFold(
        aligned, plan_.folds,
        DeriveSeed(plan_.seed, "folds:" + corpus_id + ":" + alignment.scheme_id),
        plan_.group_by_speaker);
    const int k = SelectKnnK(aligned, folds, plan_.knn.k_candidates,
                             pipeline_detail::UsableColumns(aligned));
    auto criterion = std::make_unique<WrapperCriterion>(aligned, std::move(folds), k);
    auto [pos, unused] = criteria_.emplace(key, std::move(criterion));
    return *pos->second;
  }

  struct RoundResult {
    FeatureSubset subset;
    double mean_test_score = 0.0;  // criterion mean over the other selection corpora
    FeatureSubset sffs, ga, boost;
    bool intersection_empty = false;
  };

  /// One (train corpus, alignment) round: run the three selectors, combine by
  /// union/intersection, and keep whichever tests better on the remaining
  /// selection corpora. An empty intersection falls back to the union.
  RoundResult RunAlignmentRound(const std::string& train_corpus,
                                const AlignmentScheme& alignment) {
    const WrapperCriterion& criterion = CriterionFor(train_corpus, alignment);
    const std::vector<int> usable =
        pipeline_detail::UsableColumns(corpora_.at(train_corpus).native);

    RoundResult result;
    GaParams ga = plan_.ga;
    ga.seed = DeriveSeed(plan_.seed, "ga:" + train_corpus + ":" + alignment.scheme_id);
    result.sffs = SffsSelect(criterion, usable, plan_.sffs, pool_).subset;
    result.ga = GaSelect(criterion, usable, ga, pool_).subset;
    FeatureMatrix aligned = ApplyAlignment(corpora_.at(train_corpus).native, alignment);
    result.boost = BoostSelect(aligned, usable, plan_.boost, pool_).subset;
    for (FeatureSubset* s : {&result.sffs, &result.ga, &result.boost}) {
      s->alignment = alignment.scheme_id;
      s->train_corpus = train_corpus;
      s->Normalize();
    }

    FeatureSubset union_subset =
        CombineSubsets({result.sffs, result.ga, result.boost}, CombineOp::kUnion);
    FeatureSubset chosen;
    std::vector<const WrapperCriterion*> test_criteria;
    for (const std::string& other : plan_.SelectionCorpora()) {
      if (other != train_corpus) test_criteria.push_back(&CriterionFor(other, alignment));
    }
    try {
      FeatureSubset intersection =
          CombineSubsets({result.sffs, result.ga, result.boost}, CombineOp::kIntersection);
      chosen = ChooseCombined(union_subset, intersection, test_criteria);
    } catch (const Error& e) {
      if (e.code() != Errc::kEmptyIntersection) throw;
      result.intersection_empty = true;
      chosen = union_subset;
    }
    chosen.alignment = alignment.scheme_id;
    chosen.train_corpus = train_corpus;
    double acc = 0.0;
    for (const WrapperCriterion* c : test_criteria) acc += c->Score(chosen.indices);
    result.mean_test_score = acc / static_cast<double>(test_criteria.size());
    result.subset = chosen;
    return result;
  }

  /// Candidate pool: each alignment subset, all pairwise intersections, the
  /// grand intersection, and the full-set baseline; deduplicated by index
  /// set, empty intersections dropped with a warning.
  std::vector<Candidate> BuildCandidates(const std::vector<FeatureSubset>& alignment_subsets,
                                         std::vector<std::string>* warnings) const {
    const auto& schema = corpora_.begin()->second.native;
    std::vector<Candidate> pool;
    std::set<std::vector<int>> seen;
    auto add = [&pool, &seen](const std::string& name, FeatureSubset subset) {
      subset.Normalize();
      if (subset.indices.empty()) return;
      if (!seen.insert(subset.indices).second) return;  // dedup
      pool.push_back(Candidate{name, std::move(subset)});
    };

    const std::size_t n = alignment_subsets.size();
    for (std::size_t i = 0; i < n; ++i) {
      add("SFS(" + alignment_subsets[i].alignment + ")", alignment_subsets[i]);
    }
    auto intersect = [&](const std::vector<std::size_t>& ids, const std::string& name) {
      std::vector<FeatureSubset> parts;
      for (std::size_t i : ids) parts.push_back(alignment_subsets[i]);
      try {
        FeatureSubset inter = CombineSubsets(parts, CombineOp::kIntersection);
        add(name, inter);
      } catch (const Error& e) {
        if (e.code() != Errc::kEmptyIntersection) throw;
        if (warnings != nullptr) warnings->push_back("empty intersection dropped: " + name);
      }
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        intersect({i, j}, "SFS(" + alignment_subsets[i].alignment + "∩" +
                              alignment_subsets[j].alignment + ")");
      }
    }
    if (n >= 3) {
      std::vector<std::size_t> all(n);
      for (std::size_t i = 0; i < n; ++i) all[i] = i;
      std::string name = "SFS(";
      for (std::size_t i = 0; i < n; ++i) {
        name += (i ? "∩" : "") + alignment_subsets[i].alignment;
      }
      name += ")";
      intersect(all, name);
    }

    FeatureSubset full;
    full.indices = pipeline_detail::UsableColumns(schema);
    full.selector = SelectorKind::kFull;
    add("FFS", full);
    return pool;
  }

  /// Native-task folds for the final evaluation of one corpus.
  FoldPlan EvaluationFolds(const std::string& corpus_id) const {
    const FeatureMatrix& native = corpora_.at(corpus_id).native;
    return StratifiedKFold(native, plan_.folds, DeriveSeed(plan_.seed, "eval-folds:" + corpus_id),
                           plan_.group_by_speaker);
  }

  /// Fills report cells for every candidate on the given corpora with both
  /// classifiers, on each corpus's native task.
  void EvaluateCells(const std::vector<Candidate>& candidates,
                     const std::vector<std::string>& corpus_ids, RankingReport* report) {
    struct Job {
      std::size_t candidate;
      std::string corpus;
      std::string classifier;
    };
    std::vector<Job> jobs;
    for (const std::string& corpus : corpus_ids) {
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        jobs.push_back({c, corpus, "knn"});
        jobs.push_back({c, corpus, "svm"});
      }
    }
    std::vector<RecognitionRate> results(jobs.size());
    std::map<std::string, FoldPlan> folds;
    std::map<std::string, int> knn_k;
    for (const std::string& corpus : corpus_ids) {
      folds[corpus] = EvaluationFolds(corpus);
      const FeatureMatrix& native = corpora_.at(corpus).native;
      knn_k[corpus] = SelectKnnK(native, folds[corpus], plan_.knn.k_candidates,
                                 pipeline_detail::UsableColumns(native));
    }
    ParallelFor(pool_, jobs.size(), [&](std::size_t i) {
      const Job& job = jobs[i];
      const FeatureMatrix& native = corpora_.at(job.corpus).native;
      if (job.classifier == "knn") {
        KnnSpec spec = plan_.knn;
        spec.k = knn_k.at(job.corpus);
        results[i] = CrossValidate(native, spec, folds.at(job.corpus),
                                   candidates[job.candidate].subset.indices);
      } else {
        SvmSpec spec = plan_.svm;
        spec.seed = DeriveSeed(plan_.seed, "svm:" + job.corpus);
        results[i] = CrossValidate(native, spec, folds.at(job.corpus),
                                   candidates[job.candidate].subset.indices);
      }
    });
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      report->cells[ReportKey{candidates[jobs[i].candidate].name, jobs[i].corpus,
                              jobs[i].classifier}] = results[i];
    }
  }

  /// Rank-sum ranking over the selection cells: per (classifier, corpus) each
  /// candidate is ranked by mean rate (1 best; ties by smaller subset then
  /// name), and the overall order sums those ranks.
  void RankCandidates(RankingReport* report) const {
    const auto& candidates = report->candidates;
    report->rank_sum.assign(candidates.size(), 0);
    for (const std::string& classifier : report->classifiers) {
      for (const std::string& corpus : report->selection_corpora) {
        std::vector<std::size_t> order(candidates.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
          const double ra = report->At(candidates[a].name, corpus, classifier).mean;
          const double rb = report->At(candidates[b].name, corpus, classifier).mean;
          if (ra != rb) return ra > rb;
          if (candidates[a].subset.size() != candidates[b].subset.size()) {
            return candidates[a].subset.size() < candidates[b].subset.size();
          }
          return candidates[a].name < candidates[b].name;
        });
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
          report->rank_sum[order[pos]] += static_cast<int>(pos) + 1;
        }
      }
    }
    // overall rank: rank-sum, then mean rate over all cells, then size
    std::vector<double> mean_rate(candidates.size(), 0.0);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      int count = 0;
      for (const auto& [key, rate] : report->cells) {
        if (key.candidate == candidates[c].name) {
          mean_rate[c] += rate.mean;
          ++count;
        }
      }
      if (count > 0) mean_rate[c] /= count;
    }
    std::vector<std::size_t> order(candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (report->rank_sum[a] != report->rank_sum[b]) {
        return report->rank_sum[a] < report->rank_sum[b];
      }
      if (mean_rate[a] != mean_rate[b]) return mean_rate[a] > mean_rate[b];
      if (candidates[a].subset.size() != candidates[b].subset.size()) {
        return candidates[a].subset.size() < candidates[b].subset.size();
      }
      return candidates[a].name < candidates[b].name;
    });
    report->overall_rank.assign(candidates.size(), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      report->overall_rank[order[pos]] = static_cast<int>(pos) + 1;
    }
  }

  /// Trade-off choice: among candidates within delta of the full-set baseline
  /// on every cell, maximize the mean advantage over the baseline; ties to
  /// the smaller subset. If nothing passes the screen, the top-ranked
  /// candidate is returned and the report flagged.
  void ChooseLanguageIndependent(RankingReport* report) const {
    const auto& candidates = report->candidates;
    int baseline = -1;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (candidates[c].name == "FFS") baseline = static_cast<int>(c);
    }
    Require(baseline >= 0, Errc::kInvalidArgument, "candidate pool lacks the full-set baseline");

    std::vector<std::string> all_corpora = report->selection_corpora;
    all_corpora.insert(all_corpora.end(), report->independent_corpora.begin(),
                       report->independent_corpora.end());

    int best = -1;
    double best_advantage = 0.0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (static_cast<int>(c) == baseline) continue;
      bool passes = true;
      double advantage = 0.0;
      int cells = 0;
      for (const std::string& classifier : report->classifiers) {
        for (const std::string& corpus : all_corpora) {
          const double rate = report->At(candidates[c].name, corpus, classifier).mean;
          const double base = report->At(candidates[baseline].name, corpus, classifier).mean;
          if (rate < base - plan_.delta) passes = false;
          advantage += rate - base;
          ++cells;
        }
      }
      if (!passes) continue;
      advantage /= cells;
      if (best < 0 || advantage > best_advantage ||
          (advantage == best_advantage &&
           candidates[c].subset.size() < candidates[static_cast<std::size_t>(best)].subset.size())) {
        best = static_cast<int>(c);
        best_advantage = advantage;
      }
    }
    if (best >= 0) {
      report->chosen_candidate = best;
      report->delta_screen_failed = false;
      return;
    }
    // fall back to the top-ranked candidate
    report->delta_screen_failed = true;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (report->overall_rank[c] == 1) report->chosen_candidate = static_cast<int>(c);
    }
  }

  /// The full run: per-alignment rounds for every training corpus, automatic
  /// training-corpus choice, candidate pool, ranking, independent-corpus
  /// stability extension, and the final trade-off. Deterministic under the
  /// plan seed.
  RankingReport Run() {
    RankingReport report;
    report.representation = plan_.representation;
    report.selection_corpora = plan_.SelectionCorpora();
    report.independent_corpora = plan_.IndependentCorpora();
    report.classifiers = {"knn", "svm"};
    report.feature_names = corpora_.begin()->second.native.feature_names;

    // Rounds for every (train corpus, alignment); pick the corpus whose
    // subsets generalize best, by mean test score over its rounds.
    std::map<std::string, std::vector<FeatureSubset>> per_corpus_subsets;
    std::string best_corpus;
    double best_score = 0.0;
    for (const std::string& train : report.selection_corpora) {
      double acc = 0.0;
      for (const AlignmentScheme& alignment : plan_.alignments) {
        RoundResult round = RunAlignmentRound(train, alignment);
        if (round.intersection_empty) {
          report.warnings.push_back("round " + train + "/" + alignment.scheme_id +
                                    ": empty selector intersection, union kept");
        }
        per_corpus_subsets[train].push_back(round.subset);
        acc += round.mean_test_score;
      }
      acc /= static_cast<double>(plan_.alignments.size());
      if (best_corpus.empty() || acc > best_score) {
        best_corpus = train;
        best_score = acc;
      }
    }
    report.chosen_train_corpus = best_corpus;

    report.candidates = BuildCandidates(per_corpus_subsets.at(best_corpus), &report.warnings);

    EvaluateCells(report.candidates, report.selection_corpora, &report);
    RankCandidates(&report);
    if (!report.independent_corpora.empty()) {
      EvaluateCells(report.candidates, report.independent_corpora, &report);
    }
    ChooseLanguageIndependent(&report);
    return report;
  }

 private:
  ExperimentPlan plan_;
  ThreadPool* pool_;
  std::map<std::string, pipeline_detail::LoadedCorpus> corpora_;
  std::map<std::string, std::unique_ptr<WrapperCriterion>> criteria_;
};

}  // namespace emofeat

#endif  // EMOFEAT_PIPELINE_HPP_
