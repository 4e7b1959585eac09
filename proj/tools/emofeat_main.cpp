// tools/emofeat_main.cpp

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
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "emofeat/catalog.hpp"
#include "emofeat/extract.hpp"
#include "emofeat/pipeline.hpp"
#include "emofeat/plan.hpp"
#include "emofeat/report.hpp"
#include "emofeat/subset.hpp"
#include "emofeat/synth.hpp"
#include "emofeat/threadpool.hpp"

namespace {

namespace fs = std::filesystem;
using namespace emofeat;

int RunExtract(const std::string& manifest_path, const std::string& config_path,
               const std::string& rep, const std::string& out_path, unsigned jobs) {
  CorpusManifest manifest = LoadManifest(manifest_path);
  ExtractionConfig config =
      config_path.empty() ? ExtractionConfig{} : LoadExtractionConfig(config_path);
  FeatureCatalog catalog = BuildCatalog(RepresentationFromString(rep));
  ThreadPool pool(jobs);
  FeatureMatrix matrix = ExtractCorpus(
      manifest, fs::path(manifest_path).parent_path().string(), catalog, config, &pool);
  WriteFeatureTable(matrix, out_path);
  std::printf("extracted %zu rows x %zu features -> %s\n", matrix.rows.size(),
              catalog.ExtractableIndices().size(), out_path.c_str());
  return 0;
}

int RunSelect(const std::string& plan_path, const std::string& corpus,
              const std::string& alignment_id, const std::string& selector,
              const std::string& out_path, unsigned jobs) {
  ThreadPool pool(jobs);
  Pipeline pipeline(LoadPlan(plan_path), &pool);
  const ExperimentPlan& plan = pipeline.plan();
  bool corpus_known = false;
  for (const auto& ref : plan.corpora) corpus_known = corpus_known || ref.corpus_id == corpus;
  if (!corpus_known) Raise(Errc::kInvalidArgument, "plan has no corpus named " + corpus);
  const AlignmentScheme* alignment = nullptr;
  for (const auto& a : plan.alignments) {
    if (a.scheme_id == alignment_id) alignment = &a;
  }
  if (alignment == nullptr) {
    Raise(Errc::kInvalidArgument, "plan has no alignment named " + alignment_id);
  }
  const WrapperCriterion& criterion = pipeline.CriterionFor(corpus, *alignment);
  std::vector<int> usable;
  for (std::size_t j = 0; j < pipeline.native(corpus).width(); ++j) {
    if (pipeline.native(corpus).present[j]) usable.push_back(static_cast<int>(j));
  }
  FeatureSubset subset;
  if (selector == "sffs") {
    subset = SffsSelect(criterion, usable, plan.sffs, &pool).subset;
  } else if (selector == "ga") {
    GaParams ga = plan.ga;
    ga.seed = DeriveSeed(plan.seed, "ga:" + corpus + ":" + alignment_id);
    subset = GaSelect(criterion, usable, ga, &pool).subset;
  } else if (selector == "boost") {
    FeatureMatrix aligned = ApplyAlignment(pipeline.native(corpus), *alignment);
    subset = BoostSelect(aligned, usable, plan.boost, &pool).subset;
  } else {
    Raise(Errc::kInvalidArgument, "unknown selector " + selector);
  }
  subset.alignment = alignment_id;
  subset.train_corpus = corpus;
  WriteSubsetFile(subset, pipeline.native(corpus).feature_names, out_path);
  std::printf("%s selected %zu features (criterion %.2f) -> %s\n", selector.c_str(),
              subset.size(), criterion.Score(subset.indices), out_path.c_str());
  return 0;
}

int RunPipelineCmd(const std::string& plan_path, const std::string& out_dir, unsigned jobs) {
  ThreadPool pool(jobs);
  Pipeline pipeline(LoadPlan(plan_path), &pool);
  RankingReport report = pipeline.Run();
  EmitReport(report, out_dir);
  std::printf("pipeline done: train corpus %s, chosen %s (%zu features) -> %s\n",
              report.chosen_train_corpus.c_str(), report.chosen().name.c_str(),
              report.chosen().subset.size(), out_dir.c_str());
  return 0;
}

int RunSynth(const std::string& spec_path, const std::string& out_dir) {
  SynthSpec spec = LoadSynthSpec(spec_path);
  SynthOutput synth = SynthCorpora(spec);
  fs::create_directories(out_dir);
  for (std::size_t o = 0; o < synth.matrices.size(); ++o) {
    const std::string id = synth.matrices[o].corpus_id;
    fs::create_directories(fs::path(out_dir) / id);
    WriteManifest(synth.manifests[o], (fs::path(out_dir) / id / "manifest.csv").string());
    WriteFeatureTable(synth.matrices[o], (fs::path(out_dir) / id / "features.csv").string());
  }
  std::printf("wrote %zu synthetic corpora under %s\n", synth.matrices.size(), out_dir.c_str());
  return 0;
}

int RunCompare(const std::string& subset_path, const std::string& rep) {
  const Representation representation = RepresentationFromString(rep);
  FeatureCatalog catalog = BuildCatalog(representation);
  FeatureSubset subset = ReadSubsetFile(subset_path, catalog.Names());
  ReferenceOverlap overlap = CompareToReference(subset, catalog, representation);
  std::fputs(FormatReferenceOverlap(overlap).c_str(), stdout);
  return 0;
}

int RunReport(const std::string& cells_path, const std::string& out_dir) {
  RenderReportFromCsv(cells_path, out_dir);
  std::printf("rendered %s/report.md\n", out_dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-corpus acoustic feature selection toolkit"};
  app.require_subcommand(1);
  unsigned jobs = 0;  // 0 = all logical cores
  app.add_option("--jobs", jobs, "worker threads (default: logical cores)");

  std::string manifest_path, config_path, rep = "utterance", out_path;
  auto* extract = app.add_subcommand("extract", "extract acoustic features from a corpus");
  extract->add_option("--manifest", manifest_path, "corpus manifest csv")->required();
  extract->add_option("--config", config_path, "extraction config file");
  extract->add_option("--rep", rep, "utterance | segment");
  extract->add_option("--out", out_path, "output feature table csv")->required();

  std::string plan_path, corpus, alignment, selector;
  auto* select = app.add_subcommand("select", "run one selector on one corpus");
  select->add_option("--plan", plan_path, "plan file")->required();
  select->add_option("--corpus", corpus, "corpus id from the plan")->required();
  select->add_option("--alignment", alignment, "alignment id from the plan")->required();
  select->add_option("--selector", selector, "sffs | ga | boost")->required();
  select->add_option("--out", out_path, "output subset file")->required();

  std::string out_dir;
  auto* pipeline = app.add_subcommand("pipeline", "run the full cross-corpus pipeline");
  pipeline->add_option("--plan", plan_path, "plan file")->required();
  pipeline->add_option("--out", out_dir, "output directory")->required();

  std::string spec_path;
  auto* synth = app.add_subcommand("synth", "generate planted-feature benchmark corpora");
  synth->add_option("--spec", spec_path, "synth spec file")->required();
  synth->add_option("--out", out_dir, "output directory")->required();

  std::string subset_path;
  auto* compare = app.add_subcommand("compare",
                                     "overlap with the reference language-independent subsets");
  compare->add_option("--subset", subset_path, "subset file over catalog names")->required();
  compare->add_option("--rep", rep, "utterance | segment");

  std::string cells_path;
  auto* report = app.add_subcommand("report", "re-render report.md from a report.csv");
  report->add_option("--cells", cells_path, "report.csv path")->required();
  report->add_option("--out", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (extract->parsed()) return RunExtract(manifest_path, config_path, rep, out_path, jobs);
    if (select->parsed()) return RunSelect(plan_path, corpus, alignment, selector, out_path, jobs);
    if (pipeline->parsed()) return RunPipelineCmd(plan_path, out_dir, jobs);
    if (synth->parsed()) return RunSynth(spec_path, out_dir);
    if (compare->parsed()) return RunCompare(subset_path, rep);
    if (report->parsed()) return RunReport(cells_path, out_dir);
  } catch (const emofeat::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
