#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "xte/context.hpp"
#include "xte/corpus.hpp"
#include "xte/deptree.hpp"
#include "xte/dgn.hpp"
#include "xte/dkg.hpp"
#include "xte/embeddings.hpp"
#include "xte/idf.hpp"
#include "xte/lex.hpp"
#include "xte/normalize.hpp"
#include "xte/ted.hpp"

namespace xte {

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  size_t tp = 0, fp = 0, fn = 0, tn = 0;
};

// YES is the positive class; zero denominators yield zero scores.
Metrics compute_metrics(const std::vector<Verdict>& verdicts,
                        const std::vector<EntailmentPair>& pairs);

struct PipelineConfig {
  CostModel costs;
  double ted_threshold = 2.0;
  SearchConfig search;
  size_t threads = 1;
};

// Shared immutable resources for a run. Missing trees or a missing graph put
// the affected pairs into degraded mode instead of aborting the run.
struct Resources {
  StopwordSet stopwords;
  LemmaTable lemmas;
  std::unordered_map<std::string, DepTree> trees;  // keyed by "<pair_id>.T" / ".H"
  bool has_trees = false;
  DefinitionGraph graph;
  bool has_graph = false;
  EmbeddingStore store;
  bool has_store = false;
  IdfTable idf;
  LexTables lex;
  std::vector<std::string> negation_markers = {"not", "n't", "never", "no"};

  void load_trees(const std::string& conllu_path);
  ContextResources context_resources() const;
};

Verdict run_pipeline(const EntailmentPair& pair, const Resources& resources,
                     const PipelineConfig& config);

struct RunReport {
  std::vector<Verdict> verdicts;  // dataset order
  std::optional<Metrics> metrics;  // present when every pair carries a gold label
  size_t route_ted = 0;
  size_t route_dgn = 0;
};

// Processes pairs with a small worker pool; verdict order follows input order.
RunReport evaluate_dataset(const std::vector<EntailmentPair>& pairs,
                           const Resources& resources, const PipelineConfig& config);

// Stable-key JSON with schema_version 1. Two runs over identical inputs are
// byte-identical except for the generated_at field.
std::string report_to_json(const RunReport& report, const std::vector<EntailmentPair>& pairs,
                           const PipelineConfig& config);

// "key=value" per line, '#' comments. Unknown keys are an error.
PipelineConfig load_pipeline_config(const std::string& path, PipelineConfig base = {});

}  // namespace xte
