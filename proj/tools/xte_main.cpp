// Command-line front end: build the definition knowledge graph, train the
// tree edit distance threshold, evaluate a dataset, or explain one pair.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "xte/corpus.hpp"
#include "xte/pipeline.hpp"
#include "xte/util.hpp"

namespace {

void require_readable(const std::string& path, const std::string& flag) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError(flag, "cannot read file: " + path);
}

struct ResourceArgs {
  std::string pairs, trees, kg, embeddings, syn, ant, hyper, ted_model;
  std::string stopwords, lemmas, neg_markers, config;
};

void add_resource_flags(CLI::App* cmd, ResourceArgs& args, bool need_pairs = true) {
  if (need_pairs)
    cmd->add_option("--pairs", args.pairs, "entailment pairs TSV")->required();
  cmd->add_option("--trees", args.trees, "CoNLL-U dependency parses");
  cmd->add_option("--kg", args.kg, "definition knowledge graph triples TSV");
  cmd->add_option("--embeddings", args.embeddings, "word vectors (text format)");
  cmd->add_option("--syn", args.syn, "synonym pairs TSV");
  cmd->add_option("--ant", args.ant, "antonym pairs TSV");
  cmd->add_option("--hyper", args.hyper, "hypernym pairs TSV (hyponym\\thypernym)");
  cmd->add_option("--ted-model", args.ted_model, "trained threshold file");
  cmd->add_option("--stopwords", args.stopwords, "stop word list (built-in default)");
  cmd->add_option("--lemmas", args.lemmas, "lemma table TSV");
  cmd->add_option("--neg-markers", args.neg_markers, "negation marker list");
  cmd->add_option("--config", args.config, "key=value configuration file");
}

void check_resources(const ResourceArgs& a) {
  require_readable(a.pairs, "--pairs");
  require_readable(a.trees, "--trees");
  require_readable(a.kg, "--kg");
  require_readable(a.embeddings, "--embeddings");
  require_readable(a.syn, "--syn");
  require_readable(a.ant, "--ant");
  require_readable(a.hyper, "--hyper");
  require_readable(a.ted_model, "--ted-model");
  require_readable(a.stopwords, "--stopwords");
  require_readable(a.lemmas, "--lemmas");
  require_readable(a.neg_markers, "--neg-markers");
  require_readable(a.config, "--config");
}

xte::Resources load_resources(const ResourceArgs& a) {
  xte::Resources res;
  res.stopwords = a.stopwords.empty() ? xte::default_stopwords()
                                      : xte::load_stopwords(a.stopwords);
  if (!a.lemmas.empty()) res.lemmas = xte::load_lemmas(a.lemmas);
  if (!a.trees.empty()) res.load_trees(a.trees);
  if (!a.kg.empty()) {
    res.graph = xte::load_graph(a.kg);
    res.has_graph = true;
    res.idf = xte::compute_idf(res.graph.definition_documents(), res.lemmas);
  }
  if (!a.embeddings.empty()) {
    res.store = xte::load_embeddings(a.embeddings);
    res.has_store = true;
  }
  res.lex = xte::load_lex_tables(a.syn, a.ant, a.hyper);
  if (!a.neg_markers.empty()) {
    res.negation_markers.clear();
    for (const auto& line : xte::split(xte::read_file(a.neg_markers), '\n')) {
      std::string m = xte::trim(line);
      if (!m.empty() && m[0] != '#') res.negation_markers.push_back(xte::to_lower(m));
    }
  }
  return res;
}

xte::PipelineConfig load_config(const ResourceArgs& a) {
  xte::PipelineConfig cfg;
  if (!a.config.empty()) cfg = xte::load_pipeline_config(a.config, cfg);
  if (!a.ted_model.empty()) cfg.ted_threshold = xte::load_threshold(a.ted_model);
  return cfg;
}

int cmd_build_kg(const std::string& definitions, const std::string& out) {
  xte::DefinitionGraph graph = xte::ingest_labeled_definitions(definitions);
  xte::save_graph(graph, out);
  std::cerr << "[xte] wrote " << graph.entity_count() << " entities, " << graph.role_count()
            << " role nodes to " << out << "\n";
  return 0;
}

int cmd_train_ted(const ResourceArgs& args, const std::string& weights,
                  const std::string& out) {
  xte::PipelineConfig cfg = load_config(args);
  if (!weights.empty()) {
    auto parts = xte::split(weights, ',');
    if (parts.size() != 3)
      throw CLI::ValidationError("--weights", "expected w_insert,w_delete,w_replace");
    cfg.costs.w_insert = std::stod(parts[0]);
    cfg.costs.w_delete = std::stod(parts[1]);
    cfg.costs.w_replace = std::stod(parts[2]);
  }
  cfg.costs.validate();

  xte::Resources res = load_resources(args);
  std::vector<xte::EntailmentPair> pairs = xte::load_dataset(args.pairs);
  std::vector<xte::TrainPoint> points;
  for (const auto& p : pairs) {
    if (!p.gold.has_value()) {
      xte::log_warn("skipping pair " + p.id + ": no gold label");
      continue;
    }
    auto t_it = res.trees.find(p.id + ".T");
    auto h_it = res.trees.find(p.id + ".H");
    if (t_it == res.trees.end() || h_it == res.trees.end()) {
      xte::log_warn("skipping pair " + p.id + ": missing dependency trees");
      continue;
    }
    double dist = xte::edit_distance(t_it->second, h_it->second, cfg.costs);
    points.push_back({xte::relative_distance(dist, t_it->second, h_it->second), *p.gold});
  }
  xte::TrainResult result = xte::train_threshold(points);
  xte::save_threshold(out, result.threshold);
  std::cout << "trained threshold t=" << result.threshold << " (train F1=" << result.f1
            << ", " << points.size() << " points)\n";
  return 0;
}

int cmd_evaluate(const ResourceArgs& args, const std::string& out) {
  xte::PipelineConfig cfg = load_config(args);
  xte::Resources res = load_resources(args);
  std::vector<xte::EntailmentPair> pairs = xte::load_dataset(args.pairs);
  xte::RunReport report = xte::evaluate_dataset(pairs, res, cfg);
  std::string json = xte::report_to_json(report, pairs, cfg);
  xte::write_file(out, json);
  size_t errors = 0;
  for (const auto& v : report.verdicts)
    if (!v.error.empty()) ++errors;
  if (errors > 0)
    std::cerr << "[xte] warning: " << errors << " pair(s) recorded with resource errors\n";
  if (report.metrics) {
    std::cout << "pairs=" << report.verdicts.size() << " P=" << report.metrics->precision
              << " R=" << report.metrics->recall << " F1=" << report.metrics->f1 << "\n";
  } else {
    std::cout << "pairs=" << report.verdicts.size() << " (no gold labels, metrics skipped)\n";
  }
  std::cout << "report written to " << out << "\n";
  return 0;
}

int cmd_explain(const ResourceArgs& args, const std::string& id) {
  xte::PipelineConfig cfg = load_config(args);
  xte::Resources res = load_resources(args);
  std::vector<xte::EntailmentPair> pairs = xte::load_dataset(args.pairs);
  for (const auto& p : pairs) {
    if (p.id != id) continue;
    xte::Verdict v = xte::run_pipeline(p, res, cfg);
    std::cout << "pair " << p.id << "\n";
    std::cout << "T: " << p.text << "\n";
    std::cout << "H: " << p.hypothesis << "\n";
    std::cout << "route: " << xte::route_name(v.route) << "\n";
    std::cout << "entailment: " << (v.entailment ? "yes" : "no") << "\n";
    if (!v.context_flags.empty()) {
      std::cout << "context flags:";
      for (const auto& f : v.context_flags) std::cout << " " << f;
      std::cout << "\n";
    }
    if (v.score.has_value()) std::cout << "score: " << *v.score << "\n";
    if (!v.error.empty()) std::cout << "error: " << v.error << "\n";
    if (!v.justification.empty()) {
      std::cout << "justification:\n";
      for (const auto& line : v.justification) std::cout << line << "\n";
    }
    return 0;
  }
  std::cerr << "pair id '" << id << "' not found in " << args.pairs << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"XTE composite text entailment engine"};
  app.require_subcommand(1);

  // build-kg
  auto* build = app.add_subcommand("build-kg", "convert labeled definitions to a graph");
  std::string definitions, build_out;
  build->add_option("--definitions", definitions, "defs.jsonl")->required();
  build->add_option("--out", build_out, "output triples TSV")->required();

  // train-ted
  auto* train = app.add_subcommand("train-ted", "train the edit distance threshold");
  ResourceArgs train_args;
  add_resource_flags(train, train_args);
  std::string weights, train_out;
  train->add_option("--weights", weights, "w_insert,w_delete,w_replace (default 1,1,2)");
  train->add_option("--out", train_out, "output model file")->required();

  // evaluate
  auto* eval = app.add_subcommand("evaluate", "run the pipeline over a dataset");
  ResourceArgs eval_args;
  add_resource_flags(eval, eval_args);
  std::string eval_out;
  eval->add_option("--out", eval_out, "output report.json")->required();

  // explain
  auto* explain = app.add_subcommand("explain", "explain the verdict for one pair");
  ResourceArgs explain_args;
  add_resource_flags(explain, explain_args);
  std::string explain_id;
  explain->add_option("--id", explain_id, "pair id")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) {
      require_readable(definitions, "--definitions");
      return cmd_build_kg(definitions, build_out);
    }
    if (train->parsed()) {
      check_resources(train_args);
      return cmd_train_ted(train_args, weights, train_out);
    }
    if (eval->parsed()) {
      check_resources(eval_args);
      return cmd_evaluate(eval_args, eval_out);
    }
    if (explain->parsed()) {
      check_resources(explain_args);
      return cmd_explain(explain_args, explain_id);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
