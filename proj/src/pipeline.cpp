#include "xte/pipeline.hpp"

#include <atomic>
#include <ctime>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "xte/util.hpp"

namespace xte {

Metrics compute_metrics(const std::vector<Verdict>& verdicts,
                        const std::vector<EntailmentPair>& pairs) {
  if (verdicts.size() != pairs.size())
    throw std::runtime_error("verdict count does not match dataset size");
  Metrics m;
  for (size_t i = 0; i < verdicts.size(); ++i) {
    if (!pairs[i].gold.has_value())
      throw std::runtime_error("pair '" + pairs[i].id + "' has no gold label");
    bool gold = *pairs[i].gold;
    bool pred = verdicts[i].entailment;
    if (pred && gold) ++m.tp;
    else if (pred && !gold) ++m.fp;
    else if (!pred && gold) ++m.fn;
    else ++m.tn;
  }
  m.precision = (m.tp + m.fp) ? static_cast<double>(m.tp) / (m.tp + m.fp) : 0.0;
  m.recall = (m.tp + m.fn) ? static_cast<double>(m.tp) / (m.tp + m.fn) : 0.0;
  m.f1 = (m.precision + m.recall > 0)
             ? 2 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

void Resources::load_trees(const std::string& conllu_path) {
  for (const auto& g : load_conllu(conllu_path)) {
    try {
      trees[g.sentence_id] = to_tree(g);
    } catch (const std::exception& e) {
      log_warn("skipping sentence " + g.sentence_id + ": " + e.what());
    }
  }
  has_trees = true;
}

ContextResources Resources::context_resources() const {
  ContextResources ctx;
  ctx.lex = &lex;
  ctx.stopwords = &stopwords;
  ctx.lemmas = &lemmas;
  ctx.negation_markers = negation_markers;
  return ctx;
}

Verdict run_pipeline(const EntailmentPair& pair, const Resources& resources,
                     const PipelineConfig& config) {
  Verdict v;
  v.pair_id = pair.id;

  TokenBag t_bag = normalize(pair.text, resources.stopwords, resources.lemmas);
  TokenBag h_bag = normalize(pair.hypothesis, resources.stopwords, resources.lemmas);
  OverlapResult overlap = compute_overlap(t_bag, h_bag);
  v.route = route(overlap);

  ContextFlags flags = analyze(pair, resources.context_resources());
  v.context_flags = flags.to_set();
  if (flags.any()) {
    v.entailment = false;  // contextual information prevails over both solvers
    return v;
  }

  if (v.route == Route::TED) {
    auto t_it = resources.trees.find(pair.id + ".T");
    auto h_it = resources.trees.find(pair.id + ".H");
    if (t_it == resources.trees.end() || h_it == resources.trees.end()) {
      v.entailment = false;
      v.error = "missing dependency trees for pair " + pair.id;
      log_warn(v.error);
      return v;
    }
    try {
      TedDecision d = ted_decide(t_it->second, h_it->second, config.costs,
                                 config.ted_threshold);
      v.score = d.rel_dist;
      v.entailment = d.entailment;
    } catch (const std::exception& e) {
      v.entailment = false;
      v.error = std::string("ted failure: ") + e.what();
      log_warn(v.error);
    }
    return v;
  }

  if (!resources.has_graph || !resources.has_store) {
    v.entailment = false;
    v.error = "knowledge graph or embeddings unavailable for pair " + pair.id;
    log_warn(v.error);
    return v;
  }
  SemanticResult sem =
      solve_semantic(t_bag, h_bag, overlap, resources.graph, resources.store, resources.idf,
                     resources.lex, resources.stopwords, resources.lemmas, config.search);
  v.entailment = sem.entailment;
  if (sem.entailment && sem.best_path) {
    v.score = static_cast<double>(sem.best_path->steps.size());
    v.justification = write_justification(*sem.best_path, resources.graph);
  }
  return v;
}

RunReport evaluate_dataset(const std::vector<EntailmentPair>& pairs,
                           const Resources& resources, const PipelineConfig& config) {
  RunReport report;
  report.verdicts.resize(pairs.size());

  size_t threads = config.threads == 0 ? 1 : config.threads;
  threads = std::min(threads, pairs.size() == 0 ? size_t{1} : pairs.size());
  if (threads <= 1) {
    for (size_t i = 0; i < pairs.size(); ++i)
      report.verdicts[i] = run_pipeline(pairs[i], resources, config);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&]() {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= pairs.size()) break;
          report.verdicts[i] = run_pipeline(pairs[i], resources, config);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  for (const auto& v : report.verdicts)
    (v.route == Route::TED ? report.route_ted : report.route_dgn) += 1;

  bool all_gold = !pairs.empty();
  for (const auto& p : pairs)
    if (!p.gold.has_value()) all_gold = false;
  if (all_gold) report.metrics = compute_metrics(report.verdicts, pairs);
  return report;
}

namespace {

std::string iso_timestamp() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace

std::string report_to_json(const RunReport& report, const std::vector<EntailmentPair>& pairs,
                           const PipelineConfig& config) {
  using json = nlohmann::ordered_json;
  json root;
  root["schema_version"] = 1;
  root["generated_at"] = iso_timestamp();

  json cfg;
  cfg["ted_threshold"] = config.ted_threshold;
  cfg["w_insert"] = config.costs.w_insert;
  cfg["w_delete"] = config.costs.w_delete;
  cfg["w_replace"] = config.costs.w_replace;
  cfg["max_path_length"] = config.search.max_path_length;
  cfg["max_paths"] = config.search.max_paths;
  cfg["head_word_top_k"] = config.search.head_word_top_k;
  cfg["pair_top_k"] = config.search.pair_top_k;
  cfg["min_idf"] = config.search.min_idf;
  root["config"] = cfg;

  json dist;
  dist["TED"] = report.route_ted;
  dist["DGN"] = report.route_dgn;
  root["route_distribution"] = dist;

  if (report.metrics) {
    const Metrics& m = *report.metrics;
    json jm;
    jm["precision"] = m.precision;
    jm["recall"] = m.recall;
    jm["f1"] = m.f1;
    jm["tp"] = m.tp;
    jm["fp"] = m.fp;
    jm["fn"] = m.fn;
    jm["tn"] = m.tn;
    root["metrics"] = jm;
  } else {
    root["metrics"] = nullptr;
  }

  json verdicts = json::array();
  for (size_t i = 0; i < report.verdicts.size(); ++i) {
    const Verdict& v = report.verdicts[i];
    json jv;
    jv["id"] = v.pair_id;
    if (i < pairs.size() && pairs[i].gold.has_value())
      jv["gold"] = *pairs[i].gold ? "YES" : "NO";
    else
      jv["gold"] = nullptr;
    jv["entailment"] = v.entailment;
    jv["route"] = route_name(v.route);
    jv["context_flags"] = v.context_flags;
    if (v.score.has_value())
      jv["score"] = *v.score;
    else
      jv["score"] = nullptr;
    jv["justification"] = v.justification;
    jv["error"] = v.error;
    verdicts.push_back(jv);
  }
  root["verdicts"] = verdicts;
  return root.dump(2) + "\n";
}

PipelineConfig load_pipeline_config(const std::string& path, PipelineConfig base) {
  std::istringstream in(read_file(path));
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + " line " + std::to_string(line_no) +
                               ": expected key=value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    try {
      if (key == "ted_threshold") base.ted_threshold = std::stod(value);
      else if (key == "w_insert") base.costs.w_insert = std::stod(value);
      else if (key == "w_delete") base.costs.w_delete = std::stod(value);
      else if (key == "w_replace") base.costs.w_replace = std::stod(value);
      else if (key == "max_path_length") base.search.max_path_length = std::stoul(value);
      else if (key == "max_paths") base.search.max_paths = std::stoul(value);
      else if (key == "head_word_top_k") base.search.head_word_top_k = std::stoul(value);
      else if (key == "pair_top_k") base.search.pair_top_k = std::stoul(value);
      else if (key == "min_idf") base.search.min_idf = std::stod(value);
      else if (key == "threads") base.threads = std::stoul(value);
      else
        throw std::runtime_error("unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw std::runtime_error(path + " line " + std::to_string(line_no) +
                               ": cannot parse value '" + value + "'");
    }
  }
  return base;
}

}  // namespace xte
