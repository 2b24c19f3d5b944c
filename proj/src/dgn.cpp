#include "xte/dgn.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "xte/util.hpp"

namespace xte {

void SearchConfig::validate() const {
  if (max_path_length == 0 || max_paths == 0 || head_word_top_k == 0 || pair_top_k == 0)
    throw std::runtime_error("search limits must be positive");
  if (min_idf < 0) throw std::runtime_error("min_idf must be non-negative");
}

std::vector<std::string> Path::word_sequence() const {
  std::vector<std::string> seq{source};
  for (const auto& s : steps) seq.push_back(s.chosen_word);
  return seq;
}

std::vector<HeadWord> head_words(const RoleNode& role, const std::string& target,
                                 const EmbeddingStore& store, const IdfTable& idf,
                                 const StopwordSet& stopwords, const LemmaTable& lemmas,
                                 const SearchConfig& cfg) {
  std::set<std::string> seen;
  std::vector<HeadWord> out;
  for (const auto& tok : lemmatize(tokenize(role.text), lemmas)) {
    if (stopwords.count(tok)) continue;
    if (idf.lookup(tok) < cfg.min_idf) continue;
    if (!seen.insert(tok).second) continue;
    out.push_back({tok, sr(tok, target, store)});
  }
  std::sort(out.begin(), out.end(), [](const HeadWord& a, const HeadWord& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.word < b.word;
  });
  if (out.size() > cfg.head_word_top_k) out.resize(cfg.head_word_top_k);
  return out;
}

namespace {

struct Candidate {
  std::string entity_id;
  std::string role_id;
  double role_sr = 0.0;
  std::string word;
  double word_sr = 0.0;
};

// All next-hop candidates from `word`, ranked by word sr (ties alphabetical).
// Role nodes are filtered by the semantic differential eta over their scores;
// the eta filter is inclusive since eta is itself the bottom value kept.
std::vector<Candidate> expand(const DefinitionGraph& graph, const std::string& word,
                              const std::string& target, const EmbeddingStore& store,
                              const IdfTable& idf, const StopwordSet& stopwords,
                              const LemmaTable& lemmas, const SearchConfig& cfg) {
  struct ScoredRole {
    const RoleNode* role;
    const EntityNode* entity;
    double score;
  };
  std::vector<ScoredRole> roles;
  for (const EntityNode* e : graph.lookup_entities(word)) {
    for (const RoleNode* r : graph.neighbors(*e))
      roles.push_back({r, e, sr(r->text, target, store)});
  }
  if (roles.empty()) return {};

  std::vector<double> scores;
  scores.reserve(roles.size());
  for (const auto& r : roles) scores.push_back(r.score);
  const double eta = semantic_differential_threshold(scores).eta;

  std::vector<ScoredRole> kept;
  for (const auto& r : roles)
    if (r.score >= eta) kept.push_back(r);
  std::sort(kept.begin(), kept.end(), [](const ScoredRole& a, const ScoredRole& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.role->text != b.role->text) return a.role->text < b.role->text;
    return a.role->id < b.role->id;
  });

  std::vector<Candidate> cands;
  std::unordered_set<std::string> seen_words;
  for (const auto& r : kept) {
    for (const auto& hw : head_words(*r.role, target, store, idf, stopwords, lemmas, cfg)) {
      if (!seen_words.insert(hw.word).second) continue;  // best-ranked role wins
      cands.push_back({r.entity->id, r.role->id, r.score, hw.word, hw.score});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.word_sr != b.word_sr) return a.word_sr > b.word_sr;
    return a.word < b.word;
  });
  return cands;
}

struct Partial {
  std::vector<PathStep> steps;
  std::unordered_set<std::string> visited;
  std::string last_word;
};

}  // namespace

std::vector<Path> dgn_search(const DefinitionGraph& graph, const std::string& source,
                             const std::string& target, const EmbeddingStore& store,
                             const IdfTable& idf, const LexTables& lex,
                             const StopwordSet& stopwords, const LemmaTable& lemmas,
                             const SearchConfig& cfg) {
  cfg.validate();
  const std::string src = to_lower(source);
  const std::string tgt = to_lower(target);
  if (src == tgt || lex.synonyms(src, tgt))
    throw std::invalid_argument("dgn_search requires distinct, non-synonym source and target");

  std::vector<Path> results;
  if (graph.lookup_entities(src).empty()) {
    log_info("dgn: source '" + src + "' has no entity in the graph");
    return results;
  }

  auto completes = [&](const std::string& w) { return w == tgt || lex.synonyms(w, tgt); };
  auto record = [&](const Partial& p) {
    Path path;
    path.source = src;
    path.target = tgt;
    path.steps = p.steps;
    path.terminal = p.steps.back().chosen_word == tgt ? Terminal::EXACT : Terminal::SYNONYM;
    results.push_back(std::move(path));
  };

  std::vector<Partial> stack;
  stack.push_back({{}, {src}, src});

  while (!stack.empty() && results.size() < cfg.max_paths) {
    Partial cur = std::move(stack.back());
    stack.pop_back();

    while (cur.steps.size() < cfg.max_path_length) {
      std::vector<Candidate> cands =
          expand(graph, cur.last_word, tgt, store, idf, stopwords, lemmas, cfg);
      std::erase_if(cands, [&](const Candidate& c) { return cur.visited.count(c.word) > 0; });
      if (cands.empty()) break;

      // Completing candidates are recorded immediately, in rank order.
      std::vector<Candidate> open;
      for (const auto& c : cands) {
        if (completes(c.word)) {
          Partial done = cur;
          done.steps.push_back({c.entity_id, c.role_id, c.word, c.role_sr});
          record(done);
          if (results.size() >= cfg.max_paths) return results;
        } else {
          open.push_back(c);
        }
      }
      if (open.empty()) break;

      // Best head word continues this path; the rest fork new partial paths
      // pushed in rank order, as in the navigation procedure.
      for (size_t i = 1; i < open.size(); ++i) {
        Partial alt = cur;
        alt.steps.push_back({open[i].entity_id, open[i].role_id, open[i].word,
                             open[i].role_sr});
        alt.visited.insert(open[i].word);
        alt.last_word = open[i].word;
        stack.push_back(std::move(alt));
      }
      const Candidate& best = open.front();
      cur.steps.push_back({best.entity_id, best.role_id, best.word, best.role_sr});
      cur.visited.insert(best.word);
      cur.last_word = best.word;
    }
  }
  return results;
}

std::vector<ScoredPair> select_source_target_pairs(const TokenBag& t_bag,
                                                   const TokenBag& h_bag,
                                                   const OverlapResult& overlap,
                                                   const EmbeddingStore& store,
                                                   const SearchConfig& cfg) {
  std::vector<ScoredPair> pairs;
  for (const auto& t : t_bag.tokens) {
    if (overlap.overlap.count(t)) continue;
    for (const auto& h : h_bag.tokens) {
      if (overlap.overlap.count(h)) continue;
      pairs.push_back({t, h, sr(t, h, store)});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const ScoredPair& a, const ScoredPair& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.source != b.source) return a.source < b.source;
    return a.target < b.target;
  });
  if (pairs.size() > cfg.pair_top_k) pairs.resize(cfg.pair_top_k);
  return pairs;
}

SemanticResult solve_semantic(const TokenBag& t_bag, const TokenBag& h_bag,
                              const OverlapResult& overlap, const DefinitionGraph& graph,
                              const EmbeddingStore& store, const IdfTable& idf,
                              const LexTables& lex, const StopwordSet& stopwords,
                              const LemmaTable& lemmas, const SearchConfig& cfg) {
  std::vector<Path> pool;
  for (const auto& sp : select_source_target_pairs(t_bag, h_bag, overlap, store, cfg)) {
    if (sp.source == sp.target || lex.synonyms(sp.source, sp.target)) {
      log_info("dgn: skipping synonym source-target pair (" + sp.source + ", " + sp.target +
               ")");
      continue;
    }
    std::vector<Path> paths =
        dgn_search(graph, sp.source, sp.target, store, idf, lex, stopwords, lemmas, cfg);
    pool.insert(pool.end(), paths.begin(), paths.end());
  }
  if (pool.empty()) return {false, std::nullopt};

  auto mean_sr = [](const Path& p) {
    double sum = 0.0;
    for (const auto& s : p.steps) sum += s.sr_to_target;
    return sum / static_cast<double>(p.steps.size());
  };
  auto better = [&](const Path& a, const Path& b) {
    if (a.steps.size() != b.steps.size()) return a.steps.size() < b.steps.size();
    double ma = mean_sr(a), mb = mean_sr(b);
    if (ma != mb) return ma > mb;
    return a.word_sequence() < b.word_sequence();
  };
  const Path* best = &pool.front();
  for (const auto& p : pool)
    if (better(p, *best)) best = &p;
  return {true, *best};
}

namespace {

bool vowel_start(const std::string& w) {
  if (w.empty()) return false;
  char c = static_cast<char>(std::tolower(static_cast<unsigned char>(w[0])));
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string strip_leading_article(const std::string& s) {
  std::string t = trim(s);
  for (const char* art : {"a ", "an ", "the "}) {
    if (to_lower(t).rfind(art, 0) == 0) return trim(t.substr(std::string(art).size()));
  }
  return t;
}

// Wraps the first standalone occurrence of `word` in ** markers.
std::string emphasize_in(const std::string& text, const std::string& word) {
  std::string lower_text = to_lower(text);
  std::string lower_word = to_lower(word);
  size_t pos = 0;
  while ((pos = lower_text.find(lower_word, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !std::isalnum(static_cast<unsigned char>(lower_text[pos - 1]));
    size_t end = pos + lower_word.size();
    bool right_ok =
        end >= lower_text.size() || !std::isalnum(static_cast<unsigned char>(lower_text[end]));
    if (left_ok && right_ok)
      return text.substr(0, pos) + "**" + text.substr(pos, lower_word.size()) + "**" +
             text.substr(end);
    pos = end;
  }
  return text;  // inflected or absent; leave the text as written
}

}  // namespace

std::vector<std::string> write_justification(const Path& path, const DefinitionGraph& graph) {
  std::vector<std::string> lines;
  for (size_t i = 0; i < path.steps.size(); ++i) {
    const PathStep& step = path.steps[i];
    const EntityNode* entity = graph.entity_by_id(step.entity_id);
    const RoleNode* via = graph.role_by_id(step.role_id);
    const RoleNode* st = graph.supertype_of(step.entity_id);
    if (!entity || !via || !st)
      throw std::runtime_error("justification path references unknown graph nodes");

    const std::string mention = i == 0 ? path.source : path.steps[i - 1].chosen_word;
    const bool noun = entity->pos == WordPos::NOUN;
    const std::string subject = "**" + mention + "**";
    const std::string diff_text = via->role == RoleLabel::SUPERTYPE ? "" : via->text;

    std::string line;
    if (diff_text.empty() && iequals(strip_leading_article(st->text), step.chosen_word)) {
      if (noun)
        line = std::string(vowel_start(mention) ? "An " : "A ") + subject + " is a kind of **" +
               step.chosen_word + "**";
      else
        line = "To " + subject + " is a way of to **" + step.chosen_word + "**";
    } else {
      std::string body = st->text;
      if (!diff_text.empty()) body += " " + diff_text;
      body = emphasize_in(body, step.chosen_word);
      if (noun) {
        line = std::string(vowel_start(mention) ? "An " : "A ") + subject + " is " + body;
      } else {
        std::string prefix = to_lower(body).rfind("to ", 0) == 0 ? "" : "to ";
        line = "To " + subject + " is " + prefix + body;
      }
    }
    lines.push_back(line);
  }

  if (path.terminal == Terminal::SYNONYM && !path.steps.empty()) {
    const PathStep& last = path.steps.back();
    const EntityNode* prev_entity = graph.entity_by_id(last.entity_id);
    const bool noun = !prev_entity || prev_entity->pos == WordPos::NOUN;
    if (noun)
      lines.push_back("**" + capitalize(last.chosen_word) + "** is synonym of **" +
                      path.target + "**");
    else
      lines.push_back("To **" + last.chosen_word + "** is synonym of to **" + path.target +
                      "**");
  }
  return lines;
}

}  // namespace xte
