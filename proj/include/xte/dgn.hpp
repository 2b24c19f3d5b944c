#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xte/dkg.hpp"
#include "xte/embeddings.hpp"
#include "xte/idf.hpp"
#include "xte/lex.hpp"
#include "xte/normalize.hpp"
#include "xte/semdiff.hpp"

namespace xte {

struct SearchConfig {
  size_t max_path_length = 4;  // l: maximum steps per path
  size_t max_paths = 20;       // m: stop once this many paths completed
  size_t head_word_top_k = 3;  // head words kept per role node
  size_t pair_top_k = 3;       // source-target pairs kept from the Cartesian product
  double min_idf = 1.0;        // head words below this idf are dropped

  void validate() const;
};

// One expansion: at `entity_id` the search left through role node `role_id`
// (whose relatedness to the target, `sr_to_target`, passed the eta filter)
// using head word `chosen_word` as the next hop.
struct PathStep {
  std::string entity_id;
  std::string role_id;
  std::string chosen_word;
  double sr_to_target = 0.0;
};

enum class Terminal { EXACT, SYNONYM };

struct Path {
  std::string source;
  std::string target;
  std::vector<PathStep> steps;
  Terminal terminal = Terminal::EXACT;

  // source followed by the chosen words, handy for comparisons and logs.
  std::vector<std::string> word_sequence() const;
};

struct HeadWord {
  std::string word;
  double score = 0.0;
};

struct ScoredPair {
  std::string source;
  std::string target;
  double score = 0.0;
};

// Candidate next hops from one role node: tokenized, lemmatized, stop words
// and low-idf words dropped, ranked by sr to the target (ties alphabetical),
// truncated to head_word_top_k.
std::vector<HeadWord> head_words(const RoleNode& role, const std::string& target,
                                 const EmbeddingStore& store, const IdfTable& idf,
                                 const StopwordSet& stopwords, const LemmaTable& lemmas,
                                 const SearchConfig& cfg);

// Depth-first navigation from source toward target. Role nodes are filtered
// per expansion by the semantic differential threshold over their sr scores;
// a path completes when the next word equals the target or one of its
// synonyms. Words may not repeat within a path. Requires source != target and
// the two not to be synonyms.
std::vector<Path> dgn_search(const DefinitionGraph& graph, const std::string& source,
                             const std::string& target, const EmbeddingStore& store,
                             const IdfTable& idf, const LexTables& lex,
                             const StopwordSet& stopwords, const LemmaTable& lemmas,
                             const SearchConfig& cfg);

// P' of the recognition procedure: the pair_top_k highest-sr pairs of
// (T' - O) x (H' - O), ties in lexicographic pair order.
std::vector<ScoredPair> select_source_target_pairs(const TokenBag& t_bag,
                                                   const TokenBag& h_bag,
                                                   const OverlapResult& overlap,
                                                   const EmbeddingStore& store,
                                                   const SearchConfig& cfg);

struct SemanticResult {
  bool entailment = false;
  std::optional<Path> best_path;
};

// Pools the paths of every selected source-target pair and keeps the shortest
// (ties: higher mean sr, then lexicographic word sequence). No path at all
// means non-entailment.
SemanticResult solve_semantic(const TokenBag& t_bag, const TokenBag& h_bag,
                              const OverlapResult& overlap, const DefinitionGraph& graph,
                              const EmbeddingStore& store, const IdfTable& idf,
                              const LexTables& lex, const StopwordSet& stopwords,
                              const LemmaTable& lemmas, const SearchConfig& cfg);

// One line per traversed entity plus a final synonym line when the path ends
// on a synonym of the target. Key concepts are wrapped in "**".
std::vector<std::string> write_justification(const Path& path, const DefinitionGraph& graph);

}  // namespace xte
