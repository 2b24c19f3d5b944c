#pragma once

#include <set>
#include <string>
#include <vector>

#include "xte/corpus.hpp"
#include "xte/lex.hpp"
#include "xte/normalize.hpp"

namespace xte {

// Phenomena that veto an entailment regardless of the solver's answer.
struct ContextFlags {
  bool negation = false;
  bool opposition = false;
  bool inverse_specialization = false;
  bool unsatisfiable_clauses = false;

  bool any() const {
    return negation || opposition || inverse_specialization || unsatisfiable_clauses;
  }
  std::set<std::string> to_set() const;
};

struct ContextResources {
  const LexTables* lex = nullptr;
  const StopwordSet* stopwords = nullptr;
  const LemmaTable* lemmas = nullptr;
  std::vector<std::string> negation_markers = {"not", "n't", "never", "no"};
};

// True iff exactly one side carries a negation marker scoped to a verb group
// and the content-word bags are otherwise equal.
bool detect_negation(const std::vector<std::string>& t_tokens,
                     const std::vector<std::string>& h_tokens, const ContextResources& res);

// True iff an antonym-table pair matches one term (or contiguous multiword)
// in T and the other in H. Matching runs over lemmatized token sequences.
bool detect_opposition(const std::vector<std::string>& t_tokens,
                       const std::vector<std::string>& h_tokens, const LexTables& lex,
                       const LemmaTable& lemmas);

// True iff some term of H is a strict hyponym (1-3 hops) of some term of T:
// the hypothesis specializes the text, which is the invalid direction.
bool detect_inverse_specialization(const std::vector<std::string>& t_tokens,
                                   const std::vector<std::string>& h_tokens,
                                   const LexTables& lex, const StopwordSet& stopwords,
                                   const LemmaTable& lemmas);

// Clause counts estimated from finite-verb-group markers; true iff H has more
// clauses than T.
bool detect_unsatisfiable_clauses(const std::string& t_sentence,
                                  const std::string& h_sentence);

ContextFlags analyze(const EntailmentPair& pair, const ContextResources& res);

}  // namespace xte
