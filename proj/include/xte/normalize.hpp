#pragma once

#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "xte/corpus.hpp"

namespace xte {

using StopwordSet = std::unordered_set<std::string>;
using LemmaTable = std::unordered_map<std::string, std::string>;

// Bag-of-words view of a sentence: normalized content-word lemmas.
struct TokenBag {
  std::set<std::string> tokens;
  size_t source_len = 0;  // raw token count before stopword removal
};

enum class OverlapCategory { TOTAL, PARTIAL, NULL_OVERLAP };

std::string overlap_category_name(OverlapCategory c);

struct OverlapResult {
  std::set<std::string> overlap;
  size_t n = 0;  // |T'|
  size_t m = 0;  // |H'|
  size_t k = 0;  // |O|
  OverlapCategory category = OverlapCategory::NULL_OVERLAP;
};

// Lowercased, punctuation-stripped tokens in sentence order. Stop words are
// kept; internal hyphens and apostrophes survive ("make-up", "isn't").
std::vector<std::string> tokenize(const std::string& sentence);

// Applies the lemma table to each token; unknown tokens pass through.
std::vector<std::string> lemmatize(const std::vector<std::string>& tokens,
                                   const LemmaTable& lemmas);

TokenBag normalize(const std::string& sentence, const StopwordSet& stopwords,
                   const LemmaTable& lemmas);

OverlapResult compute_overlap(const TokenBag& t_bag, const TokenBag& h_bag);

// PARTIAL goes to the semantic solver, everything else to the syntactic one.
Route route(const OverlapResult& overlap);

// stopwords.txt: one word per line. lemmas.tsv: "surface\tlemma" per line.
StopwordSet load_stopwords(const std::string& path);
LemmaTable load_lemmas(const std::string& path);

// Built-in English stop word list used when no file is given.
const StopwordSet& default_stopwords();

}  // namespace xte
