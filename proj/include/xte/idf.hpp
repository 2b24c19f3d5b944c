#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "xte/normalize.hpp"

namespace xte {

// Inverse document frequency over the definition corpus: idf = ln(N / df).
struct IdfTable {
  std::unordered_map<std::string, double> idf;
  size_t corpus_doc_count = 0;

  // Unknown words count as maximally informative (single-document rarity).
  double lookup(const std::string& word) const;
};

// Each document is one definition text. Tokens are lowercased, punctuation
// stripped and lemma-normalized; document frequency counts documents, not
// occurrences. Throws on an empty corpus.
IdfTable compute_idf(const std::vector<std::string>& documents,
                     const LemmaTable& lemmas = {});

// Cache format: "# docs=<N>" header, then "word\tidf" lines.
void save_idf(const std::string& path, const IdfTable& table);
IdfTable load_idf(const std::string& path);

}  // namespace xte
