#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace xte {

// Pretrained word vectors. Text format: one entry per line, word followed by
// d whitespace-separated reals; an optional first header line "count dim".
struct EmbeddingStore {
  std::unordered_map<std::string, std::vector<double>> vocabulary;
  size_t dim = 0;

  bool contains(const std::string& word) const { return vocabulary.count(word) > 0; }
};

EmbeddingStore load_embeddings(const std::string& path);
EmbeddingStore parse_embeddings(const std::string& content,
                                const std::string& origin = "<string>");

// Cosine similarity in [-1, 1]. A multiword phrase is the arithmetic mean of
// its in-vocabulary word vectors; 0 if either side has no in-vocabulary word
// (logged as out-of-vocabulary).
double sr(const std::string& a, const std::string& b, const EmbeddingStore& store);

}  // namespace xte
