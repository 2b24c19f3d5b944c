#include "xte/embeddings.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "xte/util.hpp"

namespace xte {

EmbeddingStore parse_embeddings(const std::string& content, const std::string& origin) {
  EmbeddingStore store;
  std::istringstream in(content);
  std::string line;
  size_t line_no = 0;
  bool first_data_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> parts = split_ws(line);
    if (parts.empty()) continue;
    if (!first_data_seen && parts.size() == 2) {
      // "count dim" header; dimension is validated against the entries anyway.
      try {
        (void)std::stoul(parts[0]);
        store.dim = std::stoul(parts[1]);
        first_data_seen = true;
        continue;
      } catch (const std::exception&) {
        // not a header, fall through to entry parsing
      }
    }
    first_data_seen = true;
    std::string word = to_lower(parts[0]);
    std::vector<double> vec;
    vec.reserve(parts.size() - 1);
    for (size_t i = 1; i < parts.size(); ++i) {
      try {
        vec.push_back(std::stod(parts[i]));
      } catch (const std::exception&) {
        throw std::runtime_error(origin + " line " + std::to_string(line_no) +
                                 ": cannot parse vector component '" + parts[i] + "'");
      }
    }
    if (vec.empty())
      throw std::runtime_error(origin + " line " + std::to_string(line_no) +
                               ": entry has no vector components");
    if (store.dim == 0) store.dim = vec.size();
    if (vec.size() != store.dim)
      throw std::runtime_error(origin + " line " + std::to_string(line_no) +
                               ": expected dimension " + std::to_string(store.dim) +
                               ", got " + std::to_string(vec.size()));
    double norm2 = 0.0;
    for (double v : vec) norm2 += v * v;
    if (norm2 == 0.0) {
      log_warn(origin + " line " + std::to_string(line_no) + ": skipping zero vector for '" +
               word + "'");
      continue;
    }
    store.vocabulary.emplace(std::move(word), std::move(vec));  // first occurrence wins
  }
  return store;
}

EmbeddingStore load_embeddings(const std::string& path) {
  return parse_embeddings(read_file(path), path);
}

namespace {

// Mean vector of the in-vocabulary words of a (possibly multiword) phrase.
std::optional<std::vector<double>> phrase_vector(const std::string& phrase,
                                                 const EmbeddingStore& store) {
  std::vector<double> sum(store.dim, 0.0);
  size_t hits = 0;
  for (const auto& w : split_ws(to_lower(phrase))) {
    auto it = store.vocabulary.find(w);
    if (it == store.vocabulary.end()) continue;
    for (size_t i = 0; i < store.dim; ++i) sum[i] += it->second[i];
    ++hits;
  }
  if (hits == 0) return std::nullopt;
  for (double& v : sum) v /= static_cast<double>(hits);
  return sum;
}

}  // namespace

double sr(const std::string& a, const std::string& b, const EmbeddingStore& store) {
  if (store.dim == 0) return 0.0;
  auto va = phrase_vector(a, store);
  auto vb = phrase_vector(b, store);
  if (!va || !vb) {
    log_warn("sr: out-of-vocabulary operand '" + (va ? b : a) + "'");
    return 0.0;
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < store.dim; ++i) {
    dot += (*va)[i] * (*vb)[i];
    na += (*va)[i] * (*va)[i];
    nb += (*vb)[i] * (*vb)[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace xte
