#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace xte {

// Synonym/antonym/hypernym word-pair tables. Synonym and antonym relations are
// symmetric and mutually exclusive; hypernyms are directed hyponym -> hypernym.
// Entries may be multiword ("take off").
class LexTables {
 public:
  void add_synonym(const std::string& a, const std::string& b);
  void add_antonym(const std::string& a, const std::string& b);
  void add_hypernym(const std::string& hyponym, const std::string& hypernym);

  bool synonyms(const std::string& a, const std::string& b) const;
  bool antonyms(const std::string& a, const std::string& b) const;

  // Strict hyponymy within a hop budget: word reaches `ancestor` in 1..max_hops
  // steps of the hypernym table.
  bool is_hyponym_of(const std::string& word, const std::string& ancestor,
                     size_t max_hops) const;

  const std::vector<std::pair<std::string, std::string>>& antonym_pairs() const {
    return antonym_pairs_;
  }

  size_t synonym_pair_count() const { return synonym_pairs_; }

 private:
  std::unordered_map<std::string, std::unordered_set<std::string>> syn_;
  std::unordered_map<std::string, std::unordered_set<std::string>> ant_;
  std::unordered_map<std::string, std::unordered_set<std::string>> hyper_;
  std::vector<std::pair<std::string, std::string>> antonym_pairs_;
  size_t synonym_pairs_ = 0;
};

// File format for all three tables: "word\tword" per line, '#' comments.
// Reflexive synonym/antonym pairs are rejected; a pair present in both the
// synonym and antonym tables is an error.
LexTables load_lex_tables(const std::string& syn_path, const std::string& ant_path,
                          const std::string& hyper_path);
void load_pair_file(const std::string& path,
                    const std::function<void(const std::string&, const std::string&)>& add);

}  // namespace xte
