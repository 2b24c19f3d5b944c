#include "xte/lex.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "xte/util.hpp"

namespace xte {

void LexTables::add_synonym(const std::string& a, const std::string& b) {
  std::string x = to_lower(trim(a)), y = to_lower(trim(b));
  if (x == y) throw std::runtime_error("reflexive synonym pair: '" + x + "'");
  if (antonyms(x, y))
    throw std::runtime_error("pair ('" + x + "', '" + y + "') is already an antonym pair");
  if (syn_[x].insert(y).second) ++synonym_pairs_;
  syn_[y].insert(x);
}

void LexTables::add_antonym(const std::string& a, const std::string& b) {
  std::string x = to_lower(trim(a)), y = to_lower(trim(b));
  if (x == y) throw std::runtime_error("reflexive antonym pair: '" + x + "'");
  if (synonyms(x, y))
    throw std::runtime_error("pair ('" + x + "', '" + y + "') is already a synonym pair");
  if (ant_[x].insert(y).second) antonym_pairs_.push_back({x, y});
  ant_[y].insert(x);
}

void LexTables::add_hypernym(const std::string& hyponym, const std::string& hypernym) {
  hyper_[to_lower(trim(hyponym))].insert(to_lower(trim(hypernym)));
}

bool LexTables::synonyms(const std::string& a, const std::string& b) const {
  auto it = syn_.find(to_lower(a));
  return it != syn_.end() && it->second.count(to_lower(b)) > 0;
}

bool LexTables::antonyms(const std::string& a, const std::string& b) const {
  auto it = ant_.find(to_lower(a));
  return it != ant_.end() && it->second.count(to_lower(b)) > 0;
}

bool LexTables::is_hyponym_of(const std::string& word, const std::string& ancestor,
                              size_t max_hops) const {
  std::string target = to_lower(ancestor);
  std::unordered_set<std::string> frontier{to_lower(word)};
  std::unordered_set<std::string> visited = frontier;
  for (size_t hop = 0; hop < max_hops; ++hop) {
    std::unordered_set<std::string> next;
    for (const auto& w : frontier) {
      auto it = hyper_.find(w);
      if (it == hyper_.end()) continue;
      for (const auto& up : it->second) {
        if (up == target) return true;
        if (visited.insert(up).second) next.insert(up);
      }
    }
    if (next.empty()) return false;
    frontier = std::move(next);
  }
  return false;
}

void load_pair_file(const std::string& path,
                    const std::function<void(const std::string&, const std::string&)>& add) {
  std::istringstream in(read_file(path));
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 2)
      throw std::runtime_error(path + " line " + std::to_string(line_no) +
                               ": expected \"word\\tword\"");
    try {
      add(cols[0], cols[1]);
    } catch (const std::exception& e) {
      throw std::runtime_error(path + " line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

LexTables load_lex_tables(const std::string& syn_path, const std::string& ant_path,
                          const std::string& hyper_path) {
  LexTables t;
  if (!syn_path.empty())
    load_pair_file(syn_path, [&](const std::string& a, const std::string& b) {
      t.add_synonym(a, b);
    });
  if (!ant_path.empty())
    load_pair_file(ant_path, [&](const std::string& a, const std::string& b) {
      t.add_antonym(a, b);
    });
  if (!hyper_path.empty())
    load_pair_file(hyper_path, [&](const std::string& a, const std::string& b) {
      t.add_hypernym(a, b);
    });
  return t;
}

}  // namespace xte
