#include "xte/idf.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "xte/util.hpp"

namespace xte {

double IdfTable::lookup(const std::string& word) const {
  auto it = idf.find(word);
  if (it != idf.end()) return it->second;
  return std::log(static_cast<double>(corpus_doc_count > 0 ? corpus_doc_count : 1));
}

IdfTable compute_idf(const std::vector<std::string>& documents, const LemmaTable& lemmas) {
  if (documents.empty()) throw std::runtime_error("idf corpus must be non-empty");
  IdfTable table;
  table.corpus_doc_count = documents.size();
  std::unordered_map<std::string, size_t> df;
  for (const auto& doc : documents) {
    std::set<std::string> seen;
    for (const auto& tok : lemmatize(tokenize(doc), lemmas)) seen.insert(tok);
    for (const auto& w : seen) ++df[w];
  }
  const double n = static_cast<double>(documents.size());
  for (const auto& [w, count] : df)
    table.idf[w] = std::log(n / static_cast<double>(count));
  return table;
}

void save_idf(const std::string& path, const IdfTable& table) {
  std::ostringstream out;
  out << "# docs=" << table.corpus_doc_count << "\n";
  std::map<std::string, double> sorted(table.idf.begin(), table.idf.end());
  for (const auto& [w, v] : sorted) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << w << '\t' << buf << '\n';
  }
  write_file(path, out.str());
}

IdfTable load_idf(const std::string& path) {
  IdfTable table;
  std::istringstream in(read_file(path));
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      size_t eq = line.find("docs=");
      if (eq != std::string::npos) table.corpus_doc_count = std::stoul(line.substr(eq + 5));
      continue;
    }
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 2)
      throw std::runtime_error(path + " line " + std::to_string(line_no) +
                               ": expected \"word\\tidf\"");
    table.idf[cols[0]] = std::stod(cols[1]);
  }
  if (table.corpus_doc_count == 0)
    throw std::runtime_error(path + ": missing \"# docs=<N>\" header");
  return table;
}

}  // namespace xte
