#include "xte/corpus.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "xte/util.hpp"

namespace xte {

std::string route_name(Route r) { return r == Route::TED ? "TED" : "DGN"; }

std::vector<EntailmentPair> parse_dataset(const std::string& content,
                                          const std::string& origin) {
  std::vector<EntailmentPair> pairs;
  std::unordered_set<std::string> seen_ids;
  std::istringstream in(content);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 3 && cols.size() != 4) {
      throw std::runtime_error(origin + " line " + std::to_string(line_no) +
                               ": expected 3 or 4 tab-separated columns, got " +
                               std::to_string(cols.size()));
    }
    EntailmentPair p;
    p.id = cols[0];
    p.text = cols[1];
    p.hypothesis = cols[2];
    if (cols.size() == 4) {
      if (cols[3] == "YES")
        p.gold = true;
      else if (cols[3] == "NO")
        p.gold = false;
      else
        throw std::runtime_error(origin + " line " + std::to_string(line_no) +
                                 ": gold label must be YES or NO, got '" + cols[3] + "'");
    }
    if (p.id.empty() || p.text.empty() || p.hypothesis.empty()) {
      throw std::runtime_error(origin + " line " + std::to_string(line_no) +
                               ": id, text and hypothesis must be non-empty");
    }
    if (!seen_ids.insert(p.id).second) {
      throw std::runtime_error(origin + " line " + std::to_string(line_no) +
                               ": duplicate pair id '" + p.id + "'");
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<EntailmentPair> load_dataset(const std::string& path) {
  return parse_dataset(read_file(path), path);
}

std::string serialize_dataset(const std::vector<EntailmentPair>& pairs) {
  std::ostringstream out;
  for (const auto& p : pairs) {
    out << p.id << '\t' << p.text << '\t' << p.hypothesis;
    if (p.gold.has_value()) out << '\t' << (*p.gold ? "YES" : "NO");
    out << '\n';
  }
  return out.str();
}

}  // namespace xte
