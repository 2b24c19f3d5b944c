#include "xte/conllu.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "xte/util.hpp"

namespace xte {

namespace {

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

struct RawToken {
  int id = 0;  // 1-based CoNLL-U id
  std::string form, lemma, upos, rel;
  int head = 0;  // 0 = root
};

DepGraph finish_sentence(const std::string& sent_id, std::vector<RawToken>& toks,
                         const std::string& origin, size_t block_line) {
  auto fail = [&](const std::string& msg) -> DepGraph {
    throw std::runtime_error(origin + " sentence starting at line " +
                             std::to_string(block_line) + ": " + msg);
  };
  if (sent_id.empty()) return fail("missing # sent_id comment");
  if (toks.empty()) return fail("empty sentence block");

  // CoNLL-U ids may have gaps once ranges are skipped; remap to positions.
  std::unordered_map<int, int> pos_of_id;
  for (size_t i = 0; i < toks.size(); ++i) pos_of_id[toks[i].id] = static_cast<int>(i);

  DepGraph g;
  g.sentence_id = sent_id;
  int root = -1;
  for (const auto& t : toks) g.nodes.push_back({t.form, t.lemma, t.upos});
  for (size_t i = 0; i < toks.size(); ++i) {
    const auto& t = toks[i];
    if (t.head == 0) {
      if (root != -1) return fail("more than one root token");
      root = static_cast<int>(i);
      continue;
    }
    auto it = pos_of_id.find(t.head);
    if (it == pos_of_id.end())
      return fail("token " + std::to_string(t.id) + " has unknown head " +
                  std::to_string(t.head));
    g.edges.push_back({it->second, static_cast<int>(i), t.rel});
  }
  if (root == -1) return fail("no root token");
  g.root = root;

  // Follow head links from every node; a cycle never reaches the root.
  for (size_t i = 0; i < toks.size(); ++i) {
    int cur = static_cast<int>(i);
    size_t hops = 0;
    while (cur != g.root) {
      if (++hops > toks.size()) return fail("cyclic basic dependencies");
      int head_id = toks[cur].head;
      cur = pos_of_id.at(head_id);
    }
  }
  return g;
}

}  // namespace

std::vector<DepGraph> parse_conllu(const std::string& text, const std::string& origin) {
  std::vector<DepGraph> out;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  size_t block_line = 1;
  std::string sent_id;
  std::vector<RawToken> toks;
  bool in_block = false;

  auto flush = [&]() {
    if (!in_block) return;
    out.push_back(finish_sentence(sent_id, toks, origin, block_line));
    sent_id.clear();
    toks.clear();
    in_block = false;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (!in_block) {
      in_block = true;
      block_line = line_no;
    }
    if (line[0] == '#') {
      std::string body = trim(line.substr(1));
      if (body.rfind("sent_id", 0) == 0) {
        size_t eq = body.find('=');
        if (eq != std::string::npos) sent_id = trim(body.substr(eq + 1));
      }
      continue;
    }
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 10)
      throw std::runtime_error(origin + " line " + std::to_string(line_no) +
                               ": expected 10 columns, got " + std::to_string(cols.size()));
    // Skip multiword-token ranges ("3-4") and empty nodes ("5.1").
    if (!is_integer(cols[0])) continue;
    RawToken t;
    t.id = std::stoi(cols[0]);
    t.form = cols[1];
    t.lemma = cols[2];
    t.upos = cols[3];
    if (!is_integer(cols[6]))
      throw std::runtime_error(origin + " line " + std::to_string(line_no) +
                               ": HEAD column must be an integer, got '" + cols[6] + "'");
    t.head = std::stoi(cols[6]);
    t.rel = cols[7];
    toks.push_back(std::move(t));
  }
  flush();
  return out;
}

std::vector<DepGraph> load_conllu(const std::string& path) {
  return parse_conllu(read_file(path), path);
}

}  // namespace xte
