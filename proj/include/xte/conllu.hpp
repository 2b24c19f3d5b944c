#pragma once

#include <string>
#include <vector>

namespace xte {

// Dependency graph of one sentence as read from CoNLL-U. Token indices are
// 0-based positions into `nodes`; the synthetic root marker is -1.
struct DepGraph {
  struct Node {
    std::string form;
    std::string lemma;
    std::string upos;
  };
  struct Edge {
    int head = -1;  // -1 means the edge comes from the artificial root
    int dependent = 0;
    std::string relation;
  };

  std::string sentence_id;
  std::vector<Node> nodes;
  std::vector<Edge> edges;  // excludes the artificial root edge
  int root = 0;             // index of the unique node headed by 0
};

// Parses CoNLL-U text. Each sentence block must carry a "# sent_id = ..."
// comment. Multiword-token ranges (1-2) and empty nodes (1.1) are skipped;
// enhanced dependencies are ignored. Throws on missing sent_id, several or
// zero roots, or cyclic basic dependencies.
std::vector<DepGraph> parse_conllu(const std::string& text,
                                   const std::string& origin = "<string>");

std::vector<DepGraph> load_conllu(const std::string& path);

}  // namespace xte
