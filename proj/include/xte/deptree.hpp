#pragma once

#include <string>
#include <vector>

#include "xte/conllu.hpp"

namespace xte {

// Ordered labeled tree fed to the edit distance. Dependency relations are
// materialized as LABEL nodes sitting between the head TERM and its
// dependent's subtree.
struct DepTree {
  enum class Kind { TERM, LABEL };
  struct Node {
    std::string label;
    Kind kind = Kind::TERM;
    std::vector<int> children;
  };

  std::vector<Node> nodes;
  int root = -1;

  size_t size() const { return nodes.size(); }
  bool empty() const { return nodes.empty(); }
};

// Expands the dependency graph depth-first from the root, children ordered by
// ascending dependent token index. A node with several incoming edges is fully
// expanded at its first reference and appears as a childless leaf afterwards.
DepTree to_tree(const DepGraph& graph);

// Multi-line indented rendering, for debugging and tests.
std::string tree_to_string(const DepTree& tree);

}  // namespace xte
