#include "xte/deptree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace xte {

namespace {

struct Expander {
  const DepGraph& g;
  DepTree& t;
  std::vector<std::vector<std::pair<int, std::string>>> out_edges;  // per node: (dep, rel)
  std::vector<bool> expanded;

  Expander(const DepGraph& graph, DepTree& tree) : g(graph), t(tree) {
    out_edges.resize(g.nodes.size());
    expanded.assign(g.nodes.size(), false);
    for (const auto& e : g.edges) {
      if (e.head < 0 || e.head >= static_cast<int>(g.nodes.size()) ||
          e.dependent < 0 || e.dependent >= static_cast<int>(g.nodes.size()))
        throw std::runtime_error("dependency edge out of range in sentence " +
                                 g.sentence_id);
      out_edges[e.head].push_back({e.dependent, e.relation});
    }
    for (auto& lst : out_edges)
      std::sort(lst.begin(), lst.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  int add_node(const std::string& label, DepTree::Kind kind) {
    t.nodes.push_back({label, kind, {}});
    return static_cast<int>(t.nodes.size()) - 1;
  }

  int expand(int word) {
    int node = add_node(g.nodes[word].form, DepTree::Kind::TERM);
    if (expanded[word]) return node;  // reentrant reference: childless leaf
    expanded[word] = true;
    for (const auto& [dep, rel] : out_edges[word]) {
      int label_node = add_node(rel, DepTree::Kind::LABEL);
      t.nodes[node].children.push_back(label_node);
      int child = expand(dep);
      t.nodes[label_node].children.push_back(child);
    }
    return node;
  }
};

void render(const DepTree& t, int node, int depth, std::ostringstream& out) {
  out << std::string(static_cast<size_t>(depth) * 2, ' ') << t.nodes[node].label << "\n";
  for (int c : t.nodes[node].children) render(t, c, depth + 1, out);
}

}  // namespace

DepTree to_tree(const DepGraph& graph) {
  if (graph.nodes.empty())
    throw std::runtime_error("cannot build a tree from an empty dependency graph");
  if (graph.root < 0 || graph.root >= static_cast<int>(graph.nodes.size()))
    throw std::runtime_error("dependency graph root out of range in sentence " +
                             graph.sentence_id);
  DepTree t;
  Expander ex(graph, t);
  t.root = ex.expand(graph.root);
  return t;
}

std::string tree_to_string(const DepTree& tree) {
  std::ostringstream out;
  if (tree.root >= 0) render(tree, tree.root, 0, out);
  return out.str();
}

}  // namespace xte
