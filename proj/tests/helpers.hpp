#pragma once

// Shared test utilities: a compact tree literal parser, an edit-script
// brute-force oracle independent of the library's distance implementation,
// and small random generators.

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "xte/deptree.hpp"
#include "xte/ted.hpp"

namespace testutil {

// Parses "a(b,c(d))" into a DepTree (all nodes TERM; kinds are irrelevant to
// the distance).
inline xte::DepTree make_tree(const std::string& spec) {
  xte::DepTree t;
  size_t pos = 0;

  std::function<int()> parse = [&]() -> int {
    std::string label;
    while (pos < spec.size() && spec[pos] != '(' && spec[pos] != ')' && spec[pos] != ',')
      label += spec[pos++];
    if (label.empty()) throw std::runtime_error("bad tree spec: " + spec);
    t.nodes.push_back({label, xte::DepTree::Kind::TERM, {}});
    int me = static_cast<int>(t.nodes.size()) - 1;
    if (pos < spec.size() && spec[pos] == '(') {
      ++pos;  // consume '('
      while (true) {
        int child = parse();
        t.nodes[me].children.push_back(child);
        if (pos >= spec.size()) throw std::runtime_error("unclosed tree spec: " + spec);
        if (spec[pos] == ',') {
          ++pos;
          continue;
        }
        if (spec[pos] == ')') {
          ++pos;
          break;
        }
        throw std::runtime_error("bad tree spec: " + spec);
      }
    }
    return me;
  };

  t.root = parse();
  return t;
}

// Postorder flattening computed from first principles for the oracle.
struct FlatTree {
  std::vector<std::string> labels;  // postorder
  std::vector<int> lld;             // leftmost leaf descendant, postorder index

  explicit FlatTree(const xte::DepTree& t) {
    walk(t, t.root);
  }

  int size() const { return static_cast<int>(labels.size()); }

  // In postorder the subtree of x spans [lld[x], x], so for i < x:
  // x is an ancestor of i iff lld[x] <= i.
  bool is_ancestor(int anc, int node) const { return node < anc && lld[anc] <= node; }

 private:
  int walk(const xte::DepTree& t, int node) {
    int first_leaf = -1;
    for (int c : t.nodes[static_cast<size_t>(node)].children) {
      int leaf = walk(t, c);
      if (first_leaf == -1) first_leaf = leaf;
    }
    std::string lower;
    for (char ch : t.nodes[static_cast<size_t>(node)].label)
      lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    labels.push_back(lower);
    int me = static_cast<int>(labels.size()) - 1;
    lld.push_back(first_leaf == -1 ? me : first_leaf);
    return first_leaf == -1 ? me : first_leaf;
  }
};

// Minimum cost over all valid tree mappings (monotone, ancestor-preserving),
// which equals the ordered tree edit distance. Exponential; for small trees.
class TedOracle {
 public:
  TedOracle(const xte::DepTree& a, const xte::DepTree& b, const xte::CostModel& c)
      : a_(a), b_(b), c_(c) {}

  double run() {
    best_ = std::numeric_limits<double>::max();
    pairs_a_.clear();
    pairs_b_.clear();
    rec(0, 0, 0.0);
    return best_;
  }

 private:
  void rec(int next_a, int next_b_min, double mapped_cost) {
    int mapped = static_cast<int>(pairs_a_.size());
    if (next_a == a_.size()) {
      double cost = mapped_cost + c_.w_delete * (a_.size() - mapped) +
                    c_.w_insert * (b_.size() - mapped);
      best_ = std::min(best_, cost);
      return;
    }
    // prune: every already-skipped a node must be deleted
    double lower = mapped_cost + c_.w_delete * (next_a - mapped);
    if (lower >= best_) return;

    rec(next_a + 1, next_b_min, mapped_cost);  // leave next_a unmapped
    for (int j = next_b_min; j < b_.size(); ++j) {
      if (!consistent(next_a, j)) continue;
      double rel = a_.labels[static_cast<size_t>(next_a)] ==
                           b_.labels[static_cast<size_t>(j)]
                       ? 0.0
                       : c_.w_replace;
      pairs_a_.push_back(next_a);
      pairs_b_.push_back(j);
      rec(next_a + 1, j + 1, mapped_cost + rel);
      pairs_a_.pop_back();
      pairs_b_.pop_back();
    }
  }

  bool consistent(int i2, int j2) const {
    for (size_t k = 0; k < pairs_a_.size(); ++k) {
      bool anc_a = a_.is_ancestor(i2, pairs_a_[k]);
      bool anc_b = b_.is_ancestor(j2, pairs_b_[k]);
      if (anc_a != anc_b) return false;
    }
    return true;
  }

  FlatTree a_, b_;
  xte::CostModel c_;
  double best_ = 0.0;
  std::vector<int> pairs_a_, pairs_b_;
};

inline double brute_force_ted(const xte::DepTree& a, const xte::DepTree& b,
                              const xte::CostModel& c) {
  TedOracle oracle(a, b, c);
  return oracle.run();
}

// Random ordered labeled tree with n nodes over the given alphabet.
inline xte::DepTree random_tree(std::mt19937& rng, int n,
                                const std::vector<std::string>& alphabet) {
  xte::DepTree t;
  std::uniform_int_distribution<size_t> pick_label(0, alphabet.size() - 1);
  for (int i = 0; i < n; ++i) {
    t.nodes.push_back({alphabet[pick_label(rng)], xte::DepTree::Kind::TERM, {}});
    if (i > 0) {
      std::uniform_int_distribution<int> pick_parent(0, i - 1);
      t.nodes[static_cast<size_t>(pick_parent(rng))].children.push_back(i);
    }
  }
  t.root = 0;
  return t;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(XTE_FIXTURE_DIR) + "/" + name;
}

}  // namespace testutil
