#pragma once

#include <string>
#include <vector>

#include "xte/deptree.hpp"

namespace xte {

// Edit-operation weights. Replacements must cost more than insertions and
// deletions; replacing a node by an identically labeled one costs 0.
struct CostModel {
  double w_insert = 1.0;
  double w_delete = 1.0;
  double w_replace = 2.0;

  void validate() const;
};

struct TedDecision {
  double dist = 0.0;
  size_t diff = 0;  // |size(T) - size(H)|
  double rel_dist = 0.0;
  double threshold = 0.0;
  bool entailment = false;
};

// Minimum-cost script of node insertions, deletions and replacements turning
// `a` into `b`, under ordered-tree semantics (ancestor and sibling order
// preserved). Labels compare case-insensitively. Throws on empty trees.
double edit_distance(const DepTree& a, const DepTree& b, const CostModel& costs);

// dist / |size(a) - size(b)|, with the size difference clamped to >= 1.
double relative_distance(double dist, const DepTree& a, const DepTree& b);

// Entailment iff rel_dist < t, strictly.
bool decide(double rel_dist, double t);

TedDecision ted_decide(const DepTree& a, const DepTree& b, const CostModel& costs,
                       double threshold);

struct TrainPoint {
  double rel_dist = 0.0;
  bool gold = false;
};

struct TrainResult {
  double threshold = 0.0;
  double f1 = 0.0;
};

// Sequential search over candidate thresholds: midpoints of adjacent distinct
// observed rel_dist values plus one candidate just above the maximum. Returns
// the candidate maximizing F1 of the YES class, ties broken toward smaller t.
TrainResult train_threshold(const std::vector<TrainPoint>& points);

// Model file is one line: "t=<decimal>".
void save_threshold(const std::string& path, double t);
double load_threshold(const std::string& path);

}  // namespace xte
