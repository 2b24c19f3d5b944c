#include "xte/ted.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <stdexcept>

#include "xte/util.hpp"

namespace xte {

void CostModel::validate() const {
  if (w_insert <= 0 || w_delete <= 0 || w_replace <= 0)
    throw std::runtime_error("cost weights must be positive");
  if (w_replace <= w_insert || w_replace <= w_delete)
    throw std::runtime_error("w_replace must exceed w_insert and w_delete");
}

namespace {

// Postorder view of a DepTree for the Zhang-Shasha recurrence.
struct Flat {
  std::vector<std::string> label;  // lowercased, postorder, 1-based
  std::vector<int> lld;            // leftmost leaf descendant, 1-based
  std::vector<int> keyroots;
  int n = 0;

  explicit Flat(const DepTree& t) {
    label.assign(t.size() + 1, {});
    lld.assign(t.size() + 1, 0);
    int counter = 0;
    walk(t, t.root, counter);
    n = counter;
    // Keyroots: nodes whose leftmost leaf is not shared with a higher node.
    std::vector<bool> taken(static_cast<size_t>(n) + 1, false);
    for (int i = n; i >= 1; --i) {
      if (!taken[static_cast<size_t>(lld[static_cast<size_t>(i)])]) {
        keyroots.push_back(i);
        taken[static_cast<size_t>(lld[static_cast<size_t>(i)])] = true;
      }
    }
    std::sort(keyroots.begin(), keyroots.end());
  }

  int walk(const DepTree& t, int node, int& counter) {
    int leftmost = 0;
    bool first = true;
    for (int c : t.nodes[static_cast<size_t>(node)].children) {
      int child_lld = walk(t, c, counter);
      if (first) {
        leftmost = child_lld;
        first = false;
      }
    }
    ++counter;
    if (first) leftmost = counter;  // leaf
    label[static_cast<size_t>(counter)] = to_lower(t.nodes[static_cast<size_t>(node)].label);
    lld[static_cast<size_t>(counter)] = leftmost;
    return leftmost;
  }
};

class ZhangShasha {
 public:
  ZhangShasha(const Flat& a, const Flat& b, const CostModel& c)
      : a_(a), b_(b), c_(c) {
    td_.assign((a_.n + 1) * (b_.n + 1), 0.0);
    fd_.assign((a_.n + 2) * (b_.n + 2), 0.0);
  }

  double run() {
    for (int i : a_.keyroots)
      for (int j : b_.keyroots) treedist(i, j);
    return td(a_.n, b_.n);
  }

 private:
  double& td(int i, int j) { return td_[static_cast<size_t>(i) * (b_.n + 1) + j]; }
  double& fd(int i, int j) { return fd_[static_cast<size_t>(i) * (b_.n + 2) + j]; }

  double rel_cost(int i, int j) const {
    return a_.label[static_cast<size_t>(i)] == b_.label[static_cast<size_t>(j)]
               ? 0.0
               : c_.w_replace;
  }

  void treedist(int i, int j) {
    const int li = a_.lld[static_cast<size_t>(i)];
    const int lj = b_.lld[static_cast<size_t>(j)];
    fd(li - 1, lj - 1) = 0.0;
    for (int x = li; x <= i; ++x) fd(x, lj - 1) = fd(x - 1, lj - 1) + c_.w_delete;
    for (int y = lj; y <= j; ++y) fd(li - 1, y) = fd(li - 1, y - 1) + c_.w_insert;
    for (int x = li; x <= i; ++x) {
      for (int y = lj; y <= j; ++y) {
        const int lx = a_.lld[static_cast<size_t>(x)];
        const int ly = b_.lld[static_cast<size_t>(y)];
        if (lx == li && ly == lj) {
          double d = std::min({fd(x - 1, y) + c_.w_delete,
                               fd(x, y - 1) + c_.w_insert,
                               fd(x - 1, y - 1) + rel_cost(x, y)});
          fd(x, y) = d;
          td(x, y) = d;
        } else {
          fd(x, y) = std::min({fd(x - 1, y) + c_.w_delete,
                               fd(x, y - 1) + c_.w_insert,
                               fd(lx - 1, ly - 1) + td(x, y)});
        }
      }
    }
  }

  const Flat& a_;
  const Flat& b_;
  const CostModel& c_;
  std::vector<double> td_, fd_;
};

}  // namespace

double edit_distance(const DepTree& a, const DepTree& b, const CostModel& costs) {
  costs.validate();
  if (a.empty() || b.empty())
    throw std::runtime_error("edit distance is undefined on empty trees");
  Flat fa(a), fb(b);
  ZhangShasha zs(fa, fb, costs);
  return zs.run();
}

double relative_distance(double dist, const DepTree& a, const DepTree& b) {
  if (dist < 0) throw std::runtime_error("distance must be non-negative");
  size_t sa = a.size(), sb = b.size();
  size_t diff = sa > sb ? sa - sb : sb - sa;
  if (diff == 0) diff = 1;
  return dist / static_cast<double>(diff);
}

bool decide(double rel_dist, double t) {
  if (t <= 0) throw std::runtime_error("threshold must be positive");
  return rel_dist < t;
}

TedDecision ted_decide(const DepTree& a, const DepTree& b, const CostModel& costs,
                       double threshold) {
  TedDecision d;
  d.dist = edit_distance(a, b, costs);
  size_t sa = a.size(), sb = b.size();
  d.diff = sa > sb ? sa - sb : sb - sa;
  d.rel_dist = relative_distance(d.dist, a, b);
  d.threshold = threshold;
  d.entailment = decide(d.rel_dist, threshold);
  return d;
}

namespace {

double f1_at(const std::vector<TrainPoint>& points, double t) {
  size_t tp = 0, fp = 0, fn = 0;
  for (const auto& p : points) {
    bool yes = p.rel_dist < t;
    if (yes && p.gold) ++tp;
    else if (yes && !p.gold) ++fp;
    else if (!yes && p.gold) ++fn;
  }
  double prec = (tp + fp) ? static_cast<double>(tp) / (tp + fp) : 0.0;
  double rec = (tp + fn) ? static_cast<double>(tp) / (tp + fn) : 0.0;
  return (prec + rec > 0) ? 2 * prec * rec / (prec + rec) : 0.0;
}

}  // namespace

TrainResult train_threshold(const std::vector<TrainPoint>& points) {
  if (points.empty()) throw std::runtime_error("cannot train a threshold on no points");
  std::set<double> distinct;
  for (const auto& p : points) distinct.insert(p.rel_dist);
  std::vector<double> vals(distinct.begin(), distinct.end());

  std::vector<double> candidates;
  for (size_t i = 0; i + 1 < vals.size(); ++i)
    candidates.push_back((vals[i] + vals[i + 1]) / 2.0);
  candidates.push_back(std::nextafter(vals.back(), std::numeric_limits<double>::max()));

  TrainResult best{candidates.front(), -1.0};
  for (double t : candidates) {
    double f1 = f1_at(points, t);
    if (f1 > best.f1) best = {t, f1};  // candidates ascend, so ties keep the smaller t
  }
  return best;
}

void save_threshold(const std::string& path, double t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "t=%.17g\n", t);
  write_file(path, buf);
}

double load_threshold(const std::string& path) {
  std::string content = trim(read_file(path));
  if (content.rfind("t=", 0) != 0)
    throw std::runtime_error(path + ": expected a single line \"t=<decimal>\"");
  try {
    return std::stod(content.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error(path + ": cannot parse threshold value");
  }
}

}  // namespace xte
