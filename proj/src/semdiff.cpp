#include "xte/semdiff.hpp"

#include <algorithm>
#include <stdexcept>

namespace xte {

ScoreGap semantic_differential_threshold(const std::vector<double>& scores) {
  if (scores.empty())
    throw std::runtime_error("semantic differential requires at least one score");
  ScoreGap g;
  g.scores = scores;
  std::sort(g.scores.begin(), g.scores.end(), std::greater<double>());
  if (g.scores.size() == 1) {
    g.gap_index = 0;
    g.top = g.bottom = g.eta = g.scores[0];
    return g;
  }
  size_t best = 0;
  double best_delta = g.scores[0] - g.scores[1];
  for (size_t i = 1; i + 1 < g.scores.size(); ++i) {
    double delta = g.scores[i] - g.scores[i + 1];
    if (delta > best_delta) {  // strict: ties resolve to the earliest gap
      best_delta = delta;
      best = i;
    }
  }
  g.gap_index = best;
  g.top = g.scores[best];
  g.bottom = g.scores[best + 1];
  g.eta = g.bottom;
  return g;
}

}  // namespace xte
