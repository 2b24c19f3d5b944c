#pragma once

#include <vector>

namespace xte {

// Result of the semantic differential analysis over a ranked score list.
// `eta` is the score immediately below the largest adjacent gap; keeping
// candidates with score >= eta retains one moderately related entry.
struct ScoreGap {
  std::vector<double> scores;  // sorted descending
  size_t gap_index = 0;        // index of the top element of the widest gap
  double top = 0.0;            // S at gap_index
  double bottom = 0.0;         // S at gap_index + 1
  double eta = 0.0;            // == bottom
};

// Sorts descending, finds the maximum adjacent difference (earliest on ties)
// and returns its bottom value as eta. A single score is its own eta.
// Throws on an empty list.
ScoreGap semantic_differential_threshold(const std::vector<double>& scores);

}  // namespace xte
