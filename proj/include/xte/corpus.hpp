#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace xte {

// One text/hypothesis pair. `gold` is the reference label when the dataset
// carries one (true = YES).
struct EntailmentPair {
  std::string id;
  std::string text;
  std::string hypothesis;
  std::optional<bool> gold;
};

enum class Route { TED, DGN };

std::string route_name(Route r);

// Final decision for one pair. `score` is relDist on the TED route and the
// best-path step count on the DGN route; it is absent when a context flag
// vetoed the pair or when the pair failed with a resource error.
struct Verdict {
  std::string pair_id;
  bool entailment = false;
  Route route = Route::TED;
  std::set<std::string> context_flags;
  std::optional<double> score;
  std::vector<std::string> justification;
  std::string error;  // non-empty only for per-pair resource failures
};

// Reads a 3- or 4-column TSV (id, text, hypothesis[, YES|NO]).
// Lines starting with '#' are comments. Throws on malformed lines,
// duplicate ids, or pairs violating the EntailmentPair invariants.
std::vector<EntailmentPair> load_dataset(const std::string& path);
std::vector<EntailmentPair> parse_dataset(const std::string& content,
                                          const std::string& origin = "<string>");

std::string serialize_dataset(const std::vector<EntailmentPair>& pairs);

}  // namespace xte
