#pragma once

#include <cstdint>
#include <vector>

#include "modnet/graph.hpp"
#include "modnet/partition.hpp"
#include "modnet/random_source.hpp"

namespace modnet {

struct HeuristicConfig {
  int max_sweeps = 100;      // local-moving sweeps per level
  bool refinement = true;    // Leiden-style within-community refinement
  std::uint64_t seed = 0;    // drives vertex visiting order
  double min_gain = 1e-9;    // accepted moves must gain more than this
};

struct SingleRun {
  Partition partition;
  double score = 0.0;
  // Flat modularity after each level's local moving; non-decreasing.
  std::vector<double> score_trace;
};

struct OptimizeResult {
  Partition best_partition;
  double best_score = 0.0;
  int runs = 0;
  std::vector<double> per_run_scores;
};

// Seeded local-move heuristic: local moving from singletons, optional
// refinement pass, aggregation, repeated over levels.  The result is clamped
// below by the trivial partition, so the returned score is never negative.
// Deterministic given (graph, config).
SingleRun local_move_heuristic(const Graph& g, const HeuristicConfig& cfg);

// Runs the heuristic with seeds cfg.seed .. cfg.seed + runs - 1 and returns
// the best result (earliest run wins ties).
OptimizeResult best_of(const Graph& g, int runs, const HeuristicConfig& cfg);

}  // namespace modnet
