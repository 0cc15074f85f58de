#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "modnet/graph.hpp"
#include "modnet/heuristic.hpp"
#include "modnet/partition.hpp"
#include "modnet/random_source.hpp"
#include "modnet/rational.hpp"
#include "modnet/stats.hpp"

namespace modnet {

// One row of a Monte-Carlo sweep.  The seed is the replicate's own stream
// seed, so any row can be replayed in isolation.
struct ExperimentRecord {
  std::string experiment;
  std::string param_name;
  double param_value = 0.0;
  int replicate = 0;
  std::uint64_t seed = 0;
  double score = 0.0;
  std::string score_kind;  // "exact" or "heuristic"
  double runtime_ms = 0.0;
};

struct SweepConfig {
  std::vector<double> grid;       // p-values (or c-values)
  int replicates = 50;
  int heuristic_runs = 200;       // best_of runs per replicate
  std::uint64_t master_seed = 0;
  HeuristicConfig heuristic;
};

// CSV schema: experiment,param_name,param_value,replicate,seed,score,
// score_kind,runtime_ms.  All columns except runtime_ms are reproducible
// byte for byte from (inputs, seed).
void emit_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

struct ScatterAxes {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::optional<double> reference_line;  // horizontal q* marker
  double jitter = 0.0;                   // x-axis jitter half-width
  std::uint64_t jitter_seed = 0;
};

// Self-contained static SVG scatter of (param_value, score).
void emit_svg_scatter(std::ostream& out,
                      const std::vector<ExperimentRecord>& records,
                      const ScatterAxes& axes);

// For each p in cfg.grid and each replicate, samples G_p and records the
// heuristic estimate of q*(G_p).
std::vector<ExperimentRecord> fig1_sweep(const Graph& g,
                                         const SweepConfig& cfg);

struct Theorem1Report {
  double reference_qstar = 0.0;
  std::size_t failures = 0;  // replicates with estimate <= q*(G) - eps
  std::size_t replicates = 0;
  double failure_fraction = 0.0;
  Interval wilson;
};

// Fraction of replicates of G_p whose (brute-force or heuristic) modularity
// drops below q*(G) - eps.  `reference` is q*(G), supplied by the caller.
Theorem1Report theorem1_check(const Graph& g, double p, double eps, int reps,
                              const Rational& reference, bool exact_scoring,
                              const SweepConfig& cfg);

// Lifts a partition of the observed graph to an eta-fat one by the greedy
// amalgamating algorithm; the translated partition scores within 2*eta of
// the input on the observed graph and is the construction used to transfer
// partitions back to the underlying graph.
Partition theorem2_translate(const Graph& g_observed, const Partition& a,
                             const Rational& eta);

struct QBarEstimate {
  double mean = 0.0;
  double stderr_mean = 0.0;
  std::vector<double> samples;
};

// Monte-Carlo estimate of E[q*(G_{n,c/n})] via the heuristic (a lower-bound
// estimator of the expectation).
QBarEstimate qbar_estimate(int n, double c, int reps, std::uint64_t seed,
                           const HeuristicConfig& heuristic, int runs = 10);

enum class Verdict { kHolds, kFails, kInconclusive };

std::string to_string(Verdict v);

struct UndersamplingReport {
  double p0 = 0.0;
  Summary p0_summary;
  std::vector<double> grid;
  std::vector<Summary> grid_summaries;
  double tolerance = 0.0;
  Verdict verdict = Verdict::kInconclusive;
};

// Checks that E[q~(H_{p0})] >= max over the grid of E[q~(H_p)] - tolerance,
// with 95% CI-aware comparison ("holds" / "fails" / "inconclusive").
UndersamplingReport undersampling_check(const Graph& h, double p0,
                                        const std::vector<double>& p_grid,
                                        int reps, double tolerance,
                                        const SweepConfig& cfg);

}  // namespace modnet
