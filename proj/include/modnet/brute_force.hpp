#pragma once

#include "modnet/graph.hpp"
#include "modnet/partition.hpp"
#include "modnet/rational.hpp"

namespace modnet {

inline constexpr int kBruteForceLimit = 13;

struct QStarResult {
  Rational qstar;
  Partition witness;  // canonical; deterministic across runs
};

// Exact q*(G) by enumeration of vertex partitions (restricted growth
// strings).  Isolated vertices are discarded first (they never change any
// score) and returned in part 0 of the witness; the remaining vertex count
// must be <= limit.  Enumeration never mixes vertices of different connected
// components in one part: with the global volume fixed, merging parts across
// components leaves coverage unchanged and only adds degree tax, so some
// component-separated partition is always optimal.
QStarResult brute_force_qstar(const Graph& g, int limit = kBruteForceLimit);

// Exact q_{<=k}(G): maximum score over partitions with at most k parts.
// Here parts may need to straddle components (when k is smaller than the
// component count), so the full restricted-growth enumeration with labels
// < k is used.
Rational brute_force_q_at_most_k(const Graph& g, int k,
                                 int limit = kBruteForceLimit);

}  // namespace modnet
