#pragma once

#include "modnet/graph.hpp"
#include "modnet/random_source.hpp"

namespace modnet {

// G_p: keeps each edge independently with probability p (weights unchanged
// when kept).  p = 0 and p = 1 are admitted as degenerate endpoints.
Graph sample_edges(const Graph& g, double p, RandomSource& rng);

// c-edge-limited search: the output edge set is a uniformly random subset of
// E(G) of size min(ceil(c), e(G)).  Sampled directly as a uniform subset
// rather than by querying vertex pairs; the output law is identical.
// Unweighted graphs only.
Graph edge_limited_search(const Graph& g, double budget, RandomSource& rng);

// Induced subgraph on a uniformly random k-subset of vertices, relabeled to
// 0..k-1 in increasing original order; original labels are retained.
Graph vertex_sample(const Graph& g, int k, RandomSource& rng);

// Binomial random graph G_{n,p}.
Graph erdos_renyi(int n, double p, RandomSource& rng);

// Adds a uniformly random `extra`-subset of the non-edges of g.
Graph add_false_positives(const Graph& g, int extra, RandomSource& rng);

// --- Deterministic constructions used as experiment inputs ---

// k disjoint triangles; q* = 1 - 1/k via the components partition.
Graph gen_triangles(int k);

// Star with m-k edges plus k isolated edges (requires k >= 1, k + 1 < m);
// q* = 2k/m - (k^2+k)/m^2.
Graph gen_star_plus_matching(int m, int k);

// Two disjoint cliques on n/2 vertices each (n even, n >= 4); q* = 1/2.
Graph gen_two_cliques(int n);

// Clique on k vertices plus t isolated edges; for t = C(k,2) = m this is the
// false-positive witness with q* = 3/4 - 1/(4m).
Graph gen_clique_plus_matching(int k, int t);

}  // namespace modnet
