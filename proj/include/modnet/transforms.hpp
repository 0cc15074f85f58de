#pragma once

#include "modnet/graph.hpp"
#include "modnet/rational.hpp"

namespace modnet {

// b-fold blow-up: every vertex becomes b mutually non-adjacent copies, and
// copies of adjacent vertices are fully cross-connected with the original
// edge weight.  Copy c of vertex v gets id v*b + c.
Graph blow_up(const Graph& g, int b);

// Adds t isolated vertices (fresh ids at the end); edges unchanged.
Graph add_isolated_vertices(const Graph& g, int t);

inline constexpr int kCutDistanceLimit = 14;

// Cut distance |V|^-2 max_{S,T} |e_G(S,T) - e_H(S,T)| over all vertex-set
// pairs, where e(S,T) counts ordered adjacent pairs.  Both graphs must be
// unweighted, on the same vertex count, with n <= limit (all 2^n sets S are
// enumerated; the inner max over T is taken in closed form).
Rational cut_distance(const Graph& g, const Graph& h,
                      int limit = kCutDistanceLimit);

// 2 |E symdiff E'| / max(|E|, |E'|): certified bound on how much any
// partition score (and hence q*) can move between two unweighted graphs on
// the same vertex set.  Undefined (domain error) when both graphs are empty.
Rational similarity_bound(const Graph& g, const Graph& h);

}  // namespace modnet
