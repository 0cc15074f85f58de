#pragma once

// Shared builders and independent oracles for the test suite.  The oracles
// deliberately recompute everything from the edge list with their own
// arithmetic so library bugs cannot cancel out.

#include <utility>
#include <vector>

#include "modnet/graph.hpp"
#include "modnet/partition.hpp"
#include "modnet/random_source.hpp"
#include "modnet/rational.hpp"

namespace testutil {

inline modnet::Graph cycle(int n) {
  std::vector<modnet::WeightedEdge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return modnet::Graph(n, std::move(edges));
}

inline modnet::Graph clique(int n) {
  std::vector<modnet::WeightedEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return modnet::Graph(n, std::move(edges));
}

inline modnet::Graph star(int leaves) {
  std::vector<modnet::WeightedEdge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return modnet::Graph(leaves + 1, std::move(edges));
}

inline modnet::Graph random_graph(int n, double p, modnet::RandomSource& rng) {
  std::vector<modnet::WeightedEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) edges.push_back({i, j});
  return modnet::Graph(n, std::move(edges));
}

inline modnet::Partition random_partition(int n, modnet::RandomSource& rng) {
  const int k = 1 + static_cast<int>(rng.next_below(n == 0 ? 1 : n));
  std::vector<int> a(n);
  for (int v = 0; v < n; ++v) a[v] = static_cast<int>(rng.next_below(k));
  return modnet::Partition(std::move(a));
}

// Straight-from-the-definition score, double arithmetic only.
inline double naive_score(const modnet::Graph& g, const modnet::Partition& p) {
  if (g.total_weight() == 0) return 0.0;
  const double vol = modnet::to_double(g.volume());
  double internal = 0;
  for (const auto& e : g.edges())
    if (p.part_of(e.u) == p.part_of(e.v)) internal += modnet::to_double(e.w);
  std::vector<double> pv(p.parts(), 0.0);
  for (int v = 0; v < g.vertex_count(); ++v)
    pv[p.part_of(v)] += modnet::to_double(g.degrees()[v]);
  double tax = 0;
  for (double s : pv) tax += s * s;
  return 2 * internal / vol - tax / (vol * vol);
}

// Exact maximum over all partitions of [n]: plain restricted-growth
// enumeration with no pruning and no reductions.  Usable up to n ~ 8.
inline modnet::Rational naive_qstar(const modnet::Graph& g) {
  using modnet::Rational;
  const int n = g.vertex_count();
  if (g.total_weight() == 0) return Rational(0);
  const Rational vol = g.volume();

  std::vector<int> assign(n, 0);
  Rational best = 0;
  while (true) {
    int parts = 0;
    for (int v = 0; v < n; ++v) parts = std::max(parts, assign[v] + 1);
    Rational internal = 0;
    for (const auto& e : g.edges())
      if (assign[e.u] == assign[e.v]) internal += e.w;
    std::vector<Rational> pv(parts, Rational(0));
    for (int v = 0; v < n; ++v) pv[assign[v]] += g.degrees()[v];
    Rational tax = 0;
    for (const auto& s : pv) tax += s * s;
    Rational q = 2 * internal / vol - tax / (vol * vol);
    if (q > best) best = q;

    // next restricted growth string
    int v = n - 1;
    for (; v > 0; --v) {
      int cap = 0;
      for (int u = 0; u < v; ++u) cap = std::max(cap, assign[u] + 1);
      if (assign[v] < cap) {
        ++assign[v];
        break;
      }
      assign[v] = 0;
    }
    if (v == 0) break;
  }
  return best;
}

}  // namespace testutil
