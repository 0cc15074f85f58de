#include "modnet/transforms.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "modnet/errors.hpp"

namespace modnet {

Graph blow_up(const Graph& g, int b) {
  if (b < 1) throw DomainError("blow-up factor must be positive");
  std::vector<WeightedEdge> edges;
  edges.reserve(g.edge_count() * static_cast<std::size_t>(b) * b);
  for (const auto& e : g.edges()) {
    for (int i = 0; i < b; ++i) {
      for (int j = 0; j < b; ++j) {
        edges.push_back({e.u * b + i, e.v * b + j, e.w});
      }
    }
  }
  return Graph(g.vertex_count() * b, std::move(edges));
}

Graph add_isolated_vertices(const Graph& g, int t) {
  if (t < 0) throw DomainError("cannot add a negative number of vertices");
  return Graph(g.vertex_count() + t, g.edges());
}

Rational cut_distance(const Graph& g, const Graph& h, int limit) {
  const int n = g.vertex_count();
  if (h.vertex_count() != n) throw DomainError("vertex counts differ");
  if (!g.is_unweighted() || !h.is_unweighted()) {
    throw DomainError("cut distance requires unweighted graphs");
  }
  if (n > limit) throw ResourceError("graph too large for cut distance");
  if (n == 0) return 0;

  // diff[v] over a subset S = |N_g(v) cap S| - |N_h(v) cap S|; the maximal T
  // for a fixed S collects the vertices whose diff shares one sign.
  std::vector<std::vector<int>> adj_g(n), adj_h(n);
  for (const auto& e : g.edges()) {
    adj_g[e.u].push_back(e.v);
    adj_g[e.v].push_back(e.u);
  }
  for (const auto& e : h.edges()) {
    adj_h[e.u].push_back(e.v);
    adj_h[e.v].push_back(e.u);
  }

  std::int64_t best = 0;
  std::vector<int> diff(n);
  // Gray-code walk over subsets S so each step toggles one vertex.
  std::vector<bool> in_s(n, false);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t it = 1; it < total; ++it) {
    const int v = static_cast<int>(std::countr_zero(it));
    const int sign = in_s[v] ? -1 : 1;
    in_s[v] = !in_s[v];
    for (int u : adj_g[v]) diff[u] += sign;
    for (int u : adj_h[v]) diff[u] -= sign;

    std::int64_t pos = 0, neg = 0;
    for (int u = 0; u < n; ++u) {
      if (diff[u] > 0) pos += diff[u];
      else neg -= diff[u];
    }
    best = std::max({best, pos, neg});
  }

  Rational r(best, static_cast<std::int64_t>(n) * n);
  r.canonicalize();
  return r;
}

Rational similarity_bound(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count()) {
    throw DomainError("vertex counts differ");
  }
  if (!g.is_unweighted() || !h.is_unweighted()) {
    throw DomainError("similarity bound requires unweighted graphs");
  }
  if (g.edge_count() == 0 && h.edge_count() == 0) {
    throw DomainError("similarity bound undefined for two empty graphs");
  }

  std::size_t common = 0;
  for (const auto& e : g.edges()) {
    if (h.has_edge(e.u, e.v)) ++common;
  }
  const std::size_t sym_diff = g.edge_count() + h.edge_count() - 2 * common;
  Rational r(2 * static_cast<unsigned long>(sym_diff),
             static_cast<unsigned long>(std::max(g.edge_count(), h.edge_count())));
  r.canonicalize();
  return r;
}

}  // namespace modnet
