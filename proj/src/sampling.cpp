#include "modnet/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "modnet/errors.hpp"

namespace modnet {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability must lie in [0, 1]");
}

// First `take` entries of a seeded partial Fisher-Yates shuffle: a uniformly
// random `take`-subset in random order.
template <typename T>
std::vector<T> random_subset(std::vector<T> pool, std::size_t take,
                             RandomSource& rng) {
  for (std::size_t i = 0; i < take; ++i) {
    std::swap(pool[i], pool[i + rng.next_below(pool.size() - i)]);
  }
  pool.resize(take);
  return pool;
}

}  // namespace

Graph sample_edges(const Graph& g, double p, RandomSource& rng) {
  check_probability(p);
  std::vector<WeightedEdge> kept;
  for (const auto& e : g.edges()) {
    if (rng.bernoulli(p)) kept.push_back(e);
  }
  return Graph(g.vertex_count(), std::move(kept), g.labels());
}

Graph edge_limited_search(const Graph& g, double budget, RandomSource& rng) {
  if (budget < 0) throw DomainError("edge budget must be non-negative");
  if (!g.is_unweighted()) {
    throw DomainError("edge-limited search operates on unweighted graphs");
  }
  const std::size_t want = static_cast<std::size_t>(std::ceil(budget));
  const std::size_t take = std::min(want, g.edge_count());
  auto kept = random_subset(g.edges(), take, rng);
  return Graph(g.vertex_count(), std::move(kept), g.labels());
}

Graph vertex_sample(const Graph& g, int k, RandomSource& rng) {
  if (k < 1 || k > g.vertex_count()) {
    throw DomainError("vertex sample size out of range");
  }
  std::vector<int> ids(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) ids[v] = v;
  auto chosen = random_subset(std::move(ids), static_cast<std::size_t>(k), rng);
  std::sort(chosen.begin(), chosen.end());

  std::vector<int> to_new(g.vertex_count(), -1);
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    to_new[chosen[i]] = i;
    if (!g.labels().empty()) labels.push_back(g.labels()[chosen[i]]);
  }
  std::vector<WeightedEdge> edges;
  for (const auto& e : g.edges()) {
    if (to_new[e.u] != -1 && to_new[e.v] != -1) {
      edges.push_back({to_new[e.u], to_new[e.v], e.w});
    }
  }
  return Graph(k, std::move(edges), std::move(labels));
}

Graph erdos_renyi(int n, double p, RandomSource& rng) {
  if (n < 0) throw DomainError("negative vertex count");
  check_probability(p);
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({u, v, 1});
    }
  }
  return Graph(n, std::move(edges));
}

Graph add_false_positives(const Graph& g, int extra, RandomSource& rng) {
  if (extra < 0) throw DomainError("negative number of false positives");
  if (!g.is_unweighted()) {
    throw DomainError("false positives apply to unweighted graphs");
  }
  std::vector<std::pair<int, int>> non_edges;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
    }
  }
  if (static_cast<std::size_t>(extra) > non_edges.size()) {
    throw DomainError("not enough non-edges for the requested false positives");
  }
  auto added = random_subset(std::move(non_edges),
                             static_cast<std::size_t>(extra), rng);
  auto edges = g.edges();
  for (const auto& [u, v] : added) edges.push_back({u, v, 1});
  return Graph(g.vertex_count(), std::move(edges), g.labels());
}

Graph gen_triangles(int k) {
  if (k < 1) throw DomainError("need at least one triangle");
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < k; ++i) {
    const int base = 3 * i;
    edges.push_back({base, base + 1, 1});
    edges.push_back({base, base + 2, 1});
    edges.push_back({base + 1, base + 2, 1});
  }
  return Graph(3 * k, std::move(edges));
}

Graph gen_star_plus_matching(int m, int k) {
  if (k < 1) throw DomainError("need at least one isolated edge");
  if (k + 1 >= m) throw DomainError("star-plus-matching requires k + 1 < m");
  std::vector<WeightedEdge> edges;
  // Star: center 0 with leaves 1..m-k.
  for (int leaf = 1; leaf <= m - k; ++leaf) edges.push_back({0, leaf, 1});
  // k isolated edges after the star vertices.
  for (int j = 0; j < k; ++j) {
    const int a = m - k + 1 + 2 * j;
    edges.push_back({a, a + 1, 1});
  }
  return Graph(m + k + 1, std::move(edges));
}

Graph gen_two_cliques(int n) {
  if (n < 4 || n % 2 != 0) {
    throw DomainError("two-cliques construction needs even n >= 4");
  }
  std::vector<WeightedEdge> edges;
  const int half = n / 2;
  for (int block = 0; block < 2; ++block) {
    const int base = block * half;
    for (int u = 0; u < half; ++u) {
      for (int v = u + 1; v < half; ++v) {
        edges.push_back({base + u, base + v, 1});
      }
    }
  }
  return Graph(n, std::move(edges));
}

Graph gen_clique_plus_matching(int k, int t) {
  if (k < 2) throw DomainError("clique needs at least two vertices");
  if (t < 0) throw DomainError("negative matching size");
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) edges.push_back({u, v, 1});
  }
  for (int j = 0; j < t; ++j) {
    edges.push_back({k + 2 * j, k + 2 * j + 1, 1});
  }
  return Graph(k + 2 * t, std::move(edges));
}

}  // namespace modnet
