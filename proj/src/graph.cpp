#include "modnet/graph.hpp"

#include <algorithm>
#include <utility>

#include "modnet/errors.hpp"

namespace modnet {

Graph::Graph(int n, std::vector<WeightedEdge> edges,
             std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 0) throw DomainError("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw DomainError("label count does not match vertex count");
  }

  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw DomainError("edge endpoint out of range");
    }
    if (e.u == e.v) throw DomainError("self-loops are not allowed");
    if (e.w < 0) throw DataError("negative edge weight");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::erase_if(edges, [](const WeightedEdge& e) { return e.w == 0; });
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });

  for (auto& e : edges) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().w += e.w;
      ++merged_parallel_;
    } else {
      edges_.push_back(std::move(e));
    }
  }

  degrees_.assign(n_, Rational(0));
  for (const auto& e : edges_) {
    degrees_[e.u] += e.w;
    degrees_[e.v] += e.w;
    total_weight_ += e.w;
    if (e.w != 1) unweighted_ = false;
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), std::pair(u, v),
      [](const WeightedEdge& e, const std::pair<int, int>& key) {
        return std::pair(e.u, e.v) < key;
      });
  return it != edges_.end() && it->u == u && it->v == v;
}

}  // namespace modnet
