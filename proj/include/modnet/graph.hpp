#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modnet/rational.hpp"

namespace modnet {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  Rational w = 1;

  friend bool operator==(const WeightedEdge& a, const WeightedEdge& b) {
    return a.u == b.u && a.v == b.v && a.w == b.w;
  }
};

// Undirected graph with symmetric positive edge weights.  Unweighted graphs
// are the all-weights-one special case.  Immutable after construction.
//
// Construction rejects self-loops and negative weights, drops zero-weight
// entries, and merges parallel entries by summing weights (counted in
// merged_parallel_edges()).  Stored edges have u < v and are sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}
  Graph(int n, std::vector<WeightedEdge> edges,
        std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Total edge weight e_w(V); vol_w(V) = 2 e_w(V).
  const Rational& total_weight() const { return total_weight_; }
  Rational volume() const { return 2 * total_weight_; }

  const std::vector<Rational>& degrees() const { return degrees_; }

  bool is_unweighted() const { return unweighted_; }
  int merged_parallel_edges() const { return merged_parallel_; }

  // Empty when no labels were supplied; otherwise one string per vertex.
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_edge(int u, int v) const;
  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<WeightedEdge> edges_;
  std::vector<std::string> labels_;
  std::vector<Rational> degrees_;
  Rational total_weight_ = 0;
  bool unweighted_ = true;
  int merged_parallel_ = 0;
};

}  // namespace modnet
