#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "modnet/errors.hpp"
#include "modnet/graph.hpp"
#include "modnet/modularity.hpp"
#include "modnet/partition.hpp"
#include "modnet/rational.hpp"

namespace modnet {

// Comparisons/additions spent by the greedy partitioners.  Sorting is O(n log n)
// setup and is not counted, matching the per-item comparison/addition count.
struct OpCounter {
  std::size_t comparisons = 0;
  std::size_t additions = 0;
  std::size_t total() const { return comparisons + additions; }
};

// Positive vector normalized to sum 1, together with the permutation that
// sorts it into descending order (ties broken by original index).
template <typename T>
class WeightVector {
 public:
  explicit WeightVector(std::vector<T> raw) : values_(std::move(raw)) {
    if (values_.empty()) throw DomainError("weight vector must be non-empty");
    T sum{};
    for (const T& v : values_) {
      if (v <= 0) throw DomainError("weight vector entries must be positive");
      sum += v;
    }
    for (T& v : values_) v /= sum;
    descending_.resize(values_.size());
    std::iota(descending_.begin(), descending_.end(), 0);
    std::stable_sort(descending_.begin(), descending_.end(),
                     [&](int a, int b) { return values_[a] > values_[b]; });
  }

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<T>& values() const { return values_; }
  const T& operator[](int i) const { return values_[i]; }
  const std::vector<int>& descending() const { return descending_; }

 private:
  std::vector<T> values_;
  std::vector<int> descending_;
};

inline constexpr int kLambdaLimit = 24;

// Optimal number bi-partitioning value: max over subsets A of
// min(sum_A, 1 - sum_A).  Exact enumeration over 2^(n-1) subsets; serves as
// the oracle that dominates gamma.
template <typename T>
T lambda_exact(const WeightVector<T>& x, int limit = kLambdaLimit) {
  const int n = x.size();
  if (n > limit) throw ResourceError("weight vector too long for lambda");
  T best{};
  // Fix element 0 outside A; walk subsets of the rest in Gray-code order so
  // each step updates the running sum with a single addition.
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  std::vector<bool> in(n, false);
  T sum{};
  for (std::uint64_t k = 1; k < total; ++k) {
    const int i = std::countr_zero(k) + 1;
    if (in[i]) {
      sum -= x[i];
    } else {
      sum += x[i];
    }
    in[i] = !in[i];
    const T rest = T(1) - sum;
    const T side = std::min(sum, rest);
    if (side > best) best = side;
  }
  return best;
}

template <typename T>
struct GreedyBipartition {
  std::vector<int> side_a;  // original indices, in insertion order
  std::vector<int> side_b;
  T sum_a{};
  T sum_b{};
  T gamma{};  // min(sum_a, sum_b); >= (1 - sum x_i^2)/2
  OpCounter ops;
};

namespace detail {

// Greedy pass over `order` (indices into weights, descending): each element
// joins side A iff sum(A) <= sum(B).  Scale-invariant, so callers may pass
// unnormalized weights.
template <typename T>
GreedyBipartition<T> greedy_bipartition_ordered(const std::vector<T>& weights,
                                                const std::vector<int>& order) {
  GreedyBipartition<T> r;
  for (int idx : order) {
    ++r.ops.comparisons;
    ++r.ops.additions;
    if (r.sum_a <= r.sum_b) {
      r.side_a.push_back(idx);
      r.sum_a += weights[idx];
    } else {
      r.side_b.push_back(idx);
      r.sum_b += weights[idx];
    }
  }
  r.gamma = std::min(r.sum_a, r.sum_b);
  return r;
}

}  // namespace detail

template <typename T>
GreedyBipartition<T> greedy_bipartition(const WeightVector<T>& x) {
  return detail::greedy_bipartition_ordered(x.values(), x.descending());
}

// Disjoint non-empty index sets covering [n], with their weight sums.
template <typename T>
struct IndexPartition {
  std::vector<std::vector<int>> parts;
  std::vector<T> sums;
  int size() const { return static_cast<int>(parts.size()); }
};

// c(A, x) = sum_j S_j^2 - sum_i x_i^2; the degree-tax increase incurred by
// amalgamating along A.
template <typename T>
T partition_cost(const IndexPartition<T>& a, const WeightVector<T>& x) {
  T cost{};
  for (const T& s : a.sums) cost += s * s;
  for (const T& v : x.values()) cost -= v * v;
  return cost;
}

// Number greedy partitioning: starting from the trivial partition, while the
// first splittable part admits a greedy bipartition with both sides >= eta,
// split it.  The result is (x, eta)-fat with cost < 2 eta, in O(n / eta)
// counted operations.
template <typename T>
IndexPartition<T> greedy_number_partition(const WeightVector<T>& x,
                                          const T& eta,
                                          OpCounter* ops = nullptr) {
  if (eta <= 0 || eta > 1) throw DomainError("eta must lie in (0, 1]");

  OpCounter counter;
  // Parts hold indices in descending weight order, so restrictions stay
  // sorted and each split is a single greedy pass.
  std::vector<std::vector<int>> parts = {x.descending()};
  std::vector<T> sums = {T(1)};

  bool split_made = true;
  while (split_made) {
    split_made = false;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (parts[j].size() < 2) continue;
      auto bi = detail::greedy_bipartition_ordered(x.values(), parts[j]);
      counter.comparisons += bi.ops.comparisons + 1;
      counter.additions += bi.ops.additions;
      // gamma(y) >= eta / S_j in normalized terms, i.e. min side >= eta.
      if (bi.gamma >= eta) {
        parts[j] = std::move(bi.side_a);
        parts.insert(parts.begin() + j + 1, std::move(bi.side_b));
        sums[j] = bi.sum_a;
        sums.insert(sums.begin() + j + 1, bi.sum_b);
        split_made = true;
        break;  // restart at the first part
      }
    }
  }

  if (ops) *ops = counter;
  return {std::move(parts), std::move(sums)};
}

struct FattenResult {
  Partition partition;
  OpCounter ops;
};

// Greedy amalgamating algorithm: amalgamates parts of `b` until every part
// has volume >= eta * vol(G), losing less than 2 eta of modularity score.
// Parts of zero volume are first merged into the lowest-index positive-volume
// part (their vertices are isolated, so neither coverage nor degree tax
// moves).
template <typename T>
FattenResult fatten(const Graph& g, const T& eta, const Partition& b) {
  if (g.total_weight() == 0) {
    throw DomainError("fatten requires a graph with positive total weight");
  }
  if (b.size() != g.vertex_count()) {
    throw DomainError("partition does not match the graph's vertex set");
  }
  if (eta <= 0 || eta > 1) throw DomainError("eta must lie in (0, 1]");

  OpCounter counter;
  std::vector<T> part_volume(b.parts(), T{});
  for (int v = 0; v < g.vertex_count(); ++v) {
    part_volume[b.part_of(v)] += value_cast<T>(g.degrees()[v]);
    ++counter.additions;
  }

  int first_positive = -1;
  for (int j = 0; j < b.parts(); ++j) {
    if (part_volume[j] > 0) {
      first_positive = j;
      break;
    }
  }

  // Map each part of b to a surviving index with positive volume.
  std::vector<int> survivor(b.parts());
  std::vector<T> weights;
  for (int j = 0; j < b.parts(); ++j) {
    if (part_volume[j] > 0) {
      survivor[j] = static_cast<int>(weights.size());
      weights.push_back(part_volume[j]);
    } else {
      survivor[j] = -1;  // resolved below to first_positive's slot
    }
  }
  for (int j = 0; j < b.parts(); ++j) {
    if (survivor[j] == -1) survivor[j] = survivor[first_positive];
  }

  WeightVector<T> x(std::move(weights));
  OpCounter number_ops;
  const auto index_partition = greedy_number_partition(x, eta, &number_ops);
  counter.comparisons += number_ops.comparisons;
  counter.additions += number_ops.additions;

  std::vector<int> part_target(x.size());
  for (int a = 0; a < index_partition.size(); ++a) {
    for (int i : index_partition.parts[a]) part_target[i] = a;
  }
  std::vector<int> assignment(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    assignment[v] = part_target[survivor[b.part_of(v)]];
  }
  return {Partition(std::move(assignment)), counter};
}

}  // namespace modnet
