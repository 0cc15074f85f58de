#pragma once

#include <vector>

#include "modnet/errors.hpp"
#include "modnet/graph.hpp"
#include "modnet/partition.hpp"
#include "modnet/rational.hpp"

namespace modnet {

// Coverage / degree-tax decomposition of one partition's score:
//   coverage   = sum_A 2 e_w(A) / vol_w(V)
//   degree_tax = sum_A vol_w(A)^2 / vol_w(V)^2
//   score      = coverage - degree_tax
// Empty graphs score 0 under every partition.
template <typename T>
struct ModularityBreakdown {
  T coverage{};
  T degree_tax{};
  T score{};
};

using ExactBreakdown = ModularityBreakdown<Rational>;
using FloatBreakdown = ModularityBreakdown<double>;

template <typename T>
ModularityBreakdown<T> modularity(const Graph& g, const Partition& p) {
  if (p.size() != g.vertex_count()) {
    throw DomainError("partition does not match the graph's vertex set");
  }
  ModularityBreakdown<T> out;
  if (g.total_weight() == 0) return out;

  const T vol_total = value_cast<T>(g.volume());
  std::vector<T> part_volume(p.parts(), T{});
  for (int v = 0; v < g.vertex_count(); ++v) {
    part_volume[p.part_of(v)] += value_cast<T>(g.degrees()[v]);
  }

  T internal{};
  for (const auto& e : g.edges()) {
    if (p.part_of(e.u) == p.part_of(e.v)) internal += value_cast<T>(e.w);
  }

  out.coverage = 2 * internal / vol_total;
  T tax_num{};
  for (const T& pv : part_volume) tax_num += pv * pv;
  out.degree_tax = tax_num / (vol_total * vol_total);
  out.score = out.coverage - out.degree_tax;
  return out;
}

// Runtime-dispatch convenience for callers holding an ArithmeticMode flag;
// FLOAT results are widened back to Rational from the double computation.
ExactBreakdown modularity(const Graph& g, const Partition& p,
                          ArithmeticMode mode);

}  // namespace modnet
