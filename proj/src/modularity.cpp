#include "modnet/modularity.hpp"

namespace modnet {

ExactBreakdown modularity(const Graph& g, const Partition& p,
                          ArithmeticMode mode) {
  if (mode == ArithmeticMode::kExact) return modularity<Rational>(g, p);
  const auto f = modularity<double>(g, p);
  ExactBreakdown out;
  out.coverage = f.coverage;
  out.degree_tax = f.degree_tax;
  out.score = f.score;
  return out;
}

}  // namespace modnet
