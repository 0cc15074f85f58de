#include <cmath>

#include "doctest.h"
#include "modnet/errors.hpp"
#include "modnet/modularity.hpp"
#include "modnet/sampling.hpp"
#include "modnet/transforms.hpp"
#include "test_util.hpp"

using namespace modnet;
using testutil::cycle;

TEST_CASE("three disjoint triangles, components partition") {
  Graph g = gen_triangles(3);
  Partition p({0, 0, 0, 1, 1, 1, 2, 2, 2});
  const auto b = modularity<Rational>(g, p);
  CHECK(b.coverage == 1);
  CHECK(b.degree_tax == Rational(1, 3));
  CHECK(b.score == Rational(2, 3));
}

TEST_CASE("trivial partition scores exactly zero on any non-empty graph") {
  for (int n : {2, 5, 7}) {
    Graph g = cycle(n);
    const auto b = modularity<Rational>(g, Partition::trivial(n));
    CHECK(b.coverage == 1);
    CHECK(b.degree_tax == 1);
    CHECK(b.score == 0);
  }
}

TEST_CASE("five-cycle split into a 2-path and a 3-path") {
  Graph g = cycle(5);
  const auto b = modularity<Rational>(g, Partition({0, 0, 1, 1, 1}));
  CHECK(b.coverage == Rational(3, 5));
  CHECK(b.degree_tax == Rational(13, 25));
  CHECK(b.score == Rational(2, 25));
}

TEST_CASE("four-cycle singletons: zero coverage, symmetric tax") {
  const auto b = modularity<Rational>(cycle(4), Partition::singletons(4));
  CHECK(b.coverage == 0);
  CHECK(b.score == Rational(-1, 4));
}

TEST_CASE("empty graph scores zero under every partition") {
  Graph g(4);
  const auto b = modularity<Rational>(g, Partition::singletons(4));
  CHECK(b.coverage == 0);
  CHECK(b.degree_tax == 0);
  CHECK(b.score == 0);
}

TEST_CASE("partition size mismatch is a domain error") {
  CHECK_THROWS_AS(modularity<Rational>(cycle(4), Partition::trivial(3)),
                  DomainError);
}

TEST_CASE("isolated vertices are irrelevant") {
  Graph g = cycle(5);
  Partition p({0, 0, 1, 1, 1});
  const auto before = modularity<Rational>(g, p);
  Graph g2 = add_isolated_vertices(g, 3);
  // place the new vertices anywhere
  Partition p2({0, 0, 1, 1, 1, 0, 1, 2});
  const auto after = modularity<Rational>(g2, p2);
  CHECK(after.coverage == before.coverage);
  CHECK(after.degree_tax == before.degree_tax);
  CHECK(after.score == before.score);
}

TEST_CASE("weighted scoring is scale invariant") {
  // doubling every weight leaves coverage and tax unchanged
  Graph g = cycle(5);
  std::vector<WeightedEdge> doubled;
  for (auto e : g.edges()) doubled.push_back({e.u, e.v, e.w * 2});
  Graph g2(5, std::move(doubled));
  Partition p({0, 0, 1, 1, 1});
  CHECK(modularity<Rational>(g2, p).score ==
        modularity<Rational>(g, p).score);
}

TEST_CASE("float mode agrees with exact mode to 1e-12") {
  RandomSource rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng.next_below(8));
    Graph g = testutil::random_graph(n, 0.5, rng);
    Partition p = testutil::random_partition(n, rng);
    const auto exact = modularity<Rational>(g, p);
    const auto approx = modularity<double>(g, p);
    CHECK(std::abs(approx.score - to_double(exact.score)) < 1e-12);
    CHECK(std::abs(approx.coverage - to_double(exact.coverage)) < 1e-12);
  }
}

TEST_CASE("scores agree with a from-scratch recomputation") {
  RandomSource rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(10));
    Graph g = testutil::random_graph(n, 0.4, rng);
    Partition p = testutil::random_partition(n, rng);
    const auto b = modularity<Rational>(g, p);
    CHECK(to_double(b.score) ==
          doctest::Approx(testutil::naive_score(g, p)).epsilon(1e-12));
    CHECK(b.score == b.coverage - b.degree_tax);
    CHECK(b.coverage >= 0);
    CHECK(b.coverage <= 1);
    CHECK(b.degree_tax >= 0);
    CHECK(b.degree_tax <= 1);
    CHECK(b.score < 1);
  }
}

TEST_CASE("runtime mode dispatch") {
  Graph g = cycle(5);
  Partition p({0, 0, 1, 1, 1});
  CHECK(modularity(g, p, ArithmeticMode::kExact).score == Rational(2, 25));
  const auto f = modularity(g, p, ArithmeticMode::kFloat);
  CHECK(std::abs(to_double(f.score) - 0.08) < 1e-12);
}

TEST_CASE("part volume vector obeys the sum-of-squares sandwich") {
  // for non-negative x with sum s: s*min <= s^2/k <= sum x_i^2 <= s*max
  RandomSource rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng.next_below(9));
    Graph g = testutil::random_graph(n, 0.5, rng);
    if (g.total_weight() == 0) continue;
    Partition p = testutil::random_partition(n, rng);
    std::vector<Rational> pv(p.parts(), Rational(0));
    for (int v = 0; v < n; ++v) pv[p.part_of(v)] += g.degrees()[v];
    Rational s = 0, sq = 0, mn = pv[0], mx = pv[0];
    for (const auto& x : pv) {
      s += x;
      sq += x * x;
      mn = std::min(mn, x);
      mx = std::max(mx, x);
    }
    CHECK(s * mn * p.parts() <= s * s);
    CHECK(s * s <= sq * p.parts());
    CHECK(sq <= s * mx);
  }
}
