#include "modnet/brute_force.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "modnet/errors.hpp"

namespace modnet {
namespace {

// Partitions score q = F / vol(V)^2 with F = 2 * sum_A in(A) * vol(V)
// - sum_A vol(A)^2, so partitions compare by the integer (or rational)
// numerator F alone.  The search enumerates restricted growth strings in
// lexicographic order and keeps the first strict optimum, which makes the
// witness the lexicographically least canonical optimal assignment.
template <typename Acc>
struct PartitionSearch {
  int n = 0;
  int max_parts = 0;
  bool separate_components = false;
  std::vector<std::vector<Acc>> w;
  std::vector<Acc> deg;
  Acc vol_total{};
  std::vector<int> comp;

  std::vector<int> assign;
  std::vector<std::vector<int>> members;
  std::vector<Acc> part_vol;
  std::vector<int> part_comp;
  Acc objective{};
  bool found = false;
  Acc best{};
  std::vector<int> best_assign;

  void run() {
    assign.assign(n, -1);
    if (n == 0) {
      found = true;
      return;
    }
    descend(0, 0);
  }

  void descend(int v, int used) {
    if (v == n) {
      if (!found || objective > best) {
        found = true;
        best = objective;
        best_assign = assign;
      }
      return;
    }
    const int cap = std::min(used + 1, max_parts);
    for (int j = 0; j < cap; ++j) {
      const bool fresh = (j == used);
      if (!fresh && separate_components && part_comp[j] != comp[v]) continue;

      Acc add_in{};
      if (!fresh) {
        for (int u : members[j]) add_in += w[v][u];
      }
      const Acc vol_j = fresh ? Acc{} : part_vol[j];
      Acc delta = Acc(2) * add_in * vol_total -
                  (Acc(2) * vol_j * deg[v] + deg[v] * deg[v]);

      if (fresh) {
        members.push_back({v});
        part_vol.push_back(deg[v]);
        part_comp.push_back(comp[v]);
      } else {
        members[j].push_back(v);
        part_vol[j] += deg[v];
      }
      assign[v] = j;
      objective += delta;

      descend(v + 1, fresh ? used + 1 : used);

      objective -= delta;
      assign[v] = -1;
      if (fresh) {
        members.pop_back();
        part_vol.pop_back();
        part_comp.pop_back();
      } else {
        members[j].pop_back();
        part_vol[j] -= deg[v];
      }
    }
  }
};

struct ReducedGraph {
  int n = 0;                    // non-isolated vertices
  std::vector<int> to_reduced;  // -1 for isolated vertices
  std::vector<std::pair<int, int>> edges;
  std::vector<Rational> weights;
  std::vector<int> comp;
};

ReducedGraph reduce(const Graph& g, int limit) {
  ReducedGraph r;
  r.to_reduced.assign(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degrees()[v] > 0) r.to_reduced[v] = r.n++;
  }
  if (r.n > limit) {
    throw ResourceError("too many non-isolated vertices for enumeration");
  }
  std::vector<std::vector<int>> adj(r.n);
  for (const auto& e : g.edges()) {
    const int u = r.to_reduced[e.u], v = r.to_reduced[e.v];
    r.edges.emplace_back(u, v);
    r.weights.push_back(e.w);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  r.comp.assign(r.n, -1);
  int c = 0;
  for (int s = 0; s < r.n; ++s) {
    if (r.comp[s] != -1) continue;
    std::vector<int> stack = {s};
    r.comp[s] = c;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : adj[v]) {
        if (r.comp[u] == -1) {
          r.comp[u] = c;
          stack.push_back(u);
        }
      }
    }
    ++c;
  }
  return r;
}

template <typename Acc>
Acc to_accumulator(const Rational& r);

template <>
Rational to_accumulator<Rational>(const Rational& r) {
  return r;
}

// Used only on the unweighted fast path, where every weight is 1.
template <>
std::int64_t to_accumulator<std::int64_t>(const Rational& r) {
  return r.get_num().get_si();
}

template <typename Acc>
void fill_matrix(PartitionSearch<Acc>& s, const ReducedGraph& r) {
  s.n = r.n;
  s.comp = r.comp;
  s.w.assign(r.n, std::vector<Acc>(r.n, Acc{}));
  s.deg.assign(r.n, Acc{});
  for (std::size_t i = 0; i < r.edges.size(); ++i) {
    const auto [u, v] = r.edges[i];
    const Acc wt = to_accumulator<Acc>(r.weights[i]);
    s.w[u][v] += wt;
    s.w[v][u] += wt;
    s.deg[u] += wt;
    s.deg[v] += wt;
    s.vol_total += Acc(2) * wt;
  }
}

template <typename Acc>
std::pair<Rational, std::vector<int>> maximize(const ReducedGraph& r,
                                               int max_parts,
                                               bool separate_components) {
  PartitionSearch<Acc> s;
  fill_matrix(s, r);
  s.max_parts = std::max(1, max_parts);
  s.separate_components = separate_components;
  s.run();
  if (r.n == 0) return {Rational(0), {}};
  Rational num = Rational(s.best);
  Rational den = Rational(s.vol_total) * Rational(s.vol_total);
  Rational q = num / den;
  q.canonicalize();
  return {q, s.best_assign};
}

std::pair<Rational, std::vector<int>> maximize_dispatch(
    const Graph& g, const ReducedGraph& r, int max_parts,
    bool separate_components) {
  if (g.is_unweighted()) {
    return maximize<std::int64_t>(r, max_parts, separate_components);
  }
  return maximize<Rational>(r, max_parts, separate_components);
}

}  // namespace

QStarResult brute_force_qstar(const Graph& g, int limit) {
  const ReducedGraph r = reduce(g, limit);
  auto [q, reduced_assign] = maximize_dispatch(g, r, r.n, true);

  // Isolated vertices join part 0: the score is unchanged and the canonical
  // assignment vector is minimized.
  std::vector<int> assign(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (r.to_reduced[v] != -1) assign[v] = reduced_assign[r.to_reduced[v]];
  }
  return {std::move(q), Partition(std::move(assign))};
}

Rational brute_force_q_at_most_k(const Graph& g, int k, int limit) {
  if (k < 1) throw DomainError("k must be at least 1");
  const ReducedGraph r = reduce(g, limit);
  return maximize_dispatch(g, r, k, false).first;
}

}  // namespace modnet
