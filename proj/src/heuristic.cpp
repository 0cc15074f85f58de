#include "modnet/heuristic.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "modnet/errors.hpp"
#include "modnet/modularity.hpp"

namespace modnet {
namespace {

// Working representation for one aggregation level.  self_w holds the
// internal weight of an aggregated node (counted once); deg includes it
// twice, as in the volume of the underlying vertex set.
struct LevelGraph {
  int n = 0;
  std::vector<std::vector<std::pair<int, double>>> adj;
  std::vector<double> self_w;
  std::vector<double> deg;
  double vol_total = 0.0;
};

LevelGraph from_graph(const Graph& g) {
  LevelGraph lg;
  lg.n = g.vertex_count();
  lg.adj.resize(lg.n);
  lg.self_w.assign(lg.n, 0.0);
  lg.deg.assign(lg.n, 0.0);
  for (const auto& e : g.edges()) {
    const double w = to_double(e.w);
    lg.adj[e.u].emplace_back(e.v, w);
    lg.adj[e.v].emplace_back(e.u, w);
    lg.deg[e.u] += w;
    lg.deg[e.v] += w;
    lg.vol_total += 2 * w;
  }
  return lg;
}

int count_communities(const std::vector<int>& comm) {
  return comm.empty() ? 0 : *std::max_element(comm.begin(), comm.end()) + 1;
}

// Renumbers community labels to 0..k-1 by first appearance.
void compress(std::vector<int>& comm) {
  std::vector<int> remap(comm.size(), -1);
  int next = 0;
  for (int& c : comm) {
    if (remap[c] == -1) remap[c] = next++;
    c = remap[c];
  }
}

// One round of local moving.  `comm` is the initial assignment (labels in
// 0..k-1) and is updated in place.  With `constraint` set, nodes only move
// between communities inside their constraint group.  Returns the number of
// accepted moves; every accepted move strictly improves the score.
int local_moving(const LevelGraph& lg, std::vector<int>& comm,
                 const std::vector<int>* constraint, RandomSource& rng,
                 int max_sweeps, double min_gain) {
  std::vector<double> comm_vol(lg.n, 0.0);
  for (int v = 0; v < lg.n; ++v) comm_vol[comm[v]] += lg.deg[v];

  std::vector<int> order(lg.n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = lg.n - 1; i > 0; --i) {
    std::swap(order[i], order[rng.next_below(i + 1)]);
  }

  std::vector<double> weight_to(lg.n, 0.0);
  int total_moves = 0;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    int moves = 0;
    for (int v : order) {
      const int from = comm[v];
      std::vector<int> candidates;
      for (const auto& [u, w] : lg.adj[v]) {
        if (constraint && (*constraint)[u] != (*constraint)[v]) continue;
        if (weight_to[comm[u]] == 0.0 && comm[u] != from) {
          candidates.push_back(comm[u]);
        }
        weight_to[comm[u]] += w;
      }

      const double vol_rest = comm_vol[from] - lg.deg[v];
      const double k_from = weight_to[from];
      int best = from;
      double best_gain = 0.0;
      std::sort(candidates.begin(), candidates.end());
      for (int c : candidates) {
        const double gain =
            (2 * (weight_to[c] - k_from) -
             2 * lg.deg[v] * (comm_vol[c] - vol_rest) / lg.vol_total) /
            lg.vol_total;
        if (gain > best_gain + min_gain) {
          best_gain = gain;
          best = c;
        }
      }

      for (const auto& [u, w] : lg.adj[v]) weight_to[comm[u]] = 0.0;
      weight_to[from] = 0.0;

      if (best != from) {
        comm_vol[from] -= lg.deg[v];
        comm_vol[best] += lg.deg[v];
        comm[v] = best;
        ++moves;
      }
    }
    total_moves += moves;
    if (moves == 0) break;
  }
  return total_moves;
}

// Quotient graph over `comm` (labels must be compressed).
LevelGraph aggregate(const LevelGraph& lg, const std::vector<int>& comm) {
  LevelGraph out;
  out.n = count_communities(comm);
  out.adj.resize(out.n);
  out.self_w.assign(out.n, 0.0);
  out.deg.assign(out.n, 0.0);
  out.vol_total = lg.vol_total;

  for (int v = 0; v < lg.n; ++v) {
    out.self_w[comm[v]] += lg.self_w[v];
    out.deg[comm[v]] += lg.deg[v];
  }
  std::vector<std::vector<double>> cross(out.n);
  for (int v = 0; v < lg.n; ++v) {
    for (const auto& [u, w] : lg.adj[v]) {
      if (u <= v) continue;
      if (comm[u] == comm[v]) {
        out.self_w[comm[v]] += w;
      } else {
        const int a = std::min(comm[v], comm[u]);
        const int b = std::max(comm[v], comm[u]);
        if (cross[a].empty()) cross[a].assign(out.n, 0.0);
        cross[a][b] += w;
      }
    }
  }
  for (int a = 0; a < out.n; ++a) {
    if (cross[a].empty()) continue;
    for (int b = a + 1; b < out.n; ++b) {
      if (cross[a][b] != 0.0) {
        out.adj[a].emplace_back(b, cross[a][b]);
        out.adj[b].emplace_back(a, cross[a][b]);
      }
    }
  }
  return out;
}

}  // namespace

SingleRun local_move_heuristic(const Graph& g, const HeuristicConfig& cfg) {
  if (g.total_weight() == 0) {
    throw DomainError("heuristic requires a graph with positive total weight");
  }

  RandomSource rng(cfg.seed);
  LevelGraph level = from_graph(g);
  // flat[v] = node of the current level that vertex v belongs to
  std::vector<int> flat(g.vertex_count());
  std::iota(flat.begin(), flat.end(), 0);
  std::vector<int> comm(level.n);
  std::iota(comm.begin(), comm.end(), 0);

  SingleRun run{Partition::trivial(g.vertex_count()), 0.0, {}};
  double prev_score = -1.0;
  std::vector<int> best_flat = flat;

  for (int depth = 0;; ++depth) {
    local_moving(level, comm, nullptr, rng, cfg.max_sweeps, cfg.min_gain);
    compress(comm);

    std::vector<int> assignment(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) assignment[v] = comm[flat[v]];
    const double score =
        modularity<double>(g, Partition(assignment)).score;
    run.score_trace.push_back(score);
    if (score > prev_score) {
      prev_score = score;
      best_flat = assignment;
    } else if (depth > 0) {
      break;  // level brought no improvement
    }

    const int ncomm = count_communities(comm);
    if (ncomm == level.n) break;  // nothing merged, aggregation is identity

    std::vector<int> next_init;
    if (cfg.refinement) {
      // Split each community into well-connected subcommunities, aggregate
      // on the refined partition, and keep the coarse communities as the
      // next level's starting assignment.
      std::vector<int> refined(level.n);
      std::iota(refined.begin(), refined.end(), 0);
      local_moving(level, refined, &comm, rng, cfg.max_sweeps, cfg.min_gain);
      compress(refined);
      const int nref = count_communities(refined);
      next_init.assign(nref, 0);
      for (int v = 0; v < level.n; ++v) next_init[refined[v]] = comm[v];
      level = aggregate(level, refined);
      for (int& f : flat) f = refined[f];
    } else {
      level = aggregate(level, comm);
      for (int& f : flat) f = comm[f];
      next_init.resize(level.n);
      std::iota(next_init.begin(), next_init.end(), 0);
    }
    comm = std::move(next_init);
  }

  // Never worse than the trivial partition.
  if (prev_score > 0.0) {
    run.partition = Partition(best_flat);
    run.score = prev_score;
  }
  return run;
}

OptimizeResult best_of(const Graph& g, int runs, const HeuristicConfig& cfg) {
  if (runs < 1) throw DomainError("need at least one run");
  OptimizeResult out;
  out.runs = runs;
  for (int i = 0; i < runs; ++i) {
    HeuristicConfig run_cfg = cfg;
    run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(i);
    SingleRun run = local_move_heuristic(g, run_cfg);
    out.per_run_scores.push_back(run.score);
    if (i == 0 || run.score > out.best_score) {
      out.best_score = run.score;
      out.best_partition = std::move(run.partition);
    }
  }
  return out;
}

}  // namespace modnet
