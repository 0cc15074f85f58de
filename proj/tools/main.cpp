// Command-line front end: scoring, optimization, fattening, sampling,
// generators, enumeration oracles and the Monte-Carlo experiment engine.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modnet/brute_force.hpp"
#include "modnet/errors.hpp"
#include "modnet/experiment.hpp"
#include "modnet/fattening.hpp"
#include "modnet/heuristic.hpp"
#include "modnet/io.hpp"
#include "modnet/modularity.hpp"
#include "modnet/sampling.hpp"
#include "modnet/transforms.hpp"

namespace {

using namespace modnet;

constexpr int kExitOk = 0;
constexpr int kExitExperimentFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string mode = "exact";
  std::string out_path;
  std::string format = "csv";

  ArithmeticMode arithmetic() const {
    return mode == "float" ? ArithmeticMode::kFloat : ArithmeticMode::kExact;
  }
};

// Writes through to --out when given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoError("cannot write output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void print_breakdown(std::ostream& os, const ExactBreakdown& b,
                     ArithmeticMode mode) {
  if (mode == ArithmeticMode::kExact) {
    os << "coverage " << to_string(b.coverage) << "\n"
       << "degree_tax " << to_string(b.degree_tax) << "\n"
       << "score " << to_string(b.score) << " (" << to_double(b.score)
       << ")\n";
  } else {
    os << "coverage " << to_double(b.coverage) << "\n"
       << "degree_tax " << to_double(b.degree_tax) << "\n"
       << "score " << to_double(b.score) << "\n";
  }
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> grid;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) grid.push_back(std::stod(tok));
  }
  return grid;
}

void emit_records(const GlobalOptions& g,
                  const std::vector<ExperimentRecord>& records,
                  const ScatterAxes& axes) {
  Output out(g.out_path);
  if (g.format == "svg") {
    emit_svg_scatter(out.stream(), records, axes);
  } else {
    emit_csv(out.stream(), records);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Graph modularity under random edge sampling: scoring, "
               "optimization, fattening and experiment harness"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--seed", global.seed, "Master random seed");
  app.add_option("--mode", global.mode, "Arithmetic mode")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--out", global.out_path, "Output path (default stdout)");
  app.add_option("--format", global.format, "Experiment output format")
      ->check(CLI::IsMember({"csv", "svg"}));

  // --- score ---
  auto* score_cmd = app.add_subcommand("score", "Score a partition on a graph");
  std::string graph_path, partition_path;
  score_cmd->add_option("--graph", graph_path, "Edge-list file")->required();
  score_cmd->add_option("--partition", partition_path, "Partition file")
      ->required();
  score_cmd->callback([&] {
    Graph g = read_edge_list_file(graph_path);
    Partition p = read_partition_file(partition_path, g);
    Output out(global.out_path);
    print_breakdown(out.stream(), modularity(g, p, global.arithmetic()),
                    global.arithmetic());
  });

  // --- optimize ---
  auto* opt_cmd = app.add_subcommand("optimize", "Maximize modularity");
  std::string opt_graph, opt_method = "heuristic", opt_refine = "on";
  int opt_runs = 200;
  opt_cmd->add_option("--graph", opt_graph, "Edge-list file")->required();
  opt_cmd->add_option("--method", opt_method, "brute or heuristic")
      ->check(CLI::IsMember({"brute", "heuristic"}));
  opt_cmd->add_option("--runs", opt_runs, "Heuristic restarts");
  opt_cmd->add_option("--refine", opt_refine, "Refinement pass on/off")
      ->check(CLI::IsMember({"on", "off"}));
  opt_cmd->callback([&] {
    Graph g = read_edge_list_file(opt_graph);
    Output out(global.out_path);
    if (opt_method == "brute") {
      auto r = brute_force_qstar(g);
      // comment line so the output stays a loadable partition file
      out.stream() << "# qstar " << to_string(r.qstar) << " ("
                   << to_double(r.qstar) << ")\n";
      write_partition(out.stream(), g, r.witness);
    } else {
      HeuristicConfig hc;
      hc.seed = global.seed;
      hc.refinement = (opt_refine == "on");
      auto r = best_of(g, opt_runs, hc);
      out.stream() << "# qtilde " << r.best_score << " over " << r.runs
                   << " runs\n";
      write_partition(out.stream(), g, r.best_partition);
    }
  });

  // --- fatten ---
  auto* fat_cmd = app.add_subcommand(
      "fatten", "Amalgamate a partition until every part is eta-fat");
  std::string fat_graph, fat_partition, fat_eta;
  fat_cmd->add_option("--graph", fat_graph, "Edge-list file")->required();
  fat_cmd->add_option("--partition", fat_partition, "Partition file")
      ->required();
  fat_cmd->add_option("--eta", fat_eta, "Fatness threshold in (0,1]")
      ->required();
  fat_cmd->callback([&] {
    Graph g = read_edge_list_file(fat_graph);
    Partition b = read_partition_file(fat_partition, g);
    auto result = fatten<Rational>(g, parse_rational(fat_eta), b);
    Output out(global.out_path);
    write_partition(out.stream(), g, result.partition);
  });

  // --- sample ---
  auto* sample_cmd =
      app.add_subcommand("sample", "Apply an observation model to a graph");
  std::string sample_graph;
  std::optional<double> sample_p, sample_budget, sample_budget_pv;
  std::optional<int> sample_vertices;
  sample_cmd->add_option("--graph", sample_graph, "Edge-list file")->required();
  sample_cmd->add_option("--p", sample_p, "Edge retention probability");
  sample_cmd->add_option("--budget", sample_budget, "Edge budget c");
  sample_cmd->add_option("--budget-per-vertex", sample_budget_pv,
                         "Edge budget c per vertex (c * v(G))");
  sample_cmd->add_option("--vertices", sample_vertices,
                         "Induced subgraph on a random k-subset");
  sample_cmd->callback([&] {
    const int modes = int(sample_p.has_value()) + int(sample_budget.has_value()) +
                      int(sample_budget_pv.has_value()) +
                      int(sample_vertices.has_value());
    if (modes != 1) {
      throw CLI::ValidationError(
          "sample", "exactly one of --p/--budget/--budget-per-vertex/--vertices");
    }
    Graph g = read_edge_list_file(sample_graph);
    RandomSource rng(global.seed);
    Graph result = g;
    if (sample_p) {
      result = sample_edges(g, *sample_p, rng);
    } else if (sample_budget) {
      result = edge_limited_search(g, *sample_budget, rng);
    } else if (sample_budget_pv) {
      result = edge_limited_search(g, *sample_budget_pv * g.vertex_count(), rng);
    } else {
      result = vertex_sample(g, *sample_vertices, rng);
    }
    Output out(global.out_path);
    write_edge_list(out.stream(), result);
  });

  // --- gen ---
  auto* gen_cmd = app.add_subcommand("gen", "Deterministic constructions");
  gen_cmd->require_subcommand(1);
  int gen_k = 3, gen_m = 6, gen_n = 8, gen_t = 3;
  auto emit_graph = [&](const Graph& g) {
    Output out(global.out_path);
    write_edge_list(out.stream(), g);
  };
  auto* gen_tri = gen_cmd->add_subcommand("triangles", "k disjoint triangles");
  gen_tri->add_option("--k", gen_k, "Triangle count")->required();
  gen_tri->callback([&] { emit_graph(gen_triangles(gen_k)); });
  auto* gen_star = gen_cmd->add_subcommand(
      "star-matching", "Star with m-k edges plus k isolated edges");
  gen_star->add_option("--m", gen_m, "Total edges")->required();
  gen_star->add_option("--k", gen_k, "Isolated edges")->required();
  gen_star->callback([&] { emit_graph(gen_star_plus_matching(gen_m, gen_k)); });
  auto* gen_tc = gen_cmd->add_subcommand("two-cliques",
                                         "Two disjoint cliques on n/2 each");
  gen_tc->add_option("--n", gen_n, "Vertex count (even)")->required();
  gen_tc->callback([&] { emit_graph(gen_two_cliques(gen_n)); });
  auto* gen_cm = gen_cmd->add_subcommand(
      "clique-matching", "Clique on k vertices plus t isolated edges");
  gen_cm->add_option("--k", gen_k, "Clique size")->required();
  gen_cm->add_option("--t", gen_t, "Matching size")->required();
  gen_cm->callback([&] { emit_graph(gen_clique_plus_matching(gen_k, gen_t)); });

  // --- oracle ---
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact enumeration oracles");
  oracle_cmd->require_subcommand(1);
  std::string oracle_graph, oracle_x;
  int oracle_k = 2;
  auto* o_qstar = oracle_cmd->add_subcommand("qstar", "Exact q*(G)");
  o_qstar->add_option("--graph", oracle_graph, "Edge-list file")->required();
  o_qstar->callback([&] {
    auto r = brute_force_qstar(read_edge_list_file(oracle_graph));
    Output out(global.out_path);
    out.stream() << to_string(r.qstar) << " (" << to_double(r.qstar) << ")\n";
  });
  auto* o_qk = oracle_cmd->add_subcommand("qk", "Exact q_{<=k}(G)");
  o_qk->add_option("--graph", oracle_graph, "Edge-list file")->required();
  o_qk->add_option("--k", oracle_k, "Maximum part count")->required();
  o_qk->callback([&] {
    auto q = brute_force_q_at_most_k(read_edge_list_file(oracle_graph),
                                     oracle_k);
    Output out(global.out_path);
    out.stream() << to_string(q) << " (" << to_double(q) << ")\n";
  });
  auto* o_lambda = oracle_cmd->add_subcommand(
      "lambda", "Optimal number bi-partitioning value");
  o_lambda->add_option("--x", oracle_x, "Comma-separated positive weights")
      ->required();
  o_lambda->callback([&] {
    std::vector<Rational> raw;
    std::stringstream ss(oracle_x);
    std::string tok;
    while (std::getline(ss, tok, ',')) raw.push_back(parse_rational(tok));
    WeightVector<Rational> x(std::move(raw));
    const Rational lambda = lambda_exact(x);
    const auto greedy = greedy_bipartition(x);
    Output out(global.out_path);
    out.stream() << "lambda " << to_string(lambda) << "\n"
                 << "gamma " << to_string(greedy.gamma) << "\n";
  });

  // --- experiment ---
  auto* exp_cmd = app.add_subcommand("experiment", "Monte-Carlo experiments");
  exp_cmd->require_subcommand(1);
  std::string exp_graph, exp_grid = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  int exp_reps = 50, exp_runs = 200;
  double exp_p = 0.5, exp_eps = 0.15, exp_p0 = 0.2, exp_tol = 0.05;
  double exp_jitter = 0.0;
  std::optional<double> exp_reference;
  bool exp_exact = false;
  int exp_n = 100;
  double exp_c = 3.0;
  std::string exp_eta = "1/20", exp_partition;

  auto sweep_config = [&] {
    SweepConfig cfg;
    cfg.grid = parse_grid(exp_grid);
    cfg.replicates = exp_reps;
    cfg.heuristic_runs = exp_runs;
    cfg.master_seed = global.seed;
    return cfg;
  };

  auto* e_fig1 = exp_cmd->add_subcommand(
      "fig1", "Sampled-modularity sweep over an edge-probability grid");
  e_fig1->add_option("--graph", exp_graph, "Edge-list file")->required();
  e_fig1->add_option("--grid", exp_grid, "Comma-separated p grid");
  e_fig1->add_option("--reps", exp_reps, "Replicates per grid point");
  e_fig1->add_option("--runs", exp_runs, "Heuristic runs per replicate");
  e_fig1->add_option("--jitter", exp_jitter, "Plot x-axis jitter half-width");
  e_fig1->add_option("--reference", exp_reference,
                     "Horizontal q* reference line for the SVG");
  e_fig1->callback([&] {
    Graph g = read_edge_list_file(exp_graph);
    auto records = fig1_sweep(g, sweep_config());
    ScatterAxes axes{"Estimated modularity of sampled graph", "p", "q~(G_p)",
                     exp_reference, exp_jitter, global.seed};
    emit_records(global, records, axes);
  });

  auto* e_thm1 = exp_cmd->add_subcommand(
      "thm1", "Failure fraction of q~(G_p) <= q*(G) - eps");
  int thm1_exit = kExitOk;
  e_thm1->add_option("--graph", exp_graph, "Edge-list file")->required();
  e_thm1->add_option("--p", exp_p, "Retention probability");
  e_thm1->add_option("--eps", exp_eps, "Tolerance eps");
  e_thm1->add_option("--reps", exp_reps, "Replicates");
  e_thm1->add_option("--runs", exp_runs, "Heuristic runs per replicate");
  e_thm1->add_option("--reference", exp_reference,
                     "Reference q*(G); brute-forced when omitted");
  e_thm1->add_flag("--exact", exp_exact,
                   "Score each replicate by brute force");
  e_thm1->callback([&] {
    Graph g = read_edge_list_file(exp_graph);
    const Rational ref = exp_reference
                             ? Rational(*exp_reference)
                             : brute_force_qstar(g).qstar;
    auto report = theorem1_check(g, exp_p, exp_eps, exp_reps, ref, exp_exact,
                                 sweep_config());
    Output out(global.out_path);
    out.stream() << "reference_qstar " << report.reference_qstar << "\n"
                 << "failures " << report.failures << "/" << report.replicates
                 << "\n"
                 << "failure_fraction " << report.failure_fraction << "\n"
                 << "wilson95 [" << report.wilson.low << ", "
                 << report.wilson.high << "]\n";
    if (report.failure_fraction > exp_eps) thm1_exit = kExitExperimentFailed;
  });

  auto* e_thm2 = exp_cmd->add_subcommand(
      "thm2", "Translate an observed-graph partition into an eta-fat one");
  e_thm2->add_option("--graph", exp_graph, "Observed-graph edge list")
      ->required();
  e_thm2->add_option("--partition", exp_partition, "Partition file")
      ->required();
  e_thm2->add_option("--eta", exp_eta, "Fatness threshold (default eps/9)");
  e_thm2->callback([&] {
    Graph g = read_edge_list_file(exp_graph);
    Partition a = read_partition_file(exp_partition, g);
    Partition translated = theorem2_translate(g, a, parse_rational(exp_eta));
    Output out(global.out_path);
    write_partition(out.stream(), g, translated);
  });

  auto* e_qbar = exp_cmd->add_subcommand(
      "qbar", "Monte-Carlo estimate of E[q*(G_{n,c/n})]");
  e_qbar->add_option("--n", exp_n, "Vertex count");
  e_qbar->add_option("--c", exp_c, "Mean degree parameter");
  e_qbar->add_option("--reps", exp_reps, "Replicates");
  e_qbar->add_option("--runs", exp_runs, "Heuristic runs per replicate");
  e_qbar->callback([&] {
    HeuristicConfig hc;
    auto est = qbar_estimate(exp_n, exp_c, exp_reps, global.seed, hc,
                             exp_runs);
    Output out(global.out_path);
    out.stream() << "mean " << est.mean << "\n"
                 << "stderr " << est.stderr_mean << "\n";
  });

  auto* e_under = exp_cmd->add_subcommand(
      "undersample", "Check that low-p sampling does not under-estimate");
  int under_exit = kExitOk;
  e_under->add_option("--graph", exp_graph, "Edge-list file")->required();
  e_under->add_option("--p0", exp_p0, "Lowest probability p0");
  e_under->add_option("--grid", exp_grid, "Comma-separated p grid");
  e_under->add_option("--reps", exp_reps, "Replicates per point");
  e_under->add_option("--runs", exp_runs, "Heuristic runs per replicate");
  e_under->add_option("--tol", exp_tol, "Comparison tolerance");
  e_under->callback([&] {
    Graph g = read_edge_list_file(exp_graph);
    auto report = undersampling_check(g, exp_p0, parse_grid(exp_grid),
                                      exp_reps, exp_tol, sweep_config());
    Output out(global.out_path);
    out.stream() << "p0_mean " << report.p0_summary.mean << "\n";
    for (std::size_t i = 0; i < report.grid.size(); ++i) {
      out.stream() << "p " << report.grid[i] << " mean "
                   << report.grid_summaries[i].mean << "\n";
    }
    out.stream() << "verdict " << to_string(report.verdict) << "\n";
    if (report.verdict == Verdict::kFails) under_exit = kExitExperimentFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (thm1_exit != kExitOk) return thm1_exit;
  return under_exit;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const modnet::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
