#include "modnet/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>

#include "modnet/brute_force.hpp"
#include "modnet/errors.hpp"
#include "modnet/fattening.hpp"
#include "modnet/sampling.hpp"

namespace modnet {
namespace {

// Shortest round-trip decimal form, so CSV output is reproducible.
std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  const auto d = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(d).count();
}

}  // namespace

void emit_csv(std::ostream& out,
              const std::vector<ExperimentRecord>& records) {
  out << "experiment,param_name,param_value,replicate,seed,score,score_kind,"
         "runtime_ms\n";
  for (const auto& r : records) {
    out << r.experiment << ',' << r.param_name << ','
        << format_double(r.param_value) << ',' << r.replicate << ',' << r.seed
        << ',' << format_double(r.score) << ',' << r.score_kind << ','
        << format_double(r.runtime_ms) << '\n';
  }
}

void emit_svg_scatter(std::ostream& out,
                      const std::vector<ExperimentRecord>& records,
                      const ScatterAxes& axes) {
  const int width = 640, height = 480;
  const int ml = 60, mr = 20, mt = 40, mb = 50;

  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  if (!records.empty()) {
    xmin = xmax = records[0].param_value;
    ymin = ymax = records[0].score;
    for (const auto& r : records) {
      xmin = std::min(xmin, r.param_value);
      xmax = std::max(xmax, r.param_value);
      ymin = std::min(ymin, r.score);
      ymax = std::max(ymax, r.score);
    }
    if (axes.reference_line) {
      ymin = std::min(ymin, *axes.reference_line);
      ymax = std::max(ymax, *axes.reference_line);
    }
    const double pad_x = (xmax - xmin) * 0.08 + 1e-9;
    const double pad_y = (ymax - ymin) * 0.08 + 1e-9;
    xmin -= pad_x + axes.jitter;
    xmax += pad_x + axes.jitter;
    ymin -= pad_y;
    ymax += pad_y;
  }

  auto sx = [&](double x) {
    return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr);
  };
  auto sy = [&](double y) {
    return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
         "font-size=\"15\">" << axes.title << "</text>\n";
  // axes box
  out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\""
      << width - ml - mr << "\" height=\"" << height - mt - mb
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-size=\"13\">" << axes.x_label
      << "</text>\n";
  out << "<text x=\"16\" y=\"" << height / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 "
         "16 " << height / 2 << ")\">" << axes.y_label << "</text>\n";

  for (int i = 0; i <= 5; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 5.0;
    const double fy = ymin + (ymax - ymin) * i / 5.0;
    out << "<text x=\"" << sx(fx) << "\" y=\"" << height - mb + 16
        << "\" text-anchor=\"middle\" font-size=\"10\">" << format_double(
               std::round(fx * 1000) / 1000) << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << sy(fy) + 3
        << "\" text-anchor=\"end\" font-size=\"10\">" << format_double(
               std::round(fy * 1000) / 1000) << "</text>\n";
  }

  if (axes.reference_line) {
    out << "<line x1=\"" << ml << "\" y1=\"" << sy(*axes.reference_line)
        << "\" x2=\"" << width - mr << "\" y2=\"" << sy(*axes.reference_line)
        << "\" stroke=\"gray\" stroke-dasharray=\"5,4\"/>\n";
  }

  RandomSource jitter_rng(axes.jitter_seed);
  for (const auto& r : records) {
    double x = r.param_value;
    if (axes.jitter > 0) {
      x += (2 * jitter_rng.next_unit() - 1) * axes.jitter;
    }
    out << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(r.score)
        << "\" r=\"2.5\" fill=\"red\" fill-opacity=\"0.6\"/>\n";
  }
  out << "</svg>\n";
}

std::vector<ExperimentRecord> fig1_sweep(const Graph& g,
                                         const SweepConfig& cfg) {
  if (g.total_weight() == 0) throw DomainError("sweep needs a non-empty graph");
  if (cfg.grid.empty() || cfg.replicates < 1) {
    throw DomainError("sweep grid must be non-empty with replicates >= 1");
  }
  const RandomSource master(cfg.master_seed);
  std::vector<ExperimentRecord> records;
  for (std::size_t pi = 0; pi < cfg.grid.size(); ++pi) {
    const double p = cfg.grid[pi];
    for (int rep = 0; rep < cfg.replicates; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      RandomSource rng = master.child(pi * 1000003 + rep);
      Graph gp = sample_edges(g, p, rng);
      double score = 0.0;
      if (gp.total_weight() > 0) {
        HeuristicConfig hc = cfg.heuristic;
        hc.seed = rng.child(1).seed();
        score = best_of(gp, cfg.heuristic_runs, hc).best_score;
      }
      records.push_back({"fig1", "p", p, rep, rng.seed(), score, "heuristic",
                         elapsed_ms(start)});
    }
  }
  return records;
}

Theorem1Report theorem1_check(const Graph& g, double p, double eps, int reps,
                              const Rational& reference, bool exact_scoring,
                              const SweepConfig& cfg) {
  Theorem1Report report;
  report.reference_qstar = to_double(reference);
  report.replicates = static_cast<std::size_t>(reps);
  const double threshold = to_double(reference) - eps;
  const RandomSource master(cfg.master_seed);
  for (int rep = 0; rep < reps; ++rep) {
    RandomSource rng = master.child(rep);
    Graph gp = sample_edges(g, p, rng);
    double score = 0.0;
    if (gp.total_weight() > 0) {
      if (exact_scoring) {
        score = to_double(brute_force_qstar(gp).qstar);
      } else {
        HeuristicConfig hc = cfg.heuristic;
        hc.seed = rng.child(1).seed();
        score = best_of(gp, cfg.heuristic_runs, hc).best_score;
      }
    }
    if (score <= threshold) ++report.failures;
  }
  report.failure_fraction =
      static_cast<double>(report.failures) / static_cast<double>(reps);
  report.wilson = wilson_interval(report.failures, report.replicates);
  return report;
}

Partition theorem2_translate(const Graph& g_observed, const Partition& a,
                             const Rational& eta) {
  return fatten<Rational>(g_observed, eta, a).partition;
}

QBarEstimate qbar_estimate(int n, double c, int reps, std::uint64_t seed,
                           const HeuristicConfig& heuristic, int runs) {
  if (c > n) throw DomainError("qbar estimate requires c <= n");
  if (reps < 1) throw DomainError("need at least one replicate");
  QBarEstimate est;
  const RandomSource master(seed);
  for (int rep = 0; rep < reps; ++rep) {
    RandomSource rng = master.child(rep);
    Graph g = erdos_renyi(n, c / n, rng);
    double score = 0.0;
    if (g.total_weight() > 0) {
      HeuristicConfig hc = heuristic;
      hc.seed = rng.child(1).seed();
      score = best_of(g, runs, hc).best_score;
    }
    est.samples.push_back(score);
  }
  const Summary s = summarize(est.samples);
  est.mean = s.mean;
  est.stderr_mean = s.stderr_mean;
  return est;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    default: return "inconclusive";
  }
}

UndersamplingReport undersampling_check(const Graph& h, double p0,
                                        const std::vector<double>& p_grid,
                                        int reps, double tolerance,
                                        const SweepConfig& cfg) {
  if (p_grid.empty()) throw DomainError("p grid must be non-empty");
  if (p0 > *std::min_element(p_grid.begin(), p_grid.end())) {
    throw DomainError("p0 must not exceed the grid minimum");
  }

  const RandomSource master(cfg.master_seed);
  auto estimate = [&](double p, std::uint64_t stream) {
    std::vector<double> scores;
    for (int rep = 0; rep < reps; ++rep) {
      RandomSource rng = master.child(stream * 1000003 + rep);
      Graph gp = sample_edges(h, p, rng);
      double score = 0.0;
      if (gp.total_weight() > 0) {
        HeuristicConfig hc = cfg.heuristic;
        hc.seed = rng.child(1).seed();
        score = best_of(gp, cfg.heuristic_runs, hc).best_score;
      }
      scores.push_back(score);
    }
    return summarize(scores);
  };

  UndersamplingReport report;
  report.p0 = p0;
  report.tolerance = tolerance;
  report.grid = p_grid;
  report.p0_summary = estimate(p0, 0);
  double grid_max_mean = -1.0;
  Summary argmax_summary;
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    Summary s = estimate(p_grid[i], i + 1);
    report.grid_summaries.push_back(s);
    if (s.mean > grid_max_mean) {
      grid_max_mean = s.mean;
      argmax_summary = s;
    }
  }

  // A clear failure needs the confidence intervals themselves separated by
  // more than the tolerance; otherwise the point estimates decide, with the
  // overlap zone reported as inconclusive.
  const Interval p0_ci = normal_interval(report.p0_summary);
  const Interval max_ci = normal_interval(argmax_summary);
  if (p0_ci.high < max_ci.low - tolerance) {
    report.verdict = Verdict::kFails;
  } else if (report.p0_summary.mean >= grid_max_mean - tolerance) {
    report.verdict = Verdict::kHolds;
  } else {
    report.verdict = Verdict::kInconclusive;
  }
  return report;
}

}  // namespace modnet
