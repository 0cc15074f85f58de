#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "modnet/brute_force.hpp"
#include "modnet/errors.hpp"
#include "modnet/experiment.hpp"
#include "modnet/heuristic.hpp"
#include "modnet/sampling.hpp"
#include "test_util.hpp"

using namespace modnet;

namespace {

// CSV rows with the runtime column (the only non-reproducible field) removed.
std::vector<std::string> stable_rows(const std::vector<ExperimentRecord>& recs) {
  std::ostringstream out;
  emit_csv(out, recs);
  std::vector<std::string> rows;
  std::istringstream in(out.str());
  std::string line;
  while (std::getline(in, line)) {
    rows.push_back(line.substr(0, line.rfind(',')));
  }
  return rows;
}

SweepConfig small_config(std::uint64_t seed) {
  SweepConfig cfg;
  cfg.grid = {0.4, 0.8};
  cfg.replicates = 3;
  cfg.heuristic_runs = 5;
  cfg.master_seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("sweep produces grid-by-replicate rows") {
  Graph g = gen_triangles(3);
  auto records = fig1_sweep(g, small_config(1));
  CHECK(records.size() == 6);
  for (const auto& r : records) {
    CHECK(r.experiment == "fig1");
    CHECK(r.param_name == "p");
    CHECK(r.score_kind == "heuristic");
    CHECK(r.score >= 0.0);
  }
}

TEST_CASE("sweep at p = 1 recovers the exact optimum of easy graphs") {
  SweepConfig cfg = small_config(2);
  cfg.grid = {1.0};
  cfg.replicates = 1;
  auto records = fig1_sweep(gen_triangles(3), cfg);
  REQUIRE(records.size() == 1);
  CHECK(records[0].score == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("sweep at p = 0 scores zero everywhere") {
  SweepConfig cfg = small_config(3);
  cfg.grid = {0.0};
  auto records = fig1_sweep(gen_triangles(3), cfg);
  for (const auto& r : records) CHECK(r.score == 0.0);
}

TEST_CASE("sweep validation") {
  CHECK_THROWS_AS(fig1_sweep(Graph(4), small_config(4)), DomainError);
  SweepConfig bad = small_config(5);
  bad.grid.clear();
  CHECK_THROWS_AS(fig1_sweep(gen_triangles(2), bad), DomainError);
  bad = small_config(6);
  bad.replicates = 0;
  CHECK_THROWS_AS(fig1_sweep(gen_triangles(2), bad), DomainError);
}

TEST_CASE("identical runs give identical CSV up to the runtime column") {
  Graph g = gen_triangles(3);
  auto a = stable_rows(fig1_sweep(g, small_config(7)));
  auto b = stable_rows(fig1_sweep(g, small_config(7)));
  CHECK(a == b);
  auto c = stable_rows(fig1_sweep(g, small_config(8)));
  CHECK(a != c);
}

TEST_CASE("any row replays in isolation from its stored seed") {
  Graph g = gen_triangles(3);
  SweepConfig cfg = small_config(9);
  auto records = fig1_sweep(g, cfg);
  for (const auto& rec : records) {
    RandomSource rng(rec.seed);
    Graph gp = sample_edges(g, rec.param_value, rng);
    double score = 0.0;
    if (gp.total_weight() > 0) {
      HeuristicConfig hc = cfg.heuristic;
      hc.seed = rng.child(1).seed();
      score = best_of(gp, cfg.heuristic_runs, hc).best_score;
    }
    CHECK(score == rec.score);
  }
}

TEST_CASE("CSV schema") {
  std::ostringstream empty;
  emit_csv(empty, {});
  CHECK(empty.str() ==
        "experiment,param_name,param_value,replicate,seed,score,score_kind,"
        "runtime_ms\n");

  std::ostringstream one;
  emit_csv(one, {{"fig1", "p", 0.5, 3, 42, 0.25, "heuristic", 1.5}});
  CHECK(one.str().find("fig1,p,0.5,3,42,0.25,heuristic,1.5") !=
        std::string::npos);
}

TEST_CASE("SVG scatter is a self-contained document") {
  std::vector<ExperimentRecord> recs;
  for (int i = 0; i < 10; ++i)
    recs.push_back({"fig1", "p", 0.1 * i, i, 0, 0.05 * i, "heuristic", 0});
  ScatterAxes axes{"title", "p", "q", 0.3, 0.01, 5};
  std::ostringstream out;
  emit_svg_scatter(out, recs, axes);
  const std::string svg = out.str();
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::size_t circles = 0, pos = 0;
  while ((pos = svg.find("<circle", pos)) != std::string::npos) {
    ++circles;
    ++pos;
  }
  CHECK(circles == 10);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);  // reference line
  CHECK(svg.find("href") == std::string::npos);  // no external assets
}

TEST_CASE("failure fraction vanishes when nothing is removed") {
  Graph g = gen_triangles(3);
  const Rational qstar = brute_force_qstar(g).qstar;
  auto report = theorem1_check(g, 1.0, 0.1, 20, qstar, true, small_config(10));
  CHECK(report.failures == 0);
  CHECK(report.failure_fraction == 0.0);
  CHECK(report.wilson.low == 0.0);
  CHECK(report.replicates == 20);
}

TEST_CASE("failure fraction under heavy deletion is reported with a CI") {
  Graph g = gen_triangles(3);
  const Rational qstar = brute_force_qstar(g).qstar;
  auto report =
      theorem1_check(g, 0.2, 0.05, 30, qstar, true, small_config(11));
  CHECK(report.wilson.low <= report.failure_fraction);
  CHECK(report.wilson.high >= report.failure_fraction);
  CHECK(report.reference_qstar == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("partition translation keeps fat partitions fixed") {
  Graph g = gen_triangles(3);
  Partition components({0, 0, 0, 1, 1, 1, 2, 2, 2});
  CHECK(theorem2_translate(g, components, Rational(1, 20)) == components);
  CHECK(theorem2_translate(g, components, Rational(9, 20)) ==
        Partition::trivial(9));
}

TEST_CASE("sparse mean-optimum estimates") {
  HeuristicConfig hc;
  auto est = qbar_estimate(40, 0.5, 15, 77, hc, 5);
  CHECK(est.samples.size() == 15);
  CHECK(est.mean > 0.7);  // sparse graphs are close to forests
  CHECK(est.stderr_mean >= 0.0);
  CHECK_THROWS_AS(qbar_estimate(10, 20.0, 5, 1, hc, 5), DomainError);
}

TEST_CASE("undersampling verdict") {
  Graph h = gen_triangles(6);
  SweepConfig cfg = small_config(12);
  cfg.replicates = 10;
  auto degenerate = undersampling_check(h, 0.3, {0.3}, 10, 0.05, cfg);
  CHECK(degenerate.verdict == Verdict::kHolds);

  CHECK_THROWS_AS(undersampling_check(h, 0.5, {0.3, 0.6}, 5, 0.05, cfg),
                  DomainError);
  CHECK_THROWS_AS(undersampling_check(h, 0.5, {}, 5, 0.05, cfg), DomainError);

  CHECK(to_string(Verdict::kHolds) == "holds");
  CHECK(to_string(Verdict::kFails) == "fails");
  CHECK(to_string(Verdict::kInconclusive) == "inconclusive");
}
