#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "plsearch/analytics.hpp"
#include "plsearch/experiments.hpp"
#include "plsearch/generators.hpp"

using namespace plsearch;

namespace {

std::size_t line_count(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

SweepConfig small_sweep() {
  SweepConfig c;
  c.sizes = {300, 600, 1200};
  c.trials = 8;
  c.workers = 1;
  return c;
}

}  // namespace

TEST_CASE("fit is exact on noiseless power laws") {
  std::vector<std::pair<double, double>> square;
  for (double x : {1.0, 2.0, 4.0, 8.0}) square.emplace_back(x, x * x);
  const ScalingFit a = fit_power_law_scaling(square);
  CHECK(a.exponent == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(a.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a.points == 4);

  std::vector<std::pair<double, double>> flat{{1, 5}, {10, 5}, {100, 5}};
  CHECK(std::fabs(fit_power_law_scaling(flat).exponent) < 1e-12);
  CHECK(fit_power_law_scaling(flat).r_squared == 1.0);

  std::vector<std::pair<double, double>> root;
  for (double x : {1.0, 3.0, 9.0, 27.0, 81.0}) root.emplace_back(x, 3.0 * std::sqrt(x));
  const ScalingFit b = fit_power_law_scaling(root);
  CHECK(std::fabs(b.exponent - 0.5) < 1e-9);
  CHECK(std::fabs(b.intercept - std::log(3.0)) < 1e-9);
}

TEST_CASE("fit rejects bad input") {
  std::vector<std::pair<double, double>> one{{1, 1}};
  CHECK_THROWS_AS(fit_power_law_scaling(one), std::invalid_argument);
  std::vector<std::pair<double, double>> negative{{1, 1}, {2, -1}};
  CHECK_THROWS_AS(fit_power_law_scaling(negative), std::invalid_argument);
  std::vector<std::pair<double, double>> zero_x{{0, 1}, {2, 1}};
  CHECK_THROWS_AS(fit_power_law_scaling(zero_x), std::invalid_argument);
  std::vector<std::pair<double, double>> same_x{{2, 1}, {2, 3}};
  CHECK_THROWS_AS(fit_power_law_scaling(same_x), std::invalid_argument);
}

TEST_CASE("sweep config validation names the field") {
  SweepConfig c = small_sweep();
  c.sizes = {1000, 500};
  CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("sizes"), std::invalid_argument);
  c = small_sweep();
  c.sizes = {1000};
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = small_sweep();
  c.trials = 0;
  CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("trials"), std::invalid_argument);
  c = small_sweep();
  c.tau = 0.9;
  CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("tau"), std::invalid_argument);
  CHECK_NOTHROW(validate(small_sweep()));
}

TEST_CASE("sweep has one row per size and a fit") {
  const SweepResult r = run_scaling_sweep(small_sweep());
  REQUIRE(r.rows.size() == 3);
  REQUIRE(r.fit.has_value());
  CHECK(r.fit->points == 3);
  for (const SweepRow& row : r.rows) {
    CHECK(row.trials + row.censored == 8);
    CHECK(row.mean > 0.0);
  }
  CHECK(r.rows[0].size == 300);
}

TEST_CASE("sizes with a tiny largest component are skipped") {
  SweepConfig c = small_sweep();
  c.tau = 3.4;
  c.sizes = {12, 600, 1200, 2400};
  const SweepResult r = run_scaling_sweep(c);
  CHECK(std::find(r.skipped_sizes.begin(), r.skipped_sizes.end(), 12) != r.skipped_sizes.end());
  CHECK(r.rows.size() + r.skipped_sizes.size() == 4);
}

TEST_CASE("tiny step caps flag a sweep as unreliable") {
  SweepConfig c = small_sweep();
  c.metric = Metric::AvgSearchSteps;
  c.step_cap = 1;
  const SweepResult r = run_scaling_sweep(c);
  CHECK(r.unreliable);
}

TEST_CASE("sweep output is bytewise reproducible and independent of workers") {
  auto render = [](unsigned workers) {
    SweepConfig c = small_sweep();
    c.workers = workers;
    std::vector<SweepResult> r{run_scaling_sweep(c)};
    std::ostringstream out;
    write_sweep_csv(out, r);
    return out.str();
  };
  const std::string one = render(1);
  CHECK(one == render(1));
  CHECK(one == render(3));
  CHECK(line_count(one) == 4);
  CHECK(one.rfind("size,mean,std,trials,metric,strategy,graph_kind,tau,seed\n", 0) == 0);
}

TEST_CASE("avg-search sweep forces its metric") {
  SweepConfig c = small_sweep();
  c.metric = Metric::HalfCoverSteps;
  CHECK(avg_search_sweep(c).config.metric == Metric::AvgSearchSteps);
}

TEST_CASE("matched poisson twin keeps node and edge counts") {
  for (std::uint64_t n : {1000u, 4000u, 16000u}) {
    const Graph pl = largest_connected_component(generate_power_law_graph(n, 2.1, derive_seed(9, "twin", n))).graph;
    const Graph po = matched_poisson_graph(pl, derive_seed(9, "poisson", n));
    CHECK(po.node_count() == pl.node_count());
    CHECK(std::fabs(static_cast<double>(po.edge_count()) / static_cast<double>(pl.edge_count()) - 1.0) <= 0.05);
  }
  double ratio = 0.0;
  const int reps = 20;
  for (int s = 0; s < reps; ++s) {
    const Graph pl = largest_connected_component(generate_power_law_graph(8000, 2.1, derive_seed(10, "twin", s))).graph;
    ratio += static_cast<double>(matched_poisson_graph(pl, derive_seed(10, "p", s)).edge_count()) /
             static_cast<double>(pl.edge_count());
  }
  CHECK(std::fabs(ratio / reps - 1.0) <= 0.01);
}

TEST_CASE("step distribution on a star puts everything at step 0") {
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= 8; ++v) edges.push_back({0, v});
  const Graph g = Graph::from_edges(9, edges);
  const StepDistribution d = step_distribution(g, HighDegreeSelfAvoiding{}, 5, 1, 1);
  REQUIRE(d.mean_new_seen.size() == 1);
  CHECK(d.mean_new_seen[0] == doctest::Approx(9.0));
  CHECK(d.cumulative_fraction[0] == doctest::Approx(1.0));
}

TEST_CASE("step distribution at N=10000 is front-loaded and heavy tailed") {
  const Graph g = largest_connected_component(generate_power_law_graph(10000, 2.1, 44)).graph;
  const StepDistribution d = step_distribution(g, HighDegreeSelfAvoiding{}, 10, 45, 1);
  REQUIRE(d.cumulative_fraction.size() > 10);
  CHECK(d.cumulative_fraction[10] >= 0.35);
  CHECK(d.cumulative_fraction.back() == doctest::Approx(1.0));
  const std::size_t longest = *std::max_element(d.completion_steps.begin(), d.completion_steps.end());
  CHECK(static_cast<double>(longest) > 10.0 * d.median_find_step);
  CHECK(static_cast<double>(longest) >= static_cast<double>(g.node_count()));
}

TEST_CASE("strategy comparison") {
  const Graph g = largest_connected_component(generate_power_law_graph(1000, 2.1, 46)).graph;
  const StrategyComparison same = compare_strategies(g, RandomWalkNoBacktrack{}, RandomWalkNoBacktrack{}, 3);
  CHECK(same.ratio == 1.0);
  CHECK(same.first == same.second);
  const StrategyComparison cmp = strategy_comparison(g, 3);
  CHECK(cmp.first.source == cmp.second.source);
  CHECK(cmp.ratio == doctest::Approx(static_cast<double>(cmp.first.pass_count()) / cmp.second.pass_count()));
  CHECK_FALSE(cmp.step_limit_hit);
}

TEST_CASE("high degree sees more white nodes early") {
  int more_white = 0;
  const int seeds = 20;
  for (int s = 0; s < seeds; ++s) {
    const Graph g = largest_connected_component(generate_power_law_graph(1000, 2.1, derive_seed(47, "w", s))).graph;
    const StrategyComparison cmp = strategy_comparison(g, derive_seed(47, "run", s));
    more_white += color_histogram(cmp.second, 50).front().white >= color_histogram(cmp.first, 50).front().white;
  }
  CHECK(more_white * 2 > seeds);
}

TEST_CASE("half-cover exponents sit between the ideals and matched poisson") {
  SweepConfig c;
  c.trials = 20;
  c.workers = 1;
  const double rw = run_scaling_sweep(c).fit->exponent;
  c.strategy = HighDegreeSelfAvoiding{};
  const double hd = run_scaling_sweep(c).fit->exponent;
  c.strategy = RandomWalkNoBacktrack{};
  c.graph_kind = GraphKind::PoissonMatched;
  const double matched = run_scaling_sweep(c).fit->exponent;
  CHECK(rw > scaling_exponents(2.1).random_walk);
  CHECK(hd > scaling_exponents(2.1).degree_seq);
  CHECK(rw < matched);
}

TEST_CASE("pooling revisit curves weights by steps") {
  const std::vector<std::vector<RevisitPoint>> curves{{{0.0, 1.0, 10}, {0.05, 0.0, 10}}, {{0.0, 0.0, 30}}};
  const auto pooled = pool_revisit_curves(curves);
  REQUIRE(pooled.size() == 2);
  CHECK(pooled[0].revisit_fraction == doctest::Approx(0.25));
  CHECK(pooled[0].steps == 40);
  CHECK(pooled[1].coverage == doctest::Approx(0.05));
}

TEST_CASE("empty report writes header-only files") {
  const auto dir = std::filesystem::temp_directory_path() / "plsearch_empty_report";
  std::filesystem::remove_all(dir);
  emit_report(Report{}, dir);
  CHECK(slurp(dir / "sweep.csv") == "size,mean,std,trials,metric,strategy,graph_kind,tau,seed\n");
  CHECK(slurp(dir / "stepdist.csv") == "step,mean_new_seen,cumulative_fraction\n");
  CHECK(slurp(dir / "revisit.csv") == "coverage_bucket,revisit_fraction,graph_kind\n");
  CHECK(slurp(dir / "colors.csv") == "window_start,white,gray,black,strategy\n");
  const std::string summary = slurp(dir / "summary.txt");
  for (const char* value : {"0.79", "0.7", "0.37", "0.24", "0.85"}) CHECK(summary.find(value) != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("report rows and number format") {
  SweepConfig c = small_sweep();
  c.sizes = {200, 300, 400, 500, 600};
  Report rep;
  rep.sweeps.push_back(run_scaling_sweep(c));
  std::ostringstream out;
  write_sweep_csv(out, rep.sweeps);
  CHECK(line_count(out.str()) == 6);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  CHECK(line.rfind("200,", 0) == 0);
  CHECK(line.find(",half-cover,random-walk,power-law,2.1,20011101") != std::string::npos);
}

TEST_CASE("unwritable destination is an error") {
  const auto file = std::filesystem::temp_directory_path() / "plsearch_not_a_dir";
  std::ofstream(file) << "x";
  CHECK_THROWS_AS(emit_report(Report{}, file / "sub"), std::runtime_error);
  std::filesystem::remove(file);
}

TEST_CASE("names round trip") {
  for (GraphKind k : {GraphKind::PowerLaw, GraphKind::PoissonMatched, GraphKind::PoissonConstantZ}) {
    CHECK(parse_graph_kind(graph_kind_name(k)) == k);
  }
  for (Metric m : {Metric::AvgSearchSteps, Metric::HalfCoverSteps}) CHECK(parse_metric(metric_name(m)) == m);
  CHECK_THROWS(parse_metric("cover"));
}
