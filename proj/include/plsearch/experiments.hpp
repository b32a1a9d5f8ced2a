#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plsearch/generators.hpp"
#include "plsearch/graph.hpp"
#include "plsearch/search.hpp"

namespace plsearch {

enum class GraphKind { PowerLaw, PoissonMatched, PoissonConstantZ };
enum class Metric { AvgSearchSteps, HalfCoverSteps };

std::string graph_kind_name(GraphKind kind);
GraphKind parse_graph_kind(std::string_view name);
std::string metric_name(Metric metric);
Metric parse_metric(std::string_view name);

struct SweepConfig {
  std::vector<std::uint64_t> sizes{1000, 2000, 4000, 8000, 16000};
  double tau = 2.1;
  GraphKind graph_kind = GraphKind::PowerLaw;
  double poisson_z = 4.0;  ///< mean degree for PoissonConstantZ
  Strategy strategy = RandomWalkNoBacktrack{};
  Metric metric = Metric::HalfCoverSteps;
  std::size_t trials = 50;
  Seed seed = kDefaultSeed;
  /// One new graph per (size, trial); otherwise one graph per size.
  bool fresh_graph_per_trial = true;
  CutoffRule cutoff = CutoffRule::RootOfSize;
  int knowledge_radius = 2;
  /// Per-search pass cap; unset means 100 * N * mean degree.
  std::optional<std::size_t> step_cap;
  unsigned workers = 0;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const SweepConfig& config);

struct ScalingFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

struct SweepRow {
  std::uint64_t size = 0;
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t trials = 0;    ///< uncensored trials in the mean
  std::size_t censored = 0;  ///< trials that hit the step cap
  double mean_nodes = 0.0;   ///< average node count of the searched component
  double mean_edges = 0.0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
  std::optional<ScalingFit> fit;
  std::vector<std::uint64_t> skipped_sizes;
  /// More than 20% of trials censored at some size.
  bool unreliable = false;
};

/// Least squares of ln y on ln x; the slope is the exponent. r^2 is 1 when y
/// has no spread.
ScalingFit fit_power_law_scaling(std::span<const std::pair<double, double>> points);

/// The graph a search runs on: the LCC of a generated instance.
struct SearchGraph {
  Graph graph;
  std::size_t generated_nodes = 0;
  std::size_t generated_edges = 0;
};

/// Poisson graph with the node count of `reference` and edge probability
/// 2E / (N (N-1)), so the expected edge count matches.
Graph matched_poisson_graph(const Graph& reference, Seed seed);

SearchGraph make_search_graph(GraphKind kind, std::uint64_t n, double tau, double poisson_z, Seed seed,
                              CutoffRule cutoff = CutoffRule::RootOfSize);

SweepResult run_scaling_sweep(const SweepConfig& config);

/// run_scaling_sweep with the metric forced to average source-to-target steps.
SweepResult avg_search_sweep(SweepConfig config);

struct StepDistribution {
  std::vector<double> mean_new_seen;        ///< per step, averaged over trials
  std::vector<double> cumulative_fraction;  ///< running sum over node count
  std::vector<std::size_t> completion_steps;  ///< full-coverage step per trial
  double median_find_step = 0.0;  ///< median step at which a node is first seen
  std::size_t censored = 0;
};

/// Full-coverage runs from random sources of a connected graph.
StepDistribution step_distribution(const Graph& g, const Strategy& strategy, std::size_t trials, Seed seed,
                                   unsigned workers = 0);

struct StrategyComparison {
  SearchTrace first;
  SearchTrace second;
  double ratio = 0.0;  ///< first passes / second passes
  bool step_limit_hit = false;
};

/// Both strategies to full coverage from the same random source and seed.
StrategyComparison compare_strategies(const Graph& g, const Strategy& first, const Strategy& second, Seed seed);

/// compare_strategies(random walk, high degree).
StrategyComparison strategy_comparison(const Graph& g, Seed seed);

/// Merges revisit curves by pooling step and revisit counts per bucket.
std::vector<RevisitPoint> pool_revisit_curves(std::span<const std::vector<RevisitPoint>> curves);

struct RevisitSeries {
  std::string graph_kind;
  std::vector<RevisitPoint> curve;
};

struct ColorSeries {
  std::string strategy;
  std::size_t window = 50;
  std::vector<ColorCounts> counts;
};

struct Report {
  std::vector<SweepResult> sweeps;
  std::optional<StepDistribution> step_distribution;
  std::vector<RevisitSeries> revisits;
  std::vector<ColorSeries> colors;
};

struct ReferenceExponent {
  const char* label;
  double value;
};

/// Exponents quoted for tau = 2.1 search experiments.
std::span<const ReferenceExponent> reference_exponents();

void write_sweep_csv(std::ostream& out, std::span<const SweepResult> sweeps);
void write_stepdist_csv(std::ostream& out, const std::optional<StepDistribution>& dist);
void write_revisit_csv(std::ostream& out, std::span<const RevisitSeries> series);
void write_colors_csv(std::ostream& out, std::span<const ColorSeries> series);
std::string summary_text(const Report& report);

/// Writes sweep.csv, stepdist.csv, revisit.csv, colors.csv and summary.txt
/// into `dir` (created if missing). Throws std::runtime_error when a file
/// cannot be written.
void emit_report(const Report& report, const std::filesystem::path& dir);

}  // namespace plsearch
