#include "plsearch/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "plsearch/parallel.hpp"
#include "plsearch/text_format.hpp"

namespace plsearch {

std::string graph_kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::PowerLaw: return "power-law";
    case GraphKind::PoissonMatched: return "poisson-matched";
    case GraphKind::PoissonConstantZ: return "poisson-constant-z";
  }
  return "unknown";
}

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "power-law") return GraphKind::PowerLaw;
  if (name == "poisson-matched") return GraphKind::PoissonMatched;
  if (name == "poisson-constant-z") return GraphKind::PoissonConstantZ;
  throw std::invalid_argument("unknown graph kind '" + std::string(name) + "'");
}

std::string metric_name(Metric metric) {
  return metric == Metric::AvgSearchSteps ? "avg-search" : "half-cover";
}

Metric parse_metric(std::string_view name) {
  if (name == "avg-search") return Metric::AvgSearchSteps;
  if (name == "half-cover") return Metric::HalfCoverSteps;
  throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
}

void validate(const SweepConfig& config) {
  if (config.sizes.size() < 2) throw std::invalid_argument("sizes: need at least two distinct sizes");
  for (std::size_t i = 0; i < config.sizes.size(); ++i) {
    if (config.sizes[i] < 2) throw std::invalid_argument("sizes: every size must be at least 2");
    if (i > 0 && config.sizes[i] <= config.sizes[i - 1]) {
      throw std::invalid_argument("sizes: must be strictly increasing");
    }
  }
  if (config.trials == 0) throw std::invalid_argument("trials: must be at least 1");
  if (!(config.tau > 1.0)) throw std::invalid_argument("tau: must be greater than 1");
  if (config.graph_kind == GraphKind::PoissonConstantZ && !(config.poisson_z > 0.0)) {
    throw std::invalid_argument("z: must be positive");
  }
  if (std::holds_alternative<Flood>(config.strategy)) {
    throw std::invalid_argument("strategy: sweeps take random-walk or high-degree");
  }
  if (config.knowledge_radius != 1 && config.knowledge_radius != 2) {
    throw std::invalid_argument("radius: must be 1 or 2");
  }
}

ScalingFit fit_power_law_scaling(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw std::invalid_argument("scaling fit needs at least two points");
  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) throw std::invalid_argument("scaling fit needs positive x and y");
    sx += std::log(x);
    sy += std::log(y);
  }
  const double count = static_cast<double>(points.size());
  const double mx = sx / count;
  const double my = sy / count;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = std::log(x) - mx;
    const double dy = std::log(y) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 0.0) throw std::invalid_argument("scaling fit needs at least two distinct x values");
  ScalingFit fit;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  const double residual = std::max(0.0, syy - fit.exponent * sxy);
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - residual / syy, 0.0, 1.0) : 1.0;
  fit.points = points.size();
  return fit;
}

Graph matched_poisson_graph(const Graph& reference, Seed seed) {
  const double n = static_cast<double>(reference.node_count());
  if (n < 2) throw std::invalid_argument("reference graph needs at least 2 nodes");
  const double p = 2.0 * static_cast<double>(reference.edge_count()) / (n * (n - 1.0));
  return generate_gnp_graph(reference.node_count(), std::min(1.0, p), seed);
}

SearchGraph make_search_graph(GraphKind kind, std::uint64_t n, double tau, double poisson_z, Seed seed,
                              CutoffRule cutoff) {
  Graph generated;
  switch (kind) {
    case GraphKind::PowerLaw:
      generated = generate_power_law_graph(n, tau, seed, cutoff);
      break;
    case GraphKind::PoissonMatched: {
      const Graph twin = largest_connected_component(generate_power_law_graph(n, tau, seed, cutoff)).graph;
      generated = matched_poisson_graph(twin, derive_seed(seed, "matched-poisson"));
      break;
    }
    case GraphKind::PoissonConstantZ:
      generated = generate_poisson_graph(n, poisson_z, derive_seed(seed, "poisson"));
      break;
  }
  SearchGraph out;
  out.generated_nodes = generated.node_count();
  out.generated_edges = generated.edge_count();
  out.graph = largest_connected_component(generated).graph;
  return out;
}

namespace {

struct TrialValue {
  double value = 0.0;
  bool censored = false;
  bool skipped = false;
  std::size_t nodes = 0;
  std::size_t edges = 0;
};

constexpr std::size_t kMinSearchNodes = 10;

TrialValue run_trial(const SweepConfig& config, const Graph& g, Seed trial_seed) {
  TrialValue out;
  out.nodes = g.node_count();
  out.edges = g.edge_count();
  if (g.node_count() < kMinSearchNodes) {
    out.skipped = true;
    return out;
  }
  Rng pick(derive_seed(trial_seed, "endpoints"));
  const auto n = g.node_count();
  const auto source = static_cast<NodeId>(pick.below(n));
  StopCondition stop = StopCondition::coverage(0.5);
  if (config.metric == Metric::AvgSearchSteps) {
    auto target = static_cast<NodeId>(pick.below(n - 1));
    if (target >= source) ++target;
    stop = StopCondition::target(target, config.knowledge_radius);
  }
  stop.step_cap = config.step_cap;
  const SearchTrace trace = run_search(g, source, config.strategy, stop, derive_seed(trial_seed, "search"));
  out.value = static_cast<double>(trace.outcome.step);
  out.censored = trace.hit_step_limit();
  return out;
}

}  // namespace

SweepResult run_scaling_sweep(const SweepConfig& config) {
  validate(config);
  SweepResult result;
  result.config = config;

  const std::size_t trials = config.trials;
  for (std::uint64_t size : config.sizes) {
    const Seed size_seed = derive_seed(config.seed, "size", size);
    std::optional<SearchGraph> shared;
    if (!config.fresh_graph_per_trial) {
      shared = make_search_graph(config.graph_kind, size, config.tau, config.poisson_z,
                                 derive_seed(size_seed, "graph"), config.cutoff);
    }

    std::vector<TrialValue> values(trials);
    parallel_for(trials, config.workers, [&](std::size_t t) {
      const Seed trial_seed = derive_seed(size_seed, "trial", t);
      if (shared) {
        values[t] = run_trial(config, shared->graph, trial_seed);
      } else {
        const SearchGraph sg = make_search_graph(config.graph_kind, size, config.tau, config.poisson_z,
                                                 derive_seed(trial_seed, "graph"), config.cutoff);
        values[t] = run_trial(config, sg.graph, trial_seed);
      }
    });

    if (std::any_of(values.begin(), values.end(), [](const TrialValue& v) { return v.skipped; })) {
      result.skipped_sizes.push_back(size);
      continue;
    }

    SweepRow row;
    row.size = size;
    double sum = 0.0, nodes = 0.0, edges = 0.0;
    for (const TrialValue& v : values) {
      nodes += static_cast<double>(v.nodes);
      edges += static_cast<double>(v.edges);
      if (v.censored) {
        ++row.censored;
        continue;
      }
      sum += v.value;
      ++row.trials;
    }
    row.mean_nodes = nodes / static_cast<double>(trials);
    row.mean_edges = edges / static_cast<double>(trials);
    if (row.trials > 0) {
      row.mean = sum / static_cast<double>(row.trials);
      double squares = 0.0;
      for (const TrialValue& v : values) {
        if (!v.censored) squares += (v.value - row.mean) * (v.value - row.mean);
      }
      row.stddev = row.trials > 1 ? std::sqrt(squares / static_cast<double>(row.trials - 1)) : 0.0;
    } else {
      row.mean = std::numeric_limits<double>::quiet_NaN();
    }
    if (static_cast<double>(row.censored) > 0.2 * static_cast<double>(trials)) result.unreliable = true;
    result.rows.push_back(row);
  }

  std::vector<std::pair<double, double>> points;
  for (const SweepRow& row : result.rows) {
    if (row.trials > 0 && row.mean > 0.0) points.emplace_back(static_cast<double>(row.size), row.mean);
  }
  std::sort(points.begin(), points.end());
  const bool distinct_x = points.size() >= 2 && points.front().first != points.back().first;
  if (distinct_x) result.fit = fit_power_law_scaling(points);
  return result;
}

SweepResult avg_search_sweep(SweepConfig config) {
  config.metric = Metric::AvgSearchSteps;
  return run_scaling_sweep(config);
}

StepDistribution step_distribution(const Graph& g, const Strategy& strategy, std::size_t trials, Seed seed,
                                   unsigned workers) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (g.empty()) throw std::invalid_argument("graph is empty");
  std::vector<std::vector<std::uint32_t>> seen_curves(trials);
  std::vector<char> censored(trials, 0);
  parallel_for(trials, workers, [&](std::size_t t) {
    const Seed trial_seed = derive_seed(seed, "stepdist", t);
    Rng pick(derive_seed(trial_seed, "source"));
    const auto source = static_cast<NodeId>(pick.below(g.node_count()));
    const SearchTrace trace =
        run_search(g, source, strategy, StopCondition::coverage(1.0), derive_seed(trial_seed, "search"));
    censored[t] = trace.hit_step_limit() ? 1 : 0;
    seen_curves[t].reserve(trace.steps.size());
    for (const StepRecord& rec : trace.steps) seen_curves[t].push_back(rec.seen_count_after);
  });

  StepDistribution out;
  std::size_t longest = 0;
  for (const auto& curve : seen_curves) longest = std::max(longest, curve.size());
  out.mean_new_seen.assign(longest, 0.0);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& curve = seen_curves[t];
    std::uint32_t previous = 0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      out.mean_new_seen[i] += static_cast<double>(curve[i] - previous);
      previous = curve[i];
    }
    out.completion_steps.push_back(curve.size() - 1);
    if (censored[t]) ++out.censored;
  }
  const double n = static_cast<double>(g.node_count());
  double running = 0.0;
  bool median_set = false;
  out.cumulative_fraction.reserve(longest);
  for (std::size_t i = 0; i < longest; ++i) {
    out.mean_new_seen[i] /= static_cast<double>(trials);
    running += out.mean_new_seen[i];
    out.cumulative_fraction.push_back(running / n);
    if (!median_set && out.cumulative_fraction.back() >= 0.5 - 1e-12) {
      out.median_find_step = static_cast<double>(i);
      median_set = true;
    }
  }
  return out;
}

StrategyComparison compare_strategies(const Graph& g, const Strategy& first, const Strategy& second, Seed seed) {
  if (g.empty()) throw std::invalid_argument("graph is empty");
  Rng pick(derive_seed(seed, "comparison-source"));
  const auto source = static_cast<NodeId>(pick.below(g.node_count()));
  const Seed run_seed = derive_seed(seed, "comparison-run");
  StrategyComparison out;
  out.first = run_search(g, source, first, StopCondition::coverage(1.0), run_seed);
  out.second = run_search(g, source, second, StopCondition::coverage(1.0), run_seed);
  out.step_limit_hit = out.first.hit_step_limit() || out.second.hit_step_limit();
  const double a = static_cast<double>(out.first.outcome.step);
  const double b = static_cast<double>(out.second.outcome.step);
  if (b > 0.0) {
    out.ratio = a / b;
  } else {
    out.ratio = a > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
  }
  return out;
}

StrategyComparison strategy_comparison(const Graph& g, Seed seed) {
  return compare_strategies(g, RandomWalkNoBacktrack{}, HighDegreeSelfAvoiding{}, seed);
}

std::vector<RevisitPoint> pool_revisit_curves(std::span<const std::vector<RevisitPoint>> curves) {
  std::map<double, std::pair<double, std::size_t>> pooled;  // coverage -> (revisits, steps)
  for (const auto& curve : curves) {
    for (const RevisitPoint& p : curve) {
      auto& slot = pooled[p.coverage];
      slot.first += p.revisit_fraction * static_cast<double>(p.steps);
      slot.second += p.steps;
    }
  }
  std::vector<RevisitPoint> out;
  for (const auto& [coverage, slot] : pooled) {
    out.push_back({coverage, slot.first / static_cast<double>(slot.second), slot.second});
  }
  return out;
}

std::span<const ReferenceExponent> reference_exponents() {
  static constexpr ReferenceExponent kReferences[] = {
      {"avg-search random-walk", 0.79},  {"avg-search high-degree", 0.70},
      {"half-cover random-walk", 0.37},  {"half-cover high-degree", 0.24},
      {"half-cover poisson-matched", 0.85}, {"half-cover poisson-constant-z", 1.0},
  };
  return kReferences;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepResult> sweeps) {
  out << "size,mean,std,trials,metric,strategy,graph_kind,tau,seed\n";
  for (const SweepResult& sweep : sweeps) {
    for (const SweepRow& row : sweep.rows) {
      out << row.size << ',' << format_g6(row.mean) << ',' << format_g6(row.stddev) << ',' << row.trials << ','
          << metric_name(sweep.config.metric) << ',' << strategy_name(sweep.config.strategy) << ','
          << graph_kind_name(sweep.config.graph_kind) << ',' << format_g6(sweep.config.tau) << ','
          << sweep.config.seed << '\n';
    }
  }
}

void write_stepdist_csv(std::ostream& out, const std::optional<StepDistribution>& dist) {
  out << "step,mean_new_seen,cumulative_fraction\n";
  if (!dist) return;
  for (std::size_t i = 0; i < dist->mean_new_seen.size(); ++i) {
    out << i << ',' << format_g6(dist->mean_new_seen[i]) << ',' << format_g6(dist->cumulative_fraction[i]) << '\n';
  }
}

void write_revisit_csv(std::ostream& out, std::span<const RevisitSeries> series) {
  out << "coverage_bucket,revisit_fraction,graph_kind\n";
  for (const RevisitSeries& s : series) {
    for (const RevisitPoint& p : s.curve) {
      out << format_g6(p.coverage) << ',' << format_g6(p.revisit_fraction) << ',' << s.graph_kind << '\n';
    }
  }
}

void write_colors_csv(std::ostream& out, std::span<const ColorSeries> series) {
  out << "window_start,white,gray,black,strategy\n";
  for (const ColorSeries& s : series) {
    for (std::size_t i = 0; i < s.counts.size(); ++i) {
      const ColorCounts& c = s.counts[i];
      out << i * s.window << ',' << c.white << ',' << c.gray << ',' << c.black << ',' << s.strategy << '\n';
    }
  }
}

std::string summary_text(const Report& report) {
  std::ostringstream out;
  out << "Fitted scaling exponents\n";
  if (report.sweeps.empty()) out << "  (no sweeps)\n";
  for (const SweepResult& sweep : report.sweeps) {
    out << "  " << metric_name(sweep.config.metric) << ' ' << strategy_name(sweep.config.strategy) << " on "
        << graph_kind_name(sweep.config.graph_kind) << " (tau " << format_g6(sweep.config.tau) << "): ";
    if (sweep.fit) {
      out << "exponent " << format_g6(sweep.fit->exponent) << ", r^2 " << format_g6(sweep.fit->r_squared) << ", "
          << sweep.fit->points << " sizes";
    } else {
      out << "no fit";
    }
    if (sweep.unreliable) out << " [unreliable: >20% censored]";
    if (!sweep.skipped_sizes.empty()) out << " [" << sweep.skipped_sizes.size() << " sizes skipped]";
    out << '\n';
  }
  if (report.step_distribution) {
    const StepDistribution& d = *report.step_distribution;
    const std::size_t at = std::min<std::size_t>(10, d.cumulative_fraction.size() - 1);
    out << "Step distribution: median find step " << format_g6(d.median_find_step) << ", cumulative at step " << at
        << ' ' << format_g6(d.cumulative_fraction[at]) << '\n';
  }
  for (const RevisitSeries& s : report.revisits) {
    if (const auto r = revisit_fraction_at(s.curve, 0.5)) {
      out << "Revisit fraction at 50% visited (" << s.graph_kind << "): " << format_g6(*r) << '\n';
    }
  }
  out << "Reference exponents (tau = 2.1)\n";
  for (const ReferenceExponent& ref : reference_exponents()) {
    out << "  " << ref.label << ": " << format_g6(ref.value) << '\n';
  }
  return out.str();
}

namespace {

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  writer(file);
  file.flush();
  if (!file) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

void emit_report(const Report& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "sweep.csv", [&](std::ostream& o) { write_sweep_csv(o, report.sweeps); });
  write_file(dir / "stepdist.csv", [&](std::ostream& o) { write_stepdist_csv(o, report.step_distribution); });
  write_file(dir / "revisit.csv", [&](std::ostream& o) { write_revisit_csv(o, report.revisits); });
  write_file(dir / "colors.csv", [&](std::ostream& o) { write_colors_csv(o, report.colors); });
  write_file(dir / "summary.txt", [&](std::ostream& o) { o << summary_text(report); });
}

}  // namespace plsearch
