#include "plsearch/snapshot.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "plsearch/edge_list.hpp"
#include "plsearch/parallel.hpp"
#include "plsearch/text_format.hpp"

namespace plsearch {

Snapshot ingest_snapshot(std::istream& in, std::string source_name) {
  EdgeListData data = read_edge_list(in);
  Snapshot out;
  out.meta.source = std::move(source_name);
  out.meta.node_count = data.graph.node_count();
  out.meta.edge_count = data.graph.edge_count();
  out.meta.self_loops_dropped = data.dropped.self_loops;
  out.meta.duplicates_dropped = data.dropped.duplicates;
  out.meta.original_ids = std::move(data.original_ids);
  out.graph = std::move(data.graph);
  return out;
}

ExponentEstimate estimate_exponent(const std::map<std::size_t, std::size_t>& histogram, std::size_t k_min,
                                   std::optional<std::size_t> k_max) {
  if (k_min == 0) throw std::invalid_argument("k_min must be positive");
  ExponentEstimate out;
  out.k_min = k_min;
  if (k_max) {
    out.k_max = *k_max;
  } else {
    for (const auto& [degree, count] : histogram) {
      if (count >= 2) out.k_max = std::max(out.k_max, degree);
    }
  }
  std::vector<std::pair<double, double>> points;
  for (const auto& [degree, count] : histogram) {
    if (degree >= out.k_min && degree <= out.k_max && count > 0) {
      points.emplace_back(static_cast<double>(degree), static_cast<double>(count));
    }
  }
  if (points.size() < 3) {
    throw std::invalid_argument("too few histogram bins in [k_min, k_max] to fit an exponent");
  }
  out.fit = fit_power_law_scaling(points);
  out.tau_hat = -out.fit.exponent;
  return out;
}

ExponentEstimate estimate_exponent(const Graph& g, std::size_t k_min, std::optional<std::size_t> k_max) {
  return estimate_exponent(degree_histogram(g), k_min, k_max);
}

std::optional<std::size_t> FoundCurve::median_steps() const {
  for (std::size_t s = 0; s < cumulative.size(); ++s) {
    if (cumulative[s] >= 0.5) return s;
  }
  return std::nullopt;
}

FoundCurve cumulative_found_experiment(const Graph& g, std::size_t trials, Seed seed, std::size_t replicas,
                                       unsigned workers) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (replicas == 0) throw std::invalid_argument("replicas must be at least 1");
  const Graph lcc = is_connected(g) ? g : largest_connected_component(g).graph;
  if (lcc.node_count() < replicas + 1) throw std::invalid_argument("component too small for source and replicas");

  std::vector<std::optional<std::size_t>> results(trials);
  parallel_for(trials, workers, [&](std::size_t t) {
    const Seed trial_seed = derive_seed(seed, "found", t);
    Rng pick(derive_seed(trial_seed, "placement"));
    const auto source = static_cast<NodeId>(pick.below(lcc.node_count()));
    TargetFound goal;
    while (goal.targets.size() < replicas) {
      const auto candidate = static_cast<NodeId>(pick.below(lcc.node_count()));
      if (candidate == source) continue;
      if (std::find(goal.targets.begin(), goal.targets.end(), candidate) != goal.targets.end()) continue;
      goal.targets.push_back(candidate);
    }
    const StopCondition stop{goal, std::nullopt};
    const SearchTrace trace =
        run_search(lcc, source, HighDegreeSelfAvoiding{}, stop, derive_seed(trial_seed, "search"));
    if (!trace.hit_step_limit()) results[t] = trace.outcome.step;
  });

  FoundCurve out;
  out.trials = trials;
  std::size_t longest = 0;
  for (const auto& r : results) {
    if (r) {
      out.steps.push_back(*r);
      longest = std::max(longest, *r);
    } else {
      ++out.censored;
    }
  }
  out.cumulative.assign(out.steps.empty() ? 0 : longest + 1, 0.0);
  for (std::size_t s : out.steps) out.cumulative[s] += 1.0;
  double running = 0.0;
  for (double& value : out.cumulative) {
    running += value;
    value = running / static_cast<double>(trials);
  }
  return out;
}

void write_found_csv(std::ostream& out, const FoundCurve& curve) {
  out << "steps,cumulative_fraction\n";
  for (std::size_t s = 0; s < curve.cumulative.size(); ++s) out << s << ',' << format_g6(curve.cumulative[s]) << '\n';
}

void write_snapshot_meta(std::ostream& out, const SnapshotMeta& meta, const std::optional<ExponentEstimate>& fit) {
  out << "source: " << meta.source << '\n'
      << "nodes: " << meta.node_count << '\n'
      << "edges: " << meta.edge_count << '\n'
      << "dropped_self_loops: " << meta.self_loops_dropped << '\n'
      << "dropped_duplicates: " << meta.duplicates_dropped << '\n';
  if (fit) {
    out << "tau_hat: " << format_g6(fit->tau_hat) << '\n'
        << "fit_r2: " << format_g6(fit->fit.r_squared) << '\n'
        << "fit_k_range: " << fit->k_min << '-' << fit->k_max << '\n';
  } else {
    out << "tau_hat: n/a\n";
  }
}

}  // namespace plsearch
