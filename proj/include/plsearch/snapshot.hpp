#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plsearch/experiments.hpp"
#include "plsearch/graph.hpp"

namespace plsearch {

struct SnapshotMeta {
  std::string source;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
  /// original_ids[compact_id] is the id used in the input file.
  std::vector<std::uint64_t> original_ids;
};

struct Snapshot {
  Graph graph;
  SnapshotMeta meta;
};

/// Loads an edge-list snapshot as is; no component extraction.
Snapshot ingest_snapshot(std::istream& in, std::string source_name = "<stream>");

struct ExponentEstimate {
  double tau_hat = 0.0;
  ScalingFit fit;
  std::size_t k_min = 1;
  std::size_t k_max = 0;
};

/// Slope of log(count) against log(degree) over the nonzero histogram bins
/// in [k_min, k_max]; tau_hat is minus the slope. Without k_max, the largest
/// degree seen at least twice is used. Throws std::invalid_argument with
/// fewer than three bins.
ExponentEstimate estimate_exponent(const std::map<std::size_t, std::size_t>& histogram, std::size_t k_min = 1,
                                   std::optional<std::size_t> k_max = std::nullopt);

ExponentEstimate estimate_exponent(const Graph& g, std::size_t k_min = 1,
                                   std::optional<std::size_t> k_max = std::nullopt);

struct FoundCurve {
  /// cumulative[s] = fraction of trials whose target was found within s steps.
  std::vector<double> cumulative;
  std::vector<std::size_t> steps;  ///< per trial; censored trials excluded
  std::size_t trials = 0;
  std::size_t censored = 0;

  /// Smallest s with cumulative[s] >= 0.5, if any.
  std::optional<std::size_t> median_steps() const;
};

/// High-degree search for one random file location per trial, with
/// `replicas` copies placed on distinct random nodes. Runs on the LCC of g.
FoundCurve cumulative_found_experiment(const Graph& g, std::size_t trials, Seed seed, std::size_t replicas = 1,
                                       unsigned workers = 0);

void write_found_csv(std::ostream& out, const FoundCurve& curve);
void write_snapshot_meta(std::ostream& out, const SnapshotMeta& meta, const std::optional<ExponentEstimate>& fit);

}  // namespace plsearch
