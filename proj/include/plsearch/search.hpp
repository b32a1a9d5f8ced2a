#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "plsearch/graph.hpp"
#include "plsearch/rng.hpp"

namespace plsearch {

/// Uniform forwarding that never returns the message to the node it just
/// came from, unless that node is the only neighbor.
struct RandomWalkNoBacktrack {
  friend bool operator==(const RandomWalkNoBacktrack&, const RandomWalkNoBacktrack&) = default;
};

/// Forwards to the highest-degree neighbor that has not held the message.
struct HighDegreeSelfAvoiding {
  friend bool operator==(const HighDegreeSelfAvoiding&, const HighDegreeSelfAvoiding&) = default;
};

/// Broadcast to every neighbor while the hop budget lasts.
struct Flood {
  unsigned ttl = 0;
  friend bool operator==(const Flood&, const Flood&) = default;
};

using Strategy = std::variant<RandomWalkNoBacktrack, HighDegreeSelfAvoiding, Flood>;

/// "random-walk", "high-degree" or "flood".
std::string strategy_name(const Strategy& strategy);
/// Inverse of strategy_name for the two walk rules; throws otherwise.
Strategy parse_walk_strategy(std::string_view name);

enum class NodeColor : std::uint8_t { White, Gray, Black };

char color_letter(NodeColor color);

/// Ends the search once any target is known to the message holder. With
/// knowledge_radius 2 that is as soon as the target enters the seen set.
struct TargetFound {
  std::vector<NodeId> targets;
  int knowledge_radius = 2;
};

/// Ends once the seen set holds at least `fraction` of all nodes.
struct CoverageReached {
  double fraction = 1.0;
};

/// Ends once distinct message holders make up at least `fraction` of all nodes.
struct VisitedReached {
  double fraction = 1.0;
};

/// Ends after max_steps passes.
struct StepLimit {
  std::size_t max_steps = 0;
};

struct StopCondition {
  std::variant<TargetFound, CoverageReached, VisitedReached, StepLimit> goal;
  /// Safety cap on passes; defaults to 100 * N * mean degree.
  std::optional<std::size_t> step_cap;

  static StopCondition target(NodeId t, int knowledge_radius = 2) {
    return {TargetFound{{t}, knowledge_radius}, std::nullopt};
  }
  static StopCondition coverage(double fraction) { return {CoverageReached{fraction}, std::nullopt}; }
  static StopCondition visited(double fraction) { return {VisitedReached{fraction}, std::nullopt}; }
  static StopCondition steps(std::size_t max_steps) { return {StepLimit{max_steps}, std::nullopt}; }

  StopCondition& capped_at(std::size_t cap) {
    step_cap = cap;
    return *this;
  }
};

std::size_t default_step_cap(const Graph& g);

struct StepRecord {
  NodeId holder = 0;
  std::uint32_t holder_degree = 0;
  std::uint32_t seen_count_after = 0;
  NodeColor color_at_arrival = NodeColor::White;
  bool was_revisit = false;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

enum class OutcomeKind : std::uint8_t { Found, CoverageReached, VisitedReached, StepLimitHit };

struct SearchOutcome {
  OutcomeKind kind = OutcomeKind::StepLimitHit;
  std::size_t step = 0;

  friend bool operator==(const SearchOutcome&, const SearchOutcome&) = default;
};

/// Step i is the arrival of the message at its i-th holder; step 0 is the
/// source. The number of passes is steps.size() - 1.
struct SearchTrace {
  NodeId source = 0;
  std::size_t node_count = 0;
  std::vector<StepRecord> steps;
  SearchOutcome outcome;
  Seed seed = 0;

  std::size_t pass_count() const { return steps.empty() ? 0 : steps.size() - 1; }
  bool hit_step_limit() const { return outcome.kind == OutcomeKind::StepLimitHit; }

  friend bool operator==(const SearchTrace&, const SearchTrace&) = default;
};

/// Message passing from `source`. Each arrival adds the holder and its first
/// and second neighbors to the seen set, then the stop condition is checked,
/// then the strategy picks the next holder. Flood is rejected.
SearchTrace run_search(const Graph& g, NodeId source, const Strategy& strategy, const StopCondition& stop,
                       Seed seed);

/// One forwarding decision. `visited` has one flag per node (nonzero = has
/// held the message). previous is kNoNode at the source.
NodeId choose_next(const Graph& g, NodeId holder, NodeId previous, std::span<const std::uint8_t> visited,
                   const Strategy& strategy, Rng& rng);

struct FloodResult {
  std::vector<NodeId> reached;  ///< sorted, includes the source
  std::uint64_t message_count = 0;
};

/// TTL broadcast: every node closer than ttl forwards to all its neighbors.
FloodResult flood_search(const Graph& g, NodeId source, unsigned ttl);

/// First step whose seen count reaches fraction * node_count.
std::optional<std::size_t> cover_time(const SearchTrace& trace, double fraction);

struct ColorCounts {
  std::size_t white = 0;
  std::size_t gray = 0;
  std::size_t black = 0;

  std::size_t total() const { return white + gray + black; }
  friend bool operator==(const ColorCounts&, const ColorCounts&) = default;
};

std::vector<ColorCounts> color_histogram(const SearchTrace& trace, std::size_t window = 50);

struct RevisitPoint {
  double coverage = 0.0;  ///< lower edge of the visited-fraction bucket
  double revisit_fraction = 0.0;
  std::size_t steps = 0;
};

/// Steps grouped by the fraction of nodes that have held the message
/// (including the current step), with the share of revisits per group.
/// Empty groups are omitted.
std::vector<RevisitPoint> revisit_fraction_curve(const SearchTrace& trace, double bucket = 0.05);

/// Revisit fraction of the bucket containing `coverage`, if that bucket has steps.
std::optional<double> revisit_fraction_at(std::span<const RevisitPoint> curve, double coverage,
                                          double bucket = 0.05);

struct VisitedDegree {
  std::size_t step = 0;
  std::uint32_t degree = 0;
  NodeColor color = NodeColor::White;
};

std::vector<VisitedDegree> visited_degree_sequence(const SearchTrace& trace);

/// CSV with columns step,holder,degree,color,seen_count,revisit; a leading
/// run_id column is added when run_id is given. header controls the first line.
void write_trace_csv(std::ostream& out, const SearchTrace& trace, std::optional<std::size_t> run_id = {},
                     bool header = true);

}  // namespace plsearch
