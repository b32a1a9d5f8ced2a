#include "plsearch/search.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <ostream>
#include <stdexcept>

namespace plsearch {

std::string strategy_name(const Strategy& strategy) {
  struct Namer {
    std::string operator()(const RandomWalkNoBacktrack&) const { return "random-walk"; }
    std::string operator()(const HighDegreeSelfAvoiding&) const { return "high-degree"; }
    std::string operator()(const Flood&) const { return "flood"; }
  };
  return std::visit(Namer{}, strategy);
}

Strategy parse_walk_strategy(std::string_view name) {
  if (name == "random-walk") return RandomWalkNoBacktrack{};
  if (name == "high-degree") return HighDegreeSelfAvoiding{};
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

char color_letter(NodeColor color) {
  switch (color) {
    case NodeColor::White: return 'W';
    case NodeColor::Gray: return 'G';
    case NodeColor::Black: return 'B';
  }
  return '?';
}

std::size_t default_step_cap(const Graph& g) {
  return 100 * 2 * g.edge_count();
}

namespace {

NodeId uniform_excluding(const Graph& g, NodeId holder, NodeId previous, Rng& rng) {
  const auto list = g.neighbors(holder);
  const auto prev_it = previous == kNoNode ? list.end() : std::lower_bound(list.begin(), list.end(), previous);
  const bool has_prev = prev_it != list.end() && *prev_it == previous;
  if (!has_prev) return list[rng.below(list.size())];
  if (list.size() == 1) return previous;
  auto pick = static_cast<std::size_t>(rng.below(list.size() - 1));
  if (pick >= static_cast<std::size_t>(prev_it - list.begin())) ++pick;
  return list[pick];
}

/// Mutable per-run state: who has held the message, who is known, and how
/// many unvisited neighbors each node still has (for coloring).
class SearchState {
 public:
  explicit SearchState(const Graph& g)
      : g_(g), visited_(g.node_count(), 0), seen_(g.node_count(), 0), unvisited_neighbors_(g.node_count()) {
    for (NodeId v = 0; v < g.node_count(); ++v) unvisited_neighbors_[v] = static_cast<std::uint32_t>(g.degree(v));
  }

  StepRecord arrive(NodeId v) {
    StepRecord rec;
    rec.holder = v;
    rec.holder_degree = static_cast<std::uint32_t>(g_.degree(v));
    rec.was_revisit = visited_[v] != 0;
    if (!rec.was_revisit) {
      rec.color_at_arrival = NodeColor::White;
      visited_[v] = 1;
      ++visited_count_;
      mark_seen(v);
      for (NodeId w : g_.neighbors(v)) {
        --unvisited_neighbors_[w];
        mark_seen(w);
        for (NodeId x : g_.neighbors(w)) mark_seen(x);
      }
    } else {
      rec.color_at_arrival = unvisited_neighbors_[v] > 0 ? NodeColor::Gray : NodeColor::Black;
    }
    rec.seen_count_after = static_cast<std::uint32_t>(seen_count_);
    return rec;
  }

  bool seen(NodeId v) const { return seen_[v] != 0; }
  std::size_t seen_count() const { return seen_count_; }
  std::size_t visited_count() const { return visited_count_; }
  std::span<const std::uint8_t> visited() const { return visited_; }

 private:
  void mark_seen(NodeId v) {
    if (!seen_[v]) {
      seen_[v] = 1;
      ++seen_count_;
    }
  }

  const Graph& g_;
  std::vector<std::uint8_t> visited_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::uint32_t> unvisited_neighbors_;
  std::size_t seen_count_ = 0;
  std::size_t visited_count_ = 0;
};

void require_fraction(double fraction, const char* what) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " fraction must lie in (0, 1]");
  }
}

}  // namespace

NodeId choose_next(const Graph& g, NodeId holder, NodeId previous, std::span<const std::uint8_t> visited,
                   const Strategy& strategy, Rng& rng) {
  if (!g.contains(holder)) throw std::out_of_range("holder not in graph");
  if (g.degree(holder) == 0) throw std::invalid_argument("holder has no neighbors");

  if (std::holds_alternative<HighDegreeSelfAvoiding>(strategy)) {
    NodeId best = kNoNode;
    std::size_t best_degree = 0;
    std::uint64_t ties = 0;
    for (NodeId w : g.neighbors(holder)) {
      if (visited[w]) continue;
      const std::size_t d = g.degree(w);
      if (best == kNoNode || d > best_degree) {
        best = w;
        best_degree = d;
        ties = 1;
      } else if (d == best_degree && rng.below(++ties) == 0) {
        best = w;
      }
    }
    if (best != kNoNode) return best;
    return uniform_excluding(g, holder, previous, rng);
  }
  if (std::holds_alternative<RandomWalkNoBacktrack>(strategy)) {
    return uniform_excluding(g, holder, previous, rng);
  }
  throw std::invalid_argument("flood has no single next holder");
}

SearchTrace run_search(const Graph& g, NodeId source, const Strategy& strategy, const StopCondition& stop,
                       Seed seed) {
  if (std::holds_alternative<Flood>(strategy)) {
    throw std::invalid_argument("flood strategy is handled by flood_search");
  }
  if (!g.contains(source)) throw std::out_of_range("source not in graph");

  std::size_t cap = stop.step_cap.value_or(default_step_cap(g));
  if (const auto* limit = std::get_if<StepLimit>(&stop.goal)) cap = std::min(cap, limit->max_steps);

  const auto* target = std::get_if<TargetFound>(&stop.goal);
  if (target != nullptr) {
    if (target->targets.empty()) throw std::invalid_argument("no target given");
    if (target->knowledge_radius != 1 && target->knowledge_radius != 2) {
      throw std::invalid_argument("knowledge radius must be 1 or 2");
    }
    for (NodeId t : target->targets) {
      if (!g.contains(t)) throw std::out_of_range("target not in graph");
      if (t == source) throw std::invalid_argument("target equals source");
    }
  }
  if (const auto* c = std::get_if<CoverageReached>(&stop.goal)) require_fraction(c->fraction, "coverage");
  if (const auto* c = std::get_if<VisitedReached>(&stop.goal)) require_fraction(c->fraction, "visited");

  const double n = static_cast<double>(g.node_count());
  SearchState state(g);
  SearchTrace trace;
  trace.source = source;
  trace.node_count = g.node_count();
  trace.seed = seed;

  auto goal_met = [&](NodeId holder) -> std::optional<OutcomeKind> {
    if (target != nullptr) {
      for (NodeId t : target->targets) {
        const bool known = target->knowledge_radius == 2 ? state.seen(t) : (t == holder || g.has_edge(holder, t));
        if (known) return OutcomeKind::Found;
      }
      return std::nullopt;
    }
    if (const auto* c = std::get_if<CoverageReached>(&stop.goal)) {
      if (static_cast<double>(state.seen_count()) >= c->fraction * n) return OutcomeKind::CoverageReached;
      return std::nullopt;
    }
    if (const auto* c = std::get_if<VisitedReached>(&stop.goal)) {
      if (static_cast<double>(state.visited_count()) >= c->fraction * n) return OutcomeKind::VisitedReached;
      return std::nullopt;
    }
    return std::nullopt;
  };

  Rng rng(derive_seed(seed, "walk"));
  NodeId holder = source;
  NodeId previous = kNoNode;
  trace.steps.push_back(state.arrive(source));
  for (std::size_t step = 0;; ++step) {
    if (const auto kind = goal_met(holder)) {
      trace.outcome = {*kind, step};
      break;
    }
    if (step >= cap || g.degree(holder) == 0) {
      trace.outcome = {OutcomeKind::StepLimitHit, step};
      break;
    }
    const NodeId next = choose_next(g, holder, previous, state.visited(), strategy, rng);
    previous = holder;
    holder = next;
    trace.steps.push_back(state.arrive(holder));
  }
  return trace;
}

FloodResult flood_search(const Graph& g, NodeId source, unsigned ttl) {
  if (!g.contains(source)) throw std::out_of_range("source not in graph");
  FloodResult out;
  std::vector<NodeId> dist(g.node_count(), kNoNode);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    out.reached.push_back(v);
    if (dist[v] >= ttl) continue;
    out.message_count += g.degree(v);
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kNoNode) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  std::sort(out.reached.begin(), out.reached.end());
  return out;
}

std::optional<std::size_t> cover_time(const SearchTrace& trace, double fraction) {
  require_fraction(fraction, "cover");
  const double needed = fraction * static_cast<double>(trace.node_count);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    if (static_cast<double>(trace.steps[i].seen_count_after) >= needed) return i;
  }
  return std::nullopt;
}

std::vector<ColorCounts> color_histogram(const SearchTrace& trace, std::size_t window) {
  if (window == 0) throw std::invalid_argument("window must be positive");
  std::vector<ColorCounts> out((trace.steps.size() + window - 1) / window);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    ColorCounts& bucket = out[i / window];
    switch (trace.steps[i].color_at_arrival) {
      case NodeColor::White: ++bucket.white; break;
      case NodeColor::Gray: ++bucket.gray; break;
      case NodeColor::Black: ++bucket.black; break;
    }
  }
  return out;
}

std::vector<RevisitPoint> revisit_fraction_curve(const SearchTrace& trace, double bucket) {
  if (!(bucket > 0.0 && bucket <= 1.0)) throw std::invalid_argument("bucket width must lie in (0, 1]");
  if (trace.node_count == 0) return {};
  const auto bucket_count = static_cast<std::size_t>(std::ceil(1.0 / bucket - 1e-9));
  std::vector<std::size_t> steps(bucket_count + 1, 0);
  std::vector<std::size_t> revisits(bucket_count + 1, 0);
  std::size_t visited = 0;
  for (const StepRecord& rec : trace.steps) {
    if (!rec.was_revisit) ++visited;
    const double fraction = static_cast<double>(visited) / static_cast<double>(trace.node_count);
    const auto index = std::min(bucket_count, static_cast<std::size_t>(std::floor(fraction / bucket + 1e-12)));
    ++steps[index];
    if (rec.was_revisit) ++revisits[index];
  }
  std::vector<RevisitPoint> out;
  for (std::size_t i = 0; i <= bucket_count; ++i) {
    if (steps[i] == 0) continue;
    out.push_back({static_cast<double>(i) * bucket,
                   static_cast<double>(revisits[i]) / static_cast<double>(steps[i]), steps[i]});
  }
  return out;
}

std::optional<double> revisit_fraction_at(std::span<const RevisitPoint> curve, double coverage, double bucket) {
  for (const RevisitPoint& point : curve) {
    if (coverage >= point.coverage - 1e-12 && coverage < point.coverage + bucket - 1e-12) {
      return point.revisit_fraction;
    }
  }
  return std::nullopt;
}

std::vector<VisitedDegree> visited_degree_sequence(const SearchTrace& trace) {
  std::vector<VisitedDegree> out;
  out.reserve(trace.steps.size());
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    out.push_back({i, trace.steps[i].holder_degree, trace.steps[i].color_at_arrival});
  }
  return out;
}

void write_trace_csv(std::ostream& out, const SearchTrace& trace, std::optional<std::size_t> run_id, bool header) {
  if (header) out << (run_id ? "run_id," : "") << "step,holder,degree,color,seen_count,revisit\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const StepRecord& rec = trace.steps[i];
    if (run_id) out << *run_id << ',';
    out << i << ',' << rec.holder << ',' << rec.holder_degree << ',' << color_letter(rec.color_at_arrival) << ','
        << rec.seen_count_after << ',' << (rec.was_revisit ? 1 : 0) << '\n';
  }
}

}  // namespace plsearch
