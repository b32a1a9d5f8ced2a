#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

namespace plsearch {

using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// What was discarded while turning a raw edge multiset into a simple graph.
struct EdgeCleanup {
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
};

/// Immutable undirected simple graph in compressed adjacency form. Every
/// neighbor list is sorted ascending, free of duplicates and of the node
/// itself, and adjacency is symmetric.
class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph on node_count nodes. Self-loops are dropped and
  /// parallel edges collapsed; `cleanup`, when given, receives the counts.
  /// Endpoints must be < node_count.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          EdgeCleanup* cleanup = nullptr);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  bool empty() const noexcept { return node_count() == 0; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  double mean_degree() const noexcept {
    return empty() ? 0.0 : 2.0 * static_cast<double>(edge_count()) / static_cast<double>(node_count());
  }

  bool contains(NodeId v) const noexcept { return v < node_count(); }
  bool has_edge(NodeId u, NodeId v) const;

  /// All edges with u < v, ascending by (u, v).
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
};

/// Checks symmetry, simplicity, sortedness and edge-count consistency.
bool satisfies_invariants(const Graph& g);

struct ComponentLabeling {
  std::vector<std::uint32_t> label;  ///< component id per node, dense from 0
  std::vector<std::size_t> sizes;    ///< size per component id
};

/// Components are numbered in order of their smallest node id.
ComponentLabeling connected_components(const Graph& g);

bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<NodeId> old_to_new;  ///< kNoNode for nodes outside the subgraph
  std::vector<NodeId> new_to_old;
};

/// Induced subgraph on the largest component, relabeled densely in original
/// id order. Ties go to the component with the smallest minimum node id.
InducedSubgraph largest_connected_component(const Graph& g);

/// Sorted set of nodes at distance 1..radius from v (radius is 1 or 2).
std::vector<NodeId> neighborhood(const Graph& g, NodeId v, int radius);

/// Breadth-first distances from source; unreachable nodes get kNoNode.
std::vector<NodeId> bfs_distances(const Graph& g, NodeId source);

/// degree -> number of nodes with that degree; zero counts omitted.
std::map<std::size_t, std::size_t> degree_histogram(const Graph& g);

}  // namespace plsearch
