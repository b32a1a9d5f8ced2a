#include "plsearch/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace plsearch {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        EdgeCleanup* cleanup) {
  if (node_count >= kNoNode) {
    throw std::length_error("graph has too many nodes for 32-bit ids");
  }
  EdgeCleanup dropped;
  std::vector<std::size_t> degree(node_count, 0);
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw std::out_of_range("edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                              " outside node range " + std::to_string(node_count));
    }
    if (e.u == e.v) {
      ++dropped.self_loops;
      continue;
    }
    ++degree[e.u];
    ++degree[e.v];
  }

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    g.adjacency_[fill[e.u]++] = e.v;
    g.adjacency_[fill[e.v]++] = e.u;
  }

  // Sort and dedupe each list, then compact in place.
  std::size_t write = 0;
  std::size_t removed_entries = 0;
  for (std::size_t v = 0; v < node_count; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    auto unique_end = std::unique(first, last);
    removed_entries += static_cast<std::size_t>(last - unique_end);
    const std::size_t start = write;
    for (auto it = first; it != unique_end; ++it) g.adjacency_[write++] = *it;
    g.offsets_[v] = start;
  }
  g.offsets_[node_count] = write;
  g.adjacency_.resize(write);
  g.adjacency_.shrink_to_fit();
  // Each collapsed parallel edge removes one entry from both endpoint lists.
  dropped.duplicates = removed_entries / 2;
  if (cleanup != nullptr) *cleanup = dropped;
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (NodeId v = 0; v < node_count(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool satisfies_invariants(const Graph& g) {
  std::size_t total = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto list = g.neighbors(u);
    total += list.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
      const NodeId v = list[i];
      if (v >= g.node_count() || v == u) return false;
      if (i > 0 && list[i - 1] >= v) return false;
      if (!g.has_edge(v, u)) return false;
    }
  }
  return total == 2 * g.edge_count();
}

ComponentLabeling connected_components(const Graph& g) {
  ComponentLabeling out;
  const std::size_t n = g.node_count();
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  out.label.assign(n, kUnset);
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < n; ++start) {
    if (out.label[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.sizes.size());
    std::size_t size = 0;
    out.label[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId w : g.neighbors(v)) {
        if (out.label[w] == kUnset) {
          out.label[w] = id;
          stack.push_back(w);
        }
      }
    }
    out.sizes.push_back(size);
  }
  return out;
}

bool is_connected(const Graph& g) {
  return connected_components(g).sizes.size() <= 1;
}

InducedSubgraph largest_connected_component(const Graph& g) {
  InducedSubgraph out;
  if (g.empty()) return out;

  const ComponentLabeling comps = connected_components(g);
  // Ids follow smallest-member order, so the first maximum wins ties.
  const auto best = static_cast<std::uint32_t>(
      std::max_element(comps.sizes.begin(), comps.sizes.end()) - comps.sizes.begin());

  out.old_to_new.assign(g.node_count(), kNoNode);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (comps.label[v] == best) {
      out.old_to_new[v] = static_cast<NodeId>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (NodeId u : out.new_to_old) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v) edges.push_back({out.old_to_new[u], out.old_to_new[v]});
    }
  }
  out.graph = Graph::from_edges(out.new_to_old.size(), edges);
  return out;
}

std::vector<NodeId> neighborhood(const Graph& g, NodeId v, int radius) {
  if (!g.contains(v)) throw std::out_of_range("node " + std::to_string(v) + " not in graph");
  if (radius != 1 && radius != 2) throw std::invalid_argument("radius must be 1 or 2");
  std::vector<NodeId> out(g.neighbors(v).begin(), g.neighbors(v).end());
  if (radius == 2) {
    for (NodeId w : g.neighbors(v)) {
      for (NodeId x : g.neighbors(w)) {
        if (x != v) out.push_back(x);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

std::vector<NodeId> bfs_distances(const Graph& g, NodeId source) {
  if (!g.contains(source)) throw std::out_of_range("source not in graph");
  std::vector<NodeId> dist(g.node_count(), kNoNode);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kNoNode) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::map<std::size_t, std::size_t> degree_histogram(const Graph& g) {
  std::map<std::size_t, std::size_t> hist;
  for (NodeId v = 0; v < g.node_count(); ++v) ++hist[g.degree(v)];
  return hist;
}

}  // namespace plsearch
