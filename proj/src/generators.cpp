#include "plsearch/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace plsearch {

namespace {

void require_tau(double tau) {
  if (!(tau > 1.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("tau must be finite and greater than 1");
  }
}

}  // namespace

std::uint32_t degree_cutoff(std::uint64_t n, double tau, CutoffRule rule) {
  require_tau(tau);
  if (n == 0) throw std::invalid_argument("node count must be at least 1");

  if (rule == CutoffRule::RootOfSize) {
    const double root = std::pow(static_cast<double>(n), 1.0 / tau);
    // Guard exact roots such as 1024^(1/2) against rounding just below.
    auto m = static_cast<std::uint64_t>(std::floor(root + 1e-9));
    return static_cast<std::uint32_t>(std::max<std::uint64_t>(m, 1));
  }

  // N c(m) m^-tau is decreasing in m; walk up while it stays >= 1.
  double sum = 1.0;
  std::uint32_t m = 1;
  while (true) {
    const double next_term = std::pow(static_cast<double>(m + 1), -tau);
    const double next_sum = sum + next_term;
    if (static_cast<double>(n) * next_term / next_sum < 1.0) break;
    sum = next_sum;
    ++m;
  }
  return m;
}

std::uint64_t DegreeSequence::total() const {
  return std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
}

DegreeSequence sample_power_law_degrees(std::uint64_t n, double tau, std::uint32_t m, Seed seed) {
  require_tau(tau);
  if (n == 0) throw std::invalid_argument("node count must be at least 1");
  if (m == 0) throw std::invalid_argument("cutoff must be at least 1");

  std::vector<double> cumulative(m);
  double running = 0.0;
  for (std::uint32_t k = 1; k <= m; ++k) {
    running += std::pow(static_cast<double>(k), -tau);
    cumulative[k - 1] = running;
  }
  for (double& value : cumulative) value /= running;
  cumulative.back() = 1.0;

  Rng rng(derive_seed(seed, "degrees"));
  DegreeSequence seq;
  seq.cutoff = m;
  seq.degrees.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    seq.degrees.push_back(static_cast<std::uint32_t>(it - cumulative.begin()) + 1);
  }
  Rng parity_rng(derive_seed(seed, "parity"));
  make_degree_sum_even(seq, parity_rng);
  return seq;
}

void make_degree_sum_even(DegreeSequence& seq, Rng& rng) {
  if (seq.total() % 2 == 0) return;
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < seq.degrees.size(); ++i) {
    if (seq.degrees[i] < seq.cutoff) eligible.push_back(i);
  }
  if (eligible.empty()) return;
  ++seq.degrees[eligible[rng.below(eligible.size())]];
}

Graph build_configuration_graph(const DegreeSequence& seq, Seed seed) {
  if (seq.degrees.empty()) throw std::invalid_argument("degree sequence is empty");
  std::vector<NodeId> stubs;
  stubs.reserve(seq.total());
  for (std::size_t v = 0; v < seq.degrees.size(); ++v) {
    stubs.insert(stubs.end(), seq.degrees[v], static_cast<NodeId>(v));
  }
  Rng rng(derive_seed(seed, "wiring"));
  rng.shuffle(stubs);

  std::vector<Edge> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.push_back({stubs[i], stubs[i + 1]});
  return Graph::from_edges(seq.degrees.size(), edges);
}

Graph generate_power_law_graph(std::uint64_t n, double tau, Seed seed, CutoffRule rule) {
  const std::uint32_t m = degree_cutoff(n, tau, rule);
  const DegreeSequence seq = sample_power_law_degrees(n, tau, m, derive_seed(seed, "sequence"));
  return build_configuration_graph(seq, derive_seed(seed, "configuration"));
}

Graph generate_gnp_graph(std::uint64_t n, double p, Seed seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::vector<Edge> edges;
  if (n < 2 || p == 0.0) return Graph::from_edges(n, edges);

  const auto count = static_cast<std::int64_t>(n);
  if (p == 1.0) {
    for (std::int64_t v = 1; v < count; ++v) {
      for (std::int64_t w = 0; w < v; ++w) edges.push_back({static_cast<NodeId>(v), static_cast<NodeId>(w)});
    }
    return Graph::from_edges(n, edges);
  }

  // Geometric skipping over the lower triangle (Batagelj and Brandes).
  Rng rng(derive_seed(seed, "gnp"));
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < count) {
    const double r = rng.uniform();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < count) {
      w -= v;
      ++v;
    }
    if (v < count) edges.push_back({static_cast<NodeId>(v), static_cast<NodeId>(w)});
  }
  return Graph::from_edges(n, edges);
}

Graph generate_poisson_graph(std::uint64_t n, double z, Seed seed) {
  if (n < 2) throw std::invalid_argument("poisson graph needs at least 2 nodes");
  if (!(z >= 0.0) || z > static_cast<double>(n - 1)) {
    throw std::invalid_argument("mean degree z must lie in [0, n-1]");
  }
  return generate_gnp_graph(n, z / static_cast<double>(n), seed);
}

}  // namespace plsearch
