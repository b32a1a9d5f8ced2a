#pragma once

#include <cstdint>
#include <vector>

#include "plsearch/graph.hpp"
#include "plsearch/rng.hpp"

namespace plsearch {

/// How the maximum degree m is tied to the node count N.
enum class CutoffRule {
  /// m = floor(N^(1/tau)).
  RootOfSize,
  /// Largest m for which the expected number of nodes of degree m,
  /// N * c(m) * m^-tau, is still at least one.
  UnitExpectedCount,
};

/// Maximum generated degree for n nodes. Throws for tau <= 1 or n == 0.
std::uint32_t degree_cutoff(std::uint64_t n, double tau,
                            CutoffRule rule = CutoffRule::RootOfSize);

struct DegreeSequence {
  std::vector<std::uint32_t> degrees;
  std::uint32_t cutoff = 1;

  std::uint64_t total() const;
};

/// Draws n i.i.d. degrees from p_k = c k^-tau on k = 1..m by inverse
/// transform against the exact cumulative table, then fixes parity.
DegreeSequence sample_power_law_degrees(std::uint64_t n, double tau, std::uint32_t m, Seed seed);

/// If the degree sum is odd, raises one uniformly chosen node with degree
/// below the cutoff by one. Leaves the sequence alone when no node qualifies.
void make_degree_sum_even(DegreeSequence& seq, Rng& rng);

/// Configuration model: stubs shuffled and paired, self-loops and parallel
/// edges discarded. An odd leftover stub is dropped.
Graph build_configuration_graph(const DegreeSequence& seq, Seed seed);

/// Power-law configuration graph on n nodes (not reduced to its LCC).
Graph generate_power_law_graph(std::uint64_t n, double tau, Seed seed,
                               CutoffRule rule = CutoffRule::RootOfSize);

/// G(n, p): every pair independently present with probability p.
Graph generate_gnp_graph(std::uint64_t n, double p, Seed seed);

/// Poisson random graph with edge probability z / n.
Graph generate_poisson_graph(std::uint64_t n, double z, Seed seed);

}  // namespace plsearch
