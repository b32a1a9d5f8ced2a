#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "plsearch/generators.hpp"

namespace plsearch {

/// Truncated power law p_k = c k^-tau on k = 1..m for a graph of n nodes.
struct PowerLawModel {
  double tau = 2.1;
  std::uint64_t n = 1;
  std::uint32_t m = 1;
  double c = 1.0;

  double pk(std::uint32_t k) const;
};

/// Generating-function moments, computed as exact finite sums.
struct GFSummary {
  double mean_degree = 0.0;  ///< G0'(1)
  double mean_excess = 0.0;  ///< G1'(1)
  double z2_random = 0.0;    ///< second neighbors of a random node
  double z2_walk = 0.0;      ///< second neighbors of a node reached by an edge
};

/// Asymptotic exponents of N for the two search strategies.
struct ScalingExponents {
  double random_walk = 0.0;  ///< 3 (1 - 2/tau)
  double degree_seq = 0.0;   ///< 2 - 4/tau
  double z2_walk_exp = 0.0;  ///< 2 (3/tau - 1)
};

struct DegreeSequenceScan {
  double z1 = 0.0;     ///< first neighbors scanned, N a m^(1-tau)
  double z2 = 0.0;     ///< second neighbors scanned, N a m^(2(2-tau))
  double steps = 0.0;  ///< ~ a
  /// False when a exceeds m/10 and the "a much smaller than m" premise is shaky.
  bool self_consistent = true;
};

struct RichestNeighbor {
  double expected_max = 0.0;
  double ratio = 0.0;  ///< expected_max / n_neighbors
};

PowerLawModel power_law_model(std::uint64_t n, double tau, CutoffRule rule = CutoffRule::RootOfSize);

/// Model with an explicit cutoff instead of one derived from n.
PowerLawModel power_law_model_with_cutoff(std::uint64_t n, double tau, std::uint32_t m);

GFSummary gf_summary(const PowerLawModel& model);

/// Large-m approximations corresponding to gf_summary, for measuring the
/// gap between finite sums and asymptotics.
GFSummary asymptotic_gf_summary(const PowerLawModel& model);

ScalingExponents scaling_exponents(double tau);

/// True inside 2 < tau < 3, where the step-count exponents are meaningful.
bool in_scaling_regime(double tau);

/// (ln n)^2, the tau -> 2 limit of the random-walk step count.
double tau2_cover_steps(double n);

DegreeSequenceScan degree_seq_neighbors(const PowerLawModel& model, double a);

/// Remaining-edges distribution of a node reached along a random edge,
/// proportional to (x+1)^(1-tau) on x = 0..m-1.
std::vector<double> excess_degree_pmf(const PowerLawModel& model);

/// Closed-form distribution of the excess degree of the best of n_neighbors
/// neighbors, evaluated at x = 0..m-1 and renormalized to sum to one.
std::vector<double> richest_neighbor_distribution(const PowerLawModel& model, std::uint32_t n_neighbors);

double richest_neighbor_pmf(const PowerLawModel& model, std::uint32_t n_neighbors, std::uint32_t x);

/// Order-statistic distribution of the maximum of n_neighbors i.i.d. draws
/// from excess_degree_pmf: F(x)^n - F(x-1)^n.
std::vector<double> richest_neighbor_distribution_discrete(const PowerLawModel& model,
                                                           std::uint32_t n_neighbors);

RichestNeighbor richest_neighbor_ratio(const PowerLawModel& model, std::uint32_t n_neighbors);

/// Steps to cover `coverage` of a Poisson graph whose walk meets z new nodes per step.
double poisson_theory(double n, double z, double coverage);

/// Writes "tau,n_neighbors,expected_max,ratio" rows for every n_neighbors up
/// to each model's cutoff, one block per tau.
void write_richest_neighbor_table(std::ostream& out, std::span<const double> taus, std::uint64_t n);

}  // namespace plsearch
