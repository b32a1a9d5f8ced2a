#include "plsearch/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "plsearch/text_format.hpp"

namespace plsearch {

namespace {

constexpr double kTauTwoTolerance = 1e-6;

double kpow(std::uint32_t k, double exponent) { return std::pow(static_cast<double>(k), exponent); }

/// Integral of x^s over [1, m], continuous in s through s = -1.
double power_integral(double m, double s) {
  if (std::abs(s + 1.0) < kTauTwoTolerance) return std::log(m);
  return (std::pow(m, s + 1.0) - 1.0) / (s + 1.0);
}

/// Normalizes log-weights in place into probabilities.
std::vector<double> normalize_log_weights(const std::vector<double>& log_weights) {
  const double top = *std::max_element(log_weights.begin(), log_weights.end());
  std::vector<double> out(log_weights.size(), 0.0);
  if (!std::isfinite(top)) {
    out.front() = 1.0;
    return out;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::isfinite(log_weights[i]) ? std::exp(log_weights[i] - top) : 0.0;
    total += out[i];
  }
  for (double& value : out) value /= total;
  return out;
}

}  // namespace

double PowerLawModel::pk(std::uint32_t k) const {
  if (k < 1 || k > m) return 0.0;
  return c * kpow(k, -tau);
}

PowerLawModel power_law_model(std::uint64_t n, double tau, CutoffRule rule) {
  return power_law_model_with_cutoff(n, tau, degree_cutoff(n, tau, rule));
}

PowerLawModel power_law_model_with_cutoff(std::uint64_t n, double tau, std::uint32_t m) {
  if (!(tau > 1.0)) throw std::invalid_argument("tau must be greater than 1");
  if (n == 0) throw std::invalid_argument("node count must be at least 1");
  if (m == 0) throw std::invalid_argument("cutoff must be at least 1");
  double sum = 0.0;
  for (std::uint32_t k = m; k >= 1; --k) sum += kpow(k, -tau);
  return PowerLawModel{tau, n, m, 1.0 / sum};
}

GFSummary gf_summary(const PowerLawModel& model) {
  double first = 0.0;
  double falling = 0.0;
  for (std::uint32_t k = model.m; k >= 1; --k) {
    const double p = model.pk(k);
    first += k * p;
    falling += static_cast<double>(k) * (k - 1.0) * p;
  }
  GFSummary out;
  out.mean_degree = first;
  out.mean_excess = falling / first;
  out.z2_random = out.mean_degree * out.mean_excess;
  out.z2_walk = out.mean_excess * out.mean_excess;
  return out;
}

GFSummary asymptotic_gf_summary(const PowerLawModel& model) {
  const double m = model.m;
  const double tau = model.tau;
  GFSummary out;
  out.mean_degree = model.c * power_integral(m, 1.0 - tau);
  // Leading large-m term of sum k^(1-tau) (k-1), constants in m dropped.
  const double excess_numerator =
      std::abs(3.0 - tau) < kTauTwoTolerance ? std::log(m) : std::pow(m, 3.0 - tau) / (3.0 - tau);
  out.mean_excess = model.c * excess_numerator / out.mean_degree;
  out.z2_random = out.mean_degree * out.mean_excess;
  out.z2_walk = out.mean_excess * out.mean_excess;
  return out;
}

ScalingExponents scaling_exponents(double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  return ScalingExponents{3.0 * (1.0 - 2.0 / tau), 2.0 - 4.0 / tau, 2.0 * (3.0 / tau - 1.0)};
}

bool in_scaling_regime(double tau) { return tau > 2.0 && tau < 3.0; }

double tau2_cover_steps(double n) {
  if (!(n >= 2.0)) throw std::invalid_argument("node count must be at least 2");
  const double l = std::log(n);
  return l * l;
}

DegreeSequenceScan degree_seq_neighbors(const PowerLawModel& model, double a) {
  const double m = model.m;
  if (!(a >= 0.0)) throw std::invalid_argument("degree window a must be non-negative");
  if (a >= m) throw std::invalid_argument("degree window a must be smaller than the cutoff m");
  const double n = static_cast<double>(model.n);
  DegreeSequenceScan out;
  out.z1 = n * a * std::pow(m, 1.0 - model.tau);
  out.z2 = n * a * std::pow(m, 2.0 * (2.0 - model.tau));
  out.steps = a;
  out.self_consistent = a <= m / 10.0;
  return out;
}

std::vector<double> excess_degree_pmf(const PowerLawModel& model) {
  std::vector<double> out(model.m);
  double total = 0.0;
  for (std::uint32_t x = 0; x < model.m; ++x) {
    out[x] = kpow(x + 1, 1.0 - model.tau);
    total += out[x];
  }
  for (double& value : out) value /= total;
  return out;
}

std::vector<double> richest_neighbor_distribution(const PowerLawModel& model, std::uint32_t n_neighbors) {
  if (n_neighbors == 0) throw std::invalid_argument("n_neighbors must be positive");
  const double tau = model.tau;
  const double n = n_neighbors;
  const bool log_limit = std::abs(tau - 2.0) < kTauTwoTolerance;
  const double size = static_cast<double>(model.n);
  const double tail_norm = -std::expm1((2.0 / tau - 1.0) * std::log(size));

  std::vector<double> log_weights(model.m);
  for (std::uint32_t x = 0; x < model.m; ++x) {
    const double log1px = std::log1p(static_cast<double>(x));
    double lw = std::log(n) + (1.0 - tau) * log1px;
    if (n_neighbors > 1) {
      // Below-x cumulative mass of one neighbor, up to a constant factor.
      const double cdf = log_limit ? log1px : -std::expm1((2.0 - tau) * log1px);
      lw += (n - 1.0) * std::log(std::abs(cdf));
    }
    if (!log_limit) {
      lw += std::log(std::abs(tau - 2.0));
      if (tail_norm != 0.0) lw -= n * std::log(std::abs(tail_norm));
    }
    log_weights[x] = lw;
  }
  return normalize_log_weights(log_weights);
}

double richest_neighbor_pmf(const PowerLawModel& model, std::uint32_t n_neighbors, std::uint32_t x) {
  if (x >= model.m) throw std::out_of_range("x must lie in [0, m-1]");
  return richest_neighbor_distribution(model, n_neighbors)[x];
}

std::vector<double> richest_neighbor_distribution_discrete(const PowerLawModel& model,
                                                           std::uint32_t n_neighbors) {
  if (n_neighbors == 0) throw std::invalid_argument("n_neighbors must be positive");
  const std::vector<double> single = excess_degree_pmf(model);
  std::vector<double> out(single.size());
  double cdf = 0.0;
  double previous_power = 0.0;
  for (std::size_t x = 0; x < single.size(); ++x) {
    cdf = std::min(1.0, cdf + single[x]);
    const double power = std::pow(cdf, static_cast<double>(n_neighbors));
    out[x] = power - previous_power;
    previous_power = power;
  }
  return out;
}

RichestNeighbor richest_neighbor_ratio(const PowerLawModel& model, std::uint32_t n_neighbors) {
  const std::vector<double> pmf = richest_neighbor_distribution(model, n_neighbors);
  double expected = 0.0;
  for (std::size_t x = 0; x < pmf.size(); ++x) expected += static_cast<double>(x) * pmf[x];
  return RichestNeighbor{expected, expected / n_neighbors};
}

double poisson_theory(double n, double z, double coverage) {
  if (!(z > 0.0)) throw std::invalid_argument("mean degree z must be positive");
  if (!(coverage > 0.0 && coverage <= 1.0)) throw std::invalid_argument("coverage must lie in (0, 1]");
  return coverage * n / z;
}

void write_richest_neighbor_table(std::ostream& out, std::span<const double> taus, std::uint64_t n) {
  out << "tau,n_neighbors,expected_max,ratio\n";
  for (double tau : taus) {
    const PowerLawModel model = power_law_model(n, tau);
    for (std::uint32_t k = 1; k <= model.m; ++k) {
      const RichestNeighbor r = richest_neighbor_ratio(model, k);
      out << format_g6(tau) << ',' << k << ',' << format_g6(r.expected_max) << ',' << format_g6(r.ratio) << '\n';
    }
  }
}

}  // namespace plsearch
