#include "doctest.h"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "plsearch/analytics.hpp"
#include "plsearch/graph.hpp"

using namespace plsearch;

namespace {

double direct_c(std::uint32_t m, double tau) {
  double sum = 0.0;
  for (std::uint32_t k = 1; k <= m; ++k) sum += std::pow(k, -tau);
  return 1.0 / sum;
}

double sum_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST_CASE("power-law model normalization") {
  CHECK(power_law_model(1, 3.0).c == 1.0);
  const PowerLawModel small = power_law_model(4, 2.0);
  CHECK(small.m == 2);
  CHECK(small.c == doctest::Approx(0.8).epsilon(1e-14));
  const PowerLawModel big = power_law_model(10000, 2.1);
  CHECK(big.m == 80);
  CHECK(big.c == doctest::Approx(direct_c(80, 2.1)).epsilon(1e-12));
  double total = 0.0;
  for (std::uint32_t k = 1; k <= big.m; ++k) total += big.pk(k);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(power_law_model(100, 1.0), std::invalid_argument);
}

TEST_CASE("generating-function moments by hand") {
  const GFSummary one = gf_summary(power_law_model_with_cutoff(10, 2.5, 1));
  CHECK(one.mean_degree == doctest::Approx(1.0));
  CHECK(one.mean_excess == 0.0);
  CHECK(one.z2_random == 0.0);
  CHECK(one.z2_walk == 0.0);

  const GFSummary two = gf_summary(power_law_model(4, 2.0));
  CHECK(two.mean_degree == doctest::Approx(1.2).epsilon(1e-14));
  CHECK(two.mean_excess == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(two.z2_random == two.mean_degree * two.mean_excess);
  CHECK(two.z2_walk == two.mean_excess * two.mean_excess);
}

TEST_CASE("second-neighbor count matches simulation within 20%") {
  const PowerLawModel model = power_law_model(10000, 2.1);
  const double predicted = gf_summary(model).z2_random;
  double total = 0.0;
  std::size_t samples = 0;
  for (int s = 0; s < 50; ++s) {
    const Graph g = generate_power_law_graph(10000, 2.1, derive_seed(8, "z2", s));
    Rng rng(derive_seed(8, "z2-nodes", s));
    for (int i = 0; i < 200; ++i) {
      const auto v = static_cast<NodeId>(rng.below(g.node_count()));
      // Second neighbors counted with multiplicity, as the generating function does.
      for (NodeId w : g.neighbors(v)) total += static_cast<double>(g.degree(w)) - 1.0;
      ++samples;
    }
  }
  CHECK(std::fabs(total / samples / predicted - 1.0) < 0.2);
}

TEST_CASE("scaling exponents") {
  const ScalingExponents e = scaling_exponents(2.1);
  CHECK(e.random_walk == doctest::Approx(1.0 / 7.0).epsilon(1e-14));
  CHECK(e.degree_seq == doctest::Approx(2.0 / 21.0).epsilon(1e-14));
  CHECK(e.z2_walk_exp == doctest::Approx(6.0 / 7.0).epsilon(1e-14));
  CHECK(std::round(e.random_walk * 100) / 100 == doctest::Approx(0.14));
  CHECK(std::round(e.degree_seq * 10) / 10 == doctest::Approx(0.1));
  CHECK(scaling_exponents(2.0).random_walk == 0.0);
  CHECK(in_scaling_regime(2.5));
  CHECK_FALSE(in_scaling_regime(3.2));
}

TEST_CASE("tau -> 2 cover steps") {
  CHECK(tau2_cover_steps(std::exp(2.0)) == doctest::Approx(4.0));
  CHECK(tau2_cover_steps(10000) == doctest::Approx(84.8304).epsilon(1e-5));
  CHECK(tau2_cover_steps(2) == doctest::Approx(0.480453).epsilon(1e-5));
  CHECK_THROWS_AS(tau2_cover_steps(1), std::invalid_argument);
}

TEST_CASE("degree-sequence scan") {
  const PowerLawModel model = power_law_model(10000, 2.1);
  const DegreeSequenceScan zero = degree_seq_neighbors(model, 0.0);
  CHECK(zero.z1 == 0.0);
  CHECK(zero.z2 == 0.0);
  CHECK(zero.steps == 0.0);

  const DegreeSequenceScan five = degree_seq_neighbors(model, 5.0);
  CHECK(five.z1 == doctest::Approx(10000.0 * 5.0 * std::pow(80.0, -1.1)).epsilon(1e-12));
  CHECK(five.z2 == doctest::Approx(10000.0 * 5.0 * std::pow(80.0, 2.0 * (2.0 - 2.1))).epsilon(1e-12));
  const DegreeSequenceScan ten = degree_seq_neighbors(model, 10.0);
  CHECK(ten.z1 == doctest::Approx(2 * five.z1));
  CHECK(ten.z2 == doctest::Approx(2 * five.z2));
  CHECK(ten.steps == doctest::Approx(2 * five.steps));
  CHECK(five.self_consistent);
  CHECK_FALSE(degree_seq_neighbors(model, 20.0).self_consistent);
  CHECK_THROWS_AS(degree_seq_neighbors(model, 80.0), std::invalid_argument);
  CHECK_THROWS_AS(degree_seq_neighbors(model, -1.0), std::invalid_argument);
}

TEST_CASE("every pmf sums to one") {
  for (double tau : {2.0, 2.1, 2.5, 3.2}) {
    const PowerLawModel model = power_law_model(10000, tau);
    CHECK(sum_of(excess_degree_pmf(model)) == doctest::Approx(1.0).epsilon(1e-9));
    for (std::uint32_t n : {1u, 2u, 7u, 30u}) {
      CHECK(sum_of(richest_neighbor_distribution(model, n)) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(sum_of(richest_neighbor_distribution_discrete(model, n)) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("richest of one neighbor is the excess distribution") {
  for (double tau : {2.0, 2.1, 2.7}) {
    const PowerLawModel model = power_law_model(10000, tau);
    const auto excess = excess_degree_pmf(model);
    const auto richest = richest_neighbor_distribution(model, 1);
    REQUIRE(excess.size() == model.m);
    double norm = 0.0;
    for (std::uint32_t x = 0; x < model.m; ++x) norm += std::pow(x + 1.0, 1.0 - tau);
    for (std::uint32_t x = 0; x < model.m; ++x) {
      CHECK(excess[x] == doctest::Approx(std::pow(x + 1.0, 1.0 - tau) / norm).epsilon(1e-12));
      CHECK(std::fabs(richest[x] - excess[x]) < 1e-6);
    }
    CHECK(richest_neighbor_ratio(model, 1).expected_max ==
          doctest::Approx(std::inner_product(excess.begin(), excess.end(), richest.begin(), 0.0,
                                             std::plus<>{}, [x = 0.0](double, double p) mutable { return (x++) * p; })));
  }
}

TEST_CASE("closed-form richest-neighbor pmf pointwise") {
  const PowerLawModel model = power_law_model(10000, 2.1);
  const std::uint32_t n = 4;
  std::vector<double> raw(model.m);
  for (std::uint32_t x = 0; x < model.m; ++x) {
    raw[x] = n * std::pow(1.0 + x, 1.0 - 2.1) * (2.1 - 2.0) * std::pow(1.0 - std::pow(x + 1.0, 2.0 - 2.1), n - 1) *
             std::pow(1.0 - std::pow(10000.0, 2.0 / 2.1 - 1.0), -static_cast<double>(n));
  }
  const double total = sum_of(raw);
  for (std::uint32_t x = 0; x < model.m; ++x) {
    CHECK(richest_neighbor_pmf(model, n, x) == doctest::Approx(raw[x] / total).epsilon(1e-9));
  }
  CHECK_THROWS(richest_neighbor_pmf(model, n, model.m));
}

TEST_CASE("tau = 2 uses the logarithmic form") {
  const PowerLawModel model = power_law_model(10000, 2.0);
  const auto pmf = richest_neighbor_distribution(model, 3);
  for (double p : pmf) CHECK(std::isfinite(p));
  CHECK(sum_of(pmf) == doctest::Approx(1.0));
}

TEST_CASE("order-statistic pmf is F^n - F_prev^n") {
  const PowerLawModel model = power_law_model(2000, 2.3);
  const auto excess = excess_degree_pmf(model);
  const auto got = richest_neighbor_distribution_discrete(model, 6);
  double cdf = 0.0;
  for (std::size_t x = 0; x < excess.size(); ++x) {
    const double prev = std::pow(cdf, 6);
    cdf += excess[x];
    CHECK(got[x] == doctest::Approx(std::pow(cdf, 6) - prev).epsilon(1e-9));
  }
}

TEST_CASE("richest-neighbor ratio starts above one and decreases") {
  const PowerLawModel model = power_law_model(10000, 2.1);
  CHECK(richest_neighbor_ratio(model, 2).ratio > 1.0);
  double prev = richest_neighbor_ratio(model, 1).ratio;
  for (std::uint32_t n = 2; n <= model.m; ++n) {
    const double r = richest_neighbor_ratio(model, n).ratio;
    CHECK(r < prev);
    prev = r;
  }
}

TEST_CASE("richest-neighbor table") {
  const double taus[] = {2.1, 2.5};
  std::ostringstream out;
  write_richest_neighbor_table(out, taus, 1000);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "tau,n_neighbors,expected_max,ratio");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == power_law_model(1000, 2.1).m + power_law_model(1000, 2.5).m);
}

TEST_CASE("poisson cover theory") {
  CHECK(poisson_theory(1000, 10, 1.0) == doctest::Approx(100.0));
  CHECK(poisson_theory(1000, 10, 0.5) == doctest::Approx(50.0));
  CHECK(poisson_theory(4000, 4, 0.5) / poisson_theory(2000, 4, 0.5) == doctest::Approx(2.0));
}

TEST_CASE("exact z2 walk growth approaches the asymptotic exponent") {
  const double target = scaling_exponents(2.1).z2_walk_exp;
  auto z2 = [](double n) { return gf_summary(power_law_model(static_cast<std::uint64_t>(n), 2.1)).z2_walk; };
  double previous_gap = 1e9;
  for (double n : {1e4, 1e6, 1e8}) {
    const double gap = std::fabs(std::log(z2(n)) / std::log(n) - target);
    CHECK(gap < previous_gap);
    previous_gap = gap;
  }
  const double local = std::log(z2(1e8) / z2(1e6)) / std::log(100.0);
  CHECK(std::fabs(local - target) < 0.1);
  const GFSummary asym = asymptotic_gf_summary(power_law_model(100000000, 2.1));
  CHECK(asym.z2_walk / z2(1e8) == doctest::Approx(1.0).epsilon(0.25));
}

TEST_CASE("analytics functions are pure") {
  const PowerLawModel model = power_law_model(5000, 2.2);
  CHECK(richest_neighbor_distribution(model, 5) == richest_neighbor_distribution(model, 5));
  CHECK(gf_summary(model).z2_walk == gf_summary(model).z2_walk);
}
