#include "plsearch/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "plsearch/analytics.hpp"
#include "plsearch/edge_list.hpp"
#include "plsearch/experiments.hpp"
#include "plsearch/generators.hpp"
#include "plsearch/search.hpp"
#include "plsearch/snapshot.hpp"
#include "plsearch/text_format.hpp"

namespace plsearch {

namespace {

/// Raised for flag values that pass parsing but violate a precondition.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<double> parse_number(const std::string& text) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used == text.size() && std::isfinite(value)) return value;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

const CLI::Validator kTauValidator(
    [](const std::string& text) -> std::string {
      const auto tau = parse_number(text);
      return tau && *tau > 1.0 ? std::string{} : "tau must be greater than 1";
    },
    "TAU>1");

const CLI::Validator kFractionValidator(
    [](const std::string& text) -> std::string {
      const auto f = parse_number(text);
      return f && *f > 0.0 && *f <= 1.0 ? std::string{} : "fraction must lie in (0, 1]";
    },
    "(0,1]");

const CLI::Validator kPositive(
    [](const std::string& text) -> std::string {
      const auto v = parse_number(text);
      return v && *v > 0.0 ? std::string{} : "must be positive";
    },
    "POSITIVE");

CutoffRule parse_cutoff(const std::string& name) {
  return name == "unit-expected" ? CutoffRule::UnitExpectedCount : CutoffRule::RootOfSize;
}

void add_cutoff_option(CLI::App* app, std::string& cutoff) {
  app->add_option("--cutoff", cutoff, "Degree cutoff rule: root (m = floor(N^(1/tau))) or unit-expected")
      ->check(CLI::IsMember({"root", "unit-expected"}))
      ->capture_default_str();
}

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return file;
}

/// Graph taken from --in or generated from --n/--tau, reduced to its LCC.
struct GraphInput {
  std::string in;
  std::uint64_t n = 0;
  double tau = 2.1;
  std::string kind = "power-law";
  double z = 4.0;
  std::string cutoff = "root";

  void add_options(CLI::App* app) {
    app->add_option("--in", in, "Edge-list file to search (ids as written in the file)");
    app->add_option("--n", n, "Generate a graph with this many nodes instead of reading --in");
    app->add_option("--tau", tau, "Power-law exponent for generated graphs")->check(kTauValidator)->capture_default_str();
    app->add_option("--kind", kind, "Generated graph kind: power-law or poisson")
        ->check(CLI::IsMember({"power-law", "poisson"}))
        ->capture_default_str();
    app->add_option("--z", z, "Mean degree for generated poisson graphs")->capture_default_str();
    add_cutoff_option(app, cutoff);
  }

  struct Loaded {
    Graph graph;
    std::vector<std::uint64_t> label;  ///< user-facing id per LCC node
  };

  Loaded load(Seed seed) const {
    if (in.empty() == (n == 0)) throw UsageError("--in/--n: give exactly one graph source");
    Graph full;
    std::vector<std::uint64_t> ids;
    if (!in.empty()) {
      std::ifstream file(in);
      if (!file) throw UsageError("--in: cannot read " + in);
      EdgeListData data = read_edge_list(file);
      full = std::move(data.graph);
      ids = std::move(data.original_ids);
    } else {
      if (kind == "poisson") {
        if (n < 2) throw UsageError("--n: poisson graphs need at least 2 nodes");
        if (!(z >= 0.0) || z > static_cast<double>(n - 1)) throw UsageError("--z: must lie in [0, n-1]");
        full = generate_poisson_graph(n, z, seed);
      } else {
        full = generate_power_law_graph(n, tau, seed, parse_cutoff(cutoff));
      }
      ids.resize(full.node_count());
      for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    }
    InducedSubgraph lcc = largest_connected_component(full);
    Loaded out;
    out.graph = std::move(lcc.graph);
    for (NodeId old : lcc.new_to_old) out.label.push_back(ids[old]);
    return out;
  }
};

NodeId resolve_node(const GraphInput::Loaded& loaded, std::uint64_t id, const char* flag) {
  const auto it = std::find(loaded.label.begin(), loaded.label.end(), id);
  if (it == loaded.label.end()) {
    throw UsageError(std::string(flag) + ": node " + std::to_string(id) + " is not in the largest component");
  }
  return static_cast<NodeId>(it - loaded.label.begin());
}

std::string outcome_name(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Found: return "target found";
    case OutcomeKind::CoverageReached: return "coverage reached";
    case OutcomeKind::VisitedReached: return "visited fraction reached";
    case OutcomeKind::StepLimitHit: return "step limit hit";
  }
  return "unknown";
}

std::string fixed6(double value) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << value;
  return s.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local search strategies on power-law and Poisson random graphs", "plsearch"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Seed seed = kDefaultSeed;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Master random seed")->capture_default_str();
  };

  // generate
  auto* generate = app.add_subcommand("generate", "Generate a random graph and write it as an edge list");
  std::uint64_t gen_n = 0;
  double gen_tau = 2.1;
  std::string gen_kind = "power-law";
  double gen_z = 4.0;
  bool gen_lcc = false;
  std::string gen_cutoff = "root";
  std::string gen_out = "graph.edges";
  generate->add_option("--n", gen_n, "Number of nodes")->required()->check(kPositive);
  generate->add_option("--tau", gen_tau, "Power-law exponent")->check(kTauValidator)->capture_default_str();
  generate->add_option("--kind", gen_kind, "power-law or poisson")
      ->check(CLI::IsMember({"power-law", "poisson"}))
      ->capture_default_str();
  generate->add_option("--z", gen_z, "Mean degree for poisson graphs")->capture_default_str();
  generate->add_flag("--lcc", gen_lcc, "Keep only the largest connected component");
  add_cutoff_option(generate, gen_cutoff);
  generate->add_option("--out", gen_out, "Output edge-list path")->capture_default_str();
  add_seed(generate);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Evaluate the closed-form scaling predictions");
  double an_tau = 2.1;
  std::uint64_t an_n = 10000;
  std::optional<double> an_window;
  std::string an_ratios_csv;
  std::string an_cutoff = "root";
  analyze->add_option("--tau", an_tau, "Power-law exponent")->check(kTauValidator)->capture_default_str();
  analyze->add_option("--n", an_n, "Graph size for the finite-size model")->check(kPositive)->capture_default_str();
  analyze->add_option("--a", an_window, "Degree window for the degree-sequence scan");
  analyze->add_option("--ratios-csv", an_ratios_csv,
                      "Write richest-neighbor ratios for tau = 2.0..3.75 to this CSV path");
  add_cutoff_option(analyze, an_cutoff);

  // search
  auto* search = app.add_subcommand("search", "Run one message-passing search and write its trace");
  GraphInput search_graph;
  search_graph.add_options(search);
  std::string search_strategy = "high-degree";
  std::optional<std::uint64_t> search_source;
  std::optional<std::uint64_t> search_target;
  std::optional<double> search_coverage;
  std::optional<double> search_visited;
  std::optional<std::size_t> search_steps;
  std::optional<std::size_t> search_cap;
  int search_radius = 2;
  std::size_t search_window = 50;
  std::string search_out = "trace.csv";
  search->add_option("--strategy", search_strategy, "random-walk or high-degree")
      ->check(CLI::IsMember({"random-walk", "high-degree"}))
      ->capture_default_str();
  search->add_option("--source", search_source, "Source node id (default: random)");
  auto* target_opt = search->add_option("--target", search_target, "Stop when this node is found");
  auto* coverage_opt = search->add_option("--coverage", search_coverage, "Stop when this fraction has been seen")
                           ->check(kFractionValidator);
  auto* visited_opt = search->add_option("--visited", search_visited, "Stop when this fraction has held the message")
                          ->check(kFractionValidator);
  auto* steps_opt = search->add_option("--steps", search_steps, "Stop after this many passes")->check(kPositive);
  target_opt->excludes(coverage_opt)->excludes(visited_opt)->excludes(steps_opt);
  coverage_opt->excludes(visited_opt)->excludes(steps_opt);
  visited_opt->excludes(steps_opt);
  search->add_option("--max-steps", search_cap, "Safety cap on passes (default 100 * N * mean degree)");
  search->add_option("--radius", search_radius, "Target knowledge radius (1 or 2)")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  search->add_option("--window", search_window, "Step window for the color summary")
      ->check(kPositive)
      ->capture_default_str();
  search->add_option("--out", search_out, "Trace CSV path")->capture_default_str();
  add_seed(search);

  // flood
  auto* flood = app.add_subcommand("flood", "TTL-limited broadcast cost from one source");
  GraphInput flood_graph;
  flood_graph.add_options(flood);
  std::optional<std::uint64_t> flood_source;
  unsigned flood_ttl = 7;
  std::string flood_out;
  flood->add_option("--source", flood_source, "Source node id (default: random)");
  flood->add_option("--ttl", flood_ttl, "Time to live (hops)")->capture_default_str();
  flood->add_option("--out", flood_out, "Optional CSV of ttl,reached,messages for every ttl up to --ttl");
  add_seed(flood);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Measure how search cost scales with graph size");
  SweepConfig sweep_cfg;
  std::string sweep_metric = "half-cover";
  std::string sweep_strategy = "random-walk";
  std::string sweep_graph = "power-law";
  std::string sweep_cutoff = "root";
  bool sweep_shared = false;
  std::string sweep_dir = ".";
  sweep->add_option("--metric", sweep_metric, "half-cover or avg-search")
      ->check(CLI::IsMember({"half-cover", "avg-search"}))
      ->capture_default_str();
  sweep->add_option("--strategy", sweep_strategy, "random-walk or high-degree")
      ->check(CLI::IsMember({"random-walk", "high-degree"}))
      ->capture_default_str();
  sweep->add_option("--graph", sweep_graph, "power-law, poisson-matched or poisson-constant-z")
      ->check(CLI::IsMember({"power-law", "poisson-matched", "poisson-constant-z"}))
      ->capture_default_str();
  sweep->add_option("--tau", sweep_cfg.tau, "Power-law exponent")->check(kTauValidator)->capture_default_str();
  sweep->add_option("--z", sweep_cfg.poisson_z, "Mean degree for poisson-constant-z")->capture_default_str();
  sweep->add_option("--sizes", sweep_cfg.sizes, "Comma-separated node counts, strictly increasing")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--trials", sweep_cfg.trials, "Trials per size")->check(kPositive)->capture_default_str();
  sweep->add_option("--radius", sweep_cfg.knowledge_radius, "Target knowledge radius (1 or 2)")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  sweep->add_option("--max-steps", sweep_cfg.step_cap, "Per-search pass cap (default 100 * N * mean degree)");
  sweep->add_option("--workers", sweep_cfg.workers, "Worker threads (0 = all cores)")->capture_default_str();
  sweep->add_flag("--shared-graph", sweep_shared, "Reuse one graph per size instead of one per trial");
  add_cutoff_option(sweep, sweep_cutoff);
  sweep->add_option("--out-dir", sweep_dir, "Directory for sweep.csv and summary.txt")->capture_default_str();
  add_seed(sweep);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Load a network snapshot, fit its degree exponent, replay search");
  std::string ingest_in;
  std::size_t ingest_trials = 1000;
  std::size_t ingest_kmin = 1;
  std::optional<std::size_t> ingest_kmax;
  std::size_t ingest_replicas = 1;
  unsigned ingest_workers = 0;
  std::string ingest_dir = ".";
  ingest->add_option("--in", ingest_in, "Edge-list snapshot")->required();
  ingest->add_option("--trials", ingest_trials, "Search trials")->check(kPositive)->capture_default_str();
  ingest->add_option("--k-min", ingest_kmin, "Smallest degree in the exponent fit")
      ->check(kPositive)
      ->capture_default_str();
  ingest->add_option("--k-max", ingest_kmax, "Largest degree in the exponent fit (default: largest seen twice)");
  ingest->add_option("--replicas", ingest_replicas, "Copies of each sought file")
      ->check(kPositive)
      ->capture_default_str();
  ingest->add_option("--workers", ingest_workers, "Worker threads (0 = all cores)")->capture_default_str();
  ingest->add_option("--out-dir", ingest_dir, "Directory for found.csv, meta.txt and ids.csv")->capture_default_str();
  add_seed(ingest);

  // report
  auto* report = app.add_subcommand("report", "Step distribution, revisit and color experiments as CSV");
  std::uint64_t rep_n = 10000;
  std::uint64_t rep_color_n = 1000;
  double rep_tau = 2.1;
  std::size_t rep_trials = 50;
  std::size_t rep_revisit_runs = 20;
  std::string rep_strategy = "high-degree";
  std::vector<std::uint64_t> rep_sweep_sizes;
  std::size_t rep_sweep_trials = 50;
  unsigned rep_workers = 0;
  std::string rep_dir = ".";
  report->add_option("--n", rep_n, "Graph size for step and revisit experiments")
      ->check(CLI::Range(std::uint64_t{20}, std::uint64_t{2000000000}))
      ->capture_default_str();
  report->add_option("--color-n", rep_color_n, "Graph size for the color bar charts")
      ->check(CLI::Range(std::uint64_t{20}, std::uint64_t{2000000000}))
      ->capture_default_str();
  report->add_option("--tau", rep_tau, "Power-law exponent")->check(kTauValidator)->capture_default_str();
  report->add_option("--trials", rep_trials, "Step-distribution trials")->check(kPositive)->capture_default_str();
  report->add_option("--revisit-runs", rep_revisit_runs, "Runs pooled per revisit curve")
      ->check(kPositive)
      ->capture_default_str();
  report->add_option("--strategy", rep_strategy, "Strategy for the step distribution")
      ->check(CLI::IsMember({"random-walk", "high-degree"}))
      ->capture_default_str();
  report->add_option("--sweep-sizes", rep_sweep_sizes, "Also run all six scaling sweeps over these sizes")
      ->delimiter(',');
  report->add_option("--sweep-trials", rep_sweep_trials, "Trials per size for --sweep-sizes")
      ->check(kPositive)
      ->capture_default_str();
  report->add_option("--workers", rep_workers, "Worker threads (0 = all cores)")->capture_default_str();
  report->add_option("--out-dir", rep_dir, "Directory for the CSV files and summary.txt")->capture_default_str();
  add_seed(report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    const auto chosen = app.get_subcommands();
    err << "error: " << e.what() << "\n\n" << (chosen.empty() ? app.help() : chosen.front()->help());
    return 2;
  }

  try {
    if (generate->parsed()) {
      Graph g;
      if (gen_kind == "poisson") {
        if (gen_n < 2) throw UsageError("--n: poisson graphs need at least 2 nodes");
        if (!(gen_z >= 0.0) || gen_z > static_cast<double>(gen_n - 1)) throw UsageError("--z: must lie in [0, n-1]");
        g = generate_poisson_graph(gen_n, gen_z, seed);
      } else {
        g = generate_power_law_graph(gen_n, gen_tau, seed, parse_cutoff(gen_cutoff));
      }
      if (gen_lcc) g = largest_connected_component(g).graph;
      auto file = open_output(gen_out);
      write_edge_list(g, file);
      out << "wrote " << gen_out << ": " << g.node_count() << " nodes, " << g.edge_count() << " edges\n";
      return 0;
    }

    if (analyze->parsed()) {
      const PowerLawModel model = power_law_model(an_n, an_tau, parse_cutoff(an_cutoff));
      const ScalingExponents exps = scaling_exponents(an_tau);
      const GFSummary gf = gf_summary(model);
      if (!in_scaling_regime(an_tau)) err << "warning: step-count exponents assume 2 < tau < 3\n";
      out << "tau " << format_g6(an_tau) << ", N " << model.n << ", cutoff m " << model.m << ", c "
          << format_g6(model.c) << '\n'
          << "random-walk exponent " << fixed6(exps.random_walk) << '\n'
          << "degree-seq exponent " << fixed6(exps.degree_seq) << '\n'
          << "z2-walk exponent " << fixed6(exps.z2_walk_exp) << '\n'
          << "tau->2 cover steps (ln N)^2 " << format_g6(tau2_cover_steps(static_cast<double>(std::max<std::uint64_t>(an_n, 2))))
          << '\n'
          << "mean degree " << format_g6(gf.mean_degree) << ", mean excess " << format_g6(gf.mean_excess)
          << ", z2 random " << format_g6(gf.z2_random) << ", z2 walk " << format_g6(gf.z2_walk) << '\n';
      if (an_window) {
        if (!(*an_window >= 0.0) || *an_window >= model.m) throw UsageError("--a: must lie in [0, m)");
        const DegreeSequenceScan scan = degree_seq_neighbors(model, *an_window);
        out << "degree-sequence scan: z1 " << format_g6(scan.z1) << ", z2 " << format_g6(scan.z2) << ", steps "
            << format_g6(scan.steps) << '\n';
        if (!scan.self_consistent) err << "warning: a > m/10, the small-window premise is weak\n";
      }
      const std::uint32_t probes[] = {1, 2, 5, 10, 20};
      for (std::uint32_t k : probes) {
        if (k > model.m) break;
        const RichestNeighbor r = richest_neighbor_ratio(model, k);
        out << "richest of " << k << " neighbors: expected excess " << format_g6(r.expected_max) << ", ratio "
            << format_g6(r.ratio) << '\n';
      }
      if (!an_ratios_csv.empty()) {
        const double taus[] = {2.0, 2.25, 2.5, 2.75, 3.0, 3.25, 3.5, 3.75};
        auto file = open_output(an_ratios_csv);
        write_richest_neighbor_table(file, taus, an_n);
        out << "wrote " << an_ratios_csv << '\n';
      }
      return 0;
    }

    if (search->parsed()) {
      const auto loaded = search_graph.load(derive_seed(seed, "graph"));
      const Graph& g = loaded.graph;
      if (g.node_count() < 2) throw UsageError("--in/--n: largest component has fewer than 2 nodes");
      Rng pick(derive_seed(seed, "endpoints"));
      const NodeId source =
          search_source ? resolve_node(loaded, *search_source, "--source") : static_cast<NodeId>(pick.below(g.node_count()));
      StopCondition stop = StopCondition::coverage(1.0);
      if (search_target) {
        const NodeId t = resolve_node(loaded, *search_target, "--target");
        if (t == source) throw UsageError("--target: must differ from --source");
        stop = StopCondition::target(t, search_radius);
      } else if (search_coverage) {
        stop = StopCondition::coverage(*search_coverage);
      } else if (search_visited) {
        stop = StopCondition::visited(*search_visited);
      } else if (search_steps) {
        stop = StopCondition::steps(*search_steps);
      }
      if (search_cap) stop.capped_at(*search_cap);
      const SearchTrace trace =
          run_search(g, source, parse_walk_strategy(search_strategy), stop, derive_seed(seed, "search"));
      auto file = open_output(search_out);
      write_trace_csv(file, trace);
      const auto colors = color_histogram(trace, search_window);
      ColorCounts total;
      for (const ColorCounts& c : colors) {
        total.white += c.white;
        total.gray += c.gray;
        total.black += c.black;
      }
      out << search_strategy << " from node " << loaded.label[source] << " on " << g.node_count() << " nodes: "
          << outcome_name(trace.outcome.kind) << " after " << trace.outcome.step << " steps, seen "
          << trace.steps.back().seen_count_after << '\n'
          << "colors at arrival: white " << total.white << ", gray " << total.gray << ", black " << total.black << '\n'
          << "wrote " << search_out << '\n';
      return 0;
    }

    if (flood->parsed()) {
      const auto loaded = flood_graph.load(derive_seed(seed, "graph"));
      const Graph& g = loaded.graph;
      if (g.empty()) throw UsageError("--in/--n: graph is empty");
      Rng pick(derive_seed(seed, "endpoints"));
      const NodeId source =
          flood_source ? resolve_node(loaded, *flood_source, "--source") : static_cast<NodeId>(pick.below(g.node_count()));
      const FloodResult result = flood_search(g, source, flood_ttl);
      out << "flood from node " << loaded.label[source] << " with ttl " << flood_ttl << ": reached "
          << result.reached.size() << " of " << g.node_count() << " nodes using " << result.message_count
          << " messages\n";
      if (!flood_out.empty()) {
        auto file = open_output(flood_out);
        file << "ttl,reached,messages\n";
        for (unsigned ttl = 0; ttl <= flood_ttl; ++ttl) {
          const FloodResult r = flood_search(g, source, ttl);
          file << ttl << ',' << r.reached.size() << ',' << r.message_count << '\n';
        }
        out << "wrote " << flood_out << '\n';
      }
      return 0;
    }

    if (sweep->parsed()) {
      sweep_cfg.metric = parse_metric(sweep_metric);
      sweep_cfg.strategy = parse_walk_strategy(sweep_strategy);
      sweep_cfg.graph_kind = parse_graph_kind(sweep_graph);
      sweep_cfg.cutoff = parse_cutoff(sweep_cutoff);
      sweep_cfg.fresh_graph_per_trial = !sweep_shared;
      sweep_cfg.seed = seed;
      try {
        validate(sweep_cfg);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--") + e.what());
      }
      Report rep;
      rep.sweeps.push_back(run_scaling_sweep(sweep_cfg));
      const std::filesystem::path dir(sweep_dir);
      std::filesystem::create_directories(dir);
      {
        auto file = open_output(dir / "sweep.csv");
        write_sweep_csv(file, rep.sweeps);
      }
      const std::string summary = summary_text(rep);
      {
        auto file = open_output(dir / "summary.txt");
        file << summary;
      }
      out << summary << "wrote " << (dir / "sweep.csv").string() << " and " << (dir / "summary.txt").string() << '\n';
      return 0;
    }

    if (ingest->parsed()) {
      std::ifstream file(ingest_in);
      if (!file) throw UsageError("--in: cannot read " + ingest_in);
      const Snapshot snap = ingest_snapshot(file, ingest_in);
      std::optional<ExponentEstimate> fit;
      try {
        fit = estimate_exponent(snap.graph, ingest_kmin, ingest_kmax);
      } catch (const std::invalid_argument& e) {
        err << "warning: no exponent fit: " << e.what() << '\n';
      }
      const FoundCurve curve =
          cumulative_found_experiment(snap.graph, ingest_trials, seed, ingest_replicas, ingest_workers);
      const std::filesystem::path dir(ingest_dir);
      std::filesystem::create_directories(dir);
      {
        auto f = open_output(dir / "found.csv");
        write_found_csv(f, curve);
      }
      {
        auto f = open_output(dir / "meta.txt");
        write_snapshot_meta(f, snap.meta, fit);
      }
      {
        auto f = open_output(dir / "ids.csv");
        f << "node,original_id\n";
        for (std::size_t i = 0; i < snap.meta.original_ids.size(); ++i) f << i << ',' << snap.meta.original_ids[i] << '\n';
      }
      out << ingest_in << ": " << snap.meta.node_count << " nodes, " << snap.meta.edge_count << " edges";
      if (fit) out << ", tau_hat " << format_g6(fit->tau_hat);
      out << '\n';
      if (const auto median = curve.median_steps()) out << "half of the targets found within " << *median << " steps\n";
      if (curve.censored > 0) out << curve.censored << " of " << curve.trials << " trials hit the step cap\n";
      out << "wrote found.csv, meta.txt and ids.csv to " << dir.string() << '\n';
      return 0;
    }

    if (report->parsed()) {
      Report rep;
      const Strategy strategy = parse_walk_strategy(rep_strategy);
      const Graph big = largest_connected_component(generate_power_law_graph(rep_n, rep_tau, derive_seed(seed, "stepdist-graph"))).graph;
      rep.step_distribution = step_distribution(big, strategy, rep_trials, derive_seed(seed, "stepdist"), rep_workers);

      for (const GraphKind kind : {GraphKind::PowerLaw, GraphKind::PoissonMatched}) {
        std::vector<std::vector<RevisitPoint>> curves(rep_revisit_runs);
        for (std::size_t r = 0; r < rep_revisit_runs; ++r) {
          const Seed run_seed = derive_seed(seed, "revisit", r);
          const SearchGraph sg = make_search_graph(kind, rep_n, rep_tau, 0.0, derive_seed(run_seed, "graph"));
          Rng pick(derive_seed(run_seed, "source"));
          const auto source = static_cast<NodeId>(pick.below(sg.graph.node_count()));
          const SearchTrace trace = run_search(sg.graph, source, RandomWalkNoBacktrack{}, StopCondition::visited(0.6),
                                               derive_seed(run_seed, "search"));
          curves[r] = revisit_fraction_curve(trace);
        }
        rep.revisits.push_back({graph_kind_name(kind), pool_revisit_curves(curves)});
      }

      const Graph small =
          largest_connected_component(generate_power_law_graph(rep_color_n, rep_tau, derive_seed(seed, "color-graph"))).graph;
      const StrategyComparison cmp = strategy_comparison(small, derive_seed(seed, "colors"));
      rep.colors.push_back({"random-walk", 50, color_histogram(cmp.first, 50)});
      rep.colors.push_back({"high-degree", 50, color_histogram(cmp.second, 50)});

      if (!rep_sweep_sizes.empty()) {
        struct Plan {
          Metric metric;
          Strategy strategy;
          GraphKind kind;
        };
        const Plan plans[] = {
            {Metric::AvgSearchSteps, RandomWalkNoBacktrack{}, GraphKind::PowerLaw},
            {Metric::AvgSearchSteps, HighDegreeSelfAvoiding{}, GraphKind::PowerLaw},
            {Metric::HalfCoverSteps, RandomWalkNoBacktrack{}, GraphKind::PowerLaw},
            {Metric::HalfCoverSteps, HighDegreeSelfAvoiding{}, GraphKind::PowerLaw},
            {Metric::HalfCoverSteps, RandomWalkNoBacktrack{}, GraphKind::PoissonMatched},
            {Metric::HalfCoverSteps, RandomWalkNoBacktrack{}, GraphKind::PoissonConstantZ},
        };
        for (const Plan& plan : plans) {
          SweepConfig cfg;
          cfg.sizes = rep_sweep_sizes;
          cfg.tau = rep_tau;
          cfg.trials = rep_sweep_trials;
          cfg.metric = plan.metric;
          cfg.strategy = plan.strategy;
          cfg.graph_kind = plan.kind;
          cfg.seed = seed;
          cfg.workers = rep_workers;
          try {
            validate(cfg);
          } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--sweep-") + e.what());
          }
          rep.sweeps.push_back(run_scaling_sweep(cfg));
        }
      }

      emit_report(rep, rep_dir);
      out << summary_text(rep) << "ratio of full-cover steps (random / high-degree) on " << small.node_count()
          << " nodes: " << format_g6(cmp.ratio) << '\n'
          << "wrote sweep.csv, stepdist.csv, revisit.csv, colors.csv and summary.txt to " << rep_dir << '\n';
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace plsearch
