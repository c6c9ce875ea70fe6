// Command-line front end: single runs, replicated experiments and the
// constructive maximum-diversity populations.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "edo/construct.hpp"
#include "edo/diversity.hpp"
#include "edo/ea.hpp"
#include "edo/experiment.hpp"
#include "edo/graph.hpp"

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  edo::Node n = 0;
  std::string instance = "unit";
  std::uint64_t instance_seed = 1;
  std::string instance_file;
  int mu = 0;
  std::string alpha = "inf";
  std::string strategy = "uniform:1";
  std::uint64_t seed = 1;
  std::int64_t budget = 0;
  bool no_stop_at_max = false;
  std::string trajectory_file;
};

struct ExperimentOptions {
  std::string scenario_file;
  std::string out_dir = ".";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

struct ConstructOptions {
  edo::Node n = 0;
  int mu = 0;
  bool decomposition = false;
  bool verify = false;
  std::string out_file;
};

edo::GraphInstance load_instance(const RunOptions& o) {
  if (!o.instance_file.empty()) {
    std::ifstream in(o.instance_file);
    if (!in) throw UsageError(fmt::format("cannot open instance file '{}'", o.instance_file));
    return edo::read_instance(in);
  }
  if (o.n < 4) throw UsageError(fmt::format("--n must be >= 4, got {}", o.n));
  if (o.instance == "unit") return edo::unit_complete(o.n);
  if (o.instance == "euclidean") return edo::euclidean_instance(o.n, o.instance_seed);
  throw UsageError(fmt::format("--instance must be unit or euclidean, got '{}'", o.instance));
}

int cmd_run(const RunOptions& o) {
  if (o.mu < 1) throw UsageError(fmt::format("--mu must be >= 1, got {}", o.mu));
  const edo::GraphInstance g = load_instance(o);

  edo::EAConfig cfg;
  cfg.mu = o.mu;
  try {
    cfg.alpha = o.alpha == "inf" ? std::numeric_limits<double>::infinity() : std::stod(o.alpha);
    cfg.strategy = edo::MutationStrategy::parse(o.strategy);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (!(cfg.alpha >= 0.0)) throw UsageError("--alpha must be >= 0");
  const edo::Node n = g.node_count();
  cfg.budget = o.budget > 0 ? o.budget : static_cast<std::int64_t>(o.mu) * n * n;
  cfg.seed = o.seed;
  cfg.stop_at_max = !o.no_stop_at_max;
  cfg.record_trajectory = !o.trajectory_file.empty();

  const edo::RunRecord rec = edo::run(g, cfg);
  edo::write_runs_csv(std::cout, {edo::RunRow{"run", n, g.edge_count(), cfg.mu, cfg.alpha, cfg.strategy.label(),
                                              cfg.seed, 0, rec}});

  if (cfg.record_trajectory) {
    std::ofstream out(o.trajectory_file);
    if (!out) throw UsageError(fmt::format("cannot write '{}'", o.trajectory_file));
    out << "evaluation,d_o_abs\n";
    for (const auto& p : rec.trajectory) fmt::print(out, "{},{}\n", p.evaluation, p.diversity);
  }
  return 0;
}

int cmd_experiment(const ExperimentOptions& o) {
  std::ifstream in(o.scenario_file);
  if (!in) throw UsageError(fmt::format("cannot open scenario file '{}'", o.scenario_file));
  const edo::Scenario s = edo::parse_scenario(in);
  const edo::ExperimentResult result = edo::run_experiment(s, o.threads);

  std::filesystem::create_directories(o.out_dir);
  const std::filesystem::path dir(o.out_dir);
  auto open = [&](const char* name) {
    std::ofstream out(dir / name);
    if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", (dir / name).string()));
    return out;
  };
  {
    auto out = open("runs.csv");
    edo::write_runs_csv(out, result.runs);
  }
  {
    auto out = open("aggregate.csv");
    edo::write_aggregate_csv(out, result.aggregates);
  }
  {
    auto out = open("comparisons.csv");
    edo::write_comparisons_csv(out, result.comparisons);
  }

  fmt::print("{:>5} {:>8} {:<12} {:>10} {:>12} {:>10}  {}\n", "mu", "alpha", "strategy", "d_o_pct", "evals_mean",
             "evals_std", "better_than");
  for (const auto& a : result.aggregates) {
    std::string better;
    for (const auto& b : a.better_than) better += (better.empty() ? "" : " ") + b;
    fmt::print("{:>5} {:>8} {:<12} {:>10.2f} {:>12.2f} {:>10.1f}  {}\n", a.mu, edo::format_number(a.alpha),
               a.strategy, a.d_o_pct.mean, a.evaluations.mean, a.evaluations.std, better);
  }
  fmt::print("wrote {} runs to {}\n", result.runs.size(), (dir / "runs.csv").string());
  return 0;
}

void write_edge_lists(std::ostream& out, const std::vector<std::vector<edo::EdgeId>>& parts, edo::Node n) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (edo::EdgeId e : parts[i]) {
      const edo::Edge uv = edo::edge_of(e, n);
      fmt::print(out, "{} {} {}\n", i, uv.u, uv.v);
    }
  }
}

int cmd_construct(const ConstructOptions& o) {
  if (o.n < 4) throw UsageError(fmt::format("--n must be >= 4, got {}", o.n));
  const edo::GraphInstance g = edo::unit_complete(o.n);

  std::vector<std::vector<edo::EdgeId>> parts;
  std::string report;
  bool ok = true;

  if (o.decomposition || o.mu == 0) {
    const edo::Decomposition d = o.n % 2 == 0 ? edo::path_decomposition(o.n) : edo::cycle_decomposition(o.n);
    parts = d.parts;
    const auto problems = edo::check_decomposition(d);
    ok = problems.empty();
    report = fmt::format("{} edge-disjoint hamiltonian {}, exact cover", d.parts.size(),
                         d.kind == edo::DecompositionKind::hamiltonian_paths ? "paths" : "cycles");
    for (const auto& p : problems) report += "; " + p;
  } else {
    if (o.mu < 1) throw UsageError(fmt::format("--mu must be >= 1, got {}", o.mu));
    const edo::Population p = edo::balanced_population(g, o.mu);
    for (const auto& t : p.trees()) parts.emplace_back(t.edges().begin(), t.edges().end());
    p.check_invariants();
    const auto [lo, hi] = p.usage_spread();
    ok = hi - lo <= 1;
    if (o.mu <= o.n / 2) {
      ok = ok && p.diversity() == p.max_diversity();
      report = fmt::format("edge-disjoint, D_o={}={}", p.diversity(), ok ? "max" : fmt::format("max-{}", p.max_diversity() - p.diversity()));
    } else {
      if (o.n % 2 == 1 && o.mu % o.n == 0) ok = ok && lo == hi && hi == 2 * (o.mu / o.n);
      report = fmt::format("spread=({},{})", lo, hi);
    }
  }

  if (!o.out_file.empty()) {
    std::ofstream out(o.out_file);
    if (!out) throw UsageError(fmt::format("cannot write '{}'", o.out_file));
    write_edge_lists(out, parts, o.n);
  } else if (!o.verify) {
    write_edge_lists(std::cout, parts, o.n);
  }
  if (o.verify) {
    fmt::print("{} {}\n", report, ok ? "OK" : "FAIL");
    return ok ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evolutionary diversity optimization of spanning trees"};
  app.require_subcommand(1);

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "single seeded (mu+1)-EA run, printed as one CSV row");
  run->add_option("--n", run_opts.n, "number of nodes");
  run->add_option("--instance", run_opts.instance, "unit or euclidean")->capture_default_str();
  run->add_option("--instance-seed", run_opts.instance_seed, "seed for euclidean points")->capture_default_str();
  run->add_option("--instance-file", run_opts.instance_file, "read the instance from a file instead");
  run->add_option("--mu", run_opts.mu, "population size")->required();
  run->add_option("--alpha", run_opts.alpha, "quality slack, or inf")->capture_default_str();
  run->add_option("--strategy", run_opts.strategy, "uniform:<l> or poisson[:<lambda>]")->capture_default_str();
  run->add_option("--seed", run_opts.seed, "run seed")->capture_default_str();
  run->add_option("--budget", run_opts.budget, "evaluation budget (default mu*n^2)");
  run->add_flag("--no-stop-at-max", run_opts.no_stop_at_max, "run until the budget is exhausted");
  run->add_option("--trajectory", run_opts.trajectory_file, "write (evaluation, D_o) samples to this CSV");

  ExperimentOptions exp_opts;
  auto* experiment = app.add_subcommand("experiment", "replicated runs over a scenario grid");
  experiment->add_option("scenario", exp_opts.scenario_file, "scenario file")->required();
  experiment->add_option("--out-dir", exp_opts.out_dir, "directory for runs/aggregate/comparisons CSV")
      ->capture_default_str();
  experiment->add_option("--threads", exp_opts.threads, "worker threads")->check(CLI::PositiveNumber);

  ConstructOptions con_opts;
  auto* construct = app.add_subcommand("construct", "balanced maximum-diversity populations");
  construct->add_option("--n", con_opts.n, "number of nodes")->required();
  construct->add_option("--mu", con_opts.mu, "population size (omit for the decomposition)");
  construct->add_flag("--decomposition", con_opts.decomposition, "emit the path/cycle decomposition");
  construct->add_flag("--verify", con_opts.verify, "check the construction invariants");
  construct->add_option("--out", con_opts.out_file, "write the edge list to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*run) return cmd_run(run_opts);
    if (*experiment) return cmd_experiment(exp_opts);
    if (*construct) return cmd_construct(con_opts);
  } catch (const UsageError& e) {
    fmt::print(stderr, "usage error: {}\n", e.what());
    return kUsageError;
  } catch (const edo::ScenarioError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}
