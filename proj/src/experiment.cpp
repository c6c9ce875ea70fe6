#include "edo/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace edo {

const char* const kRunsCsvHeader =
    "scenario_id,n,m,mu,alpha,strategy,seed,replication,evaluations,hit_budget,d_o_abs,d_o_pct,"
    "maxdeg_div_pct,leaf_div_pct,diam_div_pct";

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

template <typename T>
T parse_integer(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return static_cast<T>(v);
  } catch (const std::exception&) {
    throw ScenarioError(key, fmt::format("expected an integer, got '{}'", text));
  }
}

std::uint64_t parse_seed(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ScenarioError(key, fmt::format("expected a non-negative integer, got '{}'", text));
  }
}

double parse_real(const std::string& key, const std::string& text) {
  if (text == "inf" || text == "unconstrained") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ScenarioError(key, fmt::format("expected a number, got '{}'", text));
  }
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw ScenarioError(key, fmt::format("expected true/false, got '{}'", text));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Task {
  std::size_t cell;
  int mu;
  double alpha;
  MutationStrategy strategy;
  int replication;
};

}  // namespace

void Scenario::validate() const {
  if (n < 4) throw ScenarioError("n", fmt::format("need n >= 4, got {}", n));
  if (mus.empty()) throw ScenarioError("mu", "empty grid");
  if (alphas.empty()) throw ScenarioError("alpha", "empty grid");
  if (strategies.empty()) throw ScenarioError("strategies", "empty grid");
  for (int mu : mus) {
    if (mu < 1) throw ScenarioError("mu", fmt::format("mu must be >= 1, got {}", mu));
    if (mu > n / 2 && !allow_large_mu) {
      throw ScenarioError("mu", fmt::format("mu = {} exceeds floor(n/2) = {}; set allow_large_mu", mu, n / 2));
    }
  }
  for (double a : alphas) {
    if (!(a >= 0.0)) throw ScenarioError("alpha", fmt::format("alpha must be >= 0, got {}", a));
  }
  if (replications < 1) throw ScenarioError("replications", "need at least one replication");
  if (budget && *budget < 1) throw ScenarioError("budget", "budget must be >= 1");
  if (!(budget_factor > 0.0)) throw ScenarioError("budget_factor", "must be > 0");
}

std::int64_t Scenario::budget_for(int mu) const {
  if (budget) return *budget;
  const double b = std::round(budget_factor * mu * static_cast<double>(n) * n);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(b));
}

Scenario parse_scenario(std::istream& in) {
  Scenario s;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ScenarioError(trim(line), fmt::format("line {}: expected `key = value`", line_no));
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (!seen.insert(key).second) throw ScenarioError(key, "given more than once");
    if (value.empty()) throw ScenarioError(key, "missing value");

    if (key == "id") {
      if (value.find(',') != std::string::npos) throw ScenarioError(key, "must not contain commas");
      s.id = value;
    } else if (key == "instance") {
      if (value == "unit") {
        s.instance = CostKind::unit;
      } else if (value == "euclidean") {
        s.instance = CostKind::euclidean;
      } else {
        throw ScenarioError(key, fmt::format("expected unit or euclidean, got '{}'", value));
      }
    } else if (key == "n") {
      s.n = parse_integer<Node>(key, value);
    } else if (key == "instance_seed") {
      s.instance_seed = parse_seed(key, value);
    } else if (key == "instance_per_replication") {
      s.instance_per_replication = parse_bool(key, value);
    } else if (key == "mu") {
      s.mus.clear();
      for (const auto& item : split_list(value)) s.mus.push_back(parse_integer<int>(key, item));
    } else if (key == "alpha") {
      s.alphas.clear();
      for (const auto& item : split_list(value)) s.alphas.push_back(parse_real(key, item));
    } else if (key == "strategies") {
      s.strategies.clear();
      for (const auto& item : split_list(value)) {
        try {
          s.strategies.push_back(MutationStrategy::parse(item));
        } catch (const std::exception& e) {
          throw ScenarioError(key, e.what());
        }
      }
    } else if (key == "replications") {
      s.replications = parse_integer<int>(key, value);
    } else if (key == "budget_factor") {
      s.budget_factor = parse_real(key, value);
    } else if (key == "budget") {
      s.budget = parse_integer<std::int64_t>(key, value);
    } else if (key == "base_seed") {
      s.base_seed = parse_seed(key, value);
    } else if (key == "stop_at_max") {
      s.stop_at_max = parse_bool(key, value);
    } else if (key == "allow_large_mu") {
      s.allow_large_mu = parse_bool(key, value);
    } else {
      throw ScenarioError(key, "unknown key");
    }
  }
  if (!seen.count("n")) throw ScenarioError("n", "required key missing");
  if (!seen.count("mu")) throw ScenarioError("mu", "required key missing");
  s.validate();
  return s;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t cell, std::uint64_t replication) {
  return splitmix64(base ^ splitmix64(cell ^ splitmix64(replication)));
}

ExperimentResult run_experiment(const Scenario& s, unsigned threads) {
  s.validate();

  std::vector<GraphInstance> instances;
  if (s.instance == CostKind::unit) {
    instances.push_back(unit_complete(s.n));
  } else if (!s.instance_per_replication) {
    instances.push_back(euclidean_instance(s.n, s.instance_seed));
  } else {
    for (int r = 0; r < s.replications; ++r) {
      instances.push_back(euclidean_instance(s.n, derive_seed(s.instance_seed, 0, static_cast<std::uint64_t>(r))));
    }
  }

  std::vector<Task> tasks;
  std::size_t cell = 0;
  for (int mu : s.mus) {
    for (double alpha : s.alphas) {
      for (const auto& strategy : s.strategies) {
        for (int r = 0; r < s.replications; ++r) tasks.push_back(Task{cell, mu, alpha, strategy, r});
        ++cell;
      }
    }
  }

  ExperimentResult result;
  result.runs.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      const GraphInstance& g = instances[instances.size() == 1 ? 0 : static_cast<std::size_t>(t.replication)];
      EAConfig cfg;
      cfg.mu = t.mu;
      cfg.alpha = t.alpha;
      cfg.strategy = t.strategy;
      cfg.budget = s.budget_for(t.mu);
      cfg.seed = derive_seed(s.base_seed, t.cell, static_cast<std::uint64_t>(t.replication));
      cfg.stop_at_max = s.stops_at_max();
      result.runs[i] = RunRow{s.id,   g.node_count(),         g.edge_count(), t.mu,
                              t.alpha, t.strategy.label(),    cfg.seed,       t.replication,
                              run(g, cfg)};
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  summarize_runs(s, result);
  return result;
}

void summarize_runs(const Scenario& s, ExperimentResult& result) {
  result.aggregates.clear();
  result.comparisons.clear();
  const std::size_t reps = static_cast<std::size_t>(s.replications);
  const std::size_t per_group = s.strategies.size();
  const bool by_evaluations = s.stops_at_max();

  auto column = [&](std::size_t cell, auto field) {
    std::vector<double> xs;
    for (std::size_t r = 0; r < reps; ++r) xs.push_back(field(result.runs[cell * reps + r].record));
    return xs;
  };
  auto evals = [](const RunRecord& r) { return static_cast<double>(r.evaluations); };
  auto dopct = [](const RunRecord& r) { return r.d_o_pct; };

  for (std::size_t cell = 0; cell < s.cell_count(); ++cell) {
    const RunRow& first = result.runs[cell * reps];
    AggregateRow a{first.scenario_id, first.n, first.mu, first.alpha, first.strategy, s.replications, 0,
                   summarize(column(cell, evals)),
                   summarize(column(cell, dopct)),
                   summarize(column(cell, [](const RunRecord& r) { return r.maxdeg_div_pct; })),
                   summarize(column(cell, [](const RunRecord& r) { return r.leaf_div_pct; })),
                   summarize(column(cell, [](const RunRecord& r) { return r.diam_div_pct; })),
                   {}};
    for (std::size_t r = 0; r < reps; ++r) a.hit_budget_runs += result.runs[cell * reps + r].record.hit_budget;
    result.aggregates.push_back(std::move(a));
  }

  // strategies of one (mu, alpha) group occupy consecutive cells
  for (std::size_t group = 0; group * per_group < s.cell_count(); ++group) {
    for (std::size_t i = 0; i < per_group; ++i) {
      for (std::size_t j = 0; j < per_group; ++j) {
        if (i == j) continue;
        const std::size_t ci = group * per_group + i;
        const std::size_t cj = group * per_group + j;
        const AggregateRow& a = result.aggregates[ci];
        for (const bool evaluations_metric : {true, false}) {
          const auto xs = evaluations_metric ? column(ci, evals) : column(ci, dopct);
          const auto ys = evaluations_metric ? column(cj, evals) : column(cj, dopct);
          const RankSumTest t =
              mann_whitney_u(xs, ys, evaluations_metric ? Alternative::less : Alternative::greater);
          const bool significant = t.p_value < kSignificanceLevel;
          result.comparisons.push_back(ComparisonRow{a.scenario_id, a.n, a.mu, a.alpha,
                                                     evaluations_metric ? "evaluations" : "d_o_pct", a.strategy,
                                                     result.aggregates[cj].strategy, t, significant});
          if (significant && evaluations_metric == by_evaluations) {
            result.aggregates[ci].better_than.push_back(result.aggregates[cj].strategy);
          }
        }
      }
    }
  }
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::string s = fmt::format("{}", x);
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

void write_runs_csv(std::ostream& out, const std::vector<RunRow>& rows) {
  out << kRunsCsvHeader << '\n';
  for (const auto& r : rows) {
    const RunRecord& rec = r.record;
    fmt::print(out, "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.scenario_id, r.n, r.m, r.mu,
               format_number(r.alpha), r.strategy, r.seed, r.replication, rec.evaluations, rec.hit_budget ? 1 : 0,
               rec.d_o_abs, format_number(rec.d_o_pct), format_number(rec.maxdeg_div_pct),
               format_number(rec.leaf_div_pct), format_number(rec.diam_div_pct));
  }
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << "scenario_id,n,mu,alpha,strategy,runs,hit_budget_runs,evaluations_mean,evaluations_std,d_o_pct_mean,"
         "d_o_pct_std,maxdeg_div_pct_mean,maxdeg_div_pct_std,leaf_div_pct_mean,leaf_div_pct_std,"
         "diam_div_pct_mean,diam_div_pct_std,better_than\n";
  for (const auto& a : rows) {
    std::string better;
    for (const auto& b : a.better_than) better += (better.empty() ? "" : ";") + b;
    fmt::print(out, "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", a.scenario_id, a.n, a.mu,
               format_number(a.alpha), a.strategy, a.runs, a.hit_budget_runs, format_number(a.evaluations.mean),
               format_number(a.evaluations.std), format_number(a.d_o_pct.mean), format_number(a.d_o_pct.std),
               format_number(a.maxdeg_div_pct.mean), format_number(a.maxdeg_div_pct.std),
               format_number(a.leaf_div_pct.mean), format_number(a.leaf_div_pct.std),
               format_number(a.diam_div_pct.mean), format_number(a.diam_div_pct.std), better);
  }
}

void write_comparisons_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  out << "scenario_id,n,mu,alpha,metric,strategy,competitor,u,p_value,significant\n";
  for (const auto& c : rows) {
    fmt::print(out, "{},{},{},{},{},{},{},{},{},{}\n", c.scenario_id, c.n, c.mu, format_number(c.alpha), c.metric,
               c.strategy, c.competitor, format_number(c.test.u), format_number(c.test.p_value),
               c.significant ? 1 : 0);
  }
}

}  // namespace edo
