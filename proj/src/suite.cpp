#include "opradius/suite.hpp"

#include "opradius/ensembles.hpp"
#include "opradius/rng.hpp"
#include "src/catalog_detail.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <memory>
#include <thread>

namespace opradius {

namespace {

using detail::EntryDef;
using detail::EvalContext;
using detail::InputRecipe;

struct Cell {
  double p = 2.0;
  std::optional<double> q;
  double r = 1.0;
  double alpha = 0.5;
  std::optional<double> beta;
};

std::vector<Cell> build_cells(const EntryDef& entry, const SuiteConfig& config) {
  std::vector<double> ps;
  if (entry.axis_p) {
    for (double p : config.p_grid) {
      if (p >= 1.0 && (!entry.p_ok || entry.p_ok(p))) ps.push_back(p);
    }
  } else {
    ps.push_back(2.0);
  }

  const std::vector<double> rs = entry.axis_r
                                     ? (entry.r_grid.empty() ? config.r_grid : entry.r_grid)
                                     : std::vector<double>{1.0};
  const std::vector<double> alphas =
      entry.axis_alpha ? config.alpha_grid : std::vector<double>{0.5};
  const std::vector<double> betas =
      entry.axis_beta ? config.beta_grid : std::vector<double>{};

  std::vector<Cell> cells;
  for (double p : ps) {
    std::vector<std::optional<double>> qs;
    if (entry.q_rule == EntryDef::QRule::Conjugate) {
      qs.push_back(p / (p - 1.0));
    } else if (entry.q_rule == EntryDef::QRule::Partner) {
      for (double q : config.p_grid) {
        if (q >= 1.0 && q <= p) qs.push_back(q);
      }
    } else {
      qs.push_back(std::nullopt);
    }
    for (const auto& q : qs) {
      for (double r : rs) {
        for (double alpha : alphas) {
          if (betas.empty()) {
            cells.push_back({p, q, r, alpha, std::nullopt});
          } else {
            for (double beta : betas) {
              cells.push_back({p, q, r, alpha, beta});
            }
          }
        }
      }
    }
  }
  return cells;
}

struct TrialOutcome {
  long long holds = 0;
  long long inconclusive = 0;
  long long violations = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  std::string worst_digest;
};

OperatorTuple draw_suite_tuple(const std::string& kind, int dim, int len, std::uint64_t seed) {
  EnsembleSpec spec;
  spec.kind = "tuple:" + kind;
  spec.dim = dim;
  spec.length = len;
  spec.seed = seed;
  return draw_tuple(spec);
}

// Deterministic per-trial inputs honoring the entry's recipe.
CheckParams trial_inputs(const EntryDef& entry, const SuiteConfig& config,
                         std::uint64_t trial_seed) {
  using Kind = InputRecipe::Kind;
  CounterRng pick(child_seed(trial_seed, 0));
  const int dim =
      config.dims[static_cast<std::size_t>(pick.next_u64() % config.dims.size())];
  const int span = entry.recipe.len_max - entry.recipe.len_min + 1;
  const int len = entry.recipe.len_min + static_cast<int>(pick.next_u64() % span);

  CheckParams params;
  params.opts.rng_seed = child_seed(trial_seed, 1);
  const std::uint64_t in_seed = child_seed(trial_seed, 2);

  switch (entry.recipe.kind) {
    case Kind::Matrix1:
    case Kind::MatrixXY:
      params.primary = draw_suite_tuple("ginibre", dim, 1, in_seed);
      break;
    case Kind::Pair2:
      params.primary = draw_suite_tuple("ginibre", dim, 2, in_seed);
      break;
    case Kind::HermPair2:
      params.primary = draw_suite_tuple("hermitian", dim, 2, in_seed);
      break;
    case Kind::TupleVar:
      params.primary = draw_suite_tuple("ginibre", dim, len, in_seed);
      break;
    case Kind::TripleTuples:
    case Kind::PairTuples:
    case Kind::TupleWithX:
      params.primary = draw_suite_tuple("ginibre", dim, len, in_seed);
      break;
    case Kind::Scalars1x1:
      params.primary = draw_suite_tuple("ginibre", 1, 2, in_seed);
      break;
    case Kind::PsdX:
      params.primary = draw_suite_tuple("psd", dim, 1, in_seed);
      break;
    case Kind::VectorsXY: {
      // Free probe vectors; keep a placeholder 1x1 primary so shared
      // machinery has a dimension to work with.
      OperatorTuple t;
      t.operators.push_back(ComplexMatrix::Zero(dim, dim));
      t.operators[0](0, 0) = Complex(1.0, 0.0);
      params.primary = std::move(t);
      break;
    }
  }

  if (entry.recipe.kind == Kind::VectorsXY) {
    for (int k = 0; k < 2; ++k) {
      CounterRng rng(child_seed(trial_seed, 10 + static_cast<std::uint64_t>(k)));
      ComplexVector v(dim);
      for (int i = 0; i < dim; ++i) {
        double re, im;
        rng.normal_pair(re, im);
        v[i] = Complex(re, im);
      }
      params.vectors.push_back(std::move(v));
    }
  }

  if (entry.needs_lambda) {
    CounterRng rng(child_seed(trial_seed, 20));
    double re, im;
    rng.normal_pair(re, im);
    params.lambda = Complex(re, im);
  }
  return params;
}

TrialOutcome run_trial(const EntryDef& entry, const SuiteConfig& config,
                       std::uint64_t trial_seed, const std::vector<Cell>& cells) {
  TrialOutcome outcome;
  const CheckParams base = trial_inputs(entry, config, trial_seed);

  // Base and escalated contexts share radius computations across grid cells.
  EvalContext ctx(OptimizerOptions{});
  std::unique_ptr<EvalContext> escalated;

  for (const Cell& cell : cells) {
    CheckParams params = base;
    params.p = cell.p;
    params.q = cell.q;
    params.r = cell.r;
    params.alpha = cell.alpha;
    if (cell.beta.has_value()) params.pair = FunctionPair{*cell.beta};
    params.tolerance = config.tolerance;
    params.opts.restarts = config.restarts;
    // Point checks never read the enclosure width, so the suite trades grid
    // density for speed; certified uppers stay sound, just wider.
    params.opts.theta_grid = 240;

    if (!detail::prepare_params(entry, params).empty()) {
      continue;  // cell not applicable for this entry/parameter combination
    }

    ctx.opts = params.opts;
    CheckReport report = detail::run_entry(entry, params, ctx);
    if (report.verdict == Verdict::Inconclusive) {
      CheckParams bumped = params;
      bumped.opts.restarts *= 4;
      bumped.opts.max_iters *= 2;
      if (!escalated || escalated->opts.rng_seed != bumped.opts.rng_seed) {
        escalated = std::make_unique<EvalContext>(bumped.opts);
      }
      escalated->opts = bumped.opts;
      report = detail::run_entry(entry, bumped, *escalated);
      report.escalated = true;
    }

    switch (report.verdict) {
      case Verdict::Holds: outcome.holds += 1; break;
      case Verdict::Inconclusive: outcome.inconclusive += 1; break;
      case Verdict::Violation: outcome.violations += 1; break;
    }
    for (const auto& pair : report.pairs) {
      if (pair.slack < outcome.worst_slack) {
        outcome.worst_slack = pair.slack;
        outcome.worst_digest = report.digest;
      }
    }
  }
  return outcome;
}

int resolve_threads(int configured) {
  if (configured > 0) return configured;
  if (const char* env = std::getenv("OPRADIUS_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return std::min(n, 64);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

}  // namespace

long long SuiteReport::total_checks() const {
  long long total = 0;
  for (const auto& e : entries) total += e.holds + e.inconclusive + e.violations;
  return total;
}

long long SuiteReport::total_inconclusive() const {
  long long total = 0;
  for (const auto& e : entries) total += e.inconclusive;
  return total;
}

long long SuiteReport::total_violations() const {
  long long total = 0;
  for (const auto& e : entries) total += e.violations;
  return total;
}

std::vector<std::string> all_entry_ids() {
  std::vector<std::string> ids;
  for (const auto& entry : detail::entry_table()) ids.push_back(entry.meta.id);
  return ids;
}

SuiteReport run_suite(const SuiteConfig& config) {
  if (config.trials < 1) throw InvalidConfigError("suite: trials must be >= 1");
  if (config.dims.empty()) throw InvalidConfigError("suite: dims must be nonempty");
  for (int d : config.dims) {
    if (d < 1 || d > 8) throw InvalidConfigError("suite: dims must lie in [1, 8]");
  }
  if (!(config.tolerance > 0.0)) throw InvalidConfigError("suite: tolerance must be > 0");
  if (config.restarts < 1) throw InvalidConfigError("suite: restarts must be >= 1");
  if (config.p_grid.empty() || config.r_grid.empty() || config.alpha_grid.empty() ||
      config.beta_grid.empty()) {
    throw InvalidConfigError("suite: parameter grids must be nonempty");
  }

  std::vector<const EntryDef*> selected;
  for (const auto& id : config.entries) {
    const EntryDef* entry = detail::find_entry(id);
    if (entry == nullptr) throw InvalidConfigError("suite: unknown entry id '" + id + "'");
    selected.push_back(entry);
  }

  SuiteReport report;
  report.seed = config.seed;
  if (selected.empty()) return report;

  std::vector<std::vector<Cell>> cells_by_entry;
  cells_by_entry.reserve(selected.size());
  for (const EntryDef* entry : selected) {
    cells_by_entry.push_back(build_cells(*entry, config));
  }

  const std::size_t n_tasks = selected.size() * static_cast<std::size_t>(config.trials);
  std::vector<TrialOutcome> outcomes(n_tasks);

  const auto worker_body = [&](std::atomic<std::size_t>& next) {
    while (true) {
      const std::size_t task = next.fetch_add(1);
      if (task >= n_tasks) break;
      const std::size_t entry_idx = task / static_cast<std::size_t>(config.trials);
      const std::size_t trial = task % static_cast<std::size_t>(config.trials);
      const std::uint64_t trial_seed =
          child_seed(child_seed(config.seed ^ 0x5355495445ULL, entry_idx), trial);
      outcomes[task] = run_trial(*selected[entry_idx], config, trial_seed,
                                 cells_by_entry[entry_idx]);
    }
  };

  const int n_threads = std::min<int>(resolve_threads(config.threads),
                                      static_cast<int>(n_tasks));
  std::atomic<std::size_t> next{0};
  if (n_threads <= 1) {
    worker_body(next);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) {
      workers.emplace_back([&] { worker_body(next); });
    }
    for (auto& w : workers) w.join();
  }

  for (std::size_t e = 0; e < selected.size(); ++e) {
    SuiteEntryStats stats;
    stats.id = selected[e]->meta.id;
    stats.trials = config.trials;
    double worst = std::numeric_limits<double>::infinity();
    for (int t = 0; t < config.trials; ++t) {
      const TrialOutcome& out =
          outcomes[e * static_cast<std::size_t>(config.trials) + static_cast<std::size_t>(t)];
      stats.holds += out.holds;
      stats.inconclusive += out.inconclusive;
      stats.violations += out.violations;
      if (out.worst_slack < worst) {
        worst = out.worst_slack;
        stats.worst_case_digest = out.worst_digest;
      }
    }
    stats.worst_slack = std::isinf(worst) ? 0.0 : worst;
    report.entries.push_back(std::move(stats));
  }
  return report;
}

Json suite_report_to_json(const SuiteReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back(Json{{"id", e.id},
                           {"trials", e.trials},
                           {"holds", e.holds},
                           {"inconclusive", e.inconclusive},
                           {"violations", e.violations},
                           {"worst_slack", e.worst_slack},
                           {"worst_case_digest", e.worst_case_digest}});
  }
  return Json{{"seed", report.seed}, {"entries", std::move(entries)}};
}

std::string suite_report_to_csv(const SuiteReport& report) {
  std::string csv = "id,trials,holds,inconclusive,violations,worst_slack\n";
  char buffer[64];
  for (const auto& e : report.entries) {
    std::snprintf(buffer, sizeof(buffer), "%.17g", e.worst_slack);
    csv += e.id + "," + std::to_string(e.trials) + "," + std::to_string(e.holds) + "," +
           std::to_string(e.inconclusive) + "," + std::to_string(e.violations) + "," +
           buffer + "\n";
  }
  return csv;
}

}  // namespace opradius
