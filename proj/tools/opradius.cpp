// Command-line front end: compute radii, evaluate catalog entries, run the
// randomized verification suite, list the catalog. JSON in, JSON/CSV out;
// diagnostics go to stderr, stdout carries only the document.

#include "opradius/catalog.hpp"
#include "opradius/linalg.hpp"
#include "opradius/radius.hpp"
#include "opradius/serialization.hpp"
#include "opradius/suite.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using opradius::CheckParams;
using opradius::CheckReport;
using opradius::Json;
using opradius::Verdict;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitBadFlags = 3;
constexpr int kExitInconclusive = 4;
constexpr int kExitViolation = 5;
constexpr int kExitUnknownCheck = 6;
constexpr int kExitNotApplicable = 7;

struct CliExit {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
  throw CliExit{code, message};
}

opradius::OperatorTuple primary_from_json(const Json& j) {
  if (j.is_object() && j.contains("operators")) {
    return opradius::tuple_from_json(j);
  }
  if (j.is_object() && j.contains("entries")) {
    opradius::OperatorTuple t;
    t.operators.push_back(opradius::matrix_from_json(j));
    return t;
  }
  throw opradius::ParseError("input: expected a matrix or tuple document");
}

Json pair_to_json(const opradius::CheckPair& pair) {
  return Json{{"label", pair.label},
              {"lhs", pair.lhs},
              {"rhs", pair.rhs},
              {"slack", pair.slack},
              {"verdict", opradius::verdict_name(pair.verdict)}};
}

Json report_to_json(const CheckReport& report) {
  // Headline lhs/rhs/slack come from the worst pair (smallest slack among
  // the worst verdicts).
  std::size_t worst = 0;
  for (std::size_t i = 1; i < report.pairs.size(); ++i) {
    const auto& cur = report.pairs[i];
    const auto& best = report.pairs[worst];
    const auto rank = [](Verdict v) {
      return v == Verdict::Holds ? 0 : (v == Verdict::Inconclusive ? 1 : 2);
    };
    if (rank(cur.verdict) > rank(best.verdict) ||
        (rank(cur.verdict) == rank(best.verdict) && cur.slack < best.slack)) {
      worst = i;
    }
  }

  Json j;
  j["id"] = report.id;
  j["verdict"] = opradius::verdict_name(report.verdict);
  if (!report.pairs.empty()) {
    j["lhs"] = report.pairs[worst].lhs;
    j["rhs"] = report.pairs[worst].rhs;
    j["slack"] = report.pairs[worst].slack;
  }
  Json pairs = Json::array();
  for (const auto& pair : report.pairs) pairs.push_back(pair_to_json(pair));
  j["pairs"] = std::move(pairs);
  j["witness"] = report.witness ? opradius::vector_to_json(*report.witness) : Json(nullptr);
  j["escalated"] = report.escalated;
  j["digest"] = report.digest;
  Json params;
  params["p"] = report.p;
  params["q"] = report.q ? Json(*report.q) : Json(nullptr);
  params["r"] = report.r;
  params["alpha"] = report.alpha;
  params["beta"] = report.beta ? Json(*report.beta) : Json(nullptr);
  params["lambda"] = Json::array({report.lambda.real(), report.lambda.imag()});
  params["seed"] = report.rng_seed;
  params["tolerance"] = report.tolerance;
  j["params"] = std::move(params);
  return j;
}

void emit(const Json& document) { std::cout << document.dump(2) << "\n"; }

int run_compute(const std::string& radius, const std::string& input_path,
                bool p_given, double p, const opradius::OptimizerOptions& opts) {
  if (radius == "wp" && !p_given) {
    fail(kExitBadFlags, "--radius wp requires --p");
  }
  if (radius == "we" && p_given && p != 2.0) {
    fail(kExitBadFlags, "--radius we fixes p = 2");
  }
  if (radius == "w" && p_given) {
    fail(kExitBadFlags, "--p applies only to --radius wp/we");
  }
  if (p_given && p < 1.0) {
    fail(kExitBadFlags, "--p must be >= 1");
  }

  Json doc;
  try {
    doc = opradius::load_json_file(input_path);
  } catch (const opradius::ParseError& e) {
    fail(kExitBadInput, e.what());
  }

  try {
    opradius::RadiusEstimate estimate;
    if (radius == "w") {
      estimate = opradius::numerical_radius(opradius::matrix_from_json(doc), opts);
    } else {
      const double effective_p = (radius == "we") ? 2.0 : p;
      estimate = opradius::wp_radius(opradius::tuple_from_json(doc), effective_p, opts);
    }
    emit(opradius::estimate_to_json(estimate));
  } catch (const opradius::ParseError& e) {
    fail(kExitBadInput, e.what());
  } catch (const opradius::InvalidSpecError& e) {
    fail(kExitBadInput, e.what());
  }
  return kExitOk;
}

CheckParams params_from_input(const Json& doc) {
  CheckParams params;
  if (doc.is_object() && doc.contains("primary")) {
    params.primary = primary_from_json(doc["primary"]);
    if (doc.contains("aux_A") && !doc["aux_A"].is_null()) {
      params.aux_A = opradius::tuple_from_json(doc["aux_A"]);
    }
    if (doc.contains("aux_B") && !doc["aux_B"].is_null()) {
      params.aux_B = opradius::tuple_from_json(doc["aux_B"]);
    }
    if (doc.contains("aux_X") && !doc["aux_X"].is_null()) {
      params.aux_X = opradius::matrix_from_json(doc["aux_X"]);
    }
    if (doc.contains("vectors") && !doc["vectors"].is_null()) {
      for (const auto& v : doc["vectors"]) {
        params.vectors.push_back(opradius::vector_from_json(v));
      }
    }
    if (doc.contains("lambda") && !doc["lambda"].is_null()) {
      const auto& l = doc["lambda"];
      if (!l.is_array() || l.size() != 2) {
        throw opradius::ParseError("lambda: expected [re, im]");
      }
      params.lambda = opradius::Complex(l[0].get<double>(), l[1].get<double>());
    }
  } else {
    params.primary = primary_from_json(doc);
  }
  return params;
}

int run_verify(const std::string& id, const std::string& input_path, CheckParams params) {
  try {
    const Json doc = opradius::load_json_file(input_path);
    CheckParams loaded = params_from_input(doc);
    loaded.p = params.p;
    loaded.q = params.q;
    loaded.r = params.r;
    loaded.alpha = params.alpha;
    loaded.alphas = params.alphas;
    loaded.pair = params.pair;
    loaded.opts = params.opts;
    loaded.tolerance = params.tolerance;
    if (loaded.vectors.empty()) loaded.vectors = params.vectors;

    const CheckReport report = opradius::evaluate_check(id, loaded);
    emit(report_to_json(report));
    switch (report.verdict) {
      case Verdict::Holds: return kExitOk;
      case Verdict::Inconclusive: return kExitInconclusive;
      case Verdict::Violation: return kExitViolation;
    }
    return kExitViolation;
  } catch (const opradius::UnknownCheckError& e) {
    fail(kExitUnknownCheck, e.what());
  } catch (const opradius::NotApplicableError& e) {
    fail(kExitNotApplicable, e.what());
  } catch (const opradius::ParseError& e) {
    fail(kExitBadInput, e.what());
  } catch (const opradius::InvalidSpecError& e) {
    fail(kExitBadInput, e.what());
  }
}

int run_suite_cmd(opradius::SuiteConfig config, const std::vector<std::string>& entries,
                  const std::string& out_path, bool csv) {
  try {
    if (entries.size() == 1 && entries[0] == "all") {
      config.entries = opradius::all_entry_ids();
    } else if (!(entries.size() == 1 && entries[0] == "none")) {
      config.entries = entries;
    }
    if (csv && out_path.empty()) {
      fail(kExitBadInput, "--csv needs --out to name the report file");
    }

    const opradius::SuiteReport report = opradius::run_suite(config);
    const Json doc = opradius::suite_report_to_json(report);
    const std::string text = doc.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) fail(kExitBadInput, "cannot write '" + out_path + "'");
      out << text;
    }
    if (csv) {
      std::string csv_path = out_path;
      const std::string ext = ".json";
      if (csv_path.size() > ext.size() &&
          csv_path.compare(csv_path.size() - ext.size(), ext.size(), ext) == 0) {
        csv_path.replace(csv_path.size() - ext.size(), ext.size(), ".csv");
      } else {
        csv_path += ".csv";
      }
      std::ofstream out(csv_path, std::ios::binary);
      if (!out) fail(kExitBadInput, "cannot write '" + csv_path + "'");
      out << opradius::suite_report_to_csv(report);
    }
    return report.total_violations() > 0 ? kExitViolation : kExitOk;
  } catch (const opradius::InvalidConfigError& e) {
    fail(kExitBadInput, e.what());
  }
}

int run_catalog(const std::string& id) {
  const auto entries = opradius::catalog_list();
  if (id.empty()) {
    for (const auto& e : entries) {
      std::cout << e.id << "  " << e.description << " | applies: " << e.applicability
                << " | source: " << e.source << "\n";
    }
    return kExitOk;
  }
  for (const auto& e : entries) {
    if (e.id == id) {
      std::cout << "id: " << e.id << "\n";
      std::cout << "description: " << e.description << "\n";
      std::cout << "applicability: " << e.applicability << "\n";
      std::cout << "sensitivity: " << e.sensitivity << "\n";
      std::cout << "source: " << e.source << "\n";
      if (!e.flags.empty()) {
        std::cout << "flags:";
        for (const auto& f : e.flags) std::cout << " " << f;
        std::cout << "\n";
      }
      return kExitOk;
    }
  }
  fail(kExitUnknownCheck, "unknown check id '" + id + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator radius toolkit: w, w_e, w_p and an inequality verification suite"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "compute a radius for a matrix or tuple");
  std::string radius_kind;
  std::string input_path;
  double p_value = 2.0;
  opradius::OptimizerOptions opts;
  compute->add_option("--radius", radius_kind, "w | we | wp")
      ->required()
      ->check(CLI::IsMember({"w", "we", "wp"}));
  compute->add_option("--input", input_path, "matrix (w) or tuple (we/wp) JSON file")
      ->required();
  auto* p_opt = compute->add_option("--p", p_value, "exponent p >= 1 (wp)");
  compute->add_option("--restarts", opts.restarts, "ascent restarts (default 32)");
  compute->add_option("--seed", opts.rng_seed, "seed for the restart draws");
  compute->add_option("--grid", opts.theta_grid, "angle grid size (default 720)");
  compute->add_option("--max-iters", opts.max_iters, "ascent iteration cap");
  compute->add_option("--gtol", opts.gtol, "tangent-gradient tolerance");

  // verify
  auto* verify = app.add_subcommand("verify", "evaluate one catalog entry on given inputs");
  std::string check_id;
  std::string verify_input;
  CheckParams vparams;
  double beta_value = 0.5;
  verify->add_option("--check", check_id, "catalog entry id")->required();
  verify->add_option("--input", verify_input, "matrix, tuple, or bundle JSON file")
      ->required();
  verify->add_option("--p", vparams.p, "exponent p (default 2)");
  double q_value = 0.0;
  auto* q_opt = verify->add_option("--q", q_value, "partner/conjugate exponent");
  verify->add_option("--r", vparams.r, "exponent r (default 1)");
  verify->add_option("--alpha", vparams.alpha, "weight in [0,1] (default 0.5)");
  auto* beta_opt = verify->add_option("--beta", beta_value, "function pair exponent in (0,1]");
  verify->add_option("--seed", vparams.opts.rng_seed, "seed for drawn inputs and restarts");
  verify->add_option("--restarts", vparams.opts.restarts, "ascent restarts (default 32)");
  verify->add_option("--tolerance", vparams.tolerance, "relative slack tolerance");

  // suite
  auto* suite = app.add_subcommand("suite", "run the randomized verification suite");
  opradius::SuiteConfig config;
  std::vector<std::string> entry_selection = {"all"};
  std::string out_path;
  bool csv = false;
  suite->add_option("--seed", config.seed, "master seed")->required();
  suite->add_option("--dims", config.dims, "matrix dimensions, e.g. 2,3,4")
      ->delimiter(',');
  suite->add_option("--trials", config.trials, "trials per entry (default 100)");
  suite->add_option("--entries", entry_selection, "all | comma-separated ids")
      ->delimiter(',');
  suite->add_option("--out", out_path, "write the JSON report here as well");
  suite->add_flag("--csv", csv, "also write a CSV summary next to --out");
  suite->add_option("--restarts", config.restarts, "ascent restarts per radius call");
  suite->add_option("--tolerance", config.tolerance, "relative slack tolerance");
  suite->add_option("--threads", config.threads, "worker threads (default: all cores)");
  suite->add_option("--p-grid", config.p_grid, "exponent grid")->delimiter(',');
  suite->add_option("--r-grid", config.r_grid, "r grid")->delimiter(',');
  suite->add_option("--alpha-grid", config.alpha_grid, "alpha grid")->delimiter(',');
  suite->add_option("--beta-grid", config.beta_grid, "beta grid")->delimiter(',');

  // catalog
  auto* catalog = app.add_subcommand("catalog", "list catalog entries");
  std::string catalog_id;
  catalog->add_option("--id", catalog_id, "show one entry in detail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    // Flag errors under `suite` are configuration errors by contract.
    const bool in_suite = argc > 1 && std::string(argv[1]) == "suite";
    return in_suite ? kExitBadInput : kExitBadFlags;
  }

  try {
    if (compute->parsed()) {
      return run_compute(radius_kind, input_path, p_opt->count() > 0, p_value, opts);
    }
    if (verify->parsed()) {
      if (q_opt->count() > 0) vparams.q = q_value;
      if (beta_opt->count() > 0) vparams.pair = opradius::FunctionPair{beta_value};
      return run_verify(check_id, verify_input, vparams);
    }
    if (suite->parsed()) {
      return run_suite_cmd(config, entry_selection, out_path, csv);
    }
    if (catalog->parsed()) {
      return run_catalog(catalog_id);
    }
  } catch (const CliExit& e) {
    std::cerr << e.message << "\n";
    return e.code;
  } catch (const opradius::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
