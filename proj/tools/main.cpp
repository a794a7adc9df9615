// Command-line front end: one subcommand per computation, deterministic
// JSON/CSV reports with the full configuration embedded (no timestamps, so
// identical invocations produce identical bytes).
//
// Exit codes: 0 success, 1 validation/usage error, 2 numerical failure,
// 3 property-suite failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpgame/checks.hpp"
#include "gpgame/equilibrium.hpp"
#include "gpgame/meanfield.hpp"
#include "gpgame/serialization.hpp"
#include "gpgame/simulation.hpp"
#include "gpgame/version.hpp"

namespace {

using gpgame::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitPropertyFailure = 3;

struct CommonOpts {
  std::string params_file;
  int k = 1;
  double theta = 1.0;
  double lambda = 1.0;
  int p = 1;
  double g = 1.0;
  int n_agents = 0;
  int tau_max = -1;  // -1: use default_tau_max(params)
  long n_samples = 1000000;
  std::uint64_t seed = gpgame::kDefaultSeed;
  std::string format = "json";
  std::string out;
  int threads = 1;
};

/// Registers the model flags on a subcommand; overrides apply only when the
/// flag was actually passed, on top of --params (or the built-in defaults).
void add_model_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--params", opts.params_file, "JSON file with the model parameters");
  cmd->add_option("--k", opts.k, "prior shape (positive integer)");
  cmd->add_option("--theta", opts.theta, "prior rate");
  cmd->add_option("--lambda", opts.lambda, "signal rate per unit of state");
  cmd->add_option("--p", opts.p, "cost exponent (nonzero integer)");
  cmd->add_option("--g", opts.g, "benefit gain");
  cmd->add_option("--n", opts.n_agents, "number of agents (omit for the infinite population)");
}

void add_run_options(CLI::App* cmd, CommonOpts& opts, bool with_tau_max = true) {
  if (with_tau_max) {
    cmd->add_option("--tau-max", opts.tau_max, "threshold search ceiling (default: derived)");
  }
  cmd->add_option("--n-samples", opts.n_samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts.seed, "random seed");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opts.out, "output path (default: stdout)");
  cmd->add_option("--threads", opts.threads, "worker threads (never changes results)")
      ->check(CLI::PositiveNumber);
}

gpgame::ModelParams load_params(const CLI::App* cmd, const CommonOpts& opts) {
  gpgame::ModelParams params;
  if (!opts.params_file.empty()) {
    std::ifstream in(opts.params_file);
    if (!in) {
      gpgame::raise(gpgame::ErrorCode::parse_error,
                    "cannot open parameter file: " + opts.params_file);
    }
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      gpgame::raise(gpgame::ErrorCode::parse_error, std::string("bad JSON: ") + e.what());
    }
    params = gpgame::params_from_json(doc);
  }
  if (cmd->count("--k")) params.k = opts.k;
  if (cmd->count("--theta")) params.theta = opts.theta;
  if (cmd->count("--lambda")) params.lambda = opts.lambda;
  if (cmd->count("--p")) params.p = opts.p;
  if (cmd->count("--g")) params.g = opts.g;
  if (cmd->count("--n")) params.n_agents = opts.n_agents;
  return gpgame::validate_params(params);
}

void write_output(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    gpgame::raise(gpgame::ErrorCode::parse_error, "cannot open output path: " + out_path);
  }
  out << payload;
  if (!out) {
    gpgame::raise(gpgame::ErrorCode::parse_error, "write failed: " + out_path);
  }
}

json report_head(const char* command, const CommonOpts& opts) {
  json j;
  j["tool"] = "gpgame";
  j["version"] = gpgame::kVersion;
  j["command"] = command;
  j["seed"] = opts.seed;
  j["n_samples"] = opts.n_samples;
  return j;
}

std::string params_meta(const gpgame::ModelParams& params) {
  std::ostringstream line;
  line << "k=" << params.k << " theta=" << gpgame::format_double(params.theta)
       << " lambda=" << gpgame::format_double(params.lambda) << " p=" << params.p
       << " g=" << gpgame::format_double(params.g)
       << " n_agents=" << (params.n_agents ? std::to_string(*params.n_agents) : "inf");
  return line.str();
}

/// Leading '#' metadata block shared by all CSV outputs.
std::string csv_head(const char* command, const CommonOpts& opts,
                     const gpgame::ModelParams* params) {
  std::ostringstream head;
  head << "# gpgame " << gpgame::kVersion << " " << command << "\n";
  if (params) head << "# params: " << params_meta(*params) << "\n";
  head << "# seed=" << opts.seed << " n_samples=" << opts.n_samples << "\n";
  return head.str();
}

std::string threshold_value_csv(const gpgame::ThresholdValue& tau) {
  if (tau.is_never()) return "never";
  if (tau.is_unbounded()) return "inf";
  if (tau.is_always()) return "always";
  return std::to_string(tau.tau());
}

int resolve_tau_max(const CommonOpts& opts, const gpgame::ModelParams& params) {
  if (opts.tau_max < 0) return gpgame::default_tau_max(params);
  if (opts.tau_max < 1) {
    gpgame::raise(gpgame::ErrorCode::domain_error, "--tau-max must be >= 1");
  }
  return opts.tau_max;
}

/// Critical gain and sufficient-condition verdict for the report; null fields
/// where no closed-form bound applies (infinite population with p < 0, or a
/// degenerate high-regime bracket).
void append_condition(json& j, const gpgame::ModelParams& params) {
  j["critical_gain"] = nullptr;
  j["condition_holds"] = nullptr;
  try {
    if (params.finite_agents()) {
      const auto cond = params.p > 0 ? gpgame::sufficient_condition_low(params)
                                     : gpgame::sufficient_condition_high(params);
      j["critical_gain"] = cond.critical_gain;
      j["condition_holds"] = cond.holds;
    } else if (params.p > 0) {
      const double bound = gpgame::critical_gain_infinite(params);
      j["critical_gain"] = bound;
      j["condition_holds"] = params.g > bound;
    }
  } catch (const gpgame::Error& e) {
    if (e.code() != gpgame::ErrorCode::degenerate_bound) throw;
  }
}

int cmd_threshold(const CLI::App* cmd, const CommonOpts& opts) {
  const auto params = load_params(cmd, opts);
  const int tau_max = resolve_tau_max(opts, params);
  const auto result =
      gpgame::mfpf_argmax(params, tau_max, opts.n_samples, opts.seed, opts.threads);
  const double tau_omni = gpgame::tau_omniscient(params);
  const auto tau_ce = gpgame::tau_certainty_equivalence(params);

  json j = report_head("threshold", opts);
  j["params"] = gpgame::params_to_json(params);
  j["tau_max"] = tau_max;
  j["tau_star"] = result.tau_star;
  j["tau_omni"] = tau_omni;
  j["tau_ce"] = gpgame::threshold_value_to_json(tau_ce);
  append_condition(j, params);

  if (opts.format == "csv") {
    std::ostringstream csv;
    csv << csv_head("threshold", opts, &params) << "# tau_max=" << tau_max << "\n"
        << "tau_star,tau_omni,tau_ce,critical_gain,condition_holds\n"
        << result.tau_star << "," << gpgame::format_double(tau_omni) << ","
        << threshold_value_csv(tau_ce) << ",";
    if (!j["critical_gain"].is_null()) {
      csv << gpgame::format_double(j["critical_gain"].get<double>());
    }
    csv << ",";
    if (!j["condition_holds"].is_null()) {
      csv << (j["condition_holds"].get<bool>() ? "true" : "false");
    }
    csv << "\n";
    write_output(csv.str(), opts.out);
  } else {
    write_output(j.dump(2) + "\n", opts.out);
  }
  return kExitOk;
}

int cmd_table(const CommonOpts& opts) {
  json j = report_head("table", opts);
  const bool reduced = opts.n_samples < 1000000;
  if (reduced) {
    j["warning"] = "tau_star tolerance (+-1) is calibrated for n_samples >= 1000000";
  }
  json rows = json::array();
  bool all_ok = true;
  int index = 0;
  for (const auto& row : gpgame::benchmark_rows()) {
    ++index;
    const auto& params = row.params;
    const auto result =
        gpgame::mfpf_argmax(params, row.tau_max, opts.n_samples, opts.seed, opts.threads);
    const double tau_omni = gpgame::tau_omniscient(params);
    const auto tau_ce = gpgame::tau_certainty_equivalence(params);
    const bool star_ok = std::abs(result.tau_star - row.tau_star_expected) <= 1;
    const bool omni_ok = tau_omni == row.tau_omni_expected;
    const bool ce_ok = tau_ce == gpgame::ThresholdValue(row.tau_ce_expected);
    all_ok = all_ok && star_ok && omni_ok && ce_ok;
    json r;
    r["row"] = index;
    r["k"] = params.k;
    r["theta"] = params.theta;
    r["lambda"] = params.lambda;
    r["g"] = params.g;
    r["tau_max"] = row.tau_max;
    r["tau_star"] = result.tau_star;
    r["tau_star_expected"] = row.tau_star_expected;
    r["tau_star_ok"] = star_ok;
    r["tau_omni"] = tau_omni;
    r["tau_omni_expected"] = row.tau_omni_expected;
    r["tau_omni_ok"] = omni_ok;
    r["tau_ce"] = gpgame::threshold_value_to_json(tau_ce);
    r["tau_ce_expected"] = row.tau_ce_expected;
    r["tau_ce_ok"] = ce_ok;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["pass"] = all_ok;

  if (opts.format == "csv") {
    std::ostringstream csv;
    csv << csv_head("table", opts, nullptr);
    if (reduced) csv << "# warning: " << j["warning"].get<std::string>() << "\n";
    csv << "row,k,theta,lambda,g,tau_max,tau_star,tau_star_expected,tau_star_ok,"
           "tau_omni,tau_omni_expected,tau_omni_ok,tau_ce,tau_ce_expected,tau_ce_ok\n";
    for (const auto& r : j["rows"]) {
      csv << r["row"].get<int>() << "," << r["k"].get<int>() << ","
          << gpgame::format_double(r["theta"].get<double>()) << ","
          << gpgame::format_double(r["lambda"].get<double>()) << ","
          << gpgame::format_double(r["g"].get<double>()) << "," << r["tau_max"].get<int>() << ","
          << r["tau_star"].get<int>() << "," << r["tau_star_expected"].get<int>() << ","
          << (r["tau_star_ok"].get<bool>() ? "true" : "false") << ","
          << gpgame::format_double(r["tau_omni"].get<double>()) << ","
          << gpgame::format_double(r["tau_omni_expected"].get<double>()) << ","
          << (r["tau_omni_ok"].get<bool>() ? "true" : "false") << ","
          << r["tau_ce"].get<int>() << "," << r["tau_ce_expected"].get<int>() << ","
          << (r["tau_ce_ok"].get<bool>() ? "true" : "false") << "\n";
    }
    write_output(csv.str(), opts.out);
  } else {
    write_output(j.dump(2) + "\n", opts.out);
  }
  return kExitOk;
}

int cmd_potential(const CLI::App* cmd, const CommonOpts& opts) {
  const auto params = load_params(cmd, opts);
  const int tau_max = resolve_tau_max(opts, params);
  const auto curve = gpgame::mfpf_curve(params, tau_max, opts.n_samples, opts.seed, opts.threads);
  const int tau_star = gpgame::curve_argmax(curve);

  if (opts.format == "csv") {
    std::ostringstream csv;
    csv << csv_head("potential", opts, &params) << "# tau_max=" << tau_max << "\n"
        << "tau,value,stderr,is_argmax\n";
    for (std::size_t t = 0; t < curve.taus.size(); ++t) {
      csv << curve.taus[t] << "," << gpgame::format_double(curve.values[t].mean) << ","
          << gpgame::format_double(curve.values[t].stderr_of_mean) << ","
          << (curve.taus[t] == tau_star ? 1 : 0) << "\n";
    }
    write_output(csv.str(), opts.out);
  } else {
    json j = report_head("potential", opts);
    j["params"] = gpgame::params_to_json(params);
    j["tau_max"] = tau_max;
    j["tau_star"] = tau_star;
    j["curve"] = gpgame::curve_to_json(curve);
    write_output(j.dump(2) + "\n", opts.out);
  }
  return kExitOk;
}

std::vector<gpgame::ThresholdValue> parse_init(const std::string& text, int n) {
  auto parse_token = [](const std::string& token) -> gpgame::ThresholdValue {
    if (token == "never") return gpgame::ThresholdValue::never();
    if (token == "inf") return gpgame::ThresholdValue::unbounded();
    if (token == "always") return gpgame::ThresholdValue::always();
    try {
      std::size_t used = 0;
      const int tau = std::stoi(token, &used);
      if (used != token.size() || tau < 0) throw std::invalid_argument(token);
      return gpgame::ThresholdValue(tau);
    } catch (const std::exception&) {
      gpgame::raise(gpgame::ErrorCode::parse_error,
                    "bad --init token '" + token + "' (want an integer, never, inf, or always)");
    }
  };
  std::vector<gpgame::ThresholdValue> taus;
  if (text.find(',') == std::string::npos) {
    taus.assign(n, parse_token(text));
    return taus;
  }
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) taus.push_back(parse_token(token));
  if (taus.size() != static_cast<std::size_t>(n)) {
    gpgame::raise(gpgame::ErrorCode::parse_error, "--init lists " +
                                                      std::to_string(taus.size()) +
                                                      " thresholds for " + std::to_string(n) +
                                                      " agents");
  }
  return taus;
}

int cmd_dynamics(const CLI::App* cmd, const CommonOpts& opts, const std::string& init_text,
                 int max_rounds) {
  const auto params = load_params(cmd, opts);
  const int n = params.agents();
  if (n > 32) {
    gpgame::raise(gpgame::ErrorCode::too_many_agents,
                  "dynamics scans every agent each round; n_agents must be <= 32");
  }
  gpgame::ThresholdProfile initial;
  initial.kind = params.p > 0 ? gpgame::PolicyKind::low : gpgame::PolicyKind::high;
  initial.taus = parse_init(init_text, n);

  const auto result = gpgame::best_response_dynamics(initial, params, max_rounds);
  const auto quad_audit = gpgame::deviation_audit_quadrature(result.profile, params);
  std::vector<int> candidates;
  for (const auto& tau : gpgame::audit_candidates(result.profile.kind, params)) {
    if (tau.is_never()) candidates.push_back(-1);
    if (tau.is_finite()) candidates.push_back(tau.tau());
  }
  const auto mc_audit = gpgame::deviation_audit(result.profile, params, candidates,
                                                opts.n_samples, opts.seed, -1.0, opts.threads);

  json j = report_head("dynamics", opts);
  j["params"] = gpgame::params_to_json(params);
  j["init"] = gpgame::profile_to_json(initial)["taus"];
  j["max_rounds"] = max_rounds;
  j["dynamics"] = gpgame::dynamics_to_json(result);
  j["profile"] = gpgame::profile_to_json(result.profile);
  j["quadrature_audit"] = gpgame::quadrature_audit_to_json(quad_audit);
  j["mc_audit"] = gpgame::deviation_audit_to_json(mc_audit);
  j["audit_pass"] = quad_audit.pass && mc_audit.pass;

  if (opts.format == "csv") {
    std::ostringstream csv;
    csv << csv_head("dynamics", opts, &params) << "# max_rounds=" << max_rounds
        << " converged=" << (result.converged ? "true" : "false")
        << " quadrature_audit_pass=" << (quad_audit.pass ? "true" : "false")
        << " mc_audit_pass=" << (mc_audit.pass ? "true" : "false") << "\n"
        << "round,n_changed,taus\n";
    for (const auto& round : result.trace) {
      csv << round.round << "," << round.n_changed << ",";
      for (std::size_t a = 0; a < round.taus.size(); ++a) {
        csv << (a ? ";" : "") << threshold_value_csv(round.taus[a]);
      }
      csv << "\n";
    }
    write_output(csv.str(), opts.out);
  } else {
    write_output(j.dump(2) + "\n", opts.out);
  }
  return kExitOk;
}

int cmd_check(const CommonOpts& opts, const std::vector<std::string>& suites, bool inject) {
  gpgame::CheckOptions copts;
  copts.seed = opts.seed;
  copts.mc_samples = opts.n_samples;
  copts.n_threads = opts.threads;
  copts.inject_cost_sign_flip = inject;
  const auto report = gpgame::run_checks(suites, copts);

  json j = report_head("check", opts);
  json jsuites = json::array();
  for (const auto& suite : report.suites) {
    json s;
    s["name"] = suite.name;
    s["n_checks"] = suite.n_checks;
    s["n_failed"] = suite.n_failed;
    s["pass"] = suite.passed();
    s["failures"] = suite.failures;
    jsuites.push_back(std::move(s));
  }
  j["suites"] = std::move(jsuites);
  j["pass"] = report.passed();

  if (opts.format == "csv") {
    std::ostringstream csv;
    csv << csv_head("check", opts, nullptr) << "suite,n_checks,n_failed,pass\n";
    for (const auto& suite : report.suites) {
      csv << suite.name << "," << suite.n_checks << "," << suite.n_failed << ","
          << (suite.passed() ? "true" : "false") << "\n";
    }
    write_output(csv.str(), opts.out);
  } else {
    write_output(j.dump(2) + "\n", opts.out);
  }
  return report.passed() ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold equilibria for Gamma-Poisson coordination games"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("gpgame ") + gpgame::kVersion);

  CommonOpts threshold_opts;
  auto* threshold = app.add_subcommand(
      "threshold", "Mean-field threshold report: tau*, tau_omni, tau_ce, critical gain");
  add_model_options(threshold, threshold_opts);
  add_run_options(threshold, threshold_opts);

  CommonOpts table_opts;
  auto* table =
      app.add_subcommand("table", "Run the nine built-in benchmark rows against expectations");
  add_run_options(table, table_opts, /*with_tau_max=*/false);

  CommonOpts potential_opts;
  auto* potential =
      app.add_subcommand("potential", "Export the mean-field potential curve for plotting");
  add_model_options(potential, potential_opts);
  add_run_options(potential, potential_opts);

  CommonOpts dynamics_opts;
  std::string init_text = "0";
  int max_rounds = 100;
  auto* dynamics = app.add_subcommand(
      "dynamics", "Best-response dynamics for a finite population, with deviation audits");
  add_model_options(dynamics, dynamics_opts);
  add_run_options(dynamics, dynamics_opts, /*with_tau_max=*/false);
  dynamics->add_option("--init", init_text,
                       "initial thresholds: one value for all agents or a comma list "
                       "(integer, never, inf, always)");
  dynamics->add_option("--max-rounds", max_rounds, "round limit")->check(CLI::PositiveNumber);

  CommonOpts check_opts;
  check_opts.n_samples = 200000;
  std::vector<std::string> suites;
  bool inject = false;
  auto* check = app.add_subcommand("check", "Run the property suites (release gate)");
  add_run_options(check, check_opts, /*with_tau_max=*/false);
  check->add_option("--suite", suites, "run only the named suites (repeatable)")
      ->check(CLI::IsMember(gpgame::check_suite_names()));
  check
      ->add_flag("--inject-cost-flip", inject,
                 "test hook: negate the cost estimate so the monotonicity suite must fail")
      ->group("");  // hidden from --help

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (threshold->parsed()) return cmd_threshold(threshold, threshold_opts);
    if (table->parsed()) return cmd_table(table_opts);
    if (potential->parsed()) return cmd_potential(potential, potential_opts);
    if (dynamics->parsed()) return cmd_dynamics(dynamics, dynamics_opts, init_text, max_rounds);
    if (check->parsed()) return cmd_check(check_opts, suites, inject);
  } catch (const gpgame::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.numerical() ? kExitNumerical : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitValidation;
}
