// Python bindings for the gpgame core library.
//
// The module mirrors the C++ API closely: model parameters and threshold
// policies are value types, estimators and equilibrium routines are free
// functions, and every Monte Carlo entry point takes (n_samples, seed) and is
// bit-reproducible for a fixed seed regardless of thread count.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "gpgame/checks.hpp"
#include "gpgame/distributions.hpp"
#include "gpgame/equilibrium.hpp"
#include "gpgame/estimators.hpp"
#include "gpgame/meanfield.hpp"
#include "gpgame/params.hpp"
#include "gpgame/rng.hpp"
#include "gpgame/simulation.hpp"
#include "gpgame/version.hpp"

namespace py = pybind11;

namespace {

std::string threshold_repr(const gpgame::ThresholdValue& tau) {
  if (tau.is_never()) return "ThresholdValue.never()";
  if (tau.is_unbounded()) return "ThresholdValue.unbounded()";
  if (tau.is_always()) return "ThresholdValue.always()";
  return "ThresholdValue(" + std::to_string(tau.tau()) + ")";
}

std::string params_repr(const gpgame::ModelParams& params) {
  std::ostringstream os;
  os << "ModelParams(k=" << params.k << ", theta=" << params.theta
     << ", lambda_=" << params.lambda << ", p=" << params.p << ", g=" << params.g
     << ", n_agents=";
  if (params.n_agents) {
    os << *params.n_agents;
  } else {
    os << "None";
  }
  os << ")";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  using namespace gpgame;

  m.doc() =
      "Threshold equilibria for Gamma-Poisson coordination games: conjugate "
      "beliefs, best responses, exact potentials, and mean-field estimators.";
  m.attr("__version__") = kVersion;
  m.attr("DEFAULT_SEED") = py::int_(kDefaultSeed);

  py::register_exception<Error>(m, "Error");

  // --- parameters ---------------------------------------------------------
  py::class_<ModelParams>(m, "ModelParams",
                          "Hyperparameters of one game instance; n_agents=None "
                          "selects the infinite-population (mean-field) model.")
      .def(py::init([](int k, double theta, double lambda, int p, double g,
                       std::optional<int> n_agents) {
             ModelParams params;
             params.k = k;
             params.theta = theta;
             params.lambda = lambda;
             params.p = p;
             params.g = g;
             params.n_agents = n_agents;
             return validate_params(params);
           }),
           py::arg("k"), py::arg("theta"), py::arg("lambda_"), py::arg("p"), py::arg("g"),
           py::arg("n_agents") = std::nullopt)
      .def_readwrite("k", &ModelParams::k)
      .def_readwrite("theta", &ModelParams::theta)
      .def_readwrite("lambda_", &ModelParams::lambda)
      .def_readwrite("p", &ModelParams::p)
      .def_readwrite("g", &ModelParams::g)
      .def_readwrite("n_agents", &ModelParams::n_agents)
      .def_property_readonly("posterior_rate", &ModelParams::posterior_rate)
      .def("__repr__", &params_repr);

  m.def("validate_params", &validate_params, py::arg("raw"),
        "Checks all parameter invariants and returns the validated set.");

  // --- distributions ------------------------------------------------------
  m.def("log_gamma", &log_gamma, py::arg("z"));
  m.def("gamma_pdf", &gamma_pdf, py::arg("x"), py::arg("shape"), py::arg("rate"));
  m.def("poisson_pmf", &poisson_pmf, py::arg("y"), py::arg("rate"));
  m.def("poisson_cdf", &poisson_cdf, py::arg("tau"), py::arg("rate"));

  py::class_<PosteriorState>(m, "PosteriorState")
      .def_readonly("shape", &PosteriorState::shape)
      .def_readonly("rate", &PosteriorState::rate)
      .def_property_readonly("mean", &PosteriorState::mean)
      .def("__repr__", [](const PosteriorState& s) {
        std::ostringstream os;
        os << "PosteriorState(shape=" << s.shape << ", rate=" << s.rate << ")";
        return os.str();
      });

  m.def("posterior_of_state", &posterior_of_state, py::arg("y"), py::arg("params"),
        "State posterior after one signal: Gamma(y + k, lambda + theta).");
  m.def("marginal_signal_pmf", &marginal_signal_pmf, py::arg("y"), py::arg("params"));
  m.def("cross_belief_pmf", &cross_belief_pmf, py::arg("ell"), py::arg("y"), py::arg("params"));
  m.def("marginal_support_bound", &marginal_support_bound, py::arg("params"),
        py::arg("tail_eps") = 1e-14);
  m.def("cross_belief_support_bound", &cross_belief_support_bound, py::arg("y"),
        py::arg("params"), py::arg("tail_eps") = 1e-14);

  // --- random streams -----------------------------------------------------
  py::class_<RngStream>(m, "RngStream",
                        "Deterministic stream addressed by (seed, stream index).")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"), py::arg("stream") = 0)
      .def("next_u64", &RngStream::next_u64)
      .def("uniform01", &RngStream::uniform01)
      .def("normal", &RngStream::normal)
      .def("substream", &RngStream::substream, py::arg("index"))
      .def_property_readonly("seed", &RngStream::seed)
      .def_property_readonly("stream", &RngStream::stream);

  m.def("gamma_sample", &gamma_sample, py::arg("shape"), py::arg("rate"), py::arg("rng"));
  m.def("poisson_sample", &poisson_sample, py::arg("mean"), py::arg("rng"));

  // --- threshold policies -------------------------------------------------
  py::enum_<PolicyKind>(m, "PolicyKind")
      .value("low", PolicyKind::low)
      .value("high", PolicyKind::high);

  py::class_<ThresholdValue>(m, "ThresholdValue",
                             "Finite threshold or one of the distinguished points "
                             "never / unbounded / always.")
      .def(py::init<int>(), py::arg("tau"))
      .def_static("never", &ThresholdValue::never)
      .def_static("unbounded", &ThresholdValue::unbounded)
      .def_static("always", &ThresholdValue::always)
      .def_property_readonly("is_never", &ThresholdValue::is_never)
      .def_property_readonly("is_unbounded", &ThresholdValue::is_unbounded)
      .def_property_readonly("is_always", &ThresholdValue::is_always)
      .def_property_readonly("is_finite", &ThresholdValue::is_finite)
      .def_property_readonly("tau", &ThresholdValue::tau)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__repr__", &threshold_repr);
  py::implicitly_convertible<int, ThresholdValue>();

  m.def("activates", &activates, py::arg("kind"), py::arg("tau"), py::arg("y"),
        "Whether a policy of the given kind and threshold activates on signal y.");

  py::class_<ThresholdProfile>(m, "ThresholdProfile")
      .def(py::init([](PolicyKind kind, const std::vector<ThresholdValue>& taus) {
             return ThresholdProfile{kind, taus};
           }),
           py::arg("kind"), py::arg("taus"))
      .def_static("homogeneous", &ThresholdProfile::homogeneous, py::arg("kind"),
                  py::arg("tau"), py::arg("n"))
      .def_readwrite("kind", &ThresholdProfile::kind)
      .def_readwrite("taus", &ThresholdProfile::taus)
      .def("__len__", &ThresholdProfile::size)
      .def(py::self == py::self)
      .def("__repr__", [](const ThresholdProfile& profile) {
        std::ostringstream os;
        os << "ThresholdProfile(" << policy_kind_name(profile.kind) << ", [";
        for (std::size_t i = 0; i < profile.taus.size(); ++i) {
          if (i) os << ", ";
          os << threshold_repr(profile.taus[i]);
        }
        os << "])";
        return os.str();
      });

  // --- estimators ---------------------------------------------------------
  m.def("cost_estimate", &cost_estimate, py::arg("y"), py::arg("params"),
        "Posterior mean of the activation cost, E[X^p | Y=y].");
  m.def("belief_low", &belief_low, py::arg("y"), py::arg("tau_j"), py::arg("params"),
        "P(Y_j <= tau_j | Y_i = y).");
  m.def("belief_high", &belief_high, py::arg("y"), py::arg("tau_j"), py::arg("params"),
        "P(Y_j > tau_j | Y_i = y).");
  m.def("belief", &belief, py::arg("kind"), py::arg("y"), py::arg("tau_j"), py::arg("params"));
  m.def("benefit_estimate", &benefit_estimate, py::arg("y"), py::arg("profile_others"),
        py::arg("params"), "Posterior mean of the benefit, (g/N)(sum of beliefs + 1).");

  // --- complete-information game ------------------------------------------
  m.def("omniscient_action", &omniscient_action, py::arg("x"), py::arg("params"));
  m.def("deterministic_utility", &deterministic_utility, py::arg("i"), py::arg("a"),
        py::arg("x"), py::arg("params"));
  m.def("deterministic_potential", &deterministic_potential, py::arg("a"), py::arg("x"),
        py::arg("params"));
  m.def("deterministic_potential_congestion", &deterministic_potential_congestion,
        py::arg("a"), py::arg("x"), py::arg("params"));
  m.def("pure_nash_set", &pure_nash_set, py::arg("x"), py::arg("params"),
        "All pure Nash profiles at state x, by brute-force deviation checking.");

  // --- equilibrium machinery ----------------------------------------------
  py::class_<SufficientCondition>(m, "SufficientCondition")
      .def_readonly("holds", &SufficientCondition::holds)
      .def_readonly("critical_gain", &SufficientCondition::critical_gain)
      .def("__repr__", [](const SufficientCondition& c) {
        std::ostringstream os;
        os << "SufficientCondition(holds=" << (c.holds ? "True" : "False")
           << ", critical_gain=" << c.critical_gain << ")";
        return os.str();
      });

  m.def("sufficient_condition_low", &sufficient_condition_low, py::arg("params"));
  m.def("sufficient_condition_high", &sufficient_condition_high, py::arg("params"));
  m.def("threshold_upper_bound", &threshold_upper_bound, py::arg("params"),
        "Largest y with cost_estimate(y) < g; never() if none.");

  py::class_<BestResponseResult::Crossing>(m, "Crossing")
      .def_readonly("y", &BestResponseResult::Crossing::y)
      .def_readonly("benefit", &BestResponseResult::Crossing::benefit)
      .def_readonly("cost", &BestResponseResult::Crossing::cost);

  py::class_<BestResponseResult>(m, "BestResponseResult")
      .def_readonly("tau_star", &BestResponseResult::tau_star)
      .def_readonly("diagnostics", &BestResponseResult::diagnostics);

  m.def("best_response_threshold", &best_response_threshold, py::arg("i"),
        py::arg("profile_others"), py::arg("params"));

  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
      .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
      .def_readwrite("max_intervals", &QuadratureSpec::max_intervals)
      .def_readwrite("tail_eps", &QuadratureSpec::tail_eps)
      .def_readwrite("allow_mc_fallback", &QuadratureSpec::allow_mc_fallback)
      .def_readwrite("mc_samples", &QuadratureSpec::mc_samples)
      .def_readwrite("mc_seed", &QuadratureSpec::mc_seed);

  m.def("expected_threshold_utility", &expected_threshold_utility, py::arg("i"),
        py::arg("profile"), py::arg("params"), py::arg("quad") = QuadratureSpec{});
  m.def("expected_potential", &expected_potential, py::arg("profile"), py::arg("params"),
        py::arg("quad") = QuadratureSpec{});

  py::class_<DynamicsRound>(m, "DynamicsRound")
      .def_readonly("round", &DynamicsRound::round)
      .def_readonly("taus", &DynamicsRound::taus)
      .def_readonly("n_changed", &DynamicsRound::n_changed);

  py::class_<DynamicsResult>(m, "DynamicsResult")
      .def_readonly("profile", &DynamicsResult::profile)
      .def_readonly("converged", &DynamicsResult::converged)
      .def_readonly("rounds", &DynamicsResult::rounds)
      .def_readonly("condition_warning", &DynamicsResult::condition_warning)
      .def_readonly("trace", &DynamicsResult::trace);

  m.def("best_response_dynamics", &best_response_dynamics, py::arg("initial"),
        py::arg("params"), py::arg("max_rounds") = 100,
        "Round-robin best-response updates until a full round changes nothing.");

  py::class_<QuadratureAuditEntry>(m, "QuadratureAuditEntry")
      .def_readonly("agent", &QuadratureAuditEntry::agent)
      .def_readonly("deviation", &QuadratureAuditEntry::deviation)
      .def_readonly("gain", &QuadratureAuditEntry::gain);

  py::class_<QuadratureAuditReport>(m, "QuadratureAuditReport")
      .def_readonly("pass_", &QuadratureAuditReport::pass)
      .def_readonly("tolerance", &QuadratureAuditReport::tolerance)
      .def_readonly("max_gain", &QuadratureAuditReport::max_gain)
      .def_readonly("worst", &QuadratureAuditReport::worst)
      .def_readonly("n_deviations", &QuadratureAuditReport::n_deviations);

  m.def("audit_candidates", &audit_candidates, py::arg("kind"), py::arg("params"));
  m.def("deviation_audit_quadrature", &deviation_audit_quadrature, py::arg("profile"),
        py::arg("params"), py::arg("tolerance") = 1e-6, py::arg("quad") = QuadratureSpec{});

  // --- mean field -----------------------------------------------------------
  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("mean", &McEstimate::mean)
      .def_readonly("stderr", &McEstimate::stderr_of_mean)
      .def_readonly("n_samples", &McEstimate::n_samples)
      .def_readonly("seed", &McEstimate::seed)
      .def("__repr__", [](const McEstimate& e) {
        std::ostringstream os;
        os << "McEstimate(mean=" << e.mean << ", stderr=" << e.stderr_of_mean
           << ", n_samples=" << e.n_samples << ")";
        return os.str();
      });

  py::class_<MfpfCurve>(m, "MfpfCurve")
      .def_readonly("taus", &MfpfCurve::taus)
      .def_readonly("values", &MfpfCurve::values)
      .def_readonly("params", &MfpfCurve::params)
      .def_readonly("n_samples", &MfpfCurve::n_samples)
      .def_readonly("seed", &MfpfCurve::seed);

  py::class_<MfpfArgmax>(m, "MfpfArgmax")
      .def_readonly("tau_star", &MfpfArgmax::tau_star)
      .def_readonly("curve", &MfpfArgmax::curve);

  m.def("mfpf_estimate", &mfpf_estimate, py::arg("tau"), py::arg("params"),
        py::arg("n_samples"), py::arg("seed"), py::arg("n_threads") = 1,
        "Sample-average mean-field potential at one threshold (common random numbers).");
  m.def("mfpf_curve", &mfpf_curve, py::arg("params"), py::arg("tau_max"),
        py::arg("n_samples"), py::arg("seed"), py::arg("n_threads") = 1);
  m.def("curve_argmax", &curve_argmax, py::arg("curve"));
  m.def("mfpf_argmax", &mfpf_argmax, py::arg("params"), py::arg("tau_max"),
        py::arg("n_samples"), py::arg("seed"), py::arg("n_threads") = 1);
  m.def("critical_gain_infinite", &critical_gain_infinite, py::arg("params"));
  m.def("tau_omniscient", &tau_omniscient, py::arg("params"));
  m.def("tau_certainty_equivalence", &tau_certainty_equivalence, py::arg("params"));
  m.def("default_tau_max", &default_tau_max, py::arg("params"));

  py::class_<BenchmarkRow>(m, "BenchmarkRow")
      .def_readonly("params", &BenchmarkRow::params)
      .def_readonly("tau_max", &BenchmarkRow::tau_max)
      .def_readonly("tau_star_expected", &BenchmarkRow::tau_star_expected)
      .def_readonly("tau_omni_expected", &BenchmarkRow::tau_omni_expected)
      .def_readonly("tau_ce_expected", &BenchmarkRow::tau_ce_expected);

  m.def("benchmark_rows", &benchmark_rows,
        "The nine built-in benchmark parameter sets with expected thresholds.");

  // --- simulation -----------------------------------------------------------
  py::class_<GameRealization>(m, "GameRealization")
      .def_readonly("x", &GameRealization::x)
      .def_readonly("signals", &GameRealization::signals)
      .def_readonly("actions", &GameRealization::actions)
      .def_readonly("utilities", &GameRealization::utilities);

  m.def("sample_realization", &sample_realization, py::arg("profile"), py::arg("params"),
        py::arg("rng"));
  m.def("empirical_activation_probability", &empirical_activation_probability,
        py::arg("profile"), py::arg("params"), py::arg("n_realizations"), py::arg("seed"),
        py::arg("n_threads") = 1);

  py::class_<DeviationGain>(m, "DeviationGain")
      .def_readonly("agent", &DeviationGain::agent)
      .def_readonly("deviation", &DeviationGain::deviation)
      .def_readonly("gain", &DeviationGain::gain)
      .def_readonly("stderr", &DeviationGain::stderr_of_gain)
      .def_readonly("upper99", &DeviationGain::upper99);

  py::class_<DeviationAuditReport>(m, "DeviationAuditReport")
      .def_readonly("pass_", &DeviationAuditReport::pass)
      .def_readonly("epsilon", &DeviationAuditReport::epsilon)
      .def_readonly("max_gain", &DeviationAuditReport::max_gain)
      .def_readonly("max_upper99", &DeviationAuditReport::max_upper99)
      .def_readonly("worst", &DeviationAuditReport::worst)
      .def_readonly("entries", &DeviationAuditReport::entries)
      .def_readonly("n_realizations", &DeviationAuditReport::n_realizations)
      .def_readonly("seed", &DeviationAuditReport::seed);

  m.def("deviation_audit", &deviation_audit, py::arg("profile"), py::arg("params"),
        py::arg("candidate_deviations"), py::arg("n_realizations"), py::arg("seed"),
        py::arg("epsilon") = -1.0, py::arg("n_threads") = 1,
        "Paired Monte Carlo audit: -1 in candidate_deviations means never-activate.");

  // --- release checks -------------------------------------------------------
  py::class_<CheckOptions>(m, "CheckOptions")
      .def(py::init<>())
      .def_readwrite("seed", &CheckOptions::seed)
      .def_readwrite("mc_samples", &CheckOptions::mc_samples)
      .def_readwrite("n_threads", &CheckOptions::n_threads)
      .def_readwrite("inject_cost_sign_flip", &CheckOptions::inject_cost_sign_flip);

  py::class_<SuiteResult>(m, "SuiteResult")
      .def_readonly("name", &SuiteResult::name)
      .def_readonly("n_checks", &SuiteResult::n_checks)
      .def_readonly("n_failed", &SuiteResult::n_failed)
      .def_readonly("failures", &SuiteResult::failures)
      .def("passed", &SuiteResult::passed);

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("suites", &CheckReport::suites)
      .def("passed", &CheckReport::passed)
      .def("total_checks", &CheckReport::total_checks)
      .def("total_failed", &CheckReport::total_failed);

  m.def("check_suite_names", &check_suite_names);
  m.def("run_check_suite", &run_check_suite, py::arg("name"),
        py::arg("options") = CheckOptions{});
  m.def("run_checks", &run_checks, py::arg("names") = std::vector<std::string>{},
        py::arg("options") = CheckOptions{});
}
