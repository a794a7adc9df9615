#include "gpgame/equilibrium.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gpgame/distributions.hpp"
#include "gpgame/math_util.hpp"
#include "gpgame/quadrature.hpp"
#include "gpgame/rng.hpp"

namespace gpgame {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_profile(const ThresholdProfile& profile, const ModelParams& params) {
  if (profile.size() != static_cast<std::size_t>(params.agents())) {
    raise(ErrorCode::profile_length_mismatch,
          "profile holds " + std::to_string(profile.size()) + " thresholds for " +
              std::to_string(params.agents()) + " agents");
  }
}

void check_agent(int i, const ModelParams& params) {
  if (i < 0 || i >= params.agents()) {
    raise(ErrorCode::index_out_of_range, "agent index " + std::to_string(i));
  }
}

void check_action_profile(const ActionProfile& a, const ModelParams& params) {
  if (a.size() != static_cast<std::size_t>(params.agents())) {
    raise(ErrorCode::profile_length_mismatch, "action profile length != n_agents");
  }
  for (int v : a) {
    if (v != 0 && v != 1) raise(ErrorCode::domain_error, "actions must be 0 or 1");
  }
}

/// P(agent activates | X = x) under one threshold policy.
double activation_probability(PolicyKind kind, const ThresholdValue& tau, double signal_rate) {
  if (tau.is_never()) return 0.0;
  if (tau.is_always()) return 1.0;
  if (tau.is_unbounded()) return kind == PolicyKind::low ? 1.0 : 0.0;
  const double cdf = signal_rate > 0.0 ? poisson_cdf(tau.tau(), signal_rate) : 1.0;
  return kind == PolicyKind::low ? cdf : 1.0 - cdf;
}

/// Signal below which the high-regime cost estimate diverges (empty for p > 0).
int cost_pole_edge(const ModelParams& params) {
  const int edge = 1 - params.p - params.k;
  return edge > 0 ? edge : 0;
}

double integrate_over_state(const std::function<double(double)>& h, const ModelParams& params,
                            const QuadratureSpec& quad) {
  // Upper cutoff covering both the Gamma mass and, for p > 0, the x^p-weighted
  // moment mass (shape k + p).
  const int shape = params.k + (params.p > 0 ? params.p : 0);
  const double x_hi = std::max(gamma_tail_cutoff(params.k, params.theta, quad.tail_eps),
                               gamma_tail_cutoff(shape, params.theta, quad.tail_eps));
  const auto integrand = [&](double x) { return gamma_pdf(x, params.k, params.theta) * h(x); };
  return integrate_adaptive(integrand, 0.0, x_hi, quad.rel_tol, quad.abs_tol, quad.max_intervals)
      .value;
}

double mc_over_state(const std::function<double(double)>& h, const ModelParams& params,
                     const QuadratureSpec& quad) {
  RngStream rng(quad.mc_seed);
  double sum = 0.0;
  for (long s = 0; s < quad.mc_samples; ++s) {
    sum += h(gamma_sample(params.k, params.theta, rng));
  }
  return sum / static_cast<double>(quad.mc_samples);
}

double expected_over_state(const std::function<double(double)>& h, const ModelParams& params,
                           const QuadratureSpec& quad) {
  if (!quad.allow_mc_fallback) return integrate_over_state(h, params, quad);
  try {
    return integrate_over_state(h, params, quad);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::quadrature_failure) throw;
    return mc_over_state(h, params, quad);
  }
}

}  // namespace

int omniscient_action(double x, const ModelParams& params) {
  if (x < 0.0) raise(ErrorCode::domain_error, "state must be >= 0");
  return params.g >= ipow(x, params.p) ? 1 : 0;
}

double deterministic_utility(int i, const ActionProfile& a, double x, const ModelParams& params) {
  check_action_profile(a, params);
  check_agent(i, params);
  if (x < 0.0) raise(ErrorCode::domain_error, "state must be >= 0");
  if (a[i] == 0) return 0.0;
  int active = 0;
  for (int v : a) active += v;
  return params.g / params.agents() * active - ipow(x, params.p);
}

double deterministic_potential(const ActionProfile& a, double x, const ModelParams& params) {
  check_action_profile(a, params);
  const int n = params.agents();
  const double share = params.g / n;
  const double slack = share - ipow(x, params.p);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      sum += share * a[i] * a[j] + (a[i] + a[j] - 1.0) / (n - 1.0) * slack;
    }
  }
  return 0.5 * sum;
}

double deterministic_potential_congestion(const ActionProfile& a, double x,
                                          const ModelParams& params) {
  check_action_profile(a, params);
  const double share = params.g / params.agents();
  const double cost = ipow(x, params.p);
  int active = 0;
  for (int v : a) active += v;
  double sum = 0.0;
  for (int m = 1; m <= active; ++m) sum += share * m - cost;
  return sum;
}

std::vector<ActionProfile> pure_nash_set(double x, const ModelParams& params) {
  const int n = params.agents();
  if (n > 20) raise(ErrorCode::too_many_agents, "pure Nash enumeration capped at 20 agents");
  if (x < 0.0) raise(ErrorCode::domain_error, "state must be >= 0");
  std::vector<ActionProfile> result;
  ActionProfile a(n, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    for (int i = 0; i < n; ++i) a[i] = (mask >> i) & 1u;
    bool nash = true;
    for (int i = 0; i < n && nash; ++i) {
      const double u = deterministic_utility(i, a, x, params);
      a[i] ^= 1;
      const double u_flip = deterministic_utility(i, a, x, params);
      a[i] ^= 1;
      if (u_flip > u) nash = false;
    }
    if (nash) result.push_back(a);
  }
  return result;
}

SufficientCondition sufficient_condition_low(const ModelParams& params) {
  if (params.p <= 0) raise(ErrorCode::wrong_sign, "low-regime condition needs p > 0");
  const int n = params.agents();
  const double rho = (params.theta + params.lambda) / (params.theta + 2.0 * params.lambda);
  const double bracket = (n - 1) * ipow(rho, params.k) + 1.0;
  const double critical = n / ipow(params.posterior_rate(), params.p) *
                          rising_factorial(params.k, params.p) / bracket;
  return SufficientCondition{params.g > critical, critical};
}

SufficientCondition sufficient_condition_high(const ModelParams& params) {
  if (params.p >= 0) raise(ErrorCode::wrong_sign, "high-regime condition needs p < 0");
  const int n = params.agents();
  const double rho = (params.theta + params.lambda) / (params.theta + 2.0 * params.lambda);
  const int q = 1 - params.p;  // 1 - p >= 2
  const double bracket = 1.0 - (n - 1.0) / n * q * ipow(rho, q);
  if (!(bracket > 0.0)) {
    raise(ErrorCode::degenerate_bound, "high-regime bound degenerate (bracket <= 0)");
  }
  const double bound = ipow(params.posterior_rate(), -params.p) / factorial(-params.p) / bracket;
  return SufficientCondition{params.g < bound, bound};
}

ThresholdValue threshold_upper_bound(const ModelParams& params) {
  if (params.p <= 0) raise(ErrorCode::wrong_sign, "threshold upper bound needs p > 0");
  // cost_estimate is strictly increasing and unbounded for p > 0, so the scan
  // terminates at the first signal whose estimated cost reaches g.
  for (int y = 0;; ++y) {
    if (cost_estimate(y, params) >= params.g) {
      return y == 0 ? ThresholdValue::never() : ThresholdValue(y - 1);
    }
    if (y > 100000000) raise(ErrorCode::domain_error, "threshold upper bound did not converge");
  }
}

BestResponseResult best_response_threshold(int i, const ThresholdProfile& profile_others,
                                           const ModelParams& params) {
  const int n = params.agents();
  check_agent(i, params);
  if (profile_others.size() != static_cast<std::size_t>(n - 1)) {
    raise(ErrorCode::profile_length_mismatch, "peer profile must hold n_agents - 1 thresholds");
  }
  const PolicyKind kind = profile_others.kind;
  if ((kind == PolicyKind::low) != (params.p > 0)) {
    raise(ErrorCode::kind_mismatch, std::string("profile kind ") + policy_kind_name(kind) +
                                        " inconsistent with cost exponent sign");
  }
  BestResponseResult result;
  if (kind == PolicyKind::low) {
    // Activation region is the prefix where benefit >= cost (single crossing);
    // the scan is capped at the upper bound from Corollary-style domination.
    const ThresholdValue cap = threshold_upper_bound(params);
    if (cap.is_never()) {
      result.tau_star = ThresholdValue::never();
      result.diagnostics.push_back(
          {0, benefit_estimate(0, profile_others, params), cost_estimate(0, params)});
      return result;
    }
    for (int y = 0; y <= cap.tau(); ++y) {
      const double b = benefit_estimate(y, profile_others, params);
      const double c = cost_estimate(y, params);
      result.diagnostics.push_back({y, b, c});
      if (b < c) {
        result.tau_star = y == 0 ? ThresholdValue::never() : ThresholdValue(y - 1);
        return result;
      }
    }
    result.tau_star = cap;
    return result;
  }
  // High regime: thresholds collect the prefix where the estimated cost still
  // exceeds the benefit; below the pole edge the cost is divergent, which
  // counts as exceeding.  The benefit is at least g/N while the cost falls to
  // zero, so the crossing exists unless it happens immediately (always()).
  const int pole = cost_pole_edge(params);
  for (int y = 0;; ++y) {
    const double c = y < pole ? kInf : cost_estimate(y, params);
    const double b = benefit_estimate(y, profile_others, params);
    result.diagnostics.push_back({y, b, c});
    if (b >= c) {
      result.tau_star = y == 0 ? ThresholdValue::always() : ThresholdValue(y - 1);
      return result;
    }
    if (y > 100000000) raise(ErrorCode::domain_error, "best response scan did not converge");
  }
}

double expected_threshold_utility(int i, const ThresholdProfile& profile,
                                  const ModelParams& params, const QuadratureSpec& quad) {
  check_profile(profile, params);
  check_agent(i, params);
  const ThresholdValue own = profile.taus[static_cast<std::size_t>(i)];
  if (own.is_never()) return 0.0;
  if (profile.kind == PolicyKind::high && own.is_unbounded()) return 0.0;
  if (params.p < 0) {
    // Smallest signal the policy activates on; if its posterior cost estimate
    // sits in the Gamma pole region the expected cost diverges, so the policy
    // is dominated by never activating and the utility is -infinity.
    const int min_signal =
        (profile.kind == PolicyKind::high && own.is_finite()) ? own.tau() + 1 : 0;
    if (min_signal + params.k + params.p <= 0) return -kInf;
  }
  const int n = params.agents();
  const double share = params.g / n;
  const auto h = [&](double x) {
    const double rate = params.lambda * x;
    const double qi = activation_probability(profile.kind, own, rate);
    if (qi == 0.0) return 0.0;
    double peer_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      peer_sum += activation_probability(profile.kind, profile.taus[static_cast<std::size_t>(j)], rate);
    }
    return qi * (share * (peer_sum + 1.0) - ipow(x, params.p));
  };
  return expected_over_state(h, params, quad);
}

double expected_potential(const ThresholdProfile& profile, const ModelParams& params,
                          const QuadratureSpec& quad) {
  check_profile(profile, params);
  if (params.p < 0 && params.k + params.p <= 0) {
    raise(ErrorCode::domain_error,
          "expected potential divergent: E[X^p] infinite for k + p <= 0");
  }
  const int n = params.agents();
  const double share = params.g / n;
  // Conditional on X = x the actions are independent Bernoulli(q_j), so the
  // pairwise potential reduces to first and second moments of the q_j.
  const auto h = [&](double x) {
    const double rate = params.lambda * x;
    double s1 = 0.0, s2 = 0.0;
    for (const auto& tau : profile.taus) {
      const double q = activation_probability(profile.kind, tau, rate);
      s1 += q;
      s2 += q * q;
    }
    return 0.5 * share * (s1 * s1 - s2) + (s1 - 0.5 * n) * (share - ipow(x, params.p));
  };
  return expected_over_state(h, params, quad);
}

DynamicsResult best_response_dynamics(const ThresholdProfile& initial, const ModelParams& params,
                                      int max_rounds) {
  check_profile(initial, params);
  if (max_rounds < 1) raise(ErrorCode::domain_error, "max_rounds must be >= 1");
  const int n = params.agents();
  DynamicsResult result;
  result.profile = initial;
  try {
    const SufficientCondition cond = params.p > 0 ? sufficient_condition_low(params)
                                                  : sufficient_condition_high(params);
    result.condition_warning = !cond.holds;
  } catch (const Error&) {
    result.condition_warning = true;
  }
  ThresholdProfile others{initial.kind, std::vector<ThresholdValue>(n - 1)};
  for (int round = 1; round <= max_rounds; ++round) {
    int changed = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0, w = 0; j < n; ++j) {
        if (j != i) others.taus[w++] = result.profile.taus[j];
      }
      const ThresholdValue next = best_response_threshold(i, others, params).tau_star;
      if (next != result.profile.taus[i]) {
        result.profile.taus[i] = next;
        ++changed;
      }
    }
    result.trace.push_back({round, result.profile.taus, changed});
    result.rounds = round;
    if (changed == 0) {
      result.converged = true;
      return result;
    }
  }
  result.converged = false;
  return result;
}

std::vector<ThresholdValue> audit_candidates(PolicyKind kind, const ModelParams& params) {
  const int n = params.agents();
  std::vector<ThresholdValue> candidates;
  candidates.push_back(ThresholdValue::never());
  if (kind == PolicyKind::low) {
    const ThresholdValue cap = threshold_upper_bound(params);
    if (cap.is_finite()) {
      for (int t = 0; t <= cap.tau(); ++t) candidates.emplace_back(t);
    } else {
      candidates.emplace_back(0);  // evidence that even the cheapest set loses
    }
  } else {
    const int pole = cost_pole_edge(params);
    int cap = pole;
    while (cost_estimate(cap, params) > params.g / n) ++cap;
    for (int t = pole; t <= cap; ++t) candidates.emplace_back(t);
    candidates.push_back(ThresholdValue::always());
  }
  return candidates;
}

QuadratureAuditReport deviation_audit_quadrature(const ThresholdProfile& profile,
                                                 const ModelParams& params, double tolerance,
                                                 const QuadratureSpec& quad) {
  check_profile(profile, params);
  const int n = params.agents();
  const std::vector<ThresholdValue> candidates = audit_candidates(profile.kind, params);
  QuadratureAuditReport report;
  report.tolerance = tolerance;
  report.max_gain = -kInf;
  ThresholdProfile trial = profile;
  for (int i = 0; i < n; ++i) {
    const double incumbent = expected_threshold_utility(i, profile, params, quad);
    for (const auto& dev : candidates) {
      if (dev == profile.taus[i]) continue;
      trial.taus[i] = dev;
      const double gain = expected_threshold_utility(i, trial, params, quad) - incumbent;
      ++report.n_deviations;
      if (gain > report.max_gain) {
        report.max_gain = gain;
        report.worst = QuadratureAuditEntry{i, dev, gain};
      }
    }
    trial.taus[i] = profile.taus[i];
  }
  report.pass = report.max_gain < tolerance;
  return report;
}

}  // namespace gpgame
