#pragma once

#include <cstdint>
#include <vector>

#include "gpgame/estimators.hpp"
#include "gpgame/params.hpp"

namespace gpgame {

/// Action profile of the complete-information game, one 0/1 entry per agent.
using ActionProfile = std::vector<int>;

/// Action of an agent that observes the state directly: 1 iff g >= x^p.
int omniscient_action(double x, const ModelParams& params);

/// u_i(a, x) = a_i * ((g/N) * |a| - x^p); inactive agents get exactly 0.
double deterministic_utility(int i, const ActionProfile& a, double x, const ModelParams& params);

/// Exact potential of the complete-information game, pairwise form:
/// (1/2) sum_{i != j} [(g/N) a_i a_j + ((a_i + a_j - 1)/(N-1)) (g/N - x^p)].
double deterministic_potential(const ActionProfile& a, double x, const ModelParams& params);

/// Congestion form of the same potential, sum_{m=1}^{|a|} ((g/N) m - x^p);
/// anchored at zero for the all-inactive profile and differing from the
/// pairwise form by an a-independent constant.
double deterministic_potential_congestion(const ActionProfile& a, double x,
                                          const ModelParams& params);

/// All pure Nash profiles of the complete-information game at state x, by
/// brute-force single-deviation checking.  Guarded to n_agents <= 20.
std::vector<ActionProfile> pure_nash_set(double x, const ModelParams& params);

struct SufficientCondition {
  bool holds = false;
  double critical_gain = 0.0;  // bound on g appearing in the condition
};

/// Low-regime (p > 0) threshold-equilibrium condition: holds iff g strictly
/// exceeds N/(lambda+theta)^p * Gamma(p+k)/Gamma(k) / ((N-1) rho^k + 1),
/// rho = (theta+lambda)/(theta+2 lambda).  Finite N required.
SufficientCondition sufficient_condition_low(const ModelParams& params);

/// High-regime (p < 0) condition: holds iff g is strictly below
/// (lambda+theta)^{-p}/Gamma(1-p) / (1 - ((N-1)/N)(1-p) rho^{1-p}).
/// Throws DegenerateBound when the bracket is nonpositive.
SufficientCondition sufficient_condition_high(const ModelParams& params);

/// Largest y with cost_estimate(y) < g (low regime, p > 0): no best response
/// activates past it.  Returns never() when already cost_estimate(0) >= g.
ThresholdValue threshold_upper_bound(const ModelParams& params);

struct BestResponseResult {
  ThresholdValue tau_star;
  struct Crossing {
    int y;
    double benefit;
    double cost;
  };
  /// (y, benefit, cost) pairs for each scanned signal up to the crossing.
  std::vector<Crossing> diagnostics;
};

/// Interim best response of agent i against the peers' thresholds.
///
/// Low / p > 0: tau* = max{y : benefit(y) >= cost(y)} (ties activate), which is
/// a prefix scan by single crossing; never() when benefit(0) < cost(0); the
/// scan is capped at threshold_upper_bound.  High / p < 0: tau* = max{y :
/// benefit(y) < cost(y)}, with always() when no signal satisfies it.
BestResponseResult best_response_threshold(int i, const ThresholdProfile& profile_others,
                                           const ModelParams& params);

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-14;
  int max_intervals = 2000;
  double tail_eps = 1e-12;      // Gamma mass allowed beyond the upper cutoff
  bool allow_mc_fallback = false;  // retry with Monte Carlo if quadrature fails
  long mc_samples = 1000000;
  std::uint64_t mc_seed = 0x9d2c5680;
};

/// Ex-ante utility of agent i under a threshold profile:
/// integral of f_X(x) q_i(x) [(g/N)(sum_{j != i} q_j(x) + 1) - x^p] dx,
/// where q_j(x) is agent j's activation probability given the state.
double expected_threshold_utility(int i, const ThresholdProfile& profile,
                                  const ModelParams& params, const QuadratureSpec& quad = {});

/// Expected exact potential of the threshold game (pairwise form under the
/// conditional-independence factorization); satisfies the single-deviation
/// identity against expected_threshold_utility.
double expected_potential(const ThresholdProfile& profile, const ModelParams& params,
                          const QuadratureSpec& quad = {});

struct DynamicsRound {
  int round = 0;                      // 1-based
  std::vector<ThresholdValue> taus;   // profile after the round
  int n_changed = 0;
};

struct DynamicsResult {
  ThresholdProfile profile;
  bool converged = false;
  int rounds = 0;
  bool condition_warning = false;  // sufficient condition did not hold
  std::vector<DynamicsRound> trace;
};

/// Round-robin best-response dynamics; stops after a full round without change
/// or after max_rounds (converged = false then).
DynamicsResult best_response_dynamics(const ThresholdProfile& initial, const ModelParams& params,
                                      int max_rounds = 100);

struct QuadratureAuditEntry {
  int agent = 0;
  ThresholdValue deviation;
  double gain = 0.0;  // utility(deviation) - utility(incumbent)
};

struct QuadratureAuditReport {
  bool pass = false;
  double tolerance = 0.0;
  double max_gain = 0.0;
  QuadratureAuditEntry worst;
  int n_deviations = 0;
};

/// Candidate unilateral deviations the audits scan: never plus every finite
/// threshold that could still pay (0..T-bar under Low; the pole edge through
/// the last signal where the estimated cost clears g/N, plus always, under
/// High).  Finite n_agents required.
std::vector<ThresholdValue> audit_candidates(PolicyKind kind, const ModelParams& params);

/// Exhaustive single-agent deviation check over audit_candidates() using
/// quadrature utilities; passes when no gain exceeds the tolerance.
QuadratureAuditReport deviation_audit_quadrature(const ThresholdProfile& profile,
                                                 const ModelParams& params,
                                                 double tolerance = 1e-6,
                                                 const QuadratureSpec& quad = {});

}  // namespace gpgame
