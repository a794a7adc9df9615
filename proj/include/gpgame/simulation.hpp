#pragma once

#include <cstdint>
#include <vector>

#include "gpgame/equilibrium.hpp"
#include "gpgame/meanfield.hpp"
#include "gpgame/rng.hpp"

namespace gpgame {

/// One forward draw of the full game: state, signals, induced actions, payoffs.
struct GameRealization {
  double x = 0.0;
  std::vector<int> signals;
  std::vector<int> actions;
  std::vector<double> utilities;
};

/// Draws X ~ Gamma(k, theta), then N conditionally independent signals
/// Y_i ~ Poisson(lambda X), applies the threshold policies and evaluates the
/// separable payoff.  Finite n_agents required (capped at 10^4).
GameRealization sample_realization(const ThresholdProfile& profile, const ModelParams& params,
                                   RngStream& rng);

/// Fraction of (realization, agent) pairs that activate, with a standard error
/// computed over per-realization fractions (agents share the state, so their
/// actions are correlated within a realization).  Homogeneous profiles only.
McEstimate empirical_activation_probability(const ThresholdProfile& profile,
                                            const ModelParams& params, long n_realizations,
                                            std::uint64_t seed, int n_threads = 1);

struct DeviationGain {
  int agent = 0;
  ThresholdValue deviation;
  double gain = 0.0;      // paired estimate of utility(deviation) - utility(incumbent)
  double stderr_of_gain = 0.0;
  double upper99 = 0.0;   // one-sided 99% upper confidence bound
};

struct DeviationAuditReport {
  bool pass = false;
  double epsilon = 0.0;   // audit tolerance (default 1e-3 * g)
  double max_gain = 0.0;
  double max_upper99 = 0.0;
  DeviationGain worst;
  std::vector<DeviationGain> entries;
  long n_realizations = 0;
  std::uint64_t seed = 0;
};

/// Paired Monte Carlo deviation audit: for each agent and each candidate
/// threshold (entries >= 0 are finite, -1 means never-activate), estimates the
/// utility gain of the unilateral deviation on common (X, Y) draws.  The
/// profile passes when every gain's upper 99% bound is below epsilon.
DeviationAuditReport deviation_audit(const ThresholdProfile& profile, const ModelParams& params,
                                     const std::vector<int>& candidate_deviations,
                                     long n_realizations, std::uint64_t seed,
                                     double epsilon = -1.0, int n_threads = 1);

}  // namespace gpgame
