#pragma once

#include <optional>

#include "gpgame/error.hpp"

namespace gpgame {

/// Hyperparameters of one Gamma-Poisson coordination game instance.
///
/// State X ~ Gamma(k, theta); each agent observes Y_i | X=x ~ Poisson(lambda*x),
/// conditionally independent across agents.  Activating costs c(x) = x^p and pays
/// a benefit (g/N) per active agent (own activation included).
struct ModelParams {
  int k = 1;             // prior shape, positive integer
  double theta = 1.0;    // prior rate, > 0
  double lambda = 1.0;   // signal emission rate per unit of state, > 0
  int p = 1;             // cost exponent, nonzero; p > 0 is the low-threshold regime
  double g = 1.0;        // benefit gain, > 0
  std::optional<int> n_agents;  // empty = infinite population (mean-field analysis)

  bool finite_agents() const noexcept { return n_agents.has_value(); }

  /// Agent count for finite-N operations; throws FiniteAgentsRequired otherwise.
  int agents() const {
    if (!n_agents) raise(ErrorCode::finite_agents_required, "operation needs a finite n_agents");
    return *n_agents;
  }

  /// Rate of the state posterior given any signal: lambda + theta.
  double posterior_rate() const noexcept { return lambda + theta; }
};

/// Checks all parameter invariants and returns the validated set.
///
/// Throws NonPositiveRate (theta or lambda <= 0), InvalidShape (k < 1),
/// ZeroExponent (p == 0), InvalidGain (g <= 0), TooFewAgents (finite n_agents < 2).
ModelParams validate_params(const ModelParams& raw);

}  // namespace gpgame
