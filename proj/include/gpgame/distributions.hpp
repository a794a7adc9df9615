#pragma once

#include <cstddef>

#include "gpgame/params.hpp"

namespace gpgame {

/// ln Gamma(z) for z > 0; relative error below 1e-12 over [1e-3, 1e6].
double log_gamma(double z);

/// Gamma(shape, rate) density; 0 for x < 0.
double gamma_pdf(double x, double shape, double rate);

/// Poisson(rate) mass at y, evaluated in log space.
double poisson_pmf(int y, double rate);

/// P(Y <= tau) for Y ~ Poisson(rate); 0 for tau < 0, nondecreasing in tau.
double poisson_cdf(int tau, double rate);

/// State posterior given one signal: X | Y=y ~ Gamma(y + k, lambda + theta).
struct PosteriorState {
  double shape;  // y + k
  double rate;   // lambda + theta
  double mean() const noexcept { return shape / rate; }
};
PosteriorState posterior_of_state(int y, const ModelParams& params);

/// Marginal signal law P(Y_i = y): Negative Binomial with r = k successes and
/// success probability theta/(lambda+theta) (y counts failures).
double marginal_signal_pmf(int y, const ModelParams& params);

/// Cross belief P(Y_j = ell | Y_i = y) for j != i: Negative Binomial with
/// r = k + y and failure weight lambda/(theta + 2*lambda).
double cross_belief_pmf(int ell, int y, const ModelParams& params);

/// Smallest y_max whose Negative Binomial tail bound falls below tail_eps;
/// summing the marginal pmf over 0..y_max captures all but tail_eps of the mass.
int marginal_support_bound(const ModelParams& params, double tail_eps = 1e-14);

/// Same truncation diagnostic for the cross belief at a given conditioning signal.
int cross_belief_support_bound(int y, const ModelParams& params, double tail_eps = 1e-14);

namespace detail {

inline constexpr double kPoissonLinearRateMax = 500.0;  // exp(-rate) comfortably normal
inline constexpr double kPoissonTailRel = 1e-17;        // stop once the tail is this small

}  // namespace detail

/// Fills out[i] = P(Y <= taus[i]) for a strictly increasing list of
/// non-negative thresholds, sharing one pass of the pmf recurrence.
///
/// poisson_cdf() is the single-column case of this scan, so scalar and grid
/// evaluations of the cdf agree bit-for-bit -- estimators that share draws
/// across a threshold grid rely on that.  Below kPoissonLinearRateMax the
/// recurrence runs in plain arithmetic (terms cannot leave double range);
/// above it the terms are tracked in log space with a running-max rescale.
/// Once the remaining geometric tail is negligible the last value is
/// replicated into the remaining columns, so the cost is O(rate + sqrt(rate))
/// even when the last threshold is far beyond the bulk of the mass.
void poisson_cdf_grid(const int* taus, std::size_t n, double rate, double* out);

}  // namespace gpgame
