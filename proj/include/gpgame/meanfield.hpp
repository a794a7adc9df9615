#pragma once

#include <cstdint>
#include <vector>

#include "gpgame/estimators.hpp"
#include "gpgame/params.hpp"

namespace gpgame {

/// Monte Carlo estimate with its standard error and provenance.
struct McEstimate {
  double mean = 0.0;
  double stderr_of_mean = 0.0;  // sample standard deviation / sqrt(n_samples)
  long n_samples = 0;
  std::uint64_t seed = 0;
};

/// Mean-field potential curve over an integer threshold grid.
struct MfpfCurve {
  std::vector<int> taus;            // strictly increasing
  std::vector<McEstimate> values;   // one per tau
  ModelParams params;
  long n_samples = 0;
  std::uint64_t seed = 0;
};

/// Sample-average estimate of the mean-field potential at threshold tau:
/// E[(g/2) q^2 - (q - 1/2) X^p] with q = P(Y <= tau | X), X ~ Gamma(k, theta).
///
/// Draws are addressed by (seed, chunk), so estimates share the same states
/// across tau (common random numbers) and are bit-identical for any thread
/// count.  Requires n_samples >= 1000.
McEstimate mfpf_estimate(int tau, const ModelParams& params, long n_samples, std::uint64_t seed,
                         int n_threads = 1);

/// Evaluates the curve on tau = 0..tau_max with common random numbers; each
/// point is bit-identical to the corresponding mfpf_estimate call.
MfpfCurve mfpf_curve(const ModelParams& params, int tau_max, long n_samples, std::uint64_t seed,
                     int n_threads = 1);

struct MfpfArgmax {
  int tau_star = 0;
  MfpfCurve curve;
};

/// Index of the maximal estimated value; ties resolve to the smallest tau.
int curve_argmax(const MfpfCurve& curve);

/// Maximizer of the estimated curve (smallest tau on ties), with the curve.
MfpfArgmax mfpf_argmax(const ModelParams& params, int tau_max, long n_samples, std::uint64_t seed,
                       int n_threads = 1);

/// Infinite-population critical gain (p > 0):
/// (theta+2 lambda)^k / (theta+lambda)^{p+k} * Gamma(p+k)/Gamma(k);
/// threshold equilibria exist for g above it.
double critical_gain_infinite(const ModelParams& params);

/// State cutoff g^{1/p} used by an agent that observes x directly (unrounded).
double tau_omniscient(const ModelParams& params);

/// Signal cutoff obtained by treating the posterior cost estimate as the truth.
/// p = 1: floor((lambda+theta) g - k), at least 0.  p > 1: largest tau with
/// cost_estimate(tau) <= g.  p < 0 mirrors the high regime: largest tau whose
/// estimated cost still exceeds g (cost divergent counts as exceeding), with
/// always() when no signal does.  Throws NoSolution when no threshold exists
/// in the low regime (cost_estimate(0) > g).
ThresholdValue tau_certainty_equivalence(const ModelParams& params);

/// Default search ceiling for threshold grids: 4 (lambda+theta) max(g,1) + 10 k.
int default_tau_max(const ModelParams& params);

/// Built-in benchmark rows (the nine reference parameter sets) with their
/// expected thresholds; used by the table command and the release checks.
struct BenchmarkRow {
  ModelParams params;       // p = 1, infinite agents
  int tau_max = 0;          // reference search ceiling for the argmax
  int tau_star_expected = 0;
  double tau_omni_expected = 0.0;
  int tau_ce_expected = 0;
};
const std::vector<BenchmarkRow>& benchmark_rows();

}  // namespace gpgame
