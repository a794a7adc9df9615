#include "gpgame/meanfield.hpp"

#include <algorithm>
#include <cmath>

#include "gpgame/distributions.hpp"
#include "gpgame/math_util.hpp"
#include "gpgame/parallel.hpp"
#include "gpgame/rng.hpp"

namespace gpgame {
namespace {

constexpr long kMinSamples = 1000;

struct ColumnMoments {
  double sum = 0.0;
  double sum_sq = 0.0;
};

/// Sample-average moments of the mean-field potential integrand at each
/// threshold in taus (sorted ascending).  One Gamma draw serves every column
/// (common random numbers): the Poisson cdf scan streams q = P(Y <= t | X)
/// past all requested thresholds in one pass.  Chunked substreams plus a
/// chunk-ordered reduction make the result bit-identical for any thread count.
std::vector<ColumnMoments> mfpf_moments(const std::vector<int>& taus, const ModelParams& params,
                                        long n_samples, std::uint64_t seed, int n_threads) {
  const long chunks = chunk_count(n_samples);
  const std::size_t cols = taus.size();
  std::vector<std::vector<ColumnMoments>> per_chunk(chunks,
                                                    std::vector<ColumnMoments>(cols));
  for_each_chunk(n_samples, n_threads, [&](long chunk, long count) {
    RngStream rng(seed, static_cast<std::uint64_t>(chunk));
    auto& acc = per_chunk[chunk];
    std::vector<double> q(cols);
    const double half_gain = 0.5 * params.g;
    for (long s = 0; s < count; ++s) {
      const double x = gamma_sample(params.k, params.theta, rng);
      const double cost = ipow(x, params.p);
      poisson_cdf_grid(taus.data(), cols, params.lambda * x, q.data());
      for (std::size_t c = 0; c < cols; ++c) {
        const double v = half_gain * q[c] * q[c] - (q[c] - 0.5) * cost;
        acc[c].sum += v;
        acc[c].sum_sq += v * v;
      }
    }
  });
  std::vector<ColumnMoments> total(cols);
  for (long chunk = 0; chunk < chunks; ++chunk) {
    for (std::size_t c = 0; c < cols; ++c) {
      total[c].sum += per_chunk[chunk][c].sum;
      total[c].sum_sq += per_chunk[chunk][c].sum_sq;
    }
  }
  return total;
}

McEstimate to_estimate(const ColumnMoments& m, long n, std::uint64_t seed) {
  const double mean = m.sum / static_cast<double>(n);
  const double var = std::max(0.0, (m.sum_sq - n * mean * mean) / (n - 1.0));
  return McEstimate{mean, std::sqrt(var / static_cast<double>(n)), n, seed};
}

void check_sample_count(long n_samples) {
  if (n_samples < kMinSamples) {
    raise(ErrorCode::too_few_samples, "need at least 1000 samples");
  }
}

// E[(q - 1/2) X^p] has no finite value when x^p is non-integrable at 0, so a
// sample average would be meaningless there.
void check_mfpf_domain(const ModelParams& params) {
  if (params.p < 0 && params.k + params.p <= 0) {
    raise(ErrorCode::domain_error, "mean-field potential diverges: k + p must be >= 1");
  }
}

}  // namespace

McEstimate mfpf_estimate(int tau, const ModelParams& params, long n_samples, std::uint64_t seed,
                         int n_threads) {
  validate_params(params);
  check_mfpf_domain(params);
  check_sample_count(n_samples);
  if (tau < 0) raise(ErrorCode::domain_error, "threshold must be >= 0");
  const auto moments = mfpf_moments({tau}, params, n_samples, seed, n_threads);
  return to_estimate(moments[0], n_samples, seed);
}

MfpfCurve mfpf_curve(const ModelParams& params, int tau_max, long n_samples, std::uint64_t seed,
                     int n_threads) {
  validate_params(params);
  check_mfpf_domain(params);
  check_sample_count(n_samples);
  if (tau_max < 1) raise(ErrorCode::domain_error, "tau_max must be >= 1");
  MfpfCurve curve;
  curve.taus.resize(tau_max + 1);
  for (int t = 0; t <= tau_max; ++t) curve.taus[t] = t;
  const auto moments = mfpf_moments(curve.taus, params, n_samples, seed, n_threads);
  curve.values.reserve(moments.size());
  for (const auto& m : moments) curve.values.push_back(to_estimate(m, n_samples, seed));
  curve.params = params;
  curve.n_samples = n_samples;
  curve.seed = seed;
  return curve;
}

int curve_argmax(const MfpfCurve& curve) {
  std::size_t best = 0;
  for (std::size_t t = 1; t < curve.values.size(); ++t) {
    if (curve.values[t].mean > curve.values[best].mean) {
      best = t;  // strict: ties resolve to the smaller tau
    }
  }
  return curve.taus.at(best);
}

MfpfArgmax mfpf_argmax(const ModelParams& params, int tau_max, long n_samples, std::uint64_t seed,
                       int n_threads) {
  MfpfArgmax result;
  result.curve = mfpf_curve(params, tau_max, n_samples, seed, n_threads);
  result.tau_star = curve_argmax(result.curve);
  return result;
}

double critical_gain_infinite(const ModelParams& params) {
  if (params.p <= 0) raise(ErrorCode::wrong_sign, "infinite-N critical gain needs p > 0");
  // Integer-exponent powers and the rising factorial keep small-integer cases
  // exact (k = p = 1 gives the literal rational (theta+2 lambda)/(theta+lambda)^2).
  return ipow(params.theta + 2.0 * params.lambda, params.k) /
         ipow(params.posterior_rate(), params.p + params.k) *
         rising_factorial(params.k, params.p);
}

double tau_omniscient(const ModelParams& params) {
  return std::pow(params.g, 1.0 / params.p);
}

ThresholdValue tau_certainty_equivalence(const ModelParams& params) {
  const double rate = params.posterior_rate();
  if (params.p > 0) {
    if (cost_estimate(0, params) > params.g) {
      raise(ErrorCode::no_solution, "estimated cost exceeds g at every signal");
    }
    if (params.p == 1) {
      const double t = std::floor(rate * params.g - params.k);
      return ThresholdValue(static_cast<int>(std::max(0.0, t)));
    }
    // General exponent: cost_estimate is strictly increasing, so scan.
    int t = 0;
    while (cost_estimate(t + 1, params) <= params.g) ++t;
    return ThresholdValue(t);
  }
  // High regime: activate where the estimated cost clears g; the cutoff is the
  // last signal whose cost (divergent ones included) still exceeds it.
  const int pole = std::max(0, 1 - params.p - params.k);
  int t = pole;
  while (cost_estimate(t, params) > params.g) ++t;
  if (t == 0) return ThresholdValue::always();
  return ThresholdValue(t - 1);
}

int default_tau_max(const ModelParams& params) {
  const double ceiling =
      4.0 * params.posterior_rate() * std::max(params.g, 1.0) + 10.0 * params.k;
  return static_cast<int>(std::ceil(ceiling));
}

const std::vector<BenchmarkRow>& benchmark_rows() {
  static const std::vector<BenchmarkRow> rows = [] {
    auto mk = [](int k, double theta, double lambda, double g) {
      return ModelParams{k, theta, lambda, 1, g, std::nullopt};
    };
    return std::vector<BenchmarkRow>{
        {mk(1, 1.0, 5.0, 1.0), 50, 1, 1.0, 5},
        {mk(1, 1.0, 5.0, 2.0), 50, 5, 2.0, 11},
        {mk(1, 1.0, 5.0, 3.0), 50, 10, 3.0, 17},
        {mk(2, 0.5, 2.0, 5.0), 75, 3, 5.0, 10},
        {mk(2, 0.5, 2.0, 7.5), 75, 8, 7.5, 16},
        {mk(2, 0.5, 2.0, 10.0), 75, 13, 10.0, 23},
        {mk(3, 0.1, 1.0, 20.0), 150, 0, 20.0, 19},
        {mk(3, 0.1, 1.0, 40.0), 150, 16, 40.0, 41},
        {mk(3, 0.1, 1.0, 60.0), 150, 32, 60.0, 63},
    };
  }();
  return rows;
}

}  // namespace gpgame
