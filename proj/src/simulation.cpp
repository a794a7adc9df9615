#include "gpgame/simulation.hpp"

#include <cmath>
#include <limits>

#include "gpgame/math_util.hpp"
#include "gpgame/parallel.hpp"

namespace gpgame {
namespace {

constexpr long kMinRealizations = 1000;
constexpr int kMaxAgentsForSampling = 10000;
constexpr double kZUpper99 = 2.3263478740408408;  // one-sided 99% normal quantile

void check_realization_inputs(const ThresholdProfile& profile, const ModelParams& params) {
  const int n = params.agents();
  if (n > kMaxAgentsForSampling) {
    raise(ErrorCode::too_many_agents, "realization sampling capped at 10^4 agents");
  }
  if (profile.size() != static_cast<std::size_t>(n)) {
    raise(ErrorCode::profile_length_mismatch, "profile length != n_agents");
  }
}

}  // namespace

GameRealization sample_realization(const ThresholdProfile& profile, const ModelParams& params,
                                   RngStream& rng) {
  check_realization_inputs(profile, params);
  const int n = params.agents();
  GameRealization real;
  real.x = gamma_sample(params.k, params.theta, rng);
  real.signals.resize(n);
  real.actions.resize(n);
  real.utilities.resize(n);
  const double rate = params.lambda * real.x;
  int active = 0;
  for (int i = 0; i < n; ++i) {
    real.signals[i] = poisson_sample(rate, rng);
    real.actions[i] = activates(profile.kind, profile.taus[i], real.signals[i]) ? 1 : 0;
    active += real.actions[i];
  }
  const double share = params.g / n;
  for (int i = 0; i < n; ++i) {
    real.utilities[i] = real.actions[i] == 0 ? 0.0 : share * active - ipow(real.x, params.p);
  }
  return real;
}

McEstimate empirical_activation_probability(const ThresholdProfile& profile,
                                            const ModelParams& params, long n_realizations,
                                            std::uint64_t seed, int n_threads) {
  validate_params(params);
  check_realization_inputs(profile, params);
  if (!profile.homogeneous_value()) {
    raise(ErrorCode::kind_mismatch, "activation probability needs a homogeneous profile");
  }
  if (n_realizations < kMinRealizations) {
    raise(ErrorCode::too_few_samples, "need at least 1000 realizations");
  }
  const int n = params.agents();
  struct Moments {
    double sum = 0.0, sum_sq = 0.0;
  };
  std::vector<Moments> per_chunk(chunk_count(n_realizations));
  for_each_chunk(n_realizations, n_threads, [&](long chunk, long count) {
    RngStream rng(seed, static_cast<std::uint64_t>(chunk));
    auto& acc = per_chunk[chunk];
    for (long s = 0; s < count; ++s) {
      const GameRealization real = sample_realization(profile, params, rng);
      int active = 0;
      for (int a : real.actions) active += a;
      // Per-realization fraction: agents share the state, so aggregating at
      // realization level keeps the standard error honest under correlation.
      const double frac = static_cast<double>(active) / n;
      acc.sum += frac;
      acc.sum_sq += frac * frac;
    }
  });
  double sum = 0.0, sum_sq = 0.0;
  for (const auto& m : per_chunk) {
    sum += m.sum;
    sum_sq += m.sum_sq;
  }
  const double mean = sum / static_cast<double>(n_realizations);
  const double var =
      std::max(0.0, (sum_sq - n_realizations * mean * mean) / (n_realizations - 1.0));
  return McEstimate{mean, std::sqrt(var / static_cast<double>(n_realizations)), n_realizations,
                    seed};
}

DeviationAuditReport deviation_audit(const ThresholdProfile& profile, const ModelParams& params,
                                     const std::vector<int>& candidate_deviations,
                                     long n_realizations, std::uint64_t seed, double epsilon,
                                     int n_threads) {
  validate_params(params);
  check_realization_inputs(profile, params);
  if (n_realizations < kMinRealizations) {
    raise(ErrorCode::too_few_samples, "need at least 1000 realizations");
  }
  const int n = params.agents();
  const double share = params.g / n;
  std::vector<ThresholdValue> deviations;
  deviations.reserve(candidate_deviations.size());
  for (int d : candidate_deviations) {
    // -1 is the never-activate sentinel at this boundary.
    deviations.push_back(d < 0 ? ThresholdValue::never() : ThresholdValue(d));
  }
  const std::size_t n_cells = static_cast<std::size_t>(n) * deviations.size();
  struct Moments {
    double sum = 0.0, sum_sq = 0.0;
  };
  std::vector<std::vector<Moments>> per_chunk(chunk_count(n_realizations),
                                              std::vector<Moments>(n_cells));
  for_each_chunk(n_realizations, n_threads, [&](long chunk, long count) {
    RngStream rng(seed, static_cast<std::uint64_t>(chunk));
    auto& acc = per_chunk[chunk];
    for (long s = 0; s < count; ++s) {
      // Paired estimation: every deviation is evaluated on the same draw.
      const GameRealization real = sample_realization(profile, params, rng);
      const double cost = ipow(real.x, params.p);
      int active = 0;
      for (int a : real.actions) active += a;
      for (int i = 0; i < n; ++i) {
        const int base_action = real.actions[i];
        const double base_utility = real.utilities[i];
        const int peers_active = active - base_action;
        for (std::size_t d = 0; d < deviations.size(); ++d) {
          const int dev_action =
              activates(profile.kind, deviations[d], real.signals[i]) ? 1 : 0;
          const double dev_utility =
              dev_action == 0 ? 0.0 : share * (peers_active + 1) - cost;
          const double gain = dev_utility - base_utility;
          auto& cell = acc[i * deviations.size() + d];
          cell.sum += gain;
          cell.sum_sq += gain * gain;
        }
      }
    }
  });
  DeviationAuditReport report;
  report.epsilon = epsilon > 0.0 ? epsilon : 1e-3 * params.g;
  report.n_realizations = n_realizations;
  report.seed = seed;
  report.max_gain = -std::numeric_limits<double>::infinity();
  report.max_upper99 = -std::numeric_limits<double>::infinity();
  report.entries.reserve(n_cells);
  for (int i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < deviations.size(); ++d) {
      double sum = 0.0, sum_sq = 0.0;
      for (const auto& chunk_acc : per_chunk) {
        const auto& cell = chunk_acc[i * deviations.size() + d];
        sum += cell.sum;
        sum_sq += cell.sum_sq;
      }
      const double mean = sum / static_cast<double>(n_realizations);
      const double var =
          std::max(0.0, (sum_sq - n_realizations * mean * mean) / (n_realizations - 1.0));
      const double se = std::sqrt(var / static_cast<double>(n_realizations));
      DeviationGain entry{i, deviations[d], mean, se, mean + kZUpper99 * se};
      if (entry.gain > report.max_gain) {
        report.max_gain = entry.gain;
        report.worst = entry;
      }
      report.max_upper99 = std::max(report.max_upper99, entry.upper99);
      report.entries.push_back(std::move(entry));
    }
  }
  report.pass = report.max_upper99 < report.epsilon;
  return report;
}

}  // namespace gpgame
