#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gpgame/distributions.hpp"
#include "gpgame/error.hpp"
#include "gpgame/simulation.hpp"
#include "gpgame/version.hpp"
#include "oracles.hpp"

using namespace gpgame;

namespace {

ModelParams mk(int k, double theta, double lambda, int p, double g, int n = -1) {
  ModelParams params;
  params.k = k;
  params.theta = theta;
  params.lambda = lambda;
  params.p = p;
  params.g = g;
  if (n > 0) params.n_agents = n;
  return params;
}

}  // namespace

TEST_CASE("sample_realization shapes, consistency, trivial profiles") {
  auto params = mk(1, 1.0, 5.0, 1, 2.0, 4);
  RngStream rng(1001, 0);

  const auto rest = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue::never(), 4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto real = sample_realization(rest, params, rng);
    REQUIRE(real.signals.size() == 4);
    REQUIRE(real.actions.size() == 4);
    REQUIRE(real.utilities.size() == 4);
    for (int i = 0; i < 4; ++i) {
      CHECK(real.actions[i] == 0);
      CHECK(real.utilities[i] == 0.0);
    }
  }

  // Utilities must equal the deterministic payoff of the realized actions.
  const auto mixed = ThresholdProfile{
      PolicyKind::low,
      {ThresholdValue(3), ThresholdValue(7), ThresholdValue::never(), ThresholdValue::unbounded()}};
  for (int trial = 0; trial < 100; ++trial) {
    const auto real = sample_realization(mixed, params, rng);
    for (int i = 0; i < 4; ++i) {
      CHECK(real.actions[i] == (mixed.policy(i).activates(real.signals[i]) ? 1 : 0));
      CHECK(real.utilities[i] == deterministic_utility(i, real.actions, real.x, params));
    }
  }

  CHECK_THROWS_AS(sample_realization(mixed, mk(1, 1, 5, 1, 2.0), rng), Error);
}

TEST_CASE("signal moments match the tower rule") {
  // E[Y] = lambda k/theta; Var[Y] = lambda k/theta + lambda^2 k/theta^2.
  auto params = mk(1, 1.0, 5.0, 1, 2.0, 2);
  const auto profile = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue(5), 2);
  RngStream rng(2002, 0);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 0; s < n; ++s) {
    const auto real = sample_realization(profile, params, rng);
    sum += real.signals[0];
    sum_sq += (double)real.signals[0] * real.signals[0];
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  const double want_mean = params.lambda * params.k / params.theta;  // 5
  const double se = std::sqrt(var / n);
  CHECK(std::abs(mean - want_mean) < 3.0 * se);

  // Empirical pmf vs the marginal law: total variation below 0.01.
  std::vector<long> histo(200, 0);
  long overflow = 0;
  RngStream rng2(2003, 0);
  for (int s = 0; s < n; ++s) {
    const auto real = sample_realization(profile, params, rng2);
    for (int i = 0; i < 2; ++i) {
      const int y = real.signals[i];
      if (y < (int)histo.size()) {
        ++histo[y];
      } else {
        ++overflow;
      }
    }
  }
  double tv = (double)overflow / (2.0 * n);
  for (int y = 0; y < (int)histo.size(); ++y) {
    tv += std::abs((double)histo[y] / (2.0 * n) - marginal_signal_pmf(y, params));
  }
  tv *= 0.5;
  CHECK(tv < 0.01);
}

TEST_CASE("empirical_activation_probability endpoints and geometric value") {
  auto params = mk(1, 1.0, 5.0, 1, 2.0, 3);
  const auto on =
      ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue::unbounded(), 3);
  const auto on_est = empirical_activation_probability(on, params, 2000, 7);
  CHECK(on_est.mean == 1.0);
  CHECK(on_est.stderr_of_mean == 0.0);

  const auto off = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue::never(), 3);
  const auto off_est = empirical_activation_probability(off, params, 2000, 7);
  CHECK(off_est.mean == 0.0);

  // Geometric series for k = 1: P(activate) = 1 - (5/6)^6 at tau = 5.
  const auto tau5 = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue(5), 3);
  const auto est = empirical_activation_probability(tau5, params, 200000, kDefaultSeed);
  CHECK(std::abs(est.mean - 0.6651020233196159) < 3.0 * est.stderr_of_mean);
  CHECK(est.stderr_of_mean > 0.0);

  CHECK_THROWS_AS(empirical_activation_probability(tau5, params, 10, 7), Error);
}

TEST_CASE("empirical activation is deterministic across thread counts") {
  auto params = mk(2, 0.5, 2.0, 1, 5.0, 3);
  const auto tau4 = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue(4), 3);
  const auto one = empirical_activation_probability(tau4, params, 100000, 31337, 1);
  const auto four = empirical_activation_probability(tau4, params, 100000, 31337, 4);
  CHECK(one.mean == four.mean);  // bitwise
  CHECK(one.stderr_of_mean == four.stderr_of_mean);
}

TEST_CASE("realized utilities agree with the quadrature expectation") {
  auto params = mk(1, 1.0, 5.0, 1, 2.0, 3);
  const auto profile = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue(5), 3);
  RngStream rng(3003, 0);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 0; s < n; ++s) {
    const auto real = sample_realization(profile, params, rng);
    sum += real.utilities[0];
    sum_sq += real.utilities[0] * real.utilities[0];
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum_sq / n - mean * mean) / n);
  const double want = expected_threshold_utility(0, profile, params);
  CHECK(std::abs(mean - want) < 3.0 * se);
}

TEST_CASE("deviation_audit: identical deviation has exactly zero gain") {
  auto params = mk(1, 1.0, 5.0, 1, 2.0, 2);
  const auto profile = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue(5), 2);
  const auto report = deviation_audit(profile, params, {5}, 5000, 11);
  REQUIRE(report.entries.size() == 2);  // one per agent
  for (const auto& entry : report.entries) {
    CHECK(entry.gain == 0.0);
    CHECK(entry.stderr_of_gain == 0.0);
  }
  CHECK(report.pass);
}

TEST_CASE("deviation_audit validates an equilibrium and rejects a bad profile") {
  auto params = mk(1, 1.0, 5.0, 1, 2.0, 3);
  const auto init = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue(0), 3);
  const auto dynamics = best_response_dynamics(init, params, 50);
  REQUIRE(dynamics.converged);

  std::vector<int> candidates = {-1};  // never
  const auto bound = threshold_upper_bound(params);
  for (int t = 0; t <= bound.tau(); ++t) candidates.push_back(t);

  const auto good = deviation_audit(dynamics.profile, params, candidates, 400000, kDefaultSeed);
  CHECK(good.pass);
  CHECK(good.max_upper99 < 1e-3 * params.g);

  // All-never with a gain above the critical value: activation pays somewhere.
  const auto rest = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue::never(), 3);
  const auto bad = deviation_audit(rest, params, candidates, 400000, kDefaultSeed);
  CHECK(!bad.pass);
  CHECK(bad.max_gain > 0.0);
  REQUIRE(bad.worst.deviation.is_finite());
}

TEST_CASE("deviation_audit determinism across seeds and threads") {
  auto params = mk(2, 0.5, 2.0, 1, 5.0, 2);
  const auto profile = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue(3), 2);
  const std::vector<int> candidates = {-1, 0, 2, 3, 6};
  const auto a = deviation_audit(profile, params, candidates, 100000, 424242, -1.0, 1);
  const auto b = deviation_audit(profile, params, candidates, 100000, 424242, -1.0, 3);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].gain == b.entries[i].gain);  // bitwise
    CHECK(a.entries[i].upper99 == b.entries[i].upper99);
  }
  CHECK(a.epsilon == doctest::Approx(1e-3 * params.g).epsilon(1e-15));
}
