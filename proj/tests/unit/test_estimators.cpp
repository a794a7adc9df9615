#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gpgame/distributions.hpp"
#include "gpgame/error.hpp"
#include "gpgame/estimators.hpp"
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

TEST_CASE("threshold values and activation semantics") {
  const ThresholdValue five(5);
  CHECK(five.is_finite());
  CHECK(five.tau() == 5);
  CHECK(five == ThresholdValue(5));
  CHECK(five != ThresholdValue(6));
  CHECK_THROWS_AS(ThresholdValue(-1), Error);
  CHECK_THROWS_AS(ThresholdValue::never().tau(), Error);

  // Low activates on small signals, High on large ones.
  CHECK(activates(PolicyKind::low, five, 0));
  CHECK(activates(PolicyKind::low, five, 5));
  CHECK(!activates(PolicyKind::low, five, 6));
  CHECK(!activates(PolicyKind::high, five, 5));
  CHECK(activates(PolicyKind::high, five, 6));

  for (PolicyKind kind : {PolicyKind::low, PolicyKind::high}) {
    CHECK(!activates(kind, ThresholdValue::never(), 0));
    CHECK(activates(kind, ThresholdValue::always(), 0));
  }
  // Unbounded is the tau -> infinity limit: everything under Low, nothing under High.
  CHECK(activates(PolicyKind::low, ThresholdValue::unbounded(), 1000));
  CHECK(!activates(PolicyKind::high, ThresholdValue::unbounded(), 1000));
}

TEST_CASE("cost_estimate closed forms for p = 1 and p = -1") {
  // (y+k)/(lambda+theta) at y=0, k=1, theta=1, lambda=5.
  CHECK(cost_estimate(0, mk(1, 1.0, 5.0, 1, 1.0)) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  // (lambda+theta)/(y+k-1) at y=0, k=2, theta=0.1, lambda=3.
  CHECK(cost_estimate(0, mk(2, 0.1, 3.0, -1, 1.0)) == doctest::Approx(3.1).epsilon(1e-15));
  // A later signal under p=1: (4+1)/6.
  CHECK(cost_estimate(4, mk(1, 1.0, 5.0, 1, 1.0)) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("cost_estimate general exponent matches the Gamma-ratio oracle") {
  // Gamma(7)/Gamma(5)/3.1^2 = 30/9.61.
  CHECK(cost_estimate(4, mk(1, 0.1, 3.0, 2, 1.0)) ==
        doctest::Approx(3.121748178980229).epsilon(1e-13));

  for (int p : {2, 3, -2}) {
    for (int y : {0, 2, 11, 60}) {
      const auto params = mk(3, 0.7, 2.2, p, 1.0);
      if (p + y + params.k <= 0) continue;
      const double want =
          (double)oracle::gamma_power_moment(y + params.k, params.posterior_rate(), p);
      CHECK(cost_estimate(y, params) == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("cost_estimate rejects the Gamma pole region") {
  // p + y + k <= 0: undefined posterior moment.
  CHECK_THROWS_AS(cost_estimate(0, mk(1, 1.0, 1.0, -3, 1.0)), Error);
  CHECK_THROWS_AS(cost_estimate(1, mk(1, 1.0, 1.0, -3, 1.0)), Error);
  CHECK_NOTHROW(cost_estimate(3, mk(1, 1.0, 1.0, -3, 1.0)));
  CHECK_THROWS_AS(cost_estimate(-1, mk(1, 1.0, 1.0, 1, 1.0)), Error);
}

TEST_CASE("belief_low closed points and sentinels") {
  const auto row1 = mk(1, 1.0, 5.0, 1, 1.0);
  CHECK(belief_low(0, ThresholdValue(0), row1) == doctest::Approx(6.0 / 11.0).epsilon(1e-14));
  CHECK(belief_low(17, ThresholdValue::unbounded(), row1) == 1.0);
  CHECK(belief_low(17, ThresholdValue::always(), row1) == 1.0);
  CHECK(belief_low(17, ThresholdValue::never(), row1) == 0.0);

  // Partial-sum oracle at y=3, tau=5, k=2, theta=0.5, lambda=2.
  const auto mid = mk(2, 0.5, 2.0, 1, 1.0);
  CHECK(belief_low(3, ThresholdValue(5), mid) ==
        doctest::Approx(0.7501297253279756).epsilon(1e-13));
  const long double q = mid.lambda / (mid.theta + 2.0 * mid.lambda);
  CHECK(belief_low(3, ThresholdValue(5), mid) ==
        doctest::Approx((double)oracle::nb_cdf(5, 2 + 3, q)).epsilon(1e-13));
}

TEST_CASE("belief_high complements belief_low exactly") {
  const auto row1 = mk(1, 1.0, 5.0, 1, 1.0);
  CHECK(belief_high(0, ThresholdValue(0), row1) == doctest::Approx(5.0 / 11.0).epsilon(1e-14));
  CHECK(belief_high(3, ThresholdValue::unbounded(), row1) == 0.0);
  CHECK(belief_high(3, ThresholdValue::always(), row1) == 1.0);
  CHECK(belief_high(3, ThresholdValue::never(), row1) == 0.0);
  for (int y : {0, 2, 9}) {
    for (int tau : {0, 1, 6}) {
      const double lo = belief_low(y, ThresholdValue(tau), row1);
      const double hi = belief_high(y, ThresholdValue(tau), row1);
      CHECK(lo + hi == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
  CHECK(belief(PolicyKind::low, 2, ThresholdValue(3), row1) ==
        belief_low(2, ThresholdValue(3), row1));
  CHECK(belief(PolicyKind::high, 2, ThresholdValue(3), row1) ==
        belief_high(2, ThresholdValue(3), row1));
}

TEST_CASE("belief_low increments by the cross pmf as tau grows") {
  const auto params = mk(2, 0.5, 2.0, 1, 1.0);
  for (int y : {0, 4}) {
    for (int tau = 0; tau < 12; ++tau) {
      const double step = belief_low(y, ThresholdValue(tau + 1), params) -
                          belief_low(y, ThresholdValue(tau), params);
      CHECK(step == doctest::Approx(cross_belief_pmf(tau + 1, y, params)).epsilon(1e-12));
    }
  }
}

TEST_CASE("benefit_estimate closed points") {
  auto params = mk(1, 1.0, 5.0, 1, 2.0, 3);

  // All peers certain to activate: full benefit g.
  const auto all_on = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue::unbounded(), 2);
  CHECK(benefit_estimate(0, all_on, params) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(benefit_estimate(40, all_on, params) == doctest::Approx(2.0).epsilon(1e-15));

  // No peer ever activates: the agent only pays itself, g/N.
  const auto all_off = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue::never(), 2);
  CHECK(benefit_estimate(0, all_off, params) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  // Two peers at tau=0, y=0: (g/N)(2 pi + 1) with pi = 6/11, i.e. 46/33.
  const auto peers0 = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue(0), 2);
  CHECK(benefit_estimate(0, peers0, params) == doctest::Approx(46.0 / 33.0).epsilon(1e-14));
}

TEST_CASE("benefit_estimate heterogeneous profile equals the belief sum") {
  auto params = mk(2, 0.5, 2.0, 1, 3.0, 4);
  ThresholdProfile others{PolicyKind::low,
                          {ThresholdValue(0), ThresholdValue(4), ThresholdValue::unbounded()}};
  for (int y : {0, 3, 12}) {
    const double direct =
        params.g / 4.0 *
        (belief_low(y, ThresholdValue(0), params) + belief_low(y, ThresholdValue(4), params) +
         1.0 + 1.0);
    CHECK(benefit_estimate(y, others, params) == doctest::Approx(direct).epsilon(1e-14));
  }
  // Homogeneous fast path agrees with the general loop.
  ThresholdProfile homog{PolicyKind::low,
                         {ThresholdValue(4), ThresholdValue(4), ThresholdValue(4)}};
  const double fast = benefit_estimate(2, homog, params);
  const double manual =
      params.g / 4.0 * (3.0 * belief_low(2, ThresholdValue(4), params) + 1.0);
  CHECK(fast == doctest::Approx(manual).epsilon(1e-15));
}

TEST_CASE("benefit_estimate validates the peer count") {
  auto params = mk(1, 1.0, 5.0, 1, 2.0, 3);
  const auto too_few = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue(0), 1);
  CHECK_THROWS_AS(benefit_estimate(0, too_few, params), Error);
  // Infinite population has no per-peer profile.
  auto inf = mk(1, 1.0, 5.0, 1, 2.0);
  const auto two = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue(0), 2);
  CHECK_THROWS_AS(benefit_estimate(0, two, inf), Error);
}

TEST_CASE("benefit_estimate stays inside [g/N, g] and is monotone") {
  auto params = mk(1, 1.0, 5.0, 1, 2.0, 3);
  const auto peers = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue(2), 2);
  double prev = benefit_estimate(0, peers, params);
  for (int y = 1; y <= 120; ++y) {
    const double b = benefit_estimate(y, peers, params);
    CHECK(b <= prev);  // Low-kind benefit decreases in the signal
    CHECK(b >= params.g / 3.0 - 1e-15);
    CHECK(b <= params.g + 1e-15);
    prev = b;
  }

  auto hi_params = mk(2, 1.0, 2.0, -1, 2.0, 3);
  const auto hi_peers = ThresholdProfile::homogeneous(PolicyKind::high, ThresholdValue(2), 2);
  prev = benefit_estimate(0, hi_peers, hi_params);
  for (int y = 1; y <= 120; ++y) {
    const double b = benefit_estimate(y, hi_peers, hi_params);
    CHECK(b >= prev);  // High-kind benefit increases in the signal
    prev = b;
  }
}

TEST_CASE("profiles reject mixed threshold kinds implicitly via single kind") {
  // The profile type carries one kind for all agents by construction; check
  // homogeneous_value reporting.
  ThresholdProfile profile{PolicyKind::low, {ThresholdValue(3), ThresholdValue(3)}};
  ThresholdValue value;
  CHECK(profile.homogeneous_value(&value));
  CHECK(value == ThresholdValue(3));
  profile.taus[1] = ThresholdValue(4);
  CHECK(!profile.homogeneous_value());
}
