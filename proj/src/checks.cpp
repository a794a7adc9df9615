#include "gpgame/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "gpgame/distributions.hpp"
#include "gpgame/equilibrium.hpp"
#include "gpgame/estimators.hpp"
#include "gpgame/math_util.hpp"
#include "gpgame/meanfield.hpp"
#include "gpgame/quadrature.hpp"
#include "gpgame/rng.hpp"

namespace gpgame {
namespace {

constexpr std::size_t kMaxFailureDetails = 20;

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  template <class... Args>
  void check(bool ok, const char* fmt, Args... args) {
    ++result_.n_checks;
    if (ok) return;
    ++result_.n_failed;
    if (result_.failures.size() < kMaxFailureDetails) {
      char buf[320];
      std::snprintf(buf, sizeof(buf), fmt, args...);
      result_.failures.emplace_back(buf);
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

/// 27-point (k, theta, lambda) lattice spanning tight and diffuse priors and
/// weak to strong observation channels; p and g are set per check.
std::vector<ModelParams> state_grid() {
  std::vector<ModelParams> grid;
  for (int k : {1, 2, 5}) {
    for (double theta : {0.5, 1.1, 3.0}) {
      for (double lambda : {1.0, 5.0, 10.0}) {
        grid.push_back(ModelParams{k, theta, lambda, 1, 1.0, std::nullopt});
      }
    }
  }
  return grid;
}

/// E[X^p] for X ~ Gamma(k, theta): Gamma(k+p)/Gamma(k) / theta^p.
double state_cost_moment(const ModelParams& params) {
  return std::exp(log_gamma(params.k + params.p) - log_gamma(params.k)) /
         ipow(params.theta, params.p);
}

SuiteResult suite_monotonicity(const CheckOptions& options) {
  Recorder rec("monotonicity");
  const double flip = options.inject_cost_sign_flip ? -1.0 : 1.0;
  for (const auto& base : state_grid()) {
    ModelParams params = base;
    // Cost estimates are strictly monotone in the signal: increasing for
    // p > 0, decreasing for p < 0 once past the Gamma pole region.
    for (int p : {1, 2, 3, -1, -2}) {
      params.p = p;
      const int y_lo = std::max(0, 1 - p - params.k);
      double prev = flip * cost_estimate(y_lo, params);
      for (int y = y_lo + 1; y <= 500; ++y) {
        const double cur = flip * cost_estimate(y, params);
        rec.check(p > 0 ? cur > prev : cur < prev,
                  "cost not %s: k=%d theta=%g lambda=%g p=%d y=%d",
                  p > 0 ? "increasing" : "decreasing", params.k, params.theta, params.lambda, p,
                  y);
        prev = cur;
      }
    }
    // Peer-activation beliefs are strictly monotone in the observed signal:
    // P(Y_j <= tau | y) falls and P(Y_j > tau | y) rises with y.  Strictness
    // is only checkable away from the lattice edges -- once a belief is within
    // 1e-12 of 0 or 1 the double grid can no longer separate adjacent values,
    // so there the comparison relaxes to weak.
    params = base;
    constexpr int kTauHi = 50;
    constexpr double kEdge = 1e-12;
    auto strictly_between = [](double a, double b) {
      return a > kEdge && a < 1.0 - kEdge && b > kEdge && b < 1.0 - kEdge;
    };
    std::vector<double> prev_low, prev_high;
    std::vector<double> low(kTauHi + 1), high(kTauHi + 1);
    for (int y = 0; y <= 300; ++y) {
      for (int t = 0; t <= kTauHi; ++t) {
        low[t] = belief_low(y, ThresholdValue(t), params);
        high[t] = belief_high(y, ThresholdValue(t), params);
      }
      for (int t = 0; t < kTauHi; ++t) {
        rec.check(low[t + 1] >= low[t],
                  "belief decreasing in tau: k=%d theta=%g lambda=%g y=%d tau=%d", params.k,
                  params.theta, params.lambda, y, t);
      }
      if (y > 0) {
        for (int t = 0; t <= kTauHi; ++t) {
          // Near the lattice edges the true gaps fall below one ulp of 1.0,
          // so the rounded partial sums may land in either order; there the
          // comparison is weak and absorbs an absolute kEdge slack.
          const bool ok_low = strictly_between(low[t], prev_low[t])
                                  ? low[t] < prev_low[t]
                                  : low[t] <= prev_low[t] + kEdge;
          rec.check(ok_low, "belief_low not decreasing in y: k=%d theta=%g lambda=%g y=%d tau=%d",
                    params.k, params.theta, params.lambda, y, t);
          const bool ok_high = strictly_between(high[t], prev_high[t])
                                   ? high[t] > prev_high[t]
                                   : high[t] >= prev_high[t] - kEdge;
          rec.check(ok_high,
                    "belief_high not increasing in y: k=%d theta=%g lambda=%g y=%d tau=%d",
                    params.k, params.theta, params.lambda, y, t);
        }
      }
      prev_low = low;
      prev_high = high;
    }
    // Tail limits: far above every peer threshold the cross beliefs vanish
    // and the benefit estimate collapses to the guaranteed share g/N.
    constexpr int kFarSignal = 1000;
    constexpr double kLimitTol = 1e-6;
    for (int t : {0, 10, 50}) {
      const double low = belief_low(kFarSignal, ThresholdValue(t), params);
      rec.check(low < kLimitTol, "belief_low limit: k=%d theta=%g lambda=%g tau=%d value=%g",
                params.k, params.theta, params.lambda, t, low);
      const double high = belief_high(kFarSignal, ThresholdValue(t), params);
      rec.check(high > 1.0 - kLimitTol,
                "belief_high limit: k=%d theta=%g lambda=%g tau=%d value=%g", params.k,
                params.theta, params.lambda, t, high);
    }
    ModelParams bparams = base;
    bparams.g = 2.0;
    bparams.n_agents = 3;
    const auto low_peers = ThresholdProfile::homogeneous(PolicyKind::low, ThresholdValue(10), 2);
    const double b_low = benefit_estimate(kFarSignal, low_peers, bparams);
    rec.check(std::abs(b_low - bparams.g / 3.0) <= kLimitTol * bparams.g,
              "low benefit limit: k=%d theta=%g lambda=%g value=%g", bparams.k, bparams.theta,
              bparams.lambda, b_low);
    const auto high_peers =
        ThresholdProfile::homogeneous(PolicyKind::high, ThresholdValue(10), 2);
    const double b_high = benefit_estimate(kFarSignal, high_peers, bparams);
    rec.check(std::abs(b_high - bparams.g) <= kLimitTol * bparams.g,
              "high benefit limit: k=%d theta=%g lambda=%g value=%g", bparams.k, bparams.theta,
              bparams.lambda, b_high);
  }
  return rec.take();
}

SuiteResult suite_potential(const CheckOptions& options) {
  Recorder rec("potential");
  RngStream rng(options.seed, 0xF00D);
  // Single-flip identity of both potential forms on random complete-information
  // instances; the two forms must also differ by the profile-independent offset
  // (N/2) x^p - g/2.
  for (int trial = 0; trial < 1000; ++trial) {
    ModelParams params;
    params.k = 1 + static_cast<int>(rng.uniform01() * 4);
    params.theta = 0.3 + 3.7 * rng.uniform01();
    params.lambda = 0.3 + 3.7 * rng.uniform01();
    constexpr int kExponents[] = {-2, -1, 1, 2, 3};
    params.p = kExponents[static_cast<int>(rng.uniform01() * 5)];
    params.g = 0.2 + 7.8 * rng.uniform01();
    const int n = 2 + static_cast<int>(rng.uniform01() * 5);
    params.n_agents = n;
    const double x = gamma_sample(params.k, params.theta, rng);
    ActionProfile a(n);
    for (auto& bit : a) bit = rng.uniform01() < 0.5 ? 1 : 0;
    const int i = static_cast<int>(rng.uniform01() * n);
    ActionProfile d = a;
    d[i] = 1 - d[i];
    const double du =
        deterministic_utility(i, d, x, params) - deterministic_utility(i, a, x, params);
    const double phi_a = deterministic_potential(a, x, params);
    const double phi_d = deterministic_potential(d, x, params);
    const double cong_a = deterministic_potential_congestion(a, x, params);
    const double cong_d = deterministic_potential_congestion(d, x, params);
    const double scale =
        std::max({1.0, std::abs(phi_a), std::abs(phi_d), std::abs(cong_a), std::abs(du)});
    rec.check(std::abs((phi_d - phi_a) - du) <= 1e-12 * scale,
              "pairwise flip identity: trial=%d residual=%g", trial,
              std::abs((phi_d - phi_a) - du));
    rec.check(std::abs((cong_d - cong_a) - du) <= 1e-12 * scale,
              "congestion flip identity: trial=%d residual=%g", trial,
              std::abs((cong_d - cong_a) - du));
    const double offset = 0.5 * n * ipow(x, params.p) - 0.5 * params.g;
    rec.check(std::abs((phi_a - cong_a) - offset) <= 1e-12 * scale,
              "form offset: trial=%d residual=%g", trial, std::abs((phi_a - cong_a) - offset));
  }
  // Expected single-deviation identity on threshold profiles: a unilateral
  // threshold change moves the expected potential by the deviator's expected
  // utility change.
  for (int trial = 0; trial < 200; ++trial) {
    ModelParams params;
    constexpr int kExponents[] = {1, 2, 3, -1, -2};
    params.p = kExponents[static_cast<int>(rng.uniform01() * 5)];
    params.k = std::max(1, 1 - params.p) + static_cast<int>(rng.uniform01() * 3);
    params.theta = 0.4 + 3.0 * rng.uniform01();
    params.lambda = 0.4 + 3.0 * rng.uniform01();
    params.g = 0.3 + 6.0 * rng.uniform01();
    const int n = 2 + static_cast<int>(rng.uniform01() * 4);
    params.n_agents = n;
    const PolicyKind kind = params.p > 0 ? PolicyKind::low : PolicyKind::high;
    auto random_tau = [&]() -> ThresholdValue {
      const double u = rng.uniform01();
      if (u < 0.1) return ThresholdValue::never();
      if (u < 0.2) return ThresholdValue::unbounded();
      return ThresholdValue(static_cast<int>(rng.uniform01() * 16));
    };
    ThresholdProfile prof{kind, {}};
    for (int j = 0; j < n; ++j) prof.taus.push_back(random_tau());
    const int i = static_cast<int>(rng.uniform01() * n);
    ThresholdProfile dev = prof;
    dev.taus[i] = random_tau();
    const double du = expected_threshold_utility(i, dev, params) -
                      expected_threshold_utility(i, prof, params);
    const double phi_base = expected_potential(prof, params);
    const double phi_dev = expected_potential(dev, params);
    const double scale = std::max({1.0, std::abs(phi_base), std::abs(phi_dev)});
    rec.check(std::abs((phi_dev - phi_base) - du) <= 1e-6 * scale,
              "expected deviation identity: trial=%d residual=%g scale=%g", trial,
              std::abs((phi_dev - phi_base) - du), scale);
  }
  // Closed-form anchor: with nobody ever active the expected potential is
  // (N/2) E[X^p] - g/2.
  for (const auto& base : {ModelParams{1, 1.0, 5.0, 1, 2.0, 4},
                           ModelParams{2, 0.5, 2.0, 2, 7.5, 3},
                           ModelParams{3, 0.1, 1.0, 1, 40.0, 5},
                           ModelParams{2, 2.0, 1.0, -1, 1.5, 2},
                           ModelParams{4, 1.3, 0.7, -2, 0.8, 6}}) {
    const int n = *base.n_agents;
    const PolicyKind kind = base.p > 0 ? PolicyKind::low : PolicyKind::high;
    const auto prof = ThresholdProfile::homogeneous(kind, ThresholdValue::never(), n);
    const double phi = expected_potential(prof, base);
    const double expect = 0.5 * n * state_cost_moment(base) - 0.5 * base.g;
    rec.check(std::abs(phi - expect) <= 1e-6 * std::max(1.0, std::abs(expect)),
              "all-never potential: k=%d p=%d phi=%g expected=%g", base.k, base.p, phi, expect);
  }
  return rec.take();
}

SuiteResult suite_nash(const CheckOptions& options) {
  Recorder rec("nash");
  RngStream rng(options.seed, 0xBEEF);
  const ModelParams sets[] = {ModelParams{1, 1.0, 5.0, 1, 2.0, std::nullopt},
                              ModelParams{2, 0.5, 2.0, 1, 7.5, std::nullopt},
                              ModelParams{3, 0.1, 1.0, 1, 40.0, std::nullopt},
                              ModelParams{2, 1.0, 1.0, 2, 3.0, std::nullopt},
                              ModelParams{2, 2.0, 1.0, -1, 1.5, std::nullopt}};
  for (int n = 2; n <= 6; ++n) {
    for (const auto& base : sets) {
      ModelParams params = base;
      params.n_agents = n;
      for (int rep = 0; rep < 20; ++rep) {
        const double x = gamma_sample(params.k, params.theta, rng);
        const auto nash = pure_nash_set(x, params);
        rec.check(!nash.empty(), "empty nash set: n=%d k=%d p=%d x=%g", n, params.k, params.p,
                  x);
        // An interior head-count m would need (g/N)(m+1) <= x^p <= (g/N) m,
        // which is impossible, so only the symmetric extremes can be Nash.
        const ActionProfile all_off(n, 0), all_on(n, 1);
        for (const auto& prof : nash) {
          rec.check(prof == all_off || prof == all_on,
                    "asymmetric nash profile: n=%d k=%d p=%d x=%g", n, params.k, params.p, x);
        }
        // Everyone playing the omniscient action is an equilibrium: active
        // agents hold the full gain g >= x^p, inactive ones face g/N < x^p.
        const ActionProfile omni(n, omniscient_action(x, params));
        rec.check(std::find(nash.begin(), nash.end(), omni) != nash.end(),
                  "omniscient profile not nash: n=%d k=%d p=%d x=%g", n, params.k, params.p, x);
        // The game admits an exact potential, so its maximizer is a Nash
        // profile; find it by brute force.
        ActionProfile best;
        double best_phi = -std::numeric_limits<double>::infinity();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          ActionProfile prof(n);
          for (int j = 0; j < n; ++j) prof[j] = static_cast<int>((mask >> j) & 1u);
          const double phi = deterministic_potential_congestion(prof, x, params);
          if (phi > best_phi) {
            best_phi = phi;
            best = prof;
          }
        }
        rec.check(std::find(nash.begin(), nash.end(), best) != nash.end(),
                  "potential maximizer not nash: n=%d k=%d p=%d x=%g", n, params.k, params.p, x);
      }
    }
  }
  return rec.take();
}

SuiteResult suite_normalization(const CheckOptions&) {
  Recorder rec("normalization");
  for (const auto& base : state_grid()) {
    // The signal marginal and every cross belief are probability mass
    // functions; their truncated sums must reach 1.
    double sum = 0.0;
    const int bound = marginal_support_bound(base, 1e-12);
    for (int y = 0; y <= bound; ++y) sum += marginal_signal_pmf(y, base);
    rec.check(std::abs(sum - 1.0) <= 1e-8, "marginal pmf sum: k=%d theta=%g lambda=%g sum=%.12g",
              base.k, base.theta, base.lambda, sum);
    for (int y : {0, 3, 17}) {
      double csum = 0.0;
      const int cbound = cross_belief_support_bound(y, base, 1e-12);
      for (int ell = 0; ell <= cbound; ++ell) csum += cross_belief_pmf(ell, y, base);
      rec.check(std::abs(csum - 1.0) <= 1e-8,
                "cross pmf sum: k=%d theta=%g lambda=%g y=%d sum=%.12g", base.k, base.theta,
                base.lambda, y, csum);
      const double tail_belief = belief_low(y, ThresholdValue(cbound), base);
      rec.check(std::abs(tail_belief - std::min(csum, 1.0)) <= 1e-12,
                "belief partial sum: k=%d theta=%g lambda=%g y=%d", base.k, base.theta,
                base.lambda, y);
    }
  }
  // Poisson cdf agrees with pmf prefix sums on both evaluation paths, and the
  // grid scan reproduces the scalar cdf bit for bit.
  for (double rate : {0.3, 7.2, 120.0, 499.9, 501.3, 2000.0}) {
    const int tau_hi = static_cast<int>(rate + 8.0 * std::sqrt(rate) + 10.0);
    std::vector<int> taus(tau_hi + 1);
    for (int t = 0; t <= tau_hi; ++t) taus[t] = t;
    std::vector<double> grid(taus.size());
    poisson_cdf_grid(taus.data(), taus.size(), rate, grid.data());
    double prefix = 0.0;
    for (int y = 0; y <= tau_hi; ++y) {
      prefix += poisson_pmf(y, rate);
      if (y % 29 == 0 || y == tau_hi) {
        const double cdf = poisson_cdf(y, rate);
        rec.check(std::abs(cdf - std::min(prefix, 1.0)) <= 1e-11,
                  "cdf vs pmf prefix: rate=%g tau=%d cdf=%.15g prefix=%.15g", rate, y, cdf,
                  prefix);
        rec.check(grid[y] == cdf, "grid/scalar cdf mismatch: rate=%g tau=%d", rate, y);
      }
    }
  }
  // Mixture identities: integrating the Poisson mass against the Gamma prior
  // (or a posterior) reproduces the closed-form marginal and cross beliefs.
  const ModelParams mix_sets[] = {ModelParams{1, 1.0, 5.0, 1, 1.0, std::nullopt},
                                  ModelParams{2, 0.5, 2.0, 1, 1.0, std::nullopt},
                                  ModelParams{3, 0.1, 1.0, 1, 1.0, std::nullopt},
                                  ModelParams{5, 3.0, 10.0, 1, 1.0, std::nullopt}};
  for (const auto& params : mix_sets) {
    const double x_hi = gamma_tail_cutoff(params.k, params.theta, 1e-14);
    for (int y : {0, 2, 7, 20}) {
      const double direct = marginal_signal_pmf(y, params);
      const auto mixed = integrate_adaptive(
          [&](double x) {
            const double r = params.lambda * x;
            return r > 0.0 ? gamma_pdf(x, params.k, params.theta) * poisson_pmf(y, r) : 0.0;
          },
          0.0, x_hi, 1e-10, 1e-16, 2000);
      rec.check(std::abs(mixed.value - direct) <= 1e-8 * direct + 1e-14,
                "marginal mixture: k=%d theta=%g lambda=%g y=%d direct=%g mixed=%g", params.k,
                params.theta, params.lambda, y, direct, mixed.value);
    }
    const double post_rate = params.posterior_rate();
    for (int y : {0, 4}) {
      const auto post = posterior_of_state(y, params);
      const double post_hi = gamma_tail_cutoff(y + params.k, post_rate, 1e-14);
      for (int ell : {0, 5}) {
        const double direct = cross_belief_pmf(ell, y, params);
        const auto mixed = integrate_adaptive(
            [&](double x) {
              const double r = params.lambda * x;
              return r > 0.0 ? gamma_pdf(x, post.shape, post.rate) * poisson_pmf(ell, r) : 0.0;
            },
            0.0, post_hi, 1e-10, 1e-16, 2000);
        rec.check(std::abs(mixed.value - direct) <= 1e-8 * direct + 1e-14,
                  "cross mixture: k=%d theta=%g lambda=%g y=%d ell=%d direct=%g mixed=%g",
                  params.k, params.theta, params.lambda, y, ell, direct, mixed.value);
      }
    }
    // Prior density integrates to 1 over the truncated support.
    const auto mass = integrate_adaptive(
        [&](double x) { return gamma_pdf(x, params.k, params.theta); }, 0.0, x_hi, 1e-10, 1e-16,
        2000);
    rec.check(std::abs(mass.value - 1.0) <= 1e-8, "prior normalization: k=%d theta=%g mass=%.12g",
              params.k, params.theta, mass.value);
  }
  return rec.take();
}

SuiteResult suite_oracles(const CheckOptions& options) {
  Recorder rec("oracles");
  // Conjugacy by forward simulation: the empirical conditional mean of the
  // state given each signal must match the Gamma posterior mean, and the
  // empirical signal histogram must match the closed-form marginal in total
  // variation (threshold calibrated for 1e6 draws).
  const long n_pairs = std::max<long>(options.mc_samples, 1000000);
  const ModelParams conj_sets[] = {benchmark_rows()[0].params, benchmark_rows()[3].params};
  for (std::size_t set = 0; set < 2; ++set) {
    const ModelParams& params = conj_sets[set];
    RngStream rng(options.seed, 0xC0DE + set);
    const int bound = marginal_support_bound(params, 1e-12);
    std::vector<long> count(bound + 1, 0);
    std::vector<double> sum_x(bound + 1, 0.0);
    long overflow = 0;
    for (long s = 0; s < n_pairs; ++s) {
      const double x = gamma_sample(params.k, params.theta, rng);
      const long y = poisson_sample(params.lambda * x, rng);
      if (y <= bound) {
        ++count[y];
        sum_x[y] += x;
      } else {
        ++overflow;
      }
    }
    const double rate = params.posterior_rate();
    for (int y : {0, 1, 3, 10}) {
      if (y > bound || count[y] < 1000) continue;
      const double mean = sum_x[y] / static_cast<double>(count[y]);
      const double expect = (y + params.k) / rate;
      // Posterior sd is sqrt(y+k)/rate, so the conditional-mean standard
      // error follows without an empirical variance pass.
      const double se = std::sqrt(static_cast<double>(y + params.k)) / rate /
                        std::sqrt(static_cast<double>(count[y]));
      rec.check(std::abs(mean - expect) <= 3.0 * se,
                "conjugacy mean: k=%d lambda=%g y=%d mean=%g expected=%g se=%g", params.k,
                params.lambda, y, mean, expect, se);
    }
    double tv = 0.0;
    for (int y = 0; y <= bound; ++y) {
      tv += std::abs(static_cast<double>(count[y]) / n_pairs - marginal_signal_pmf(y, params));
    }
    tv = 0.5 * (tv + static_cast<double>(overflow) / n_pairs);
    rec.check(tv < 0.01, "signal histogram TV: k=%d lambda=%g tv=%g", params.k, params.lambda,
              tv);
  }
  // Mean-field potential endpoints against closed forms.  At tau = 0 the
  // activation probability is exp(-lambda X) and every term integrates
  // against the Gamma prior in closed form; at tau -> infinity it is 1.
  for (const auto& row : benchmark_rows()) {
    const ModelParams& params = row.params;
    const double moment_ratio =
        std::exp(log_gamma(params.k + params.p) - log_gamma(params.k));
    const double e_xp = moment_ratio / ipow(params.theta, params.p);
    const double e_exp_xp = moment_ratio * ipow(params.theta, params.k) /
                            ipow(params.theta + params.lambda, params.k + params.p);
    const double v0 =
        0.5 * params.g *
            ipow(params.theta / (params.theta + 2.0 * params.lambda), params.k) -
        e_exp_xp + 0.5 * e_xp;
    const double v_inf = 0.5 * (params.g - e_xp);
    const auto est0 = mfpf_estimate(0, params, options.mc_samples, options.seed,
                                    options.n_threads);
    rec.check(std::abs(est0.mean - v0) <= 3.0 * est0.stderr_of_mean,
              "mfpf endpoint tau=0: k=%d g=%g est=%g expected=%g se=%g", params.k, params.g,
              est0.mean, v0, est0.stderr_of_mean);
    const auto est_inf = mfpf_estimate(10000, params, options.mc_samples, options.seed,
                                       options.n_threads);
    rec.check(std::abs(est_inf.mean - v_inf) <= 3.0 * est_inf.stderr_of_mean,
              "mfpf endpoint tau=1e4: k=%d g=%g est=%g expected=%g se=%g", params.k, params.g,
              est_inf.mean, v_inf, est_inf.stderr_of_mean);
  }
  return rec.take();
}

}  // namespace

bool CheckReport::passed() const noexcept {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.passed(); });
}

int CheckReport::total_checks() const noexcept {
  int total = 0;
  for (const auto& s : suites) total += s.n_checks;
  return total;
}

int CheckReport::total_failed() const noexcept {
  int total = 0;
  for (const auto& s : suites) total += s.n_failed;
  return total;
}

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = {"monotonicity", "potential", "nash",
                                                 "normalization", "oracles"};
  return names;
}

SuiteResult run_check_suite(const std::string& name, const CheckOptions& options) {
  if (name == "monotonicity") return suite_monotonicity(options);
  if (name == "potential") return suite_potential(options);
  if (name == "nash") return suite_nash(options);
  if (name == "normalization") return suite_normalization(options);
  if (name == "oracles") return suite_oracles(options);
  raise(ErrorCode::parse_error, "unknown check suite: " + name);
}

CheckReport run_checks(const std::vector<std::string>& names, const CheckOptions& options) {
  CheckReport report;
  const auto& run = names.empty() ? check_suite_names() : names;
  for (const auto& name : run) report.suites.push_back(run_check_suite(name, options));
  return report;
}

}  // namespace gpgame
