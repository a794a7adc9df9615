#include "gpgame/estimators.hpp"

#include <cmath>
#include <string>

#include "gpgame/distributions.hpp"

namespace gpgame {

const char* policy_kind_name(PolicyKind kind) {
  return kind == PolicyKind::low ? "low" : "high";
}

bool activates(PolicyKind kind, const ThresholdValue& tau, int y) {
  if (tau.is_never()) return false;
  if (tau.is_always()) return true;
  if (tau.is_unbounded()) return kind == PolicyKind::low;
  return kind == PolicyKind::low ? y <= tau.tau() : y > tau.tau();
}

bool ThresholdProfile::homogeneous_value(ThresholdValue* out) const {
  if (taus.empty()) return true;
  for (const auto& t : taus) {
    if (t != taus.front()) return false;
  }
  if (out) *out = taus.front();
  return true;
}

double cost_estimate(int y, const ModelParams& params) {
  if (y < 0) raise(ErrorCode::domain_error, "signal must be >= 0");
  const double rate = params.posterior_rate();
  const int p = params.p;
  if (p + y + params.k <= 0) {
    raise(ErrorCode::domain_error, "cost estimate undefined: p + y + k = " +
                                       std::to_string(p + y + params.k) + " <= 0");
  }
  const double a = static_cast<double>(y) + params.k;  // posterior shape
  if (p == 1) return a / rate;
  if (p == -1) return rate / (a - 1.0);
  return std::exp(log_gamma(a + p) - log_gamma(a) - p * std::log(rate));
}

double belief_low(int y, const ThresholdValue& tau_j, const ModelParams& params) {
  if (y < 0) raise(ErrorCode::domain_error, "signal must be >= 0");
  if (tau_j.is_never()) return 0.0;
  if (tau_j.is_unbounded() || tau_j.is_always()) return 1.0;
  // Left-to-right partial sum: successive taus extend the sum term by term,
  // so belief_low(y, tau+1) - belief_low(y, tau) == cross_belief_pmf(tau+1, y)
  // holds exactly in floating point as well.
  double sum = 0.0;
  for (int ell = 0; ell <= tau_j.tau(); ++ell) sum += cross_belief_pmf(ell, y, params);
  return std::min(sum, 1.0);
}

double belief_high(int y, const ThresholdValue& tau_j, const ModelParams& params) {
  if (tau_j.is_never()) return 0.0;
  if (tau_j.is_always()) return 1.0;
  return 1.0 - belief_low(y, tau_j, params);
}

double belief(PolicyKind kind, int y, const ThresholdValue& tau_j, const ModelParams& params) {
  return kind == PolicyKind::low ? belief_low(y, tau_j, params)
                                 : belief_high(y, tau_j, params);
}

double benefit_estimate(int y, const ThresholdProfile& profile_others,
                        const ModelParams& params) {
  const int n = params.agents();
  if (profile_others.size() != static_cast<std::size_t>(n - 1)) {
    raise(ErrorCode::profile_length_mismatch,
          "expected " + std::to_string(n - 1) + " peer thresholds, got " +
              std::to_string(profile_others.size()));
  }
  ThresholdValue shared;
  double belief_sum = 0.0;
  if (profile_others.homogeneous_value(&shared)) {
    belief_sum = (n - 1) * belief(profile_others.kind, y, shared, params);
  } else {
    for (const auto& tau_j : profile_others.taus) {
      belief_sum += belief(profile_others.kind, y, tau_j, params);
    }
  }
  return params.g / n * (belief_sum + 1.0);
}

}  // namespace gpgame
