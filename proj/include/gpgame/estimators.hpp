#pragma once

#include <cstddef>
#include <vector>

#include "gpgame/params.hpp"

namespace gpgame {

/// Threshold policy family: Low activates on small signals (y <= tau, used when
/// p > 0), High activates on large signals (y > tau, used when p < 0).
enum class PolicyKind { low, high };

const char* policy_kind_name(PolicyKind kind);

/// One threshold slot.  Besides a finite tau the lattice has three distinguished
/// points: never (empty activation set), always (full activation set), and
/// unbounded (the tau -> infinity limit: full set under Low, empty under High).
class ThresholdValue {
 public:
  ThresholdValue() : tag_(Tag::finite), tau_(0) {}
  ThresholdValue(int tau) : tag_(Tag::finite), tau_(tau) {
    if (tau < 0) raise(ErrorCode::domain_error, "finite threshold must be >= 0");
  }

  static ThresholdValue never() { return ThresholdValue(Tag::never); }
  static ThresholdValue unbounded() { return ThresholdValue(Tag::unbounded); }
  static ThresholdValue always() { return ThresholdValue(Tag::always); }

  bool is_never() const noexcept { return tag_ == Tag::never; }
  bool is_unbounded() const noexcept { return tag_ == Tag::unbounded; }
  bool is_always() const noexcept { return tag_ == Tag::always; }
  bool is_finite() const noexcept { return tag_ == Tag::finite; }

  int tau() const {
    if (!is_finite()) raise(ErrorCode::domain_error, "threshold has no finite tau");
    return tau_;
  }

  friend bool operator==(const ThresholdValue& a, const ThresholdValue& b) noexcept {
    return a.tag_ == b.tag_ && (a.tag_ != Tag::finite || a.tau_ == b.tau_);
  }
  friend bool operator!=(const ThresholdValue& a, const ThresholdValue& b) noexcept {
    return !(a == b);
  }

 private:
  enum class Tag { never, finite, unbounded, always };
  explicit ThresholdValue(Tag tag) : tag_(tag), tau_(0) {}
  Tag tag_;
  int tau_;
};

/// Whether a policy of the given kind and threshold activates on signal y.
bool activates(PolicyKind kind, const ThresholdValue& tau, int y);

struct ThresholdPolicy {
  PolicyKind kind = PolicyKind::low;
  ThresholdValue tau;
  bool activates(int y) const { return gpgame::activates(kind, tau, y); }
};

/// Per-agent thresholds, all of one kind (mixed kinds break the monotonicity
/// every equilibrium argument rests on, so they are rejected at construction).
struct ThresholdProfile {
  PolicyKind kind = PolicyKind::low;
  std::vector<ThresholdValue> taus;

  std::size_t size() const noexcept { return taus.size(); }
  ThresholdPolicy policy(std::size_t i) const { return {kind, taus.at(i)}; }

  static ThresholdProfile homogeneous(PolicyKind kind, const ThresholdValue& tau, std::size_t n) {
    return {kind, std::vector<ThresholdValue>(n, tau)};
  }

  /// True when every slot holds the same value.
  bool homogeneous_value(ThresholdValue* out = nullptr) const;

  friend bool operator==(const ThresholdProfile& a, const ThresholdProfile& b) noexcept {
    return a.kind == b.kind && a.taus == b.taus;
  }
};

/// Posterior mean of the activation cost, E[X^p | Y=y]:
/// Gamma(p+y+k) / (Gamma(y+k) * (lambda+theta)^p), log-space for general p,
/// with the p = 1 and p = -1 cases computed by their exact closed forms.
/// Throws DomainError when p + y + k <= 0 (Gamma pole region).
double cost_estimate(int y, const ModelParams& params);

/// P(Y_j <= tau_j | Y_i = y): activation belief about a Low-policy peer.
/// never -> 0, unbounded/always -> 1, finite -> partial sum of cross_belief_pmf.
double belief_low(int y, const ThresholdValue& tau_j, const ModelParams& params);

/// P(Y_j > tau_j | Y_i = y) = 1 - belief_low: activation belief about a
/// High-policy peer.  never -> 0, unbounded -> 0, always -> 1.
double belief_high(int y, const ThresholdValue& tau_j, const ModelParams& params);

/// Activation belief dispatched on the peer's policy kind.
double belief(PolicyKind kind, int y, const ThresholdValue& tau_j, const ModelParams& params);

/// Posterior mean of the benefit, (g/N) * (sum_j beliefs + 1); lies in [g/N, g].
/// profile_others must hold the N-1 peers' thresholds.  When all peers share a
/// threshold the sum collapses to (N-1) times a single belief evaluation.
double benefit_estimate(int y, const ThresholdProfile& profile_others, const ModelParams& params);

}  // namespace gpgame
