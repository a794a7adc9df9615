#pragma once

#include <functional>

#include "gpgame/error.hpp"

namespace gpgame {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
};

/// Adaptive Gauss-Kronrod 15(7) integration of f over [a, b].
///
/// Bisects the interval with the largest error estimate until the global
/// estimate satisfies max(abs_tol, rel_tol * |integral|) or the interval
/// budget is exhausted (QuadratureFailure).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_tol, int max_intervals);

/// Smallest x with P(Gamma(shape, rate) > x) <= tail_eps, for integer shape.
/// Uses the identity P(Gamma(n, rate) > x) = P(Poisson(rate * x) <= n - 1).
double gamma_tail_cutoff(int shape, double rate, double tail_eps);

}  // namespace gpgame
