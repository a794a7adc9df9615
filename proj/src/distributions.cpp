#include "gpgame/distributions.hpp"

#include <cmath>
#include <limits>

namespace gpgame {
namespace {

// Negative Binomial truncation index: smallest ell where the geometric tail
// bound of NB(r, q) falls below tail_eps (q = failure weight per trial).
int nb_support_bound(double r, double q, double tail_eps) {
  if (!(tail_eps > 0.0)) raise(ErrorCode::domain_error, "tail_eps must be > 0");
  double log_pmf = r * std::log1p(-q);  // pmf at ell = 0
  double pmf = std::exp(log_pmf);
  for (int ell = 0;; ++ell) {
    const double ratio = q * (ell + r) / (ell + 1.0);
    if (ratio < 1.0 && pmf * ratio / (1.0 - ratio) < tail_eps) return ell;
    pmf *= q * (ell + r) / (ell + 1.0);
    if (ell > 100000000) raise(ErrorCode::domain_error, "support bound did not converge");
  }
}

double nb_log_pmf(int count, double r, double q) {
  return log_gamma(count + r) - log_gamma(count + 1.0) - log_gamma(r) +
         r * std::log1p(-q) + count * std::log(q);
}

}  // namespace

double log_gamma(double z) {
  if (!(z > 0.0)) raise(ErrorCode::domain_error, "log_gamma needs z > 0");
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(z, &sign);
#else
  return std::lgamma(z);
#endif
}

double gamma_pdf(double x, double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0)) {
    raise(ErrorCode::domain_error, "gamma_pdf needs shape > 0 and rate > 0");
  }
  if (x < 0.0) return 0.0;
  if (x == 0.0) {
    if (shape > 1.0) return 0.0;
    if (shape == 1.0) return rate;
    return std::numeric_limits<double>::infinity();
  }
  return std::exp(shape * std::log(rate) - log_gamma(shape) + (shape - 1.0) * std::log(x) -
                  rate * x);
}

double poisson_pmf(int y, double rate) {
  if (!(rate > 0.0)) raise(ErrorCode::domain_error, "poisson_pmf needs rate > 0");
  if (y < 0) raise(ErrorCode::domain_error, "poisson_pmf needs y >= 0");
  if (y == 0) return std::exp(-rate);
  return std::exp(-rate + y * std::log(rate) - log_gamma(y + 1.0));
}

double poisson_cdf(int tau, double rate) {
  if (!(rate > 0.0)) raise(ErrorCode::domain_error, "poisson_cdf needs rate > 0");
  if (tau < 0) return 0.0;
  double out = 0.0;
  poisson_cdf_grid(&tau, 1, rate, &out);
  return out;
}

void poisson_cdf_grid(const int* taus, std::size_t n, double rate, double* out) {
  std::size_t col = 0;
  while (col < n && taus[col] < 0) out[col++] = 0.0;
  if (col == n) return;
  if (rate < detail::kPoissonLinearRateMax) {
    double term = std::exp(-rate);
    double cum = term;
    for (int y = 0;; ++y) {
      if (y > 0) {
        term *= rate / y;
        cum += term;
      }
      const double value = std::min(cum, 1.0);
      while (col < n && taus[col] == y) out[col++] = value;
      if (col == n) return;
      if (y > rate) {
        const double ratio = rate / (y + 1);
        if (term * ratio < (1.0 - ratio) * cum * detail::kPoissonTailRel) {
          while (col < n) out[col++] = value;
          return;
        }
      }
    }
  }
  const double log_rate = std::log(rate);
  double log_term = -rate;    // log pmf(0)
  double log_max = log_term;  // running max of log terms
  double scaled_sum = 1.0;    // sum of exp(log_term_j - log_max)
  for (int y = 0;; ++y) {
    if (y > 0) {
      log_term += log_rate - std::log(static_cast<double>(y));
      if (log_term > log_max) {
        scaled_sum = scaled_sum * std::exp(log_max - log_term) + 1.0;
        log_max = log_term;
      } else {
        scaled_sum += std::exp(log_term - log_max);
      }
    }
    const double value = std::min(std::exp(log_max + std::log(scaled_sum)), 1.0);
    while (col < n && taus[col] == y) out[col++] = value;
    if (col == n) return;
    if (y > rate) {
      const double ratio = rate / (y + 1);
      const double term_rel = std::exp(log_term - log_max) / scaled_sum;
      if (term_rel * ratio < (1.0 - ratio) * detail::kPoissonTailRel) {
        while (col < n) out[col++] = value;
        return;
      }
    }
  }
}

PosteriorState posterior_of_state(int y, const ModelParams& params) {
  if (y < 0) raise(ErrorCode::domain_error, "signal must be >= 0");
  return PosteriorState{static_cast<double>(y) + params.k, params.posterior_rate()};
}

double marginal_signal_pmf(int y, const ModelParams& params) {
  if (y < 0) raise(ErrorCode::domain_error, "signal must be >= 0");
  const double q = params.lambda / (params.lambda + params.theta);
  return std::exp(nb_log_pmf(y, static_cast<double>(params.k), q));
}

double cross_belief_pmf(int ell, int y, const ModelParams& params) {
  if (ell < 0 || y < 0) raise(ErrorCode::domain_error, "signals must be >= 0");
  const double q = params.lambda / (params.theta + 2.0 * params.lambda);
  return std::exp(nb_log_pmf(ell, static_cast<double>(params.k + y), q));
}

int marginal_support_bound(const ModelParams& params, double tail_eps) {
  const double q = params.lambda / (params.lambda + params.theta);
  return nb_support_bound(static_cast<double>(params.k), q, tail_eps);
}

int cross_belief_support_bound(int y, const ModelParams& params, double tail_eps) {
  if (y < 0) raise(ErrorCode::domain_error, "signal must be >= 0");
  const double q = params.lambda / (params.theta + 2.0 * params.lambda);
  return nb_support_bound(static_cast<double>(params.k + y), q, tail_eps);
}

}  // namespace gpgame
