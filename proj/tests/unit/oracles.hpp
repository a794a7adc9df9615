#pragma once

// Reference implementations used as test oracles.  They deliberately take
// different computation paths than the library (multiplicative recurrences in
// long double instead of log-space Gamma ratios) so agreement is evidence,
// not tautology.

#include <cmath>
#include <vector>

namespace oracle {

// Poisson(rate) pmf by term recurrence from the zero term.
inline long double poisson_pmf(int y, long double rate) {
  long double term = std::exp(-rate);
  for (int j = 1; j <= y; ++j) term *= rate / j;
  return term;
}

// P(Y <= tau) by direct summation of the pmf recurrence.
inline long double poisson_cdf(int tau, long double rate) {
  if (tau < 0) return 0.0L;
  long double term = std::exp(-rate);
  long double sum = term;
  for (int j = 1; j <= tau; ++j) {
    term *= rate / j;
    sum += term;
  }
  return sum;
}

// Negative Binomial pmf with stopping parameter r and failure weight q
// (counts failures before the r-th success): C(count+r-1, count) q^count (1-q)^r.
inline long double nb_pmf(int count, long double r, long double q) {
  long double term = std::pow(1.0L - q, r);
  for (int j = 0; j < count; ++j) term *= q * (r + j) / (j + 1);
  return term;
}

// Partial sum of the Negative Binomial pmf over 0..hi.
inline long double nb_cdf(int hi, long double r, long double q) {
  if (hi < 0) return 0.0L;
  long double term = std::pow(1.0L - q, r);
  long double sum = term;
  for (int j = 0; j < hi; ++j) {
    term *= q * (r + j) / (j + 1);
    sum += term;
  }
  return sum;
}

// E[X^p | X ~ Gamma(shape, rate)] for integer p via the rising/falling product
// Gamma(shape+p)/Gamma(shape) / rate^p; requires shape + p > 0.
inline long double gamma_power_moment(long double shape, long double rate, int p) {
  long double num = 1.0L;
  if (p >= 0) {
    for (int j = 0; j < p; ++j) num *= shape + j;
    for (int j = 0; j < p; ++j) num /= rate;
  } else {
    for (int j = 1; j <= -p; ++j) num /= shape - j;
    for (int j = 0; j < -p; ++j) num *= rate;
  }
  return num;
}

// Simpson integration on [a, b] with n (even) panels; plenty for the smooth
// densities the tests integrate.
template <class F>
long double simpson(F f, long double a, long double b, int n) {
  const long double h = (b - a) / n;
  long double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * ((i % 2) ? 4.0L : 2.0L);
  return sum * h / 3.0L;
}

}  // namespace oracle
