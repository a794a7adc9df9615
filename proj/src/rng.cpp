#include "gpgame/rng.hpp"

#include <cmath>

#include "gpgame/distributions.hpp"
#include "gpgame/error.hpp"

namespace gpgame {
namespace {

// SplitMix64 finalizer; scrambles (seed, stream) pairs into engine seeds so
// that nearby stream indices give unrelated engine states.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t engine_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream));
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), eng_(engine_seed(seed, stream)) {}

std::uint64_t RngStream::next_u64() { return eng_(); }

double RngStream::uniform01() {
  // Top 53 bits -> [0, 1) on the dyadic grid.
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_pos() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double RngStream::normal() {
  // Box-Muller, cosine branch only: deterministic two-uniform consumption.
  const double u1 = uniform_pos();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

RngStream RngStream::substream(std::uint64_t index) const {
  return RngStream(seed_, mix64(stream_ ^ mix64(index + 1)));
}

double gamma_sample(double shape, double rate, RngStream& rng) {
  if (!(shape > 0.0) || !(rate > 0.0)) {
    raise(ErrorCode::domain_error, "gamma_sample needs shape > 0 and rate > 0");
  }
  // Shapes below one are boosted: G(shape) = G(shape + 1) * U^{1/shape}.
  double boost = 1.0;
  double a = shape;
  if (a < 1.0) {
    boost = std::pow(rng.uniform_pos(), 1.0 / a);
    a += 1.0;
  }
  // Marsaglia-Tsang squeeze for shape >= 1.
  const double d = a - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_pos();
    if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return boost * d * v / rate;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return boost * d * v / rate;
  }
}

int poisson_sample(double mean, RngStream& rng) {
  if (!(mean > 0.0)) {
    if (mean == 0.0) return 0;
    raise(ErrorCode::domain_error, "poisson_sample needs mean >= 0");
  }
  if (mean < 10.0) {
    // Sequential inversion of the cdf.
    double term = std::exp(-mean);
    double cum = term;
    const double u = rng.uniform01();
    int y = 0;
    while (u > cum && y < 1100) {
      ++y;
      term *= mean / y;
      cum += term;
    }
    return y;
  }
  // Hoermann's transformed rejection (PTRS) for large means.
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);
  for (;;) {
    double u = rng.uniform01() - 0.5;
    const double v = rng.uniform01();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<int>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        kf * log_mean - mean - log_gamma(kf + 1.0)) {
      return static_cast<int>(kf);
    }
  }
}

}  // namespace gpgame
