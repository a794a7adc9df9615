#pragma once

#include <cstdint>
#include <random>

namespace gpgame {

/// Deterministic random stream addressed by (seed, stream index).
///
/// The generated sequence is a pure function of the pair, so Monte Carlo work can
/// be split into chunks with one substream per chunk: reducing per-chunk results
/// in chunk order then yields bit-identical totals for any worker count.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  double uniform01();    // [0, 1), 53-bit resolution
  double uniform_pos();  // (0, 1], never zero (safe under log)
  double normal();       // standard normal, Box-Muller

  /// Independent child stream; derivation depends only on (seed, stream, index).
  RngStream substream(std::uint64_t index) const;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 eng_;
};

/// Gamma(shape, rate) draw via Marsaglia-Tsang squeeze; shape, rate > 0.
double gamma_sample(double shape, double rate, RngStream& rng);

/// Poisson(mean) draw; inversion below mean 10, transformed rejection above.
int poisson_sample(double mean, RngStream& rng);

}  // namespace gpgame
