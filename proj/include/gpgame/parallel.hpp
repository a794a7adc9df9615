#pragma once

#include <atomic>
#include <thread>
#include <utility>
#include <vector>

namespace gpgame {

/// Fixed Monte Carlo chunk size.  The chunk layout depends only on the total
/// sample count, never on the worker count, so per-chunk results reduced in
/// chunk order are identical however the chunks were scheduled.
inline constexpr long kChunkSamples = 65536;

inline long chunk_count(long n_total) {
  return (n_total + kChunkSamples - 1) / kChunkSamples;
}

inline long chunk_size(long n_total, long chunk) {
  const long begin = chunk * kChunkSamples;
  const long rest = n_total - begin;
  return rest < kChunkSamples ? rest : kChunkSamples;
}

/// Runs fn(chunk_index, n_in_chunk) over all chunks of n_total samples.
/// fn must confine writes to storage owned by its chunk index.
template <class Fn>
void for_each_chunk(long n_total, int n_threads, Fn&& fn) {
  const long chunks = chunk_count(n_total);
  if (n_threads <= 1 || chunks <= 1) {
    for (long c = 0; c < chunks; ++c) fn(c, chunk_size(n_total, c));
    return;
  }
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
      fn(c, chunk_size(n_total, c));
    }
  };
  const int spawn = static_cast<int>(std::min<long>(n_threads, chunks));
  std::vector<std::thread> pool;
  pool.reserve(spawn);
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace gpgame
