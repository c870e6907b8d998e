#pragma once

#include <cstdint>

namespace plc::rng {

// splitmix64 finalizer.
constexpr std::uint64_t mix(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child seed for an indexed sub-stream (pose i, shard k, ...).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix(mix(seed) ^ mix(index + 0x632be59bd9b4e019ULL));
}

// Counter-based generator: draw k of a stream is mix(key, k), so output is a
// pure function of (seed, position) and identical on every platform. The
// standard <random> distributions are implementation-defined, so the
// uniform and normal transforms are done here.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) noexcept : key_(mix(seed)) {}

  std::uint64_t next() noexcept { return mix(key_ ^ mix(counter_++)); }

  // [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  // Integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) noexcept;
  // Standard normal by Box-Muller.
  double normal() noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace plc::rng
