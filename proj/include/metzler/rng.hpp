#pragma once

#include <cmath>
#include <cstdint>

namespace metzler {

// splitmix64: a counter-style generator (golden-gamma state increment plus a
// finalizing mix). One instance per logical stream; streams for parallel
// trials are derived by hashing (seed, stream index), so trial i of seed s is
// reproducible regardless of scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on (0, 1]; never returns 0, so -log stays finite.
  double uniform01() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n). Lemire multiply-shift; bias is O(n / 2^64).
  int uniform_int(int n) {
    return static_cast<int>((static_cast<unsigned __int128>(next()) *
                             static_cast<unsigned __int128>(n)) >> 64);
  }

  double exponential(double rate) { return -std::log(uniform01()) / rate; }

 private:
  std::uint64_t state_;
};

/// Seed of the derived stream `index` of master seed `seed`.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  return g.next();
}

inline SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(derive_stream(seed, index));
}

}  // namespace metzler
