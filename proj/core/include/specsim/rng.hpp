#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace specsim {

/// Mixes (seed, window, lane) into a child seed. Splitting by counter keeps
/// every window/entity stream independent of evaluation order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t window,
                       std::uint64_t lane);

/// Deterministic random stream. All draws are derived from the raw 64-bit
/// engine output here, so a given seed produces the same values on every
/// platform and build.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  static RandomStream derive(std::uint64_t master_seed, std::uint64_t window,
                             std::uint64_t lane) {
    return RandomStream(mix_seed(master_seed, window, lane));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi). Degenerate intervals return lo exactly.
  double uniform(double lo, double hi) {
    return lo + next_unit() * (hi - lo);
  }

  /// Uniform integer in {lo, ..., hi}, bounds inclusive.
  int uniform_int(int lo, int hi);

  /// Draws an index from a discrete distribution given by `probabilities`
  /// (non-negative, summing to ~1).
  std::size_t pick_index(std::span<const double> probabilities);

 private:
  std::mt19937_64 engine_;
};

}  // namespace specsim
