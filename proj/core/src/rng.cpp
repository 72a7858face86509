#include "specsim/rng.hpp"

#include <cstddef>

namespace specsim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t window,
                       std::uint64_t lane) {
  return splitmix64(splitmix64(splitmix64(seed) ^ window) ^ lane);
}

int RandomStream::uniform_int(int lo, int hi) {
  if (hi <= lo) return lo;
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

std::size_t RandomStream::pick_index(std::span<const double> probabilities) {
  const double u = next_unit();
  double cumulative = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    cumulative += probabilities[i];
    if (u < cumulative) return i;
  }
  return probabilities.empty() ? 0 : probabilities.size() - 1;
}

}  // namespace specsim
