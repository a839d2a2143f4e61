#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace ibp::rng {

// SplitMix64 finalizer: full-avalanche mix of one 64-bit word.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-style draw keyed by (seed, stream, counter). Stateless: a draw
// depends only on its key, so Monte Carlo batches can be produced in any
// order (or in parallel) and still match bit for bit.
inline constexpr std::uint64_t keyed_bits(std::uint64_t seed, std::uint64_t stream,
                                          std::uint64_t counter) noexcept {
  std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
  h = mix64(h ^ (stream + 0xbf58476d1ce4e5b9ULL));
  h = mix64(h ^ (counter + 0x94d049bb133111ebULL));
  return h;
}

// Uniform in (0, 1]; never 0, so a following log() is safe.
inline double keyed_uniform(std::uint64_t seed, std::uint64_t stream,
                            std::uint64_t counter) noexcept {
  return static_cast<double>((keyed_bits(seed, stream, counter) >> 11) + 1) * 0x1.0p-53;
}

// Two independent standard normals (Box-Muller) for one counter slot.
inline std::pair<double, double> keyed_normal_pair(std::uint64_t seed, std::uint64_t stream,
                                                   std::uint64_t counter) noexcept {
  const double u1 = keyed_uniform(seed, stream, 2 * counter);
  const double u2 = keyed_uniform(seed, stream, 2 * counter + 1);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

// Counter namespace for draws that are not per-step noise (outcome draws
// and the like). Step counters stay below 2^62.
inline constexpr std::uint64_t aux_counter(std::uint64_t slot) noexcept {
  return (std::uint64_t{1} << 62) + slot;
}

}  // namespace ibp::rng
