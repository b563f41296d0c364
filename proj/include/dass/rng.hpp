#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

namespace dass {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

// Seeded random stream. Named sub-streams are derived deterministically from
// the root seed, so the draws of one phase (data generation, burn-in, chain,
// tuning) never shift when another phase changes its consumption.
//
// Uniforms are mapped to the open interval (0,1); level draws take logs and
// shrinkage draws must land strictly inside the bracket, so the endpoints are
// excluded by construction. Normals use the Box-Muller transform (exactly two
// uniforms per variate), which keeps the stream layout identical across
// standard library implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(detail::splitmix64(seed)) {}

  RngStream derive(std::string_view label) const {
    return RngStream(detail::splitmix64(seed_ ^ detail::fnv1a64(label)));
  }

  std::uint64_t seed() const { return seed_; }

  double uniform01() {
    // 53-bit dyadic rational centered in its cell: strictly inside (0,1).
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  double normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace dass
