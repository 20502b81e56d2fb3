#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <string_view>

#include "effpose/angles.hpp"

namespace effpose {

// Keyed splitmix64 streams. Every noise draw in the library comes from a
// stream derived from (seed, purpose tag, step, entity id), so a run is
// bit-reproducible for a given seed regardless of thread count or the order
// in which independent entities are processed.
class Rng {
 public:
  explicit Rng(std::uint64_t state) : state_(state) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Derives a stream from a seed and a list of key components.
  static Rng stream(std::uint64_t seed, std::initializer_list<std::uint64_t> key) {
    std::uint64_t s = mix(seed);
    for (std::uint64_t k : key) s = mix(s ^ mix(k));
    return Rng(s);
  }

  /// FNV-1a, used to fold frame names into stream keys.
  static std::uint64_t hash_name(std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : name) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ull;
    }
    return h;
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (two uniforms per call, no caching).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

 private:
  std::uint64_t state_;
};

// Stream purpose tags.
namespace rng_tag {
inline constexpr std::uint64_t kInitParticles = 1;
inline constexpr std::uint64_t kPredict = 2;
inline constexpr std::uint64_t kResample = 3;
inline constexpr std::uint64_t kMarkerNoise = 4;
inline constexpr std::uint64_t kImuNoise = 5;
}  // namespace rng_tag

}  // namespace effpose
