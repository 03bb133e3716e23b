#pragma once

// Deterministic random streams. The algorithms are fixed (not the platform's
// std::normal_distribution) so that seeded results are reproducible:
//
//   * SplitMix64 expands a 64-bit seed into generator state;
//   * xoshiro256** produces the raw 64-bit stream;
//   * uniforms in [0, 1) take the top 53 bits: (x >> 11) * 2^-53;
//   * normals use the polar Box-Muller (Marsaglia) transform on
//     u, v = 2 * uniform - 1, returning both variates of each accepted pair.

#include <array>
#include <cstdint>
#include <limits>
#include <optional>

namespace gstein {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Advances the stream by 2^128 draws; used to derive independent substreams.
  void jump();

  /// Uniform double in [0, 1).
  double uniform();

 private:
  std::array<std::uint64_t, 4> s_;
};

class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  /// Standard normal variate.
  double next();

 private:
  Xoshiro256StarStar engine_;
  std::optional<double> spare_;
};

}  // namespace gstein
