#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <utility>

namespace tricoh {

/// Philox4x32-10 block function (Salmon et al., SC'11). Counter-based: each
/// (key, counter) pair maps to four independent 32-bit words.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key) noexcept;

/// Tags that keep streams for different consumers disjoint under one seed.
enum class StreamDomain : std::uint32_t {
  HaarState = 1,
  CubeSample = 2,
  Tomography = 3,
  Generic = 4,
};

/// Uniform random bit generator over one Philox substream, addressed by
/// (seed, domain, stream index). Satisfies std::uniform_random_bit_generator,
/// so it can feed standard distributions.
class CounterRng {
public:
  using result_type = std::uint32_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream, StreamDomain domain = StreamDomain::Generic) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Uniform double in (0, 1].
  double uniform_open_zero() noexcept;
  /// Pair of independent standard normals via Box-Muller.
  std::pair<double, double> normal_pair() noexcept;

private:
  std::array<std::uint32_t, 2> key_{};
  std::array<std::uint32_t, 4> counter_{};
  std::array<std::uint32_t, 4> block_{};
  int used_ = 4;
};

/// Mixes a parent seed and a child index into a new 64-bit seed (SplitMix64
/// finalizer). Used to derive per-trial seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace tricoh
