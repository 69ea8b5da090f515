#ifndef PS2GD_RANDOM_SOURCE_HPP
#define PS2GD_RANDOM_SOURCE_HPP

#include <cstdint>

namespace ps2gd {

/// Counter-based generator (SplitMix64 over a keyed counter). Identical seed
/// and call sequence give identical outputs on every platform; child streams
/// split off deterministically for parallel work. Single-owner: parallel
/// components must split, never share, a source.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double next_double();
  /// Uniform in [0, n); unbiased via rejection. n must be positive.
  std::uint64_t next_below(std::uint64_t n);
  /// Standard normal via the Marsaglia polar method.
  double next_gaussian();

  /// Independent child stream; deterministic in (seed, stream).
  RandomSource split(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t state_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ps2gd

#endif  // PS2GD_RANDOM_SOURCE_HPP
