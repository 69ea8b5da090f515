#include "ps2gd/random_source.hpp"

#include <cmath>

#include "ps2gd/errors.hpp"

namespace ps2gd {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed)
    : seed_(seed), state_(mix64(seed + kGolden)) {}

std::uint64_t RandomSource::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double RandomSource::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomSource::next_below(std::uint64_t n) {
  if (n == 0) throw argument_error("next_below: n must be positive");
  if ((n & (n - 1)) == 0) return next_u64() & (n - 1);
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n) - 1;
  std::uint64_t v = next_u64();
  while (v > limit) v = next_u64();
  return v % n;
}

double RandomSource::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_double() - 1.0;
    v = 2.0 * next_double() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * factor;
  has_spare_ = true;
  return u * factor;
}

RandomSource RandomSource::split(std::uint64_t stream) const {
  return RandomSource(mix64(seed_ ^ mix64(stream + 1)));
}

}  // namespace ps2gd
